//! Cross-validation of the interval calculus against the linear-algebra
//! engine on seeded random Kupisch series.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::engine::{interval_to_rep, nakayama_to_sc, Engine, Field, Representation};
use crate::kupisch::{Interval, KupischSeries, Orientation};
use crate::ExtNat;

/// Upper bounds on the number of simples and on the Kupisch entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub n: usize,
    pub c: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { n: 6, c: 6 }
    }
}

impl std::str::FromStr for Bounds {
    type Err = String;

    /// Parses `n=<max n>,c=<max c>`; either key may be omitted.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut b = Bounds::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(|| format!("expected key=value, got {part:?}"))?;
            let v: usize = value.trim().parse().map_err(|_| format!("invalid bound {value:?}"))?;
            match key.trim() {
                "n" => b.n = v,
                "c" => b.c = v,
                other => return Err(format!("unknown bound {other:?}")),
            }
        }
        if b.n == 0 || b.c < 2 {
            return Err("bounds need n >= 1 and c >= 2".into());
        }
        Ok(b)
    }
}

impl std::fmt::Display for Bounds {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "n={},c={}", self.n, self.c)
    }
}

/// A random valid series within the bounds. Linear series are built from
/// the tail; cyclic ones by rejection on the wrap-around slope.
pub fn random_series(rng: &mut impl Rng, bounds: Bounds) -> KupischSeries {
    loop {
        let cyclic = bounds.n == 1 || rng.gen_bool(0.5);
        let n = if cyclic { rng.gen_range(1..=bounds.n) } else { rng.gen_range(2..=bounds.n.max(2)) };
        let mut c = vec![0i64; n];
        let orientation = if cyclic {
            c[n - 1] = rng.gen_range(2..=bounds.c) as i64;
            Orientation::Cyclic
        } else {
            c[n - 1] = 1;
            Orientation::Linear
        };
        for i in (0..n - 1).rev() {
            let hi = (c[i + 1] + 1).min(bounds.c as i64);
            c[i] = rng.gen_range(2..=hi);
        }
        if let Ok(k) = KupischSeries::new(orientation, &c) {
            return k;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Divergence {
    pub case: usize,
    pub kupisch: KupischSeries,
    pub check: String,
    pub subject: String,
    pub interval_value: String,
    pub engine_value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub seed: u64,
    pub cases: usize,
    pub bounds: Bounds,
    pub comparisons: usize,
    /// Engine verdicts cut off by the step cap; each was checked for
    /// consistency with the exact value.
    pub bounded_verdicts: usize,
    pub divergences: Vec<Divergence>,
    /// The divergence on the smallest algebra, if any.
    pub reproducer: Option<Divergence>,
}

struct Checker<'a> {
    case: usize,
    k: &'a KupischSeries,
    comparisons: usize,
    bounded: usize,
    divergences: Vec<Divergence>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SeriesComparison {
    pub comparisons: usize,
    pub bounded_verdicts: usize,
    pub divergences: Vec<Divergence>,
}

impl Checker<'_> {
    fn eq<T: PartialEq + std::fmt::Display>(&mut self, check: &str, subject: &dyn std::fmt::Display, a: T, b: T) {
        self.comparisons += 1;
        if a != b {
            self.push(check, subject, a.to_string(), b.to_string());
        }
    }

    // Exact engine verdicts must agree; bounded ones must not contradict.
    fn ext(&mut self, check: &str, subject: &dyn std::fmt::Display, exact: ExtNat, engine: ExtNat) {
        self.comparisons += 1;
        self.bounded += usize::from(matches!(engine, ExtNat::AtLeast(_)));
        if !engine.consistent_with(exact) {
            self.push(check, subject, exact.to_string(), engine.to_string());
        }
    }

    fn push(&mut self, check: &str, subject: &dyn std::fmt::Display, a: String, b: String) {
        self.divergences.push(Divergence {
            case: self.case,
            kupisch: self.k.clone(),
            check: check.into(),
            subject: subject.to_string(),
            interval_value: a,
            engine_value: b,
        });
    }
}

/// Compares Hom dimensions of all interval pairs, hull/cover/syzygy/cosyzygy
/// dimensions, projectivity and injectivity of all intervals, and
/// injdim/projdim/domdim of every interval plus the algebra-level dimensions.
pub fn compare_series(case: usize, k: &KupischSeries, field: Field, engine_cap: Option<usize>) -> SeriesComparison {
    let mut engine = Engine::new(nakayama_to_sc(k, field));
    if let Some(cap) = engine_cap {
        engine = engine.with_cap(cap);
    }
    let intervals = k.all_intervals();
    let reps: Vec<Representation> = intervals.iter().map(|x| interval_to_rep(engine.algebra(), k, x)).collect();
    let mut ck = Checker { case, k, comparisons: 0, bounded: 0, divergences: Vec::new() };
    for (x, rx) in intervals.iter().zip(&reps) {
        for (y, ry) in intervals.iter().zip(&reps) {
            ck.eq("hom_dim", &format_args!("{x}, {y}"), k.hom_dim(x, y), engine.hom_dim(rx, ry));
        }
    }
    for (x, rx) in intervals.iter().zip(&reps) {
        check_interval(&mut ck, &engine, x, rx);
    }
    ck.ext("domdim_algebra", &"A", k.domdim_algebra(), engine.domdim_algebra());
    ck.ext("gldim", &"A", k.gldim(), engine.gldim());
    let g = engine.gorenstein();
    ck.ext("gorenstein_dim", &"A", k.gorenstein().gorenstein_dim, g.gorenstein_dim);
    SeriesComparison { comparisons: ck.comparisons, bounded_verdicts: ck.bounded, divergences: ck.divergences }
}

fn check_interval(ck: &mut Checker<'_>, engine: &Engine, x: &Interval, rx: &Representation) {
    let k = ck.k;
    let dim = |m: Option<Interval>| m.map_or(0, |m| m.len);
    let (hull, emb) = engine.injective_hull_map(rx);
    ck.eq("injective_hull_dim", x, k.injective_hull(x).len, hull.dim());
    ck.eq("hull_embedding_injective", x, true, emb.is_injective());
    let (cover, surj) = engine.projective_cover_map(rx);
    ck.eq("projective_cover_dim", x, k.projective_cover(x).len, cover.dim());
    ck.eq("cover_surjective", x, true, surj.is_surjective());
    ck.eq("cosyzygy_dim", x, dim(k.cosyzygy(x)), engine.cosyzygy(rx).dim());
    ck.eq("syzygy_dim", x, dim(k.syzygy(x)), engine.syzygy(rx).dim());
    ck.eq("is_projective", x, k.is_projective(x), engine.is_projective_rep(rx));
    ck.eq("is_injective", x, k.is_injective(x), engine.is_injective_rep(rx));
    let inj = engine.injective_resolution(rx, None).expect("nonzero");
    ck.ext("injdim", x, k.injdim(x), inj.length);
    ck.ext("domdim", x, k.domdim_module(x), inj.dominant);
    let proj = engine.projective_resolution(rx, None).expect("nonzero");
    ck.ext("projdim", x, k.projdim(x), proj.length);
    ck.ext("codomdim", x, k.codomdim_module(x), proj.dominant);
}

fn smallest(divergences: &[Divergence]) -> Option<Divergence> {
    divergences.iter().min_by_key(|d| (d.kupisch.dim(), d.kupisch.n(), d.case)).cloned()
}

/// Runs `cases` seeded random comparisons.
pub fn oracle_diff(seed: u64, cases: usize, bounds: Bounds, field: Field) -> OracleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut comparisons, mut bounded_verdicts) = (0, 0);
    let mut divergences = Vec::new();
    for case in 0..cases {
        let k = random_series(&mut rng, bounds);
        let r = compare_series(case, &k, field, None);
        comparisons += r.comparisons;
        bounded_verdicts += r.bounded_verdicts;
        divergences.extend(r.divergences);
    }
    let reproducer = smallest(&divergences);
    OracleReport { seed, cases, bounds, comparisons, bounded_verdicts, divergences, reproducer }
}
