//! The three tilting conditions for a list of interval modules, with Ext
//! vanishing checked in the engine.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{interval_to_rep, nakayama_to_sc, Engine, Field, Representation};
use crate::kupisch::{Interval, KupischSeries, ModuleList};
use crate::ExtNat;

/// Engine state for one Nakayama algebra, memoizing syzygies and Hom
/// dimensions of interval modules across Ext queries.
pub struct ExtCache {
    series: KupischSeries,
    engine: Engine,
    // Ω^j X for j = 0.. together with the cover multiplicities of Ω^j X
    chains: HashMap<Interval, Vec<(Representation, Vec<usize>)>>,
    reps: HashMap<Interval, Representation>,
    homs: HashMap<(Interval, usize, Interval), usize>,
}

impl ExtCache {
    pub fn new(series: &KupischSeries, field: Field) -> ExtCache {
        ExtCache {
            series: series.clone(),
            engine: Engine::new(nakayama_to_sc(series, field)),
            chains: HashMap::new(),
            reps: HashMap::new(),
            homs: HashMap::new(),
        }
    }

    pub fn series(&self) -> &KupischSeries {
        &self.series
    }

    pub fn engine(&self) -> &Engine {
        &self.engine
    }

    fn rep(&mut self, x: &Interval) -> Representation {
        let (alg, k) = (self.engine.algebra(), &self.series);
        self.reps.entry(*x).or_insert_with(|| interval_to_rep(alg, k, x)).clone()
    }

    fn extend_chain(&mut self, x: &Interval, depth: usize) {
        let start = self.rep(x);
        let engine = &self.engine;
        let chain = self.chains.entry(*x).or_insert_with(|| {
            let (mult, _) = engine.cover_parts(&start);
            vec![(start, mult)]
        });
        while chain.len() <= depth {
            let last = &chain[chain.len() - 1].0;
            if last.is_zero() {
                break;
            }
            let syz = engine.syzygy(last);
            let (mult, _) = engine.cover_parts(&syz);
            chain.push((syz, mult));
        }
    }

    fn hom_from_syzygy(&mut self, x: &Interval, j: usize, n: &Interval) -> usize {
        if let Some(&d) = self.homs.get(&(*x, j, *n)) {
            return d;
        }
        self.extend_chain(x, j);
        let target = self.rep(n);
        let source = &self.chains[x][j].0;
        let d = if source.is_zero() { 0 } else { self.engine.hom_dim(source, &target) };
        self.homs.insert((*x, j, *n), d);
        d
    }

    /// `dim Ext^j(X, N)` for `j >= 1`, by dimension shifting along the
    /// engine's syzygies of `X`.
    pub fn ext_dim(&mut self, x: &Interval, n: &Interval, j: usize) -> usize {
        assert!(j >= 1, "Ext degree must be at least 1");
        self.extend_chain(x, j);
        let chain = &self.chains[x];
        if chain.len() < j || chain[j - 1].0.is_zero() {
            return 0;
        }
        let mult = chain[j - 1].1.clone();
        let target_dims = self.rep(n).dims().to_vec();
        let hom_p: usize = mult.iter().zip(&target_dims).map(|(m, d)| m * d).sum();
        let upper = self.hom_from_syzygy(x, j, n) + self.hom_from_syzygy(x, j - 1, n);
        upper - hom_p
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltingReport {
    pub summands: ModuleList,
    pub bound: usize,
    pub projdim: ExtNat,
    pub projdim_ok: bool,
    /// `(j, dim Ext^j(T, T))` for `1 <= j <= min(projdim T, bound)`.
    pub ext: Vec<(usize, usize)>,
    pub ext_ok: bool,
    pub summand_count: usize,
    pub simples: usize,
    pub count_ok: bool,
    pub passed: bool,
}

/// Checks that `T` has projective dimension at most `bound`, that
/// `Ext^j(T, T) = 0` for `1 <= j <= projdim T`, and that `T` has as many
/// basic summands as there are simples.
pub fn tilting_check(cache: &mut ExtCache, t: &ModuleList, bound: usize) -> TiltingReport {
    let k = cache.series().clone();
    let summands = t.basic();
    let projdim = summands.iter().map(|x| k.projdim(x)).fold(ExtNat::Finite(0), ExtNat::max);
    let projdim_ok = projdim.finite().is_some_and(|p| p <= bound as u64);
    let top = projdim.finite().map_or(bound, |p| (p as usize).min(bound));
    let ext: Vec<(usize, usize)> = (1..=top)
        .map(|j| {
            let d = summands.iter().flat_map(|x| summands.iter().map(move |y| (*x, *y))).map(|(x, y)| cache.ext_dim(&x, &y, j)).sum();
            (j, d)
        })
        .collect();
    let ext_ok = ext.iter().all(|&(_, d)| d == 0);
    let summand_count = summands.len();
    let count_ok = summand_count == k.n();
    TiltingReport {
        summands,
        bound,
        projdim,
        projdim_ok,
        ext,
        ext_ok,
        summand_count,
        simples: k.n(),
        count_ok,
        passed: projdim_ok && ext_ok && count_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kupisch::family_a;

    #[test]
    fn ext_between_simples() {
        let a5 = family_a(5).unwrap();
        let mut cache = ExtCache::new(&a5, Field::Rational);
        let s = |i| Interval { vertex: i, len: 1 };
        assert_eq!(cache.ext_dim(&s(0), &s(1), 1), 1);
        assert_eq!(cache.ext_dim(&s(0), &s(2), 1), 0);
        assert_eq!(cache.ext_dim(&s(0), &s(3), 2), 1);
        let p = Interval { vertex: 0, len: 3 };
        for j in 1..4 {
            assert_eq!(cache.ext_dim(&p, &s(2), j), 0);
        }
    }

    #[test]
    fn canonical_tilting_modules_of_small_family_members() {
        let a4 = family_a(4).unwrap();
        let mut cache = ExtCache::new(&a4, Field::Rational);
        assert!(tilting_check(&mut cache, &a4.canonical_tilting(1).unwrap(), 1).passed);
        assert!(tilting_check(&mut cache, &a4.regular_module(), 0).passed);
        let a5 = family_a(5).unwrap();
        let mut cache = ExtCache::new(&a5, Field::Rational);
        let t = a5.canonical_tilting(2).unwrap();
        let r = tilting_check(&mut cache, &t, 2);
        assert!(r.passed, "{r:?}");
        let simples_only = ModuleList::new(vec![Interval { vertex: 1, len: 1 }; 3]);
        let r = tilting_check(&mut cache, &simples_only, 5);
        assert!(!r.count_ok && !r.passed);
    }
}
