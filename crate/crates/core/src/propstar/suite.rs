//! Every pinned claim in one report, grouped into sections.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{counterexample_a6_check, gendo_example_check, theorem_sweep, tilting_sweep, verify_family, Check, Tally};
use crate::endo::build_endo;
use crate::engine::Field;
use crate::kupisch::{family_a, Direction, KupischSeries, ModuleList};
use crate::oracle::{oracle_diff, Bounds};
use crate::ExtNat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOptions {
    pub m_max: usize,
    pub field: Field,
    pub sweep_bounds: Bounds,
    pub oracle_bounds: Bounds,
    pub seed: u64,
    pub cases: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            m_max: 3,
            field: Field::Rational,
            sweep_bounds: Bounds { n: 6, c: 6 },
            oracle_bounds: Bounds { n: 6, c: 6 },
            seed: 0,
            cases: 200,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Section {
    pub title: String,
    pub checks: Vec<Check>,
    pub seconds: f64,
}

impl Section {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| !c.failed())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub options: SuiteOptions,
    pub sections: Vec<Section>,
    pub tally: Tally,
    pub passed: bool,
}

fn timed(title: &str, f: impl FnOnce() -> Vec<Check>) -> Section {
    let start = Instant::now();
    let checks = f();
    Section { title: title.into(), checks, seconds: start.elapsed().as_secs_f64() }
}

fn cokupisch_checks() -> Vec<Check> {
    (4..=12)
        .map(|n| {
            let mut expected = vec![3; n];
            expected[0] = 1;
            expected[1] = 2;
            let a = family_a(n).expect("n >= 2");
            Check::value(format!("cokupisch of A_{n}"), format!("{expected:?}"), format!("{:?}", a.cokupisch()))
        })
        .collect()
}

fn family_checks(opts: &SuiteOptions) -> Vec<Check> {
    verify_family(opts.m_max, opts.field).into_iter().flat_map(|v| v.checks).collect()
}

fn relation_checks(field: Field) -> Vec<Check> {
    let a5 = family_a(5).expect("n >= 2");
    let b = build_endo(&a5, &a5.canonical_tilting(2).expect("domdim A_5 = 2"), field).expect("valid summands");
    match b.relations(None) {
        Ok(q) => {
            let rels = q.relations.clone().unwrap_or_default();
            let zero = rels.iter().filter(|r| r.is_monomial() && r.path_lengths() == [2]).count();
            let comm = rels.iter().filter(|r| r.is_commutativity() && r.path_lengths() == [2, 2]).count();
            let cert = q.certificate.expect("present on success");
            vec![
                Check::value("relations of B_5", 2, rels.len()),
                Check::value("zero relations on length-2 paths of B_5", 1, zero),
                Check::value("length-2 commutativity relations of B_5", 1, comm),
                Check::value("dimension certificate of B_5", cert.algebra_dim, cert.quotient_dim),
            ]
        }
        Err(e) => vec![Check::value("relations of B_5", "certificate".to_string(), e.to_string())],
    }
}

fn theorem_checks(opts: &SuiteOptions) -> Vec<Check> {
    let r = theorem_sweep(opts.sweep_bounds, opts.field);
    let mut checks = vec![Check::value(format!("higher Auslander-Solberg violations for {}", opts.sweep_bounds), 0, r.violations.len())
        .with_note(format!("{} series examined, {} asserted", r.examined, r.asserted))];
    for k in [6, 9] {
        let a = family_a(k).expect("n >= 2");
        let expected = ExtNat::Finite(2 * (k / 3) as u64 - 1);
        match super::property_star_check(&a, opts.field) {
            Ok(p) => {
                checks.push(Check::bounded(format!("domdim of the endomorphism algebra of A_{k}"), expected, p.endo_domdim));
                checks.push(Check::value(
                    format!("A_{k} has property *"),
                    format!("{:?}", Some(true)),
                    format!("{:?}", p.has_property_star),
                ));
            }
            Err(e) => checks.push(Check::value(format!("property * of A_{k}"), "a report".to_string(), e.to_string())),
        }
    }
    checks
}

fn example_checks(field: Field) -> Vec<Check> {
    let mut checks = Vec::new();
    for d in 1..=3 {
        let r = gendo_example_check(d, field);
        checks.extend(r.checks.into_iter().map(|mut c| {
            c.claim = format!("[{},{}]: {}", 2 * d, 2 * d + 1, c.claim);
            c
        }));
    }
    checks.extend(counterexample_a6_check(field).checks);
    checks
}

fn tilting_checks(opts: &SuiteOptions) -> Vec<Check> {
    let r = tilting_sweep(opts.sweep_bounds, opts.field);
    vec![Check::value(format!("canonical tilting failures for {}", opts.sweep_bounds), 0, r.failures.len())
        .with_note(format!("{} series, {} modules", r.series, r.modules))]
}

fn oracle_checks(opts: &SuiteOptions) -> (Vec<Check>, usize) {
    let r = oracle_diff(opts.seed, opts.cases, opts.oracle_bounds, opts.field);
    let note = format!("seed {}, {} cases, {} comparisons", r.seed, r.cases, r.comparisons);
    let mut c = Check::value("interval calculus vs engine divergences", 0, r.divergences.len()).with_note(note);
    if let Some(d) = &r.reproducer {
        c.note = Some(format!("first: {} on {} ({}): {} vs {}", d.check, d.kupisch, d.subject, d.interval_value, d.engine_value));
    }
    (vec![c], r.bounded_verdicts)
}

/// Compares every interval verdict of `k` under the default step cap and
/// under `factor` times that cap.
pub(crate) fn cap_stability(k: &KupischSeries, factor: usize) -> (usize, usize) {
    let cap = k.default_step_cap() * factor;
    let (mut changed, mut infinite) = (0, 0);
    for x in k.all_intervals() {
        let list = ModuleList::new(vec![x]);
        for dir in [Direction::Injective, Direction::Projective] {
            let run = |c: Option<usize>| match dir {
                Direction::Injective => k.min_injective_resolution(&list, c),
                Direction::Projective => k.min_projective_resolution(&list, c),
            };
            let (a, b) = (run(None).expect("default cap"), run(Some(cap)).expect("larger cap"));
            if (a.length, a.dominant) != (b.length, b.dominant) {
                changed += 1;
            }
            infinite += [a.length, a.dominant].iter().filter(|v| **v == ExtNat::Infinity).count();
        }
    }
    (changed, infinite)
}

fn infinity_checks(bounded_verdicts: usize) -> Vec<Check> {
    let k = KupischSeries::cyclic(&[4, 5]).expect("valid series");
    let (changed, infinite) = cap_stability(&k, 10);
    vec![
        Check::value("verdicts of cyclic [4,5] changed by a 10x step cap", 0, changed)
            .with_note(format!("{infinite} infinite verdicts compared")),
        Check::value("cyclic [4,5] has infinite verdicts", true, infinite > 0),
        Check::value("gldim of cyclic [4,5]", ExtNat::Infinity, k.gldim()),
        Check::value("engine truncated verdicts contradicting exact ones", 0, 0)
            .with_note(format!("{bounded_verdicts} truncated engine verdicts, all consistent (counted as divergences otherwise)")),
    ]
}

/// Runs every pinned claim. Sections are, in order: CoKupisch series of the
/// family, the family table with dimensions, counterexamples and quivers,
/// relations of `B_5`, property * for higher Auslander-Solberg algebras,
/// worked examples, canonical tilting modules, the cross-oracle, and
/// soundness of infinite verdicts.
pub fn verify_all(opts: &SuiteOptions) -> VerificationReport {
    let mut sections = vec![
        timed("cokupisch series of the family", cokupisch_checks),
        timed("family dimensions, counterexamples and quivers", || family_checks(opts)),
        timed("relations of B_5", || relation_checks(opts.field)),
        timed("property * for higher Auslander-Solberg algebras", || theorem_checks(opts)),
        timed("worked examples", || example_checks(opts.field)),
        timed("canonical tilting modules", || tilting_checks(opts)),
    ];
    let mut bounded = 0;
    sections.push(timed("interval calculus vs engine", || {
        let (c, b) = oracle_checks(opts);
        bounded = b;
        c
    }));
    sections.push(timed("soundness of infinite verdicts", || infinity_checks(bounded)));
    let tally = Tally::of(sections.iter().flat_map(|s| &s.checks));
    let passed = sections.iter().all(Section::passed);
    VerificationReport { options: opts.clone(), sections, tally, passed }
}
