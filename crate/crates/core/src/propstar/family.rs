//! The family `A_n = [3, ..., 3, 2, 1]` and `B_n = End(eA + Omega^{-d}(A))`
//! for `d = domdim A_n`, checked against closed formulas in `m` for
//! `n = 3m, 3m+1, 3m+2`.

use serde::{Deserialize, Serialize};

use super::{property_star_check, Check};
use crate::endo::{build_endo, find_isomorphism, EndoAlgebra};
use crate::engine::{interval_to_rep, nakayama_to_sc, Engine, Field};
use crate::kupisch::{family_a, Interval, KupischSeries, ModuleList};
use crate::ExtNat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyVerdict {
    pub m: usize,
    pub checks: Vec<Check>,
    /// Claims of the failed checks.
    pub mismatches: Vec<String>,
}

/// Quiver of `B_n` for `n = 3m+1`: the line `0 -> ... -> n-2` and an arrow
/// `n-1 -> 1`.
pub fn quiver_one_mod_three(n: usize) -> Vec<Vec<usize>> {
    let mut q = vec![vec![0; n]; n];
    for i in 0..n - 2 {
        q[i][i + 1] = 1;
    }
    q[n - 1][1] = 1;
    q
}

/// Quiver of `B_n` for `n = 3m+2`: the line `0 -> ... -> n-3` and arrows
/// `n-1 -> n-2`, `n-1 -> 0`, `n-2 -> 1`.
pub fn quiver_two_mod_three(n: usize) -> Vec<Vec<usize>> {
    let mut q = vec![vec![0; n]; n];
    for i in 0..n - 3 {
        q[i][i + 1] = 1;
    }
    q[n - 1][n - 2] = 1;
    q[n - 1][0] = 1;
    q[n - 2][1] = 1;
    q
}

fn iv(vertex: usize, len: usize) -> Interval {
    Interval { vertex, len }
}

fn ext(v: usize) -> ExtNat {
    ExtNat::Finite(v as u64)
}

/// `B_n` together with its dimension counted from engine Hom spaces
/// between the summands.
fn endo_of(a: &KupischSeries, field: Field) -> (EndoAlgebra, usize) {
    let d = a.domdim_algebra().finite().expect("the family has finite dominant dimension") as usize;
    let b = build_endo(a, &a.canonical_tilting(d).expect("valid index"), field).expect("valid summands");
    let path = nakayama_to_sc(a, field);
    let engine = Engine::new(path.clone());
    let reps: Vec<_> = b.summands().iter().map(|x| interval_to_rep(&path, a, x)).collect();
    let counted = reps.iter().flat_map(|x| reps.iter().map(move |y| (x, y))).map(|(x, y)| engine.hom_space(x, y).len()).sum();
    (b, counted)
}

fn dims_checks(checks: &mut Vec<Check>, name: &str, a: &KupischSeries, domdim: usize, gldim: usize) {
    checks.push(Check::value(format!("domdim {name}"), ext(domdim), a.domdim_algebra()));
    checks.push(Check::value(format!("gldim {name}"), ext(gldim), a.gldim()));
}

fn endo_checks(checks: &mut Vec<Check>, name: &str, b: &EndoAlgebra, counted: usize, domdim: usize, quiver: Vec<Vec<usize>>) {
    checks.push(Check::value(format!("dim {name}: builder vs engine Hom count"), counted, b.dim()));
    let engine = Engine::new(b.algebra().clone());
    checks.push(Check::bounded(format!("domdim {name}"), ext(domdim), engine.domdim_algebra()));
    let iso = find_isomorphism(&[b.quiver().arrow_count], &[quiver]).is_some();
    checks.push(Check::value(format!("quiver of {name} up to relabeling"), true, iso));
}

fn verdict(m: usize, field: Field) -> FamilyVerdict {
    let mut checks = Vec::new();
    let (n0, n1, n2) = (3 * m, 3 * m + 1, 3 * m + 2);
    let (a0, a1, a2) = (family_a(n0).expect("n >= 3"), family_a(n1).expect("n >= 4"), family_a(n2).expect("n >= 5"));
    let (d0, d1, d2) = (2 * m - 1, 2 * m - 1, 2 * m);

    dims_checks(&mut checks, &format!("A_{n0}"), &a0, d0, d0);
    dims_checks(&mut checks, &format!("A_{n1}"), &a1, d1, 2 * m);
    dims_checks(&mut checks, &format!("A_{n2}"), &a2, d2, 2 * m + 1);
    checks.push(Check::value(
        format!("cosyzygy {d1} of A_{n1}"),
        ModuleList::new(vec![iv(1, 2), iv(1, 1)]),
        a1.cosyzygy_power(&a1.regular_module(), d1),
    ));
    checks.push(Check::value(
        format!("cosyzygy {d2} of A_{n2}"),
        ModuleList::new(vec![iv(0, 2), iv(1, 1)]),
        a2.cosyzygy_power(&a2.regular_module(), d2),
    ));
    checks.push(Check::value(format!("dim A_{n1}"), 9 * m, a1.dim()));
    checks.push(Check::value(format!("dim A_{n2}"), 9 * m + 3, a2.dim()));

    let (b1, counted1) = endo_of(&a1, field);
    if m == 1 {
        checks.push(Check::documented(format!("dim B_{n1}"), 9 * m + 1, 9, b1.dim()));
    } else {
        checks.push(Check::value(format!("dim B_{n1}"), 9 * m + 1, b1.dim()));
    }
    endo_checks(&mut checks, &format!("B_{n1}"), &b1, counted1, 0, quiver_one_mod_three(n1));

    let (b2, counted2) = endo_of(&a2, field);
    checks.push(Check::value(format!("dim B_{n2}"), 9 * m + 3, b2.dim()));
    endo_checks(&mut checks, &format!("B_{n2}"), &b2, counted2, 1, quiver_two_mod_three(n2));

    if m >= 2 {
        let r = property_star_check(&a0, field).expect("finite positive dominant dimension");
        checks.push(Check::bounded(format!("domdim of the endomorphism algebra of A_{n0}"), ext(d0), r.endo_domdim));
    }

    let mismatches = checks.iter().filter(|c| c.failed()).map(|c| c.claim.clone()).collect();
    FamilyVerdict { m, checks, mismatches }
}

/// All family claims for `m = 1..=m_max`. Mismatches are reported, never
/// corrected.
pub fn verify_family(m_max: usize, field: Field) -> Vec<FamilyVerdict> {
    (1..=m_max).map(|m| verdict(m, field)).collect()
}
