//! Worked examples: the cyclic series `[2d, 2d+1]` and the endomorphism
//! algebra of the first canonical tilting module of `A_6`.

use serde::{Deserialize, Serialize};

use super::{is_higher_auslander, is_higher_auslander_solberg, Check};
use crate::endo::{build_endo, find_isomorphism, EndoAlgebra};
use crate::engine::{nakayama_to_sc, Engine, Field};
use crate::kupisch::{family_a, KupischSeries};
use crate::ExtNat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleReport {
    pub name: String,
    pub kupisch: KupischSeries,
    pub checks: Vec<Check>,
}

fn tilting_endo(k: &KupischSeries, i: usize, field: Field) -> EndoAlgebra {
    build_endo(k, &k.canonical_tilting(i).expect("index within the dominant dimension"), field).expect("valid summands")
}

fn adjacency(n: usize, arrows: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut q = vec![vec![0; n]; n];
    for &(s, t) in arrows {
        q[s][t] += 1;
    }
    q
}

/// A finite global dimension equals the injective dimension of the regular
/// module, so a lower bound beyond an exact Gorenstein dimension proves the
/// global dimension infinite.
fn gldim_check(claim: String, expected: ExtNat, gldim: ExtNat, gdim: ExtNat) -> Check {
    match (gldim, gdim) {
        (ExtNat::AtLeast(b), ExtNat::Finite(g)) if b > g => {
            Check::value(claim, expected, ExtNat::Infinity).with_note(format!("engine bound {gldim} exceeds Gorenstein dimension {g}"))
        }
        _ => Check::bounded(claim, expected, gldim),
    }
}

/// `A = [2d, 2d+1]`: dominant and Gorenstein dimension 2, finite global
/// dimension only for `d = 1`, and `B_i = End(eA + Omega^{-i}(A))` for
/// `i = 1, 2` with the dimensions of `A`. For `d = 1`, `B_1` and `A` are
/// compared by dimension, Cartan matrix and quiver; these invariants
/// matching is all that is claimed.
pub fn gendo_example_check(d: usize, field: Field) -> ExampleReport {
    assert!(d >= 1, "d must be positive");
    let k = KupischSeries::cyclic(&[2 * d as i64, 2 * d as i64 + 1]).expect("valid cyclic series");
    let two = ExtNat::Finite(2);
    let gldim = if d == 1 { two } else { ExtNat::Infinity };
    let mut checks = vec![
        Check::value("domdim A", two, k.domdim_algebra()),
        Check::value("Gorenstein dimension of A", two, k.gorenstein().gorenstein_dim),
        Check::value("gldim A", gldim, k.gldim()),
        Check::value("A is higher Auslander-Solberg", true, is_higher_auslander_solberg(&k)),
        Check::value("A is higher Auslander", d == 1, is_higher_auslander(&k)),
    ];
    for i in 1..=2 {
        let b = tilting_endo(&k, i, field);
        let engine = Engine::new(b.algebra().clone());
        checks.push(Check::bounded(format!("domdim B_{i}"), two, engine.domdim_algebra()));
        let gdim = engine.gorenstein().gorenstein_dim;
        checks.push(Check::bounded(format!("Gorenstein dimension of B_{i}"), two, gdim));
        checks.push(gldim_check(format!("gldim B_{i}"), gldim, engine.gldim(), gdim));
        if i > 1 {
            continue;
        }
        let q = b.quiver();
        if d == 1 {
            let a = nakayama_to_sc(&k, field);
            checks.push(Check::value("dim B_1 = dim A", a.dim(), b.dim()));
            let same = find_isomorphism(&[q.arrow_count.clone(), q.cartan.clone()], &[a.arrow_counts(), a.cartan_matrix()]);
            checks.push(Check::value("Cartan matrix and quiver of B_1 match A", true, same.is_some()));
        } else {
            // a loop at one vertex and a 2-cycle through the other
            let expected = adjacency(2, &[(0, 0), (0, 1), (1, 0)]);
            let same = find_isomorphism(std::slice::from_ref(&q.arrow_count), &[expected]).is_some();
            checks.push(Check::value("quiver of B_1", true, same));
        }
    }
    ExampleReport { name: format!("cyclic [2d, 2d+1] with d = {d}"), kupisch: k, checks }
}

/// `B = End(eA + Omega^{-1}(A_6))`: dominant dimension 1 and global
/// dimension 2, although `A_6` is higher Auslander with both equal to 3.
pub fn counterexample_a6_check(field: Field) -> ExampleReport {
    let a6 = family_a(6).expect("n >= 2");
    let three = ExtNat::Finite(3);
    let mut checks = vec![Check::value("domdim A_6", three, a6.domdim_algebra()), Check::value("gldim A_6", three, a6.gldim())];
    let b = tilting_endo(&a6, 1, field);
    let engine = Engine::new(b.algebra().clone());
    checks.push(Check::bounded("domdim B", ExtNat::Finite(1), engine.domdim_algebra()));
    checks.push(Check::bounded("gldim B", ExtNat::Finite(2), engine.gldim()));
    let expected = adjacency(6, &[(1, 0), (0, 2), (4, 1), (3, 0), (4, 3), (5, 4)]);
    let iso = find_isomorphism(&[b.quiver().arrow_count], &[expected]).is_some();
    checks.push(Check::value("quiver of B up to relabeling", true, iso));
    match b.relations(None) {
        Ok(q) => {
            let rels = q.relations.unwrap_or_default();
            let shape = |r: &crate::endo::Relation| (r.is_monomial(), r.is_commutativity(), r.path_lengths());
            let mut shapes: Vec<_> = rels.iter().map(shape).collect();
            shapes.sort();
            let expected = vec![(false, true, vec![2, 2]), (true, false, vec![2])];
            checks.push(
                Check::value("relations of B", format!("{expected:?}"), format!("{shapes:?}"))
                    .with_note("(monomial, commutativity, path lengths) per relation"),
            );
        }
        Err(e) => checks.push(Check::value("relations of B", "certificate".to_string(), e.to_string())),
    }
    ExampleReport { name: "End(eA + cosyzygy of A_6)".into(), kupisch: a6, checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::propstar::Status;

    #[test]
    fn gendo_examples_pass() {
        for d in 1..=3 {
            let r = gendo_example_check(d, Field::Rational);
            for c in &r.checks {
                assert!(matches!(c.status, Status::Pass | Status::Inconclusive), "d = {d}: {c:?}");
            }
        }
    }

    #[test]
    fn a6_counterexample_passes() {
        let r = counterexample_a6_check(Field::Rational);
        assert!(r.checks.iter().all(|c| c.status == Status::Pass), "{:?}", r.checks);
    }
}
