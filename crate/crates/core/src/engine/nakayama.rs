//! Path-basis model of a Nakayama algebra and of its interval modules.

use super::rep::RepBuilder;
use super::{Field, Representation, SCAlgebra};
use crate::kupisch::{Interval, KupischSeries};

/// Index of the path `p(i, t)` of length `t` starting at vertex `i`.
pub fn path_index(k: &KupischSeries, i: usize, t: usize) -> usize {
    debug_assert!(t < k.c()[i]);
    k.c()[..i].iter().sum::<usize>() + t
}

/// Basis `p(i, t)` for `0 <= t < c_i`, with
/// `p(i, s) p(i + s, t) = p(i, s + t)` when `s + t < c_i` and zero otherwise.
/// The idempotents are the trivial paths `p(i, 0)`, in vertex order.
pub fn nakayama_to_sc(k: &KupischSeries, field: Field) -> SCAlgebra {
    let n = k.n();
    let mut labels = Vec::with_capacity(k.dim());
    for i in 0..n {
        for t in 0..k.c()[i] {
            labels.push(format!("p({i},{t})"));
        }
    }
    let mut products = Vec::new();
    for i in 0..n {
        for s in 0..k.c()[i] {
            let j = k.shift(i, s as i64).expect("paths stay on the quiver");
            for t in 0..k.c()[j] {
                if s + t < k.c()[i] {
                    products.push((path_index(k, i, s), path_index(k, j, t), vec![(path_index(k, i, s + t), field.one())]));
                }
            }
        }
    }
    let idempotents = (0..n).map(|i| path_index(k, i, 0)).collect();
    let radical = (0..n).flat_map(|i| (1..k.c()[i]).map(move |t| (i, t))).map(|(i, t)| path_index(k, i, t)).collect();
    SCAlgebra::new(field, labels, products, idempotents, radical).expect("path algebras of Kupisch series are valid")
}

/// Graded position `(vertex, local index)` of the basis vector `v_a` of
/// `M(i, k)`, for `a = 0, ..., k-1`.
pub fn interval_positions(k: &KupischSeries, m: &Interval) -> Vec<(usize, usize)> {
    let mut seen = vec![0; k.n()];
    (0..m.len)
        .map(|a| {
            let v = k.shift(m.vertex, a as i64).expect("valid interval");
            seen[v] += 1;
            (v, seen[v] - 1)
        })
        .collect()
}

/// `M(i, k)` with basis `v_0, ..., v_{k-1}`, `v_a` at vertex `i + a`, and
/// `v_a p(i + a, t) = v_{a + t}` when `a + t < k`.
pub fn interval_to_rep(alg: &SCAlgebra, k: &KupischSeries, m: &Interval) -> Representation {
    let vertex_of = interval_positions(k, m).into_iter().map(|(v, _)| v).collect();
    let mut builder = RepBuilder::new(alg, vertex_of);
    for a in 0..m.len {
        let v = k.shift(m.vertex, a as i64).expect("valid interval");
        for t in 1..m.len - a {
            builder.set(alg, path_index(k, v, t), a, a + t, alg.field().one());
        }
    }
    builder.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Engine;
    use crate::kupisch::{enumerate_series, family_a};

    fn m(vertex: usize, len: usize) -> Interval {
        Interval { vertex, len }
    }

    #[test]
    fn dimensions_of_path_algebras() {
        assert_eq!(nakayama_to_sc(&family_a(5).unwrap(), Field::Rational).dim(), 12);
        assert_eq!(nakayama_to_sc(&family_a(4).unwrap(), Field::Rational).dim(), 9);
        let c23 = KupischSeries::cyclic(&[2, 3]).unwrap();
        let alg = nakayama_to_sc(&c23, Field::Rational);
        assert_eq!(alg.dim(), 5);
        assert_eq!(alg.arrow_counts(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn interval_reps_are_modules() {
        for k in enumerate_series(4, 5) {
            let alg = nakayama_to_sc(&k, Field::Rational);
            for x in k.all_intervals() {
                interval_to_rep(&alg, &k, &x).validate(&alg).unwrap();
            }
        }
    }

    #[test]
    fn projectives_and_injectives_match_intervals() {
        let a5 = family_a(5).unwrap();
        let alg = nakayama_to_sc(&a5, Field::Rational);
        let e = Engine::new(alg.clone());
        assert_eq!(e.indecomposable_projective(0).unwrap(), &interval_to_rep(&alg, &a5, &m(0, 3)));
        assert_eq!(e.indecomposable_injective(4).unwrap().dim(), 3);
        assert_eq!(e.socle_multiplicities(&interval_to_rep(&alg, &a5, &m(0, 3))), vec![0, 0, 1, 0, 0]);
        let c23 = KupischSeries::cyclic(&[2, 3]).unwrap();
        let alg = nakayama_to_sc(&c23, Field::Rational);
        let x = interval_to_rep(&alg, &c23, &m(1, 3));
        assert_eq!(crate::engine::Engine::new(alg).hom_dim(&x, &x), 2);
    }
}
