//! Gabriel quivers of structure-constant algebras, relations with a
//! dimension certificate, and vertex relabelings between quivers.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{EndoError, Result};
use crate::engine::{SCAlgebra, Scalar, SparseVec, Subspace};

/// An arrow `source -> target`, realized by the radical basis element
/// `basis` of the algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub basis: usize,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationTerm {
    pub coefficient: String,
    /// Arrow indices, in path order.
    pub path: Vec<usize>,
}

/// A linear combination of parallel paths that vanishes in the algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub terms: Vec<RelationTerm>,
}

impl Relation {
    /// A single path set to zero.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Two paths identified with each other.
    pub fn is_commutativity(&self) -> bool {
        self.terms.len() == 2 && self.terms[0].coefficient == "1" && self.terms[1].coefficient == "-1"
    }

    pub fn path_lengths(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.path.len()).collect()
    }
}

/// The dimension count certifying that the relations generate the whole
/// kernel: `vertices + arrows + paths - ideal_dim == algebra_dim`, where
/// `paths` counts paths of length `2..=nilpotency` and `ideal_dim` is the
/// dimension of the span of all `u r v` among them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub cap: usize,
    pub vertices: usize,
    pub arrows: usize,
    pub paths: usize,
    pub ideal_dim: usize,
    pub quotient_dim: usize,
    pub algebra_dim: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverPresentation {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    /// `arrow_count[s][t]` = number of arrows `s -> t`.
    pub arrow_count: Vec<Vec<usize>>,
    /// `cartan[s][t] = dim e_s B e_t`.
    pub cartan: Vec<Vec<usize>>,
    pub relations: Option<Vec<Relation>>,
    pub certificate: Option<Certificate>,
}

impl QuiverPresentation {
    pub fn arrow_total(&self) -> usize {
        self.arrows.len()
    }

    pub fn format_relation(&self, r: &Relation) -> String {
        let mut out = String::new();
        for (i, t) in r.terms.iter().enumerate() {
            let path = t.path.iter().map(|&a| self.arrows[a].label.as_str()).collect::<Vec<_>>().join("*");
            let (neg, mag) = match t.coefficient.strip_prefix('-') {
                Some(m) => (true, m),
                None => (false, t.coefficient.as_str()),
            };
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if mag != "1" {
                out.push_str(mag);
                out.push(' ');
            }
            out.push_str(&path);
        }
        out
    }
}

/// Arrows and Cartan matrix of `alg`, without relations.
pub fn quiver_of(alg: &SCAlgebra, vertices: Vec<String>) -> QuiverPresentation {
    let arrows = alg
        .generators()
        .iter()
        .map(|&g| Arrow { source: alg.left(g), target: alg.right(g), basis: g, label: alg.labels()[g].clone() })
        .collect();
    QuiverPresentation {
        vertices,
        arrows,
        arrow_count: alg.arrow_counts(),
        cartan: alg.cartan_matrix(),
        relations: None,
        certificate: None,
    }
}

/// Paths of length `2..=max_len` in length-then-lexicographic order, with
/// their values in the algebra.
struct Paths {
    paths: Vec<Vec<usize>>,
    values: Vec<SparseVec>,
    index: HashMap<Vec<usize>, usize>,
    max_len: usize,
}

impl Paths {
    fn enumerate(alg: &SCAlgebra, arrows: &[Arrow], max_len: usize) -> Paths {
        let field = alg.field();
        let unit = |b: usize| vec![(b, field.one())];
        let mut level: Vec<(Vec<usize>, SparseVec)> = arrows.iter().enumerate().map(|(k, a)| (vec![k], unit(a.basis))).collect();
        let (mut paths, mut values) = (Vec::new(), Vec::new());
        for _ in 2..=max_len {
            let mut next = Vec::new();
            for (p, v) in &level {
                let end = arrows[*p.last().expect("nonempty path")].target;
                for (k, a) in arrows.iter().enumerate().filter(|(_, a)| a.source == end) {
                    let mut q = p.clone();
                    q.push(k);
                    next.push((q, alg.mul_sparse(v, &unit(a.basis))));
                }
            }
            next.sort_by(|x, y| x.0.cmp(&y.0));
            for (p, v) in &next {
                paths.push(p.clone());
                values.push(v.clone());
            }
            level = next;
        }
        let index = paths.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        Paths { paths, values, index, max_len }
    }

    fn len(&self) -> usize {
        self.paths.len()
    }

    // `prefix * x * suffix` for single-arrow (or empty) prefix and suffix,
    // dropping paths beyond the length bound.
    fn extend(&self, arrows: &[Arrow], x: &[Scalar], prefix: Option<usize>, suffix: Option<usize>) -> Vec<Scalar> {
        let field = x.first().map(Scalar::field).unwrap_or_default();
        let mut out = vec![field.zero(); self.len()];
        for (i, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let p = &self.paths[i];
            if p.len() + 1 > self.max_len {
                continue;
            }
            let q: Vec<usize> = match (prefix, suffix) {
                (Some(a), None) if arrows[a].target == arrows[p[0]].source => std::iter::once(a).chain(p.iter().copied()).collect(),
                (None, Some(a)) if arrows[*p.last().expect("nonempty")].target == arrows[a].source => {
                    p.iter().copied().chain(std::iter::once(a)).collect()
                }
                _ => continue,
            };
            let j = self.index[&q];
            out[j] = out[j].add(c);
        }
        out
    }

    fn arrow_multiples(&self, arrows: &[Arrow], x: &[Scalar]) -> Vec<Vec<Scalar>> {
        (0..arrows.len())
            .flat_map(|a| [self.extend(arrows, x, Some(a), None), self.extend(arrows, x, None, Some(a))])
            .filter(|v| v.iter().any(|c| !c.is_zero()))
            .collect()
    }
}

/// Relations of `alg` among paths of length at most `cap` (default: the
/// nilpotency index), with a dimension certificate.
///
/// The kernel of evaluation is computed separately for each pair of end
/// vertices. A relation is kept when it is not already a combination of
/// arrow multiples of kernel elements and earlier relations; kernel rows are
/// scanned in echelon order with shorter paths first.
pub fn relations_of(alg: &SCAlgebra, vertices: Vec<String>, cap: Option<usize>) -> Result<QuiverPresentation> {
    let mut q = quiver_of(alg, vertices);
    let field = alg.field();
    let top = alg.nilpotency_index().max(2);
    let cap = cap.unwrap_or(top);
    let paths = Paths::enumerate(alg, &q.arrows, top);
    let w = paths.len();
    let arrows = &q.arrows;
    let ends = |p: &[usize]| (arrows[p[0]].source, arrows[p[p.len() - 1]].target);

    let mut blocks: Vec<((usize, usize), Vec<usize>)> = Vec::new();
    for (i, p) in paths.paths.iter().enumerate().filter(|(_, p)| p.len() <= cap) {
        match blocks.iter_mut().find(|(e, _)| *e == ends(p)) {
            Some((_, members)) => members.push(i),
            None => blocks.push((ends(p), vec![i])),
        }
    }
    blocks.sort_by_key(|(e, _)| *e);
    let mut kernel: Vec<Vec<Scalar>> = Vec::new();
    for (_, members) in &blocks {
        let rows: Vec<Vec<Scalar>> = members
            .iter()
            .map(|&i| {
                let mut v = vec![field.zero(); alg.dim()];
                for (b, c) in &paths.values[i] {
                    v[*b] = c.clone();
                }
                v
            })
            .collect();
        let mut k = crate::engine::Matrix::from_rows(field, alg.dim(), rows).left_kernel();
        k.rref();
        for r in 0..k.rows() {
            let mut v = vec![field.zero(); w];
            for (j, &i) in members.iter().enumerate() {
                v[i] = k[(r, j)].clone();
            }
            kernel.push(v);
        }
    }

    let mut span = Subspace::zero(field, w);
    for k in &kernel {
        for v in paths.arrow_multiples(arrows, k) {
            span.insert(&v);
        }
    }
    let mut chosen: Vec<Vec<Scalar>> = Vec::new();
    for k in &kernel {
        if span.insert(k) {
            chosen.push(k.clone());
        }
    }

    let mut ideal = Subspace::zero(field, w);
    let mut frontier: Vec<Vec<Scalar>> = chosen.iter().filter(|r| ideal.insert(r)).cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for v in paths.arrow_multiples(arrows, x) {
                if ideal.insert(&v) {
                    next.push(v);
                }
            }
        }
        frontier = next;
    }

    let quotient_dim = alg.vertex_count() + arrows.len() + w - ideal.dim();
    let relations: Vec<Relation> = chosen
        .iter()
        .map(|r| Relation {
            terms: r
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| RelationTerm { coefficient: c.to_string(), path: paths.paths[i].clone() })
                .collect(),
        })
        .collect();
    debug_assert!(chosen.iter().all(|r| {
        let mut dense = vec![field.zero(); alg.dim()];
        for (i, c) in r.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (b, x) in &paths.values[i] {
                dense[*b] = dense[*b].add(&x.mul(c));
            }
        }
        dense.iter().all(Scalar::is_zero)
    }));
    if quotient_dim > alg.dim() {
        return Err(EndoError::CapTooSmall { cap, quotient_dim, dim: alg.dim() });
    }
    assert_eq!(quotient_dim, alg.dim(), "relations must vanish in the algebra");
    q.certificate = Some(Certificate {
        cap,
        vertices: alg.vertex_count(),
        arrows: arrows.len(),
        paths: w,
        ideal_dim: ideal.dim(),
        quotient_dim,
        algebra_dim: alg.dim(),
        passed: true,
    });
    q.relations = Some(relations);
    Ok(q)
}

/// A vertex bijection `p` with `a[k][i][j] == b[k][p[i]][p[j]]` for every
/// matrix pair `k`, found by backtracking.
pub fn find_isomorphism(a: &[Vec<Vec<usize>>], b: &[Vec<Vec<usize>>]) -> Option<Vec<usize>> {
    let n = a.first().map_or(0, Vec::len);
    if a.len() != b.len() || a.iter().chain(b).any(|m| m.len() != n || m.iter().any(|r| r.len() != n)) {
        return None;
    }
    let signature = |ms: &[Vec<Vec<usize>>], i: usize| -> Vec<(usize, usize, usize)> {
        ms.iter().map(|m| (m[i].iter().sum(), (0..n).map(|j| m[j][i]).sum(), m[i][i])).collect()
    };
    let sa: Vec<_> = (0..n).map(|i| signature(a, i)).collect();
    let sb: Vec<_> = (0..n).map(|i| signature(b, i)).collect();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        i: usize,
        a: &[Vec<Vec<usize>>],
        b: &[Vec<Vec<usize>>],
        sa: &[Vec<(usize, usize, usize)>],
        sb: &[Vec<(usize, usize, usize)>],
        perm: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if i == perm.len() {
            return true;
        }
        for j in 0..perm.len() {
            if used[j] || sa[i] != sb[j] {
                continue;
            }
            let fits = (0..i).all(|h| a.iter().zip(b).all(|(ma, mb)| ma[i][h] == mb[j][perm[h]] && ma[h][i] == mb[perm[h]][j]));
            if !fits {
                continue;
            }
            perm[i] = j;
            used[j] = true;
            if go(i + 1, a, b, sa, sb, perm, used) {
                return true;
            }
            used[j] = false;
        }
        false
    }
    go(0, a, b, &sa, &sb, &mut perm, &mut used).then_some(perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{nakayama_to_sc, Field};
    use crate::kupisch::{family_a, KupischSeries};

    #[test]
    fn isomorphism_respects_direction() {
        let path = vec![vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]];
        let relabeled = vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0]];
        let p = find_isomorphism(std::slice::from_ref(&path), &[relabeled]).unwrap();
        assert_eq!(p, vec![2, 1, 0]);
        let sink = vec![vec![0, 0, 1], vec![0, 0, 1], vec![0, 0, 0]];
        assert!(find_isomorphism(&[path], &[sink]).is_none());
    }

    #[test]
    fn path_algebra_relations_are_monomial() {
        let a5 = family_a(5).unwrap();
        let alg = nakayama_to_sc(&a5, Field::Rational);
        let q = relations_of(&alg, (0..5).map(|i| i.to_string()).collect(), None).unwrap();
        let rels = q.relations.as_ref().unwrap();
        // c = [3,3,3,2,1]: only the paths of length 3 from 0 and 1 vanish
        assert_eq!(rels.len(), 2);
        assert!(rels.iter().all(Relation::is_monomial));
        assert_eq!(rels.iter().map(|r| r.path_lengths()[0]).collect::<Vec<_>>(), vec![3, 3]);
        assert!(q.certificate.unwrap().passed);
    }

    #[test]
    fn cyclic_relations_and_small_caps() {
        let k = KupischSeries::cyclic(&[2, 2]).unwrap();
        let alg = nakayama_to_sc(&k, Field::Rational);
        let names = vec!["0".to_string(), "1".to_string()];
        let q = relations_of(&alg, names.clone(), None).unwrap();
        assert_eq!(q.relations.unwrap().len(), 2);
        let k = KupischSeries::cyclic(&[4, 5]).unwrap();
        let alg = nakayama_to_sc(&k, Field::Rational);
        assert!(matches!(relations_of(&alg, names.clone(), Some(3)), Err(EndoError::CapTooSmall { .. })));
        let q = relations_of(&alg, names, None).unwrap();
        assert_eq!(q.relations.unwrap().iter().map(|r| r.path_lengths()).collect::<Vec<_>>(), vec![vec![4]]);
    }
}
