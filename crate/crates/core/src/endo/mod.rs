//! Endomorphism algebras of basic direct sums of interval modules, as
//! structure-constant algebras, with quiver and relation extraction.
//!
//! For `T = T_0 + ... + T_{m-1}` the basis of `End_A(T)` consists of the
//! shift maps `f(src, tgt, t)`: the map `T_src -> T_tgt` sending the top of
//! `T_src` to the composition factor of `T_tgt` at position `t`. The product
//! is composition, `a * b = a o b`, so `f(src, tgt, t)` lies in
//! `e_tgt B e_src` and an arrow `s -> t` of the quiver is an irreducible map
//! `T_t -> T_s`.

mod quiver;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::{interval_positions, interval_to_rep, nakayama_to_sc, Field, Matrix, ModuleMap, SCAlgebra, SCAlgebraJson, Subspace};
use crate::kupisch::{Interval, KupischError, KupischSeries, ModuleList};

pub use quiver::{find_isomorphism, quiver_of, relations_of, Arrow, Certificate, QuiverPresentation, Relation, RelationTerm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EndoError {
    #[error("the module list is empty")]
    EmptyModuleList,
    #[error(transparent)]
    Kupisch(#[from] KupischError),
    #[error("relations up to length {cap} leave a quotient of dimension {quotient_dim}, expected {dim}")]
    CapTooSmall { cap: usize, quotient_dim: usize, dim: usize },
    #[error("shift composition disagrees with explicit module maps: {0}")]
    CompositionMismatch(String),
}

pub type Result<T, E = EndoError> = std::result::Result<T, E>;

/// The shift map `T_src -> T_tgt` with shift `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize, usize)", into = "(usize, usize, usize)")]
pub struct HomBasisElement {
    pub src: usize,
    pub tgt: usize,
    pub shift: usize,
}

impl From<(usize, usize, usize)> for HomBasisElement {
    fn from((src, tgt, shift): (usize, usize, usize)) -> Self {
        HomBasisElement { src, tgt, shift }
    }
}

impl From<HomBasisElement> for (usize, usize, usize) {
    fn from(h: HomBasisElement) -> Self {
        (h.src, h.tgt, h.shift)
    }
}

#[derive(Clone, Debug)]
pub struct EndoAlgebra {
    base: KupischSeries,
    summands: ModuleList,
    algebra: SCAlgebra,
    labels: Vec<HomBasisElement>,
    warnings: Vec<String>,
}

/// `End_A(T)` for the basic version of `T`. Duplicate summands are dropped
/// with a warning. A sample of products is checked against composition of
/// explicit module maps.
pub fn build_endo(k: &KupischSeries, t: &ModuleList, field: Field) -> Result<EndoAlgebra> {
    if t.is_empty() {
        return Err(EndoError::EmptyModuleList);
    }
    for x in t.iter() {
        k.interval(x.vertex, x.len)?;
    }
    let summands = t.basic();
    let mut warnings = Vec::new();
    if summands.len() < t.len() {
        warnings.push(format!("dropped {} duplicate summand(s) to pass to the basic module", t.len() - summands.len()));
    }
    let s = summands.as_slice();
    let mut labels = Vec::new();
    for src in 0..s.len() {
        for tgt in 0..s.len() {
            labels.extend(k.hom_shifts(&s[src], &s[tgt]).map(|shift| HomBasisElement { src, tgt, shift }));
        }
    }
    let index: HashMap<HomBasisElement, usize> = labels.iter().enumerate().map(|(i, h)| (*h, i)).collect();
    let mut products = Vec::new();
    for (a, g) in labels.iter().enumerate() {
        for (b, f) in labels.iter().enumerate() {
            if let Some(h) = compose(s, f, g) {
                products.push((a, b, vec![(index[&h], field.one())]));
            }
        }
    }
    let idempotents = (0..s.len()).map(|v| index[&HomBasisElement { src: v, tgt: v, shift: 0 }]).collect::<Vec<_>>();
    let radical = (0..labels.len()).filter(|i| !idempotents.contains(i)).collect();
    let names = labels.iter().map(|h| format!("f({},{},{})", h.src, h.tgt, h.shift)).collect();
    let algebra =
        SCAlgebra::new(field, names, products, idempotents, radical).map_err(|e| EndoError::CompositionMismatch(e.to_string()))?;
    let e = EndoAlgebra { base: k.clone(), summands, algebra, labels, warnings };
    e.verify_composition(Some(256))?;
    Ok(e)
}

/// `g o f` for `f: X -> Y` and `g: Y -> Z`; `None` if the maps are not
/// composable or the composite vanishes.
fn compose(s: &[Interval], f: &HomBasisElement, g: &HomBasisElement) -> Option<HomBasisElement> {
    (f.tgt == g.src && f.shift + g.shift < s[g.tgt].len).then_some(HomBasisElement { src: f.src, tgt: g.tgt, shift: f.shift + g.shift })
}

impl EndoAlgebra {
    pub fn base(&self) -> &KupischSeries {
        &self.base
    }

    /// Summands in canonical order; summand `v` is vertex `v` of the quiver.
    pub fn summands(&self) -> &ModuleList {
        &self.summands
    }

    pub fn algebra(&self) -> &SCAlgebra {
        &self.algebra
    }

    pub fn labels(&self) -> &[HomBasisElement] {
        &self.labels
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `cartan[s][t] = dim Hom(T_s, T_t)`. This is the transpose of
    /// [`SCAlgebra::cartan_matrix`], which counts `e_s B e_t`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let m = self.summands.len();
        let mut c = vec![vec![0; m]; m];
        for h in &self.labels {
            c[h.src][h.tgt] += 1;
        }
        c
    }

    fn vertex_names(&self) -> Vec<String> {
        self.summands.iter().map(ToString::to_string).collect()
    }

    pub fn quiver(&self) -> QuiverPresentation {
        quiver_of(&self.algebra, self.vertex_names())
    }

    /// The quiver with relations found among paths of length at most `cap`
    /// (default: the nilpotency index of the radical).
    pub fn relations(&self, cap: Option<usize>) -> Result<QuiverPresentation> {
        relations_of(&self.algebra, self.vertex_names(), cap)
    }

    /// Matrix of the basis map `h` in the graded bases of the interval
    /// representations over the path algebra `path`.
    fn map_matrix(&self, path: &SCAlgebra, h: &HomBasisElement) -> ModuleMap {
        let s = self.summands.as_slice();
        let (x, y) = (&s[h.src], &s[h.tgt]);
        let (px, py) = (interval_positions(&self.base, x), interval_positions(&self.base, y));
        let dims = |m: &[(usize, usize)]| {
            let mut d = vec![0; path.vertex_count()];
            for &(v, _) in m {
                d[v] += 1;
            }
            d
        };
        let (dx, dy) = (dims(&px), dims(&py));
        let field = path.field();
        let mut blocks: Vec<Matrix> = (0..path.vertex_count()).map(|v| Matrix::zeros(field, dx[v], dy[v])).collect();
        for (a, &(v, i)) in px.iter().enumerate() {
            if let Some(&(w, j)) = py.get(a + h.shift) {
                debug_assert_eq!(v, w);
                blocks[v][(i, j)] = field.one();
            }
        }
        ModuleMap::from_blocks(blocks)
    }

    /// Checks the structure constants against explicit module maps: every
    /// basis map is a homomorphism, the maps for each pair of summands are a
    /// basis of the Hom space computed by the engine, and products agree
    /// with matrix composition. `sample` bounds the number of products
    /// checked; `None` checks all of them.
    pub fn verify_composition(&self, sample: Option<usize>) -> Result<()> {
        let path = nakayama_to_sc(&self.base, self.algebra.field());
        let s = self.summands.as_slice();
        let reps: Vec<_> = s.iter().map(|x| interval_to_rep(&path, &self.base, x)).collect();
        let maps: Vec<ModuleMap> = self.labels.iter().map(|h| self.map_matrix(&path, h)).collect();
        let fail = |msg: String| Err(EndoError::CompositionMismatch(msg));
        for (h, f) in self.labels.iter().zip(&maps) {
            if !f.is_homomorphism(&path, &reps[h.src], &reps[h.tgt]) {
                return fail(format!("f({},{},{}) is not a module map", h.src, h.tgt, h.shift));
            }
        }
        for src in 0..s.len() {
            for tgt in 0..s.len() {
                let expected = crate::engine::hom_dim(&path, &reps[src], &reps[tgt]);
                let flat: Vec<_> =
                    self.labels.iter().zip(&maps).filter(|(h, _)| h.src == src && h.tgt == tgt).map(|(_, f)| f.matrix()).collect();
                let mut span = Subspace::zero(path.field(), reps[src].dim() * reps[tgt].dim());
                for m in &flat {
                    span.insert(&m.to_rows().concat());
                }
                if span.dim() != flat.len() || span.dim() != expected {
                    return fail(format!(
                        "Hom({}, {}): {} shift maps of rank {}, engine dimension {expected}",
                        s[src],
                        s[tgt],
                        flat.len(),
                        span.dim()
                    ));
                }
            }
        }
        let d = self.labels.len();
        let step = sample.map_or(1, |n| (d * d).div_ceil(n.max(1)).max(1));
        for pair in (0..d * d).step_by(step) {
            let (a, b) = (pair / d, pair % d);
            if self.labels[b].tgt != self.labels[a].src {
                continue;
            }
            // a * b = a o b, which as row-vector matrices is "b then a"
            let composite = maps[b].then(&maps[a]);
            let expected = match self.algebra.product(a, b) {
                [] => None,
                [(c, x)] if x.is_one() => Some(*c),
                other => return fail(format!("product {a} * {b} is not a basis element: {other:?}")),
            };
            let ok = match expected {
                None => composite.is_zero(),
                Some(c) => composite == maps[c],
            };
            if !ok {
                return fail(format!("product of {} and {}", self.algebra.labels()[a], self.algebra.labels()[b]));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> EndoAlgebraJson {
        EndoAlgebraJson { algebra: self.algebra.to_json(), summands: self.summands.clone(), labels: self.labels.clone() }
    }
}

/// Wire form: the algebra fields plus `summands` and `labels`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EndoAlgebraJson {
    #[serde(flatten)]
    pub algebra: SCAlgebraJson,
    pub summands: ModuleList,
    pub labels: Vec<HomBasisElement>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kupisch::{enumerate_series, family_a};

    fn endo(k: &KupischSeries, t: &ModuleList) -> EndoAlgebra {
        build_endo(k, t, Field::Rational).unwrap()
    }

    fn tilting_endo(n: usize, i: usize) -> EndoAlgebra {
        let a = family_a(n).unwrap();
        endo(&a, &a.canonical_tilting(i).unwrap())
    }

    // Line 0 -> 1 -> ... -> n-2 with an extra arrow n-1 -> 1.
    fn line_with_back_arrow(n: usize) -> Vec<Vec<usize>> {
        let mut q = vec![vec![0; n]; n];
        for i in 0..n - 2 {
            q[i][i + 1] = 1;
        }
        q[n - 1][1] = 1;
        q
    }

    // Line 0 -> ... -> n-3 with n-1 -> n-2, n-1 -> 0 and n-2 -> 1.
    fn line_with_three_extra_arrows(n: usize) -> Vec<Vec<usize>> {
        let mut q = vec![vec![0; n]; n];
        for i in 0..n - 3 {
            q[i][i + 1] = 1;
        }
        q[n - 1][n - 2] = 1;
        q[n - 1][0] = 1;
        q[n - 2][1] = 1;
        q
    }

    fn line(n: usize) -> Vec<Vec<usize>> {
        let mut q = vec![vec![0; n]; n];
        for i in 0..n - 1 {
            q[i][i + 1] = 1;
        }
        q
    }

    #[test]
    fn first_family_members() {
        let b4 = tilting_endo(4, 1);
        assert_eq!(b4.dim(), 9);
        assert!(find_isomorphism(&[b4.quiver().arrow_count], &[line_with_back_arrow(4)]).is_some());
        let b5 = tilting_endo(5, 2);
        assert_eq!(b5.dim(), 12);
        assert!(find_isomorphism(&[b5.quiver().arrow_count], &[line_with_three_extra_arrows(5)]).is_some());
    }

    #[test]
    fn relations_of_first_family_members() {
        let b4 = tilting_endo(4, 1).relations(None).unwrap();
        assert!(b4.relations.as_ref().unwrap().is_empty());
        assert_eq!(b4.certificate.as_ref().unwrap().quotient_dim, 9);

        let b5 = tilting_endo(5, 2).relations(None).unwrap();
        let p = find_isomorphism(std::slice::from_ref(&b5.arrow_count), &[line_with_three_extra_arrows(5)]).unwrap();
        let ends =
            |path: &[usize]| -> Vec<(usize, usize)> { path.iter().map(|&a| (p[b5.arrows[a].source], p[b5.arrows[a].target])).collect() };
        let rels = b5.relations.as_ref().unwrap();
        assert_eq!(rels.len(), 2);
        // C_2 has an automorphism swapping 0 and 3, so the zero path may be
        // either of the two paths through 1 into 2.
        let zero = rels.iter().find(|r| r.is_monomial()).unwrap();
        let z = ends(&zero.terms[0].path);
        assert!(z == vec![(0, 1), (1, 2)] || z == vec![(3, 1), (1, 2)], "{z:?}");
        let comm = rels.iter().find(|r| r.is_commutativity()).unwrap();
        let mut sides: Vec<_> = comm.terms.iter().map(|t| ends(&t.path)).collect();
        sides.sort();
        assert_eq!(sides, vec![vec![(4, 0), (0, 1)], vec![(4, 3), (3, 1)]]);
        assert!(b5.certificate.unwrap().passed);
    }

    #[test]
    fn larger_family_members_match_the_quivers() {
        for m in 2..=3 {
            let b = tilting_endo(3 * m + 1, 2 * m - 1);
            assert_eq!(b.dim(), 9 * m + 1);
            assert!(find_isomorphism(&[b.quiver().arrow_count], &[line_with_back_arrow(3 * m + 1)]).is_some());
            let b = tilting_endo(3 * m + 2, 2 * m);
            assert_eq!(b.dim(), 9 * m + 3);
            assert!(find_isomorphism(&[b.quiver().arrow_count], &[line_with_three_extra_arrows(3 * m + 2)]).is_some());
        }
    }

    #[test]
    fn higher_auslander_endo_has_the_same_quiver() {
        let b = tilting_endo(6, 3);
        assert!(find_isomorphism(&[b.quiver().arrow_count], &[line(6)]).is_some());
    }

    #[test]
    fn cartan_sums_to_dimension() {
        let b = tilting_endo(5, 2);
        let c = b.cartan_matrix();
        assert_eq!(c.iter().flatten().sum::<usize>(), 12);
        assert!((0..5).all(|i| c[i][i] >= 1));
        let a = b.algebra().cartan_matrix();
        assert!((0..5).all(|i| (0..5).all(|j| a[i][j] == c[j][i])));
    }

    #[test]
    fn single_summand_is_local() {
        let a = family_a(5).unwrap();
        let p = Interval { vertex: 0, len: 3 };
        let e = endo(&a, &ModuleList::new(vec![p]));
        assert_eq!(e.dim(), a.hom_dim(&p, &p));
        assert_eq!(e.algebra().vertex_count(), 1);
    }

    #[test]
    fn duplicates_are_dropped_with_a_warning() {
        let a = family_a(4).unwrap();
        let p = Interval { vertex: 0, len: 3 };
        let e = endo(&a, &ModuleList::new(vec![p, p]));
        assert_eq!(e.summands().len(), 1);
        assert_eq!(e.warnings().len(), 1);
        assert!(matches!(build_endo(&a, &ModuleList::zero(), Field::Rational), Err(EndoError::EmptyModuleList)));
        let bad = ModuleList::new(vec![Interval { vertex: 3, len: 2 }]);
        assert!(matches!(build_endo(&a, &bad, Field::Rational), Err(EndoError::Kupisch(_))));
    }

    #[test]
    fn composition_matches_module_maps_for_tilting_modules() {
        for k in enumerate_series(6, 6) {
            let t = match k.domdim_algebra().finite() {
                Some(n) if n >= 1 => k.canonical_tilting(n as usize).unwrap(),
                _ => k.regular_module(),
            };
            let e = endo(&k, &t);
            e.verify_composition(None).unwrap_or_else(|err| panic!("{k}: {err}"));
            assert_eq!(e.dim(), k.hom_dim_list(&t.basic(), &t.basic()));
        }
    }

    #[test]
    fn composition_matches_module_maps_for_auslander_algebras() {
        for k in enumerate_series(3, 4) {
            let all = ModuleList::new(k.all_intervals());
            endo(&k, &all).verify_composition(None).unwrap_or_else(|err| panic!("{k}: {err}"));
        }
    }

    #[test]
    fn json_carries_summands_and_labels() {
        let b = tilting_endo(4, 1);
        let v = serde_json::to_value(b.to_json()).unwrap();
        assert_eq!(v["dim"], 9);
        assert_eq!(v["summands"][0], "M(0,3)");
        assert_eq!(v["labels"].as_array().unwrap().len(), 9);
    }
}
