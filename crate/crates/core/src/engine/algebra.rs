use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{EngineError, Field, Matrix, Result, Scalar, Subspace};

/// A sparse linear combination of basis elements, sorted by index.
pub type SparseVec = Vec<(usize, Scalar)>;

/// A basic finite-dimensional algebra given by structure constants, with a
/// designated complete set of primitive orthogonal idempotents and a
/// designated radical basis. All of this is verified on construction.
///
/// Vertex `s` is the idempotent `idempotents[s]`. Products are read
/// left-to-right, so an arrow `s -> t` of the quiver is an element of
/// `e_s (rad / rad^2) e_t`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "SCAlgebraJson", into = "SCAlgebraJson")]
pub struct SCAlgebra {
    field: Field,
    labels: Vec<String>,
    table: Vec<SparseVec>,
    idempotents: Vec<usize>,
    radical: Vec<usize>,
    left: Vec<usize>,
    right: Vec<usize>,
    by_left: Vec<Vec<usize>>,
    by_right: Vec<Vec<usize>>,
    generators: Vec<usize>,
    nilpotency: usize,
}

fn invalid(msg: impl Into<String>) -> EngineError {
    EngineError::InvalidAlgebra(msg.into())
}

fn normalize(field: Field, v: SparseVec) -> SparseVec {
    let mut v = v;
    v.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y = y.add(&x),
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    debug_assert!(out.iter().all(|(_, x)| x.field() == field));
    out
}

impl SCAlgebra {
    /// Builds and verifies an algebra. `products` lists the nonzero products
    /// `a * b` of basis elements; omitted products are zero.
    pub fn new(
        field: Field,
        labels: Vec<String>,
        products: impl IntoIterator<Item = (usize, usize, SparseVec)>,
        idempotents: Vec<usize>,
        radical: Vec<usize>,
    ) -> Result<SCAlgebra> {
        let dim = labels.len();
        if dim == 0 {
            return Err(invalid("dimension must be positive"));
        }
        let unique: HashSet<&String> = labels.iter().collect();
        if unique.len() != dim {
            return Err(invalid("basis labels must be distinct"));
        }
        let mut table = vec![Vec::new(); dim * dim];
        let mut seen = vec![false; dim * dim];
        for (a, b, v) in products {
            if a >= dim || b >= dim || v.iter().any(|(d, _)| *d >= dim) {
                return Err(invalid(format!("product index out of range in {a} * {b}")));
            }
            if std::mem::replace(&mut seen[a * dim + b], true) {
                return Err(invalid(format!("product {a} * {b} given twice")));
            }
            table[a * dim + b] = normalize(field, v);
        }
        let mut alg = SCAlgebra {
            field,
            labels,
            table,
            idempotents,
            radical,
            left: Vec::new(),
            right: Vec::new(),
            by_left: Vec::new(),
            by_right: Vec::new(),
            generators: Vec::new(),
            nilpotency: 0,
        };
        alg.check_partition()?;
        alg.check_idempotents()?;
        alg.assign_peirce()?;
        alg.check_radical_ideal()?;
        alg.check_associativity()?;
        alg.compute_radical_structure()?;
        Ok(alg)
    }

    fn check_partition(&self) -> Result<()> {
        let dim = self.dim();
        let mut owner = vec![0u8; dim];
        for &i in self.idempotents.iter().chain(&self.radical) {
            if i >= dim {
                return Err(invalid(format!("basis index {i} out of range")));
            }
            owner[i] += 1;
        }
        if let Some(i) = owner.iter().position(|&c| c != 1) {
            return Err(invalid(format!("basis element {} must be listed exactly once among idempotents and radical", self.labels[i])));
        }
        if self.idempotents.is_empty() {
            return Err(invalid("no idempotents given"));
        }
        Ok(())
    }

    fn is_unit_vector(v: &[(usize, Scalar)], i: usize) -> bool {
        v.len() == 1 && v[0].0 == i && v[0].1.is_one()
    }

    fn check_idempotents(&self) -> Result<()> {
        for &e in &self.idempotents {
            for &f in &self.idempotents {
                let p = self.product(e, f);
                let ok = if e == f { Self::is_unit_vector(p, e) } else { p.is_empty() };
                if !ok {
                    return Err(invalid(format!("idempotents {} and {} are not orthogonal idempotents", self.labels[e], self.labels[f])));
                }
            }
        }
        Ok(())
    }

    // Each basis element must satisfy e_s b = b for exactly one s and be
    // killed by the others, and likewise on the right. This also proves the
    // idempotents sum to the identity on the basis.
    fn assign_peirce(&mut self) -> Result<()> {
        let dim = self.dim();
        let n = self.idempotents.len();
        let mut left = vec![usize::MAX; dim];
        let mut right = vec![usize::MAX; dim];
        for b in 0..dim {
            for (s, &e) in self.idempotents.iter().enumerate() {
                for (side, slot, p) in [("left", &mut left[b], self.product(e, b)), ("right", &mut right[b], self.product(b, e))] {
                    if Self::is_unit_vector(p, b) {
                        if *slot != usize::MAX {
                            return Err(invalid(format!("{} is fixed by two idempotents on the {side}", self.labels[b])));
                        }
                        *slot = s;
                    } else if !p.is_empty() {
                        return Err(invalid(format!("{} is not homogeneous for the idempotents on the {side}", self.labels[b])));
                    }
                }
            }
            if left[b] == usize::MAX || right[b] == usize::MAX {
                return Err(invalid(format!("the idempotents do not sum to the identity on {}", self.labels[b])));
            }
        }
        let mut by_left = vec![Vec::new(); n];
        let mut by_right = vec![Vec::new(); n];
        for b in 0..dim {
            by_left[left[b]].push(b);
            by_right[right[b]].push(b);
        }
        self.left = left;
        self.right = right;
        self.by_left = by_left;
        self.by_right = by_right;
        Ok(())
    }

    fn check_radical_ideal(&self) -> Result<()> {
        let mut in_radical = vec![false; self.dim()];
        for &r in &self.radical {
            in_radical[r] = true;
        }
        for &r in &self.radical {
            for a in 0..self.dim() {
                for p in [self.product(a, r), self.product(r, a)] {
                    if p.iter().any(|(d, _)| !in_radical[*d]) {
                        return Err(invalid(format!("the radical is not an ideal (products with {})", self.labels[r])));
                    }
                }
            }
        }
        Ok(())
    }

    // Only triples where one of the inner products is nonzero can fail.
    fn check_associativity(&self) -> Result<()> {
        let dim = self.dim();
        for a in 0..dim {
            for b in 0..dim {
                let ab = self.product(a, b);
                if ab.is_empty() {
                    continue;
                }
                for c in 0..dim {
                    if !self.triple_associates(a, b, c) {
                        return Err(invalid(format!(
                            "({} * {}) * {} != {} * ({} * {})",
                            self.labels[a], self.labels[b], self.labels[c], self.labels[a], self.labels[b], self.labels[c]
                        )));
                    }
                }
            }
        }
        for b in 0..dim {
            for c in 0..dim {
                if self.product(b, c).is_empty() {
                    continue;
                }
                for a in 0..dim {
                    if self.product(a, b).is_empty() && !self.triple_associates(a, b, c) {
                        return Err(invalid(format!("associativity fails on {}, {}, {}", self.labels[a], self.labels[b], self.labels[c])));
                    }
                }
            }
        }
        Ok(())
    }

    fn triple_associates(&self, a: usize, b: usize, c: usize) -> bool {
        let lhs = self.mul_sparse(self.product(a, b), &[(c, self.field.one())]);
        let rhs = self.mul_sparse(&[(a, self.field.one())], self.product(b, c));
        lhs == rhs
    }

    fn compute_radical_structure(&mut self) -> Result<()> {
        let dim = self.dim();
        let rows = self
            .radical
            .iter()
            .map(|&r| {
                let mut v = vec![self.field.zero(); dim];
                v[r] = self.field.one();
                v
            })
            .collect();
        let mut power = Subspace::span(&Matrix::from_rows(self.field, dim, rows));
        let mut index = 1;
        let mut square = None;
        while power.dim() > 0 {
            let mut next = Vec::new();
            for i in 0..power.dim() {
                let x: Vec<Scalar> = power.basis().row(i).to_vec();
                for &r in &self.radical {
                    let mut unit = vec![self.field.zero(); dim];
                    unit[r] = self.field.one();
                    let y = self.mul_dense(&x, &unit);
                    if y.iter().any(|s| !s.is_zero()) {
                        next.push(y);
                    }
                }
            }
            let next = Subspace::span(&Matrix::from_rows(self.field, dim, next));
            if next.dim() == power.dim() {
                return Err(invalid("the radical is not nilpotent"));
            }
            if square.is_none() {
                square = Some(next.clone());
            }
            power = next;
            index += 1;
        }
        let square = square.unwrap_or_else(|| Subspace::zero(self.field, dim));
        let pivots: HashSet<usize> = square.pivots().iter().copied().collect();
        self.generators = self.radical.iter().copied().filter(|r| !pivots.contains(r)).collect();
        self.generators.sort_unstable();
        self.nilpotency = if self.radical.is_empty() { 1 } else { index };
        Ok(())
    }

    /// Same basis with the product reversed.
    pub fn opposite(&self) -> SCAlgebra {
        let dim = self.dim();
        let mut table = vec![Vec::new(); dim * dim];
        for a in 0..dim {
            for b in 0..dim {
                table[b * dim + a] = self.table[a * dim + b].clone();
            }
        }
        SCAlgebra {
            field: self.field,
            labels: self.labels.clone(),
            table,
            idempotents: self.idempotents.clone(),
            radical: self.radical.clone(),
            left: self.right.clone(),
            right: self.left.clone(),
            by_left: self.by_right.clone(),
            by_right: self.by_left.clone(),
            generators: self.generators.clone(),
            nilpotency: self.nilpotency,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Number of vertices (primitive idempotents).
    pub fn vertex_count(&self) -> usize {
        self.idempotents.len()
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn radical(&self) -> &[usize] {
        &self.radical
    }

    pub fn is_idempotent(&self, b: usize) -> bool {
        self.left[b] == self.right[b] && self.idempotents[self.left[b]] == b
    }

    pub fn product(&self, a: usize, b: usize) -> &[(usize, Scalar)] {
        &self.table[a * self.dim() + b]
    }

    /// The vertex `s` with `e_s b = b`.
    pub fn left(&self, b: usize) -> usize {
        self.left[b]
    }

    /// The vertex `t` with `b e_t = b`.
    pub fn right(&self, b: usize) -> usize {
        self.right[b]
    }

    /// Basis of `e_s B`.
    pub fn starting_at(&self, s: usize) -> &[usize] {
        &self.by_left[s]
    }

    /// Basis of `B e_t`.
    pub fn ending_at(&self, t: usize) -> &[usize] {
        &self.by_right[t]
    }

    /// Radical basis elements spanning a complement of `rad^2` in `rad`;
    /// together with the idempotents they generate the algebra.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Smallest `L` with `rad^L = 0`.
    pub fn nilpotency_index(&self) -> usize {
        self.nilpotency
    }

    /// `counts[s][t] = dim e_s (rad / rad^2) e_t`, the number of arrows
    /// `s -> t`.
    pub fn arrow_counts(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut counts = vec![vec![0; n]; n];
        for &g in &self.generators {
            counts[self.left[g]][self.right[g]] += 1;
        }
        counts
    }

    /// `dims[s][t] = dim e_s B e_t`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut m = vec![vec![0; n]; n];
        for b in 0..self.dim() {
            m[self.left[b]][self.right[b]] += 1;
        }
        m
    }

    pub fn mul_sparse(&self, x: &[(usize, Scalar)], y: &[(usize, Scalar)]) -> SparseVec {
        let mut acc: Vec<(usize, Scalar)> = Vec::new();
        for (a, s) in x {
            for (b, t) in y {
                let st = s.mul(t);
                for (d, c) in self.product(*a, *b) {
                    acc.push((*d, c.mul(&st)));
                }
            }
        }
        normalize(self.field, acc)
    }

    pub fn mul_dense(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim()];
        for (a, s) in x.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
            for (b, t) in y.iter().enumerate().filter(|(_, t)| !t.is_zero()) {
                let p = self.product(a, b);
                if p.is_empty() {
                    continue;
                }
                let st = s.mul(t);
                for (d, c) in p {
                    out[*d] = out[*d].add(&c.mul(&st));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> SCAlgebraJson {
        self.clone().into()
    }
}

/// One nonzero product `a * b = sum c_d b_d` as `[a, b, [[d, "c_d"], ...]]`.
pub type ProductJson = (usize, usize, Vec<(usize, String)>);

/// Wire form of [`SCAlgebra`]: sparse products `[a, b, [[d, "p/q"], ...]]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SCAlgebraJson {
    pub dim: usize,
    pub basis: Vec<String>,
    pub mult: Vec<ProductJson>,
    pub idempotents: Vec<usize>,
    pub radical: Vec<usize>,
    pub field: Field,
}

impl From<SCAlgebra> for SCAlgebraJson {
    fn from(a: SCAlgebra) -> Self {
        let dim = a.dim();
        let mut mult = Vec::new();
        for x in 0..dim {
            for y in 0..dim {
                let p = a.product(x, y);
                if !p.is_empty() {
                    mult.push((x, y, p.iter().map(|(d, c)| (*d, c.to_string())).collect()));
                }
            }
        }
        SCAlgebraJson { dim, basis: a.labels, mult, idempotents: a.idempotents, radical: a.radical, field: a.field }
    }
}

impl TryFrom<SCAlgebraJson> for SCAlgebra {
    type Error = EngineError;

    fn try_from(j: SCAlgebraJson) -> Result<Self> {
        if j.basis.len() != j.dim {
            return Err(invalid(format!("dim {} does not match {} basis labels", j.dim, j.basis.len())));
        }
        let mut products = Vec::with_capacity(j.mult.len());
        for (a, b, terms) in j.mult {
            let v = terms.iter().map(|(d, c)| Ok((*d, j.field.parse_scalar(c)?))).collect::<Result<SparseVec>>()?;
            products.push((a, b, v));
        }
        SCAlgebra::new(j.field, j.basis, products, j.idempotents, j.radical)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // k[x]/(x^2) at one vertex.
    fn dual_numbers() -> SCAlgebra {
        let f = Field::Rational;
        SCAlgebra::new(
            f,
            vec!["e".into(), "x".into()],
            vec![(0, 0, vec![(0, f.one())]), (0, 1, vec![(1, f.one())]), (1, 0, vec![(1, f.one())])],
            vec![0],
            vec![1],
        )
        .unwrap()
    }

    #[test]
    fn dual_numbers_structure() {
        let a = dual_numbers();
        assert_eq!(a.generators(), &[1]);
        assert_eq!(a.nilpotency_index(), 2);
        assert_eq!(a.arrow_counts(), vec![vec![1]]);
        assert_eq!(a.cartan_matrix(), vec![vec![2]]);
    }

    #[test]
    fn rejects_non_nilpotent_radical() {
        let f = Field::Rational;
        let err = SCAlgebra::new(
            f,
            vec!["e".into(), "x".into()],
            vec![(0, 0, vec![(0, f.one())]), (0, 1, vec![(1, f.one())]), (1, 0, vec![(1, f.one())]), (1, 1, vec![(1, f.one())])],
            vec![0],
            vec![1],
        )
        .unwrap_err();
        assert!(err.to_string().contains("nilpotent"), "{err}");
    }

    #[test]
    fn rejects_missing_unit() {
        let f = Field::Rational;
        let err = SCAlgebra::new(f, vec!["e".into(), "x".into()], vec![(0, 0, vec![(0, f.one())])], vec![0], vec![1]).unwrap_err();
        assert!(err.to_string().contains("identity"), "{err}");
    }

    #[test]
    fn rejects_radical_that_is_not_an_ideal() {
        let f = Field::Rational;
        // arrows x: 0 -> 1 and y: 1 -> 0 with xy = e_0
        let labels = ["e0", "e1", "x", "y"].map(String::from).to_vec();
        let one = f.one();
        let products = vec![
            (0, 0, vec![(0, one.clone())]),
            (1, 1, vec![(1, one.clone())]),
            (0, 2, vec![(2, one.clone())]),
            (2, 1, vec![(2, one.clone())]),
            (1, 3, vec![(3, one.clone())]),
            (3, 0, vec![(3, one.clone())]),
            (2, 3, vec![(0, one.clone())]),
        ];
        let err = SCAlgebra::new(f, labels, products, vec![0, 1], vec![2, 3]).unwrap_err();
        assert!(err.to_string().contains("not an ideal"), "{err}");
    }

    #[test]
    fn rejects_non_associative_table() {
        let f = Field::Rational;
        // x x = y, y x = y, x y = 0: (x x) x != x (x x)
        let labels = ["e", "x", "y"].map(String::from).to_vec();
        let one = f.one();
        let products =
            [(0, 0, 0), (0, 1, 1), (1, 0, 1), (0, 2, 2), (2, 0, 2), (1, 1, 2), (2, 1, 2)].map(|(a, b, d)| (a, b, vec![(d, one.clone())]));
        let err = SCAlgebra::new(f, labels, products, vec![0], vec![1, 2]).unwrap_err();
        assert!(err.to_string().contains("!="), "{err}");
    }

    #[test]
    fn json_round_trip() {
        let a = dual_numbers();
        let text = serde_json::to_string(&a).unwrap();
        assert!(text.contains("\"field\":\"Q\""), "{text}");
        let b: SCAlgebra = serde_json::from_str(&text).unwrap();
        assert_eq!(b.dim(), 2);
        assert_eq!(b.product(1, 0), a.product(1, 0));
    }

    #[test]
    fn opposite_swaps_sides() {
        let a = dual_numbers();
        let op = a.opposite();
        assert_eq!(op.product(0, 1), a.product(1, 0));
    }
}
