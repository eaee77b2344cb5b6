use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{EngineError, Field, Matrix, Result, SCAlgebra, Scalar, Subspace};

/// A right module over an [`SCAlgebra`], graded by vertex.
///
/// `dims[s] = dim M e_s`, and the basis of `M` is the concatenation of the
/// bases of the `M e_s` in vertex order. For a basis element `a` of
/// `e_s B e_t`, `blocks[a]` is the `dims[s] x dims[t]` matrix of
/// `v |-> v a` from `M e_s` to `M e_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    field: Field,
    dims: Vec<usize>,
    blocks: Vec<Matrix>,
}

/// A module homomorphism, one block `M e_s -> N e_s` per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    blocks: Vec<Matrix>,
}

fn bad_rep(msg: impl Into<String>) -> EngineError {
    EngineError::InvalidRepresentation(msg.into())
}

/// Incremental construction from an ungraded basis whose vectors are each
/// assigned a vertex.
pub(crate) struct RepBuilder {
    vertex_of: Vec<usize>,
    local: Vec<usize>,
    rep: Representation,
}

impl RepBuilder {
    pub(crate) fn new(alg: &SCAlgebra, vertex_of: Vec<usize>) -> RepBuilder {
        let mut dims = vec![0; alg.vertex_count()];
        let local = vertex_of
            .iter()
            .map(|&v| {
                dims[v] += 1;
                dims[v] - 1
            })
            .collect();
        RepBuilder { vertex_of, local, rep: Representation::zero_action(alg, dims) }
    }

    /// Records `basis[from] * a = ... + value * basis[to] + ...`.
    pub(crate) fn set(&mut self, alg: &SCAlgebra, a: usize, from: usize, to: usize, value: Scalar) {
        debug_assert_eq!(self.vertex_of[from], alg.left(a));
        debug_assert_eq!(self.vertex_of[to], alg.right(a));
        self.rep.blocks[a][(self.local[from], self.local[to])] = value;
    }

    pub(crate) fn build(self) -> Representation {
        self.rep
    }
}

impl Representation {
    /// Zero action of the radical, identity action of the idempotents.
    fn zero_action(alg: &SCAlgebra, dims: Vec<usize>) -> Representation {
        let field = alg.field();
        let mut blocks: Vec<Matrix> = (0..alg.dim()).map(|a| Matrix::zeros(field, dims[alg.left(a)], dims[alg.right(a)])).collect();
        for (s, &e) in alg.idempotents().iter().enumerate() {
            blocks[e] = Matrix::identity(field, dims[s]);
        }
        Representation { field, dims, blocks }
    }

    pub fn zero(alg: &SCAlgebra) -> Representation {
        Representation::zero_action(alg, vec![0; alg.vertex_count()])
    }

    /// The simple module at vertex `s`.
    pub fn simple(alg: &SCAlgebra, s: usize) -> Result<Representation> {
        check_vertex(alg, s)?;
        let mut dims = vec![0; alg.vertex_count()];
        dims[s] = 1;
        Ok(Representation::zero_action(alg, dims))
    }

    /// Verified construction from graded blocks.
    pub fn from_blocks(alg: &SCAlgebra, dims: Vec<usize>, blocks: Vec<Matrix>) -> Result<Representation> {
        if dims.len() != alg.vertex_count() || blocks.len() != alg.dim() {
            return Err(bad_rep("shape does not match the algebra"));
        }
        let rep = Representation { field: alg.field(), dims, blocks };
        rep.validate(alg)?;
        Ok(rep)
    }

    /// Checks block shapes, the identity action and `(v a) b = v (a b)` on
    /// all composable basis pairs.
    pub fn validate(&self, alg: &SCAlgebra) -> Result<()> {
        if self.dims.len() != alg.vertex_count() || self.blocks.len() != alg.dim() {
            return Err(bad_rep("shape does not match the algebra"));
        }
        for (a, block) in self.blocks.iter().enumerate() {
            if block.field() != alg.field() {
                return Err(bad_rep("field does not match the algebra"));
            }
            if (block.rows(), block.cols()) != (self.dims[alg.left(a)], self.dims[alg.right(a)]) {
                return Err(bad_rep(format!("action of {} has the wrong shape", alg.labels()[a])));
            }
        }
        for (s, &e) in alg.idempotents().iter().enumerate() {
            if self.blocks[e] != Matrix::identity(self.field, self.dims[s]) {
                return Err(bad_rep(format!("{} does not act as the identity on its vertex", alg.labels()[e])));
            }
        }
        for a in 0..alg.dim() {
            for &b in alg.starting_at(alg.right(a)) {
                let lhs = self.blocks[a].mul(&self.blocks[b]);
                let mut rhs = Matrix::zeros(self.field, lhs.rows(), lhs.cols());
                for (d, c) in alg.product(a, b) {
                    rhs = rhs.add(&self.blocks[*d].scale(c));
                }
                if lhs != rhs {
                    return Err(bad_rep(format!("action does not respect {} * {}", alg.labels()[a], alg.labels()[b])));
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// `dim M e_s` for every vertex.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn offset(&self, s: usize) -> usize {
        self.dims[..s].iter().sum()
    }

    pub fn block(&self, a: usize) -> &Matrix {
        &self.blocks[a]
    }

    /// The full `dim M x dim M` matrix of the action of basis element `a`.
    pub fn action_matrix(&self, alg: &SCAlgebra, a: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim(), self.dim());
        let (r0, c0) = (self.offset(alg.left(a)), self.offset(alg.right(a)));
        let b = &self.blocks[a];
        for r in 0..b.rows() {
            for c in 0..b.cols() {
                m[(r0 + r, c0 + c)] = b[(r, c)].clone();
            }
        }
        m
    }

    /// `e_i B` with the right regular action.
    pub fn projective(alg: &SCAlgebra, i: usize) -> Result<Representation> {
        check_vertex(alg, i)?;
        let basis = alg.starting_at(i);
        let mut pos = vec![usize::MAX; alg.dim()];
        for (k, &x) in basis.iter().enumerate() {
            pos[x] = k;
        }
        let mut builder = RepBuilder::new(alg, basis.iter().map(|&x| alg.right(x)).collect());
        for (k, &x) in basis.iter().enumerate() {
            for &a in alg.starting_at(alg.right(x)) {
                for (d, c) in alg.product(x, a) {
                    builder.set(alg, a, k, pos[*d], c.clone());
                }
            }
        }
        Ok(builder.build())
    }

    /// `D(B e_i)`: the dual of the left module `B e_i`, with
    /// `(f a)(x) = f(a x)`. The functional dual to `x` in `e_s B e_i` lives
    /// at vertex `s`.
    pub fn injective(alg: &SCAlgebra, i: usize) -> Result<Representation> {
        check_vertex(alg, i)?;
        let basis = alg.ending_at(i);
        let mut pos = vec![usize::MAX; alg.dim()];
        for (k, &x) in basis.iter().enumerate() {
            pos[x] = k;
        }
        let mut builder = RepBuilder::new(alg, basis.iter().map(|&x| alg.left(x)).collect());
        for (k, &x) in basis.iter().enumerate() {
            for &a in alg.ending_at(alg.left(x)) {
                // f_y . a = sum_x f_y(a x) f_x
                for (y, c) in alg.product(a, x) {
                    builder.set(alg, a, pos[*y], k, c.clone());
                }
            }
        }
        Ok(builder.build())
    }

    /// `D(M) = Hom_K(M, K)` as a right module over the opposite algebra.
    pub fn dual(&self) -> Representation {
        Representation { field: self.field, dims: self.dims.clone(), blocks: self.blocks.iter().map(Matrix::transpose).collect() }
    }

    pub fn direct_sum(alg: &SCAlgebra, parts: &[&Representation]) -> Representation {
        let n = alg.vertex_count();
        let dims: Vec<usize> = (0..n).map(|s| parts.iter().map(|p| p.dims[s]).sum()).collect();
        let mut out = Representation::zero_action(alg, dims);
        let mut offsets = vec![0; n];
        for p in parts {
            for (a, block) in p.blocks.iter().enumerate() {
                let (r0, c0) = (offsets[alg.left(a)], offsets[alg.right(a)]);
                for r in 0..block.rows() {
                    for c in 0..block.cols() {
                        let x = &block[(r, c)];
                        if !x.is_zero() {
                            out.blocks[a][(r0 + r, c0 + c)] = x.clone();
                        }
                    }
                }
            }
            for (o, d) in offsets.iter_mut().zip(&p.dims) {
                *o += d;
            }
        }
        out
    }

    /// `M rad` at each vertex, as subspaces of `M e_t`.
    pub fn radical_subspaces(&self, alg: &SCAlgebra) -> Vec<Subspace> {
        (0..alg.vertex_count())
            .map(|t| {
                let rows: Vec<Vec<Scalar>> = alg
                    .ending_at(t)
                    .iter()
                    .filter(|&&r| !alg.is_idempotent(r))
                    .flat_map(|&r| self.blocks[r].to_rows())
                    .filter(|row| row.iter().any(|x| !x.is_zero()))
                    .collect();
                Subspace::span(&Matrix::from_rows(self.field, self.dims[t], rows))
            })
            .collect()
    }

    /// `soc M = {v : v rad = 0}` at each vertex.
    pub fn socle_subspaces(&self, alg: &SCAlgebra) -> Vec<Subspace> {
        (0..alg.vertex_count())
            .map(|s| {
                let radical: Vec<usize> = alg.starting_at(s).iter().copied().filter(|&r| !alg.is_idempotent(r)).collect();
                let width: usize = radical.iter().map(|&r| self.blocks[r].cols()).sum();
                let mut stacked = Matrix::zeros(self.field, self.dims[s], width);
                let mut c0 = 0;
                for &r in &radical {
                    let b = &self.blocks[r];
                    for i in 0..b.rows() {
                        for j in 0..b.cols() {
                            stacked[(i, c0 + j)] = b[(i, j)].clone();
                        }
                    }
                    c0 += b.cols();
                }
                Subspace::span(&stacked.left_kernel())
            })
            .collect()
    }

    /// Multiplicity of each simple in `top M = M / M rad`.
    pub fn top_multiplicities(&self, alg: &SCAlgebra) -> Vec<usize> {
        self.radical_subspaces(alg).iter().zip(&self.dims).map(|(r, d)| d - r.dim()).collect()
    }

    pub fn socle_multiplicities(&self, alg: &SCAlgebra) -> Vec<usize> {
        self.socle_subspaces(alg).iter().map(Subspace::dim).collect()
    }

    /// The submodule with the given graded pieces, which must be closed
    /// under the action, together with its inclusion.
    pub fn submodule(&self, alg: &SCAlgebra, pieces: &[Subspace]) -> (Representation, ModuleMap) {
        let dims: Vec<usize> = pieces.iter().map(Subspace::dim).collect();
        let mut sub = Representation::zero_action(alg, dims);
        for a in 0..alg.dim() {
            let (s, t) = (alg.left(a), alg.right(a));
            if pieces[s].dim() == 0 || pieces[t].dim() == 0 {
                continue;
            }
            let image = pieces[s].basis().mul(&self.blocks[a]);
            for r in 0..image.rows() {
                let coords = pieces[t].coords(image.row(r)).expect("submodule closed under the action");
                sub.blocks[a].row_mut(r).clone_from_slice(&coords);
            }
        }
        let inclusion = ModuleMap { blocks: pieces.iter().map(|p| p.basis().clone()).collect() };
        (sub, inclusion)
    }

    /// `M / N` for a submodule `N` given by its graded pieces, together with
    /// the projection.
    pub fn quotient(&self, alg: &SCAlgebra, pieces: &[Subspace]) -> (Representation, ModuleMap) {
        let keep: Vec<Vec<usize>> =
            pieces.iter().zip(&self.dims).map(|(p, &d)| (0..d).filter(|c| !p.pivots().contains(c)).collect()).collect();
        let projection: Vec<Matrix> = pieces
            .iter()
            .zip(&self.dims)
            .zip(&keep)
            .map(|((p, &d), keep)| {
                let rows = (0..d)
                    .map(|j| {
                        let mut e = vec![self.field.zero(); d];
                        e[j] = self.field.one();
                        let r = p.reduce(&e);
                        keep.iter().map(|&c| r[c].clone()).collect()
                    })
                    .collect();
                Matrix::from_rows(self.field, keep.len(), rows)
            })
            .collect();
        let dims: Vec<usize> = keep.iter().map(Vec::len).collect();
        let mut q = Representation::zero_action(alg, dims);
        for a in 0..alg.dim() {
            let (s, t) = (alg.left(a), alg.right(a));
            let all: Vec<usize> = (0..self.dims[t]).collect();
            q.blocks[a] = self.blocks[a].select(&keep[s], &all).mul(&projection[t]);
        }
        (q, ModuleMap { blocks: projection })
    }

    pub fn to_json(&self, alg: &SCAlgebra) -> RepresentationJson {
        let action = (0..alg.dim())
            .map(|a| {
                let m = self.action_matrix(alg, a);
                let rows = m.to_rows().iter().map(|r| r.iter().map(Scalar::to_string).collect()).collect();
                (alg.labels()[a].clone(), rows)
            })
            .collect();
        RepresentationJson { dim: self.dim(), action }
    }

    /// Reads full action matrices in any basis and regrades them along the
    /// idempotents.
    pub fn from_json(alg: &SCAlgebra, json: &RepresentationJson) -> Result<Representation> {
        let field = alg.field();
        let m = json.dim;
        let mut full = Vec::with_capacity(alg.dim());
        for label in alg.labels() {
            let rows = json.action.get(label).ok_or_else(|| bad_rep(format!("missing action of {label}")))?;
            if rows.len() != m || rows.iter().any(|r| r.len() != m) {
                return Err(bad_rep(format!("action of {label} is not {m} x {m}")));
            }
            let parsed =
                rows.iter().map(|r| r.iter().map(|x| field.parse_scalar(x)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
            full.push(Matrix::from_rows(field, m, parsed));
        }
        // New basis: bases of the images of the idempotent actions.
        let mut dims = Vec::new();
        let mut basis = Matrix::zeros(field, 0, m);
        for &e in alg.idempotents() {
            let image = Subspace::span(&full[e]);
            dims.push(image.dim());
            basis = basis.vstack(image.basis());
        }
        if basis.rows() != m {
            return Err(bad_rep("the idempotent images do not span the module"));
        }
        let inverse = basis.inverse().ok_or_else(|| bad_rep("the idempotent images are not independent"))?;
        let mut blocks = Vec::with_capacity(alg.dim());
        let offsets: Vec<usize> = (0..dims.len()).map(|s| dims[..s].iter().sum()).collect();
        for (a, action) in full.iter().enumerate() {
            let changed = basis.mul(action).mul(&inverse);
            let (s, t) = (alg.left(a), alg.right(a));
            let rows: Vec<usize> = (offsets[s]..offsets[s] + dims[s]).collect();
            let cols: Vec<usize> = (offsets[t]..offsets[t] + dims[t]).collect();
            let block = changed.select(&rows, &cols);
            // everything outside the block must vanish for a graded action
            let mut check = changed.clone();
            for &r in &rows {
                for &c in &cols {
                    check[(r, c)] = field.zero();
                }
            }
            if !check.is_zero() {
                return Err(bad_rep(format!("action of {} is not compatible with the idempotents", alg.labels()[a])));
            }
            blocks.push(block);
        }
        Representation::from_blocks(alg, dims, blocks)
    }
}

/// Wire form: full action matrices keyed by basis label, entries as
/// `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub dim: usize,
    pub action: BTreeMap<String, Vec<Vec<String>>>,
}

fn check_vertex(alg: &SCAlgebra, s: usize) -> Result<()> {
    if s >= alg.vertex_count() {
        return Err(EngineError::VertexOutOfRange { vertex: s, n: alg.vertex_count() });
    }
    Ok(())
}

impl ModuleMap {
    pub fn from_blocks(blocks: Vec<Matrix>) -> ModuleMap {
        ModuleMap { blocks }
    }

    pub fn identity(m: &Representation) -> ModuleMap {
        ModuleMap { blocks: m.dims.iter().map(|&d| Matrix::identity(m.field, d)).collect() }
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    /// The block-diagonal matrix in the graded bases.
    pub fn matrix(&self) -> Matrix {
        let field = self.blocks[0].field();
        let rows: usize = self.blocks.iter().map(Matrix::rows).sum();
        let cols: usize = self.blocks.iter().map(Matrix::cols).sum();
        let mut m = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in &self.blocks {
            for r in 0..b.rows() {
                for c in 0..b.cols() {
                    m[(r0 + r, c0 + c)] = b[(r, c)].clone();
                }
            }
            r0 += b.rows();
            c0 += b.cols();
        }
        m
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.blocks.iter().map(Matrix::rows).sum::<usize>()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.blocks.iter().map(Matrix::cols).sum::<usize>()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &ModuleMap) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().zip(&next.blocks).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    /// Checks `f(v a) = f(v) a` for every basis element `a`.
    pub fn is_homomorphism(&self, alg: &SCAlgebra, source: &Representation, target: &Representation) -> bool {
        if self.blocks.len() != alg.vertex_count() {
            return false;
        }
        let shapes_ok = self.blocks.iter().enumerate().all(|(s, b)| (b.rows(), b.cols()) == (source.dims[s], target.dims[s]));
        shapes_ok
            && (0..alg.dim()).all(|a| {
                let (s, t) = (alg.left(a), alg.right(a));
                source.blocks[a].mul(&self.blocks[t]) == self.blocks[s].mul(&target.blocks[a])
            })
    }
}

// Unknowns: the entries of each block F_s, row-major, blocks in vertex
// order. One matrix equation A_M(g) F_t = F_s A_N(g) per generator g in
// e_s B e_t; idempotents are respected by the grading.
fn hom_equations(alg: &SCAlgebra, m: &Representation, n: &Representation) -> (Matrix, Vec<usize>) {
    let field = alg.field();
    let nv = alg.vertex_count();
    let mut offsets = Vec::with_capacity(nv + 1);
    let mut total = 0;
    for s in 0..nv {
        offsets.push(total);
        total += m.dims[s] * n.dims[s];
    }
    offsets.push(total);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for &g in alg.generators() {
        let (s, t) = (alg.left(g), alg.right(g));
        let (am, an) = (&m.blocks[g], &n.blocks[g]);
        let (ms, mt, ns, nt) = (m.dims[s], m.dims[t], n.dims[s], n.dims[t]);
        for p in 0..ms {
            for q in 0..nt {
                let mut row = vec![field.zero(); total];
                let mut nonzero = false;
                for r in 0..mt {
                    let x = &am[(p, r)];
                    if !x.is_zero() {
                        let idx = offsets[t] + r * nt + q;
                        row[idx] = row[idx].add(x);
                        nonzero = true;
                    }
                }
                for r in 0..ns {
                    let x = &an[(r, q)];
                    if !x.is_zero() {
                        let idx = offsets[s] + p * ns + r;
                        row[idx] = row[idx].sub(x);
                        nonzero = true;
                    }
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
    }
    (Matrix::from_rows(field, total, rows), offsets)
}

pub fn hom_dim(alg: &SCAlgebra, m: &Representation, n: &Representation) -> usize {
    let (eq, offsets) = hom_equations(alg, m, n);
    offsets[offsets.len() - 1] - eq.rank()
}

/// A basis of `Hom_B(M, N)`.
pub fn hom_space(alg: &SCAlgebra, m: &Representation, n: &Representation) -> Vec<ModuleMap> {
    let (eq, offsets) = hom_equations(alg, m, n);
    let kernel = eq.right_kernel();
    (0..kernel.rows())
        .map(|k| {
            let x = kernel.row(k);
            let blocks = (0..alg.vertex_count())
                .map(|s| {
                    let (ms, ns) = (m.dims[s], n.dims[s]);
                    let rows = (0..ms).map(|p| x[offsets[s] + p * ns..offsets[s] + (p + 1) * ns].to_vec()).collect();
                    Matrix::from_rows(alg.field(), ns, rows)
                })
                .collect();
            ModuleMap { blocks }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    // Path algebra of 0 -> 1 with basis e0, e1, a.
    fn a2() -> SCAlgebra {
        let f = Field::Rational;
        let one = f.one();
        SCAlgebra::new(
            f,
            ["e0", "e1", "a"].map(String::from).to_vec(),
            vec![
                (0, 0, vec![(0, one.clone())]),
                (1, 1, vec![(1, one.clone())]),
                (0, 2, vec![(2, one.clone())]),
                (2, 1, vec![(2, one.clone())]),
            ],
            vec![0, 1],
            vec![2],
        )
        .unwrap()
    }

    #[test]
    fn projectives_and_injectives_of_a2() {
        let alg = a2();
        let p0 = Representation::projective(&alg, 0).unwrap();
        assert_eq!(p0.dims(), &[1, 1]);
        p0.validate(&alg).unwrap();
        let p1 = Representation::projective(&alg, 1).unwrap();
        assert_eq!(p1.dims(), &[0, 1]);
        let i0 = Representation::injective(&alg, 0).unwrap();
        assert_eq!(i0.dims(), &[1, 0]);
        let i1 = Representation::injective(&alg, 1).unwrap();
        i1.validate(&alg).unwrap();
        assert_eq!(i1, p0);
        assert_eq!(p0.top_multiplicities(&alg), vec![1, 0]);
        assert_eq!(p0.socle_multiplicities(&alg), vec![0, 1]);
    }

    #[test]
    fn homs_of_a2() {
        let alg = a2();
        let p0 = Representation::projective(&alg, 0).unwrap();
        let p1 = Representation::projective(&alg, 1).unwrap();
        let s0 = Representation::simple(&alg, 0).unwrap();
        assert_eq!(hom_dim(&alg, &p1, &p0), 1);
        assert_eq!(hom_dim(&alg, &p0, &p1), 0);
        assert_eq!(hom_dim(&alg, &p0, &s0), 1);
        assert_eq!(hom_dim(&alg, &s0, &p0), 0);
        for f in hom_space(&alg, &p1, &p0) {
            assert!(f.is_homomorphism(&alg, &p1, &p0));
            assert!(f.is_injective());
        }
    }

    #[test]
    fn radical_quotient_and_submodule() {
        let alg = a2();
        let p0 = Representation::projective(&alg, 0).unwrap();
        let rad = p0.radical_subspaces(&alg);
        let (sub, inc) = p0.submodule(&alg, &rad);
        assert_eq!(sub.dims(), &[0, 1]);
        assert!(inc.is_homomorphism(&alg, &sub, &p0));
        let (top, proj) = p0.quotient(&alg, &rad);
        assert_eq!(top, Representation::simple(&alg, 0).unwrap());
        assert!(proj.is_homomorphism(&alg, &p0, &top));
        assert!(proj.is_surjective());
        assert!(inc.then(&proj).is_zero());
    }

    #[test]
    fn json_round_trip_regrades() {
        let alg = a2();
        let p0 = Representation::projective(&alg, 0).unwrap();
        let json = p0.to_json(&alg);
        assert_eq!(Representation::from_json(&alg, &json).unwrap(), p0);
        let broken = RepresentationJson { dim: 2, action: json.action.into_iter().take(2).collect() };
        assert!(Representation::from_json(&alg, &broken).is_err());
    }
}
