//! Projective covers by top generators, injective hulls by duality with the
//! opposite algebra, and the bounded resolutions built from them.

use serde::{Deserialize, Serialize};

use super::rep::{hom_dim, hom_space};
use super::{EngineError, Matrix, ModuleMap, Representation, Result, SCAlgebra, Subspace};
use crate::kupisch::Direction;
use crate::ExtNat;

/// One algebra together with its indecomposable projectives and a flag per
/// vertex saying whether `e_i B` is also injective.
#[derive(Clone, Debug)]
struct Side {
    alg: SCAlgebra,
    projectives: Vec<Representation>,
    projective_is_injective: Vec<bool>,
}

struct Cover {
    multiplicities: Vec<usize>,
    term: Representation,
    map: ModuleMap,
    syzygy: Representation,
}

impl Side {
    fn new(alg: SCAlgebra) -> Side {
        let projectives = (0..alg.vertex_count()).map(|i| Representation::projective(&alg, i).expect("vertex in range")).collect();
        Side { alg, projectives, projective_is_injective: Vec::new() }
    }

    fn cover_dim(&self, multiplicities: &[usize]) -> usize {
        multiplicities.iter().zip(&self.projectives).map(|(m, p)| m * p.dim()).sum()
    }

    fn is_projective(&self, m: &Representation) -> bool {
        self.cover_dim(&m.top_multiplicities(&self.alg)) == m.dim()
    }

    // Top generators are unit vectors at the non-pivot coordinates of the
    // radical at each vertex; generator x at vertex t spans a copy of e_t B
    // mapping b to x b.
    fn cover(&self, m: &Representation) -> Cover {
        let alg = &self.alg;
        let nv = alg.vertex_count();
        let field = alg.field();
        let radical = m.radical_subspaces(alg);
        let generators: Vec<(usize, usize)> = (0..nv)
            .flat_map(|t| {
                let pivots = radical[t].pivots().to_vec();
                (0..m.dims()[t]).filter(move |p| !pivots.contains(p)).map(move |p| (t, p))
            })
            .collect();
        let mut multiplicities = vec![0; nv];
        for &(t, _) in &generators {
            multiplicities[t] += 1;
        }
        let parts: Vec<&Representation> = generators.iter().map(|&(t, _)| &self.projectives[t]).collect();
        let term = Representation::direct_sum(alg, &parts);
        let blocks: Vec<Matrix> = (0..nv)
            .map(|u| {
                let rows = generators
                    .iter()
                    .flat_map(|&(t, p)| {
                        alg.starting_at(t).iter().filter(move |&&b| alg.right(b) == u).map(move |&b| m.block(b).row(p).to_vec())
                    })
                    .collect();
                Matrix::from_rows(field, m.dims()[u], rows)
            })
            .collect();
        let kernels: Vec<Subspace> = blocks.iter().map(|b| Subspace::span(&b.left_kernel())).collect();
        let (syzygy, _) = term.submodule(alg, &kernels);
        Cover { multiplicities, term, map: ModuleMap::from_blocks(blocks), syzygy }
    }
}

/// One term of a resolution: `⊕ e_i B^{m_i}` (projective direction) or
/// `⊕ D(B e_i)^{m_i}` (injective direction).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineStep {
    pub multiplicities: Vec<usize>,
    pub term_dim: usize,
    /// Dimension of the syzygy (resp. cosyzygy) resolved by the next term.
    pub next_dim: usize,
    /// Whether the term is also injective (resp. projective).
    pub dominant: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineResolution {
    pub direction: Direction,
    pub steps: Vec<EngineStep>,
    pub length: ExtNat,
    pub dominant: ExtNat,
    pub cap: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineGorenstein {
    pub injdim_projectives: Vec<ExtNat>,
    pub projdim_injectives: Vec<ExtNat>,
    pub gorenstein_dim: ExtNat,
    /// Both sides terminated below the cap and agree.
    pub exact: bool,
}

/// Homological computations over one algebra. Construction precomputes the
/// opposite algebra and which indecomposable projectives are injective and
/// vice versa.
#[derive(Clone, Debug)]
pub struct Engine {
    b: Side,
    op: Side,
    cap: usize,
}

impl Engine {
    pub fn new(alg: SCAlgebra) -> Engine {
        let cap = 2 * alg.dim() + 4;
        let mut op = Side::new(alg.opposite());
        let mut b = Side::new(alg);
        b.projective_is_injective = b.projectives.iter().map(|p| op.is_projective(&p.dual())).collect();
        op.projective_is_injective = op.projectives.iter().map(|p| b.is_projective(&p.dual())).collect();
        Engine { b, op, cap }
    }

    /// Overrides the default step cap `2 dim B + 4`.
    pub fn with_cap(mut self, cap: usize) -> Engine {
        self.cap = cap.max(1);
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn algebra(&self) -> &SCAlgebra {
        &self.b.alg
    }

    pub fn opposite(&self) -> &SCAlgebra {
        &self.op.alg
    }

    fn check_vertex(&self, i: usize) -> Result<()> {
        let n = self.b.alg.vertex_count();
        if i >= n {
            return Err(EngineError::VertexOutOfRange { vertex: i, n });
        }
        Ok(())
    }

    pub fn indecomposable_projective(&self, i: usize) -> Result<&Representation> {
        self.check_vertex(i)?;
        Ok(&self.b.projectives[i])
    }

    /// `D(B e_i)`, built directly from the left module `B e_i`.
    pub fn indecomposable_injective(&self, i: usize) -> Result<Representation> {
        Representation::injective(&self.b.alg, i)
    }

    pub fn simple(&self, i: usize) -> Result<Representation> {
        Representation::simple(&self.b.alg, i)
    }

    pub fn regular_module(&self) -> Representation {
        let parts: Vec<&Representation> = self.b.projectives.iter().collect();
        Representation::direct_sum(&self.b.alg, &parts)
    }

    /// Whether `e_i B` is injective, per vertex.
    pub fn projective_injective_flags(&self) -> &[bool] {
        &self.b.projective_is_injective
    }

    /// Whether `D(B e_i)` is projective, per vertex.
    pub fn injective_projective_flags(&self) -> &[bool] {
        &self.op.projective_is_injective
    }

    pub fn top_multiplicities(&self, m: &Representation) -> Vec<usize> {
        m.top_multiplicities(&self.b.alg)
    }

    pub fn socle_multiplicities(&self, m: &Representation) -> Vec<usize> {
        m.socle_multiplicities(&self.b.alg)
    }

    pub fn top_quotient(&self, m: &Representation) -> (Representation, ModuleMap) {
        m.quotient(&self.b.alg, &m.radical_subspaces(&self.b.alg))
    }

    pub fn radical_submodule(&self, m: &Representation) -> (Representation, ModuleMap) {
        m.submodule(&self.b.alg, &m.radical_subspaces(&self.b.alg))
    }

    pub fn socle_submodule(&self, m: &Representation) -> (Representation, ModuleMap) {
        m.submodule(&self.b.alg, &m.socle_subspaces(&self.b.alg))
    }

    /// Projective iff the projective cover of the top has the same dimension.
    pub fn is_projective_rep(&self, m: &Representation) -> bool {
        self.b.is_projective(m)
    }

    /// Injective iff the injective hull of the socle has the same dimension.
    pub fn is_injective_rep(&self, m: &Representation) -> bool {
        self.op.is_projective(&m.dual())
    }

    pub fn projective_cover_map(&self, m: &Representation) -> (Representation, ModuleMap) {
        let c = self.b.cover(m);
        (c.term, c.map)
    }

    /// The hull is the dual of the projective cover of `D(M)` over the
    /// opposite algebra.
    pub fn injective_hull_map(&self, m: &Representation) -> (Representation, ModuleMap) {
        let c = self.op.cover(&m.dual());
        let embedding = ModuleMap::from_blocks(c.map.blocks().iter().map(Matrix::transpose).collect());
        (c.term.dual(), embedding)
    }

    pub fn syzygy(&self, m: &Representation) -> Representation {
        self.b.cover(m).syzygy
    }

    pub fn cosyzygy(&self, m: &Representation) -> Representation {
        self.op.cover(&m.dual()).syzygy.dual()
    }

    fn run(&self, side: &Side, direction: Direction, m: &Representation, cap: usize, stop_early: bool) -> Result<EngineResolution> {
        if m.is_zero() {
            return Err(EngineError::ZeroModule);
        }
        let mut steps = Vec::new();
        let mut first_nondominant = None;
        let mut current = m.clone();
        let mut terminated = false;
        while steps.len() < cap {
            let c = side.cover(&current);
            let dominant = c.multiplicities.iter().zip(&side.projective_is_injective).all(|(&k, &f)| k == 0 || f);
            if !dominant && first_nondominant.is_none() {
                first_nondominant = Some(steps.len());
            }
            steps.push(EngineStep { multiplicities: c.multiplicities, term_dim: c.term.dim(), next_dim: c.syzygy.dim(), dominant });
            if c.syzygy.is_zero() {
                terminated = true;
                break;
            }
            if stop_early && first_nondominant.is_some() {
                break;
            }
            current = c.syzygy;
        }
        let t = steps.len() as u64;
        let length = if terminated { ExtNat::Finite(t - 1) } else { ExtNat::AtLeast(t) };
        let dominant = match first_nondominant {
            Some(k) => ExtNat::Finite(k as u64),
            None if terminated => ExtNat::Infinity,
            None => ExtNat::AtLeast(t),
        };
        Ok(EngineResolution { direction, steps, length, dominant, cap })
    }

    pub fn projective_resolution(&self, m: &Representation, cap: Option<usize>) -> Result<EngineResolution> {
        self.run(&self.b, Direction::Projective, m, cap.unwrap_or(self.cap), false)
    }

    /// Computed as the dual of the projective resolution of `D(M)` over the
    /// opposite algebra; multiplicities count copies of `D(B e_i)`.
    pub fn injective_resolution(&self, m: &Representation, cap: Option<usize>) -> Result<EngineResolution> {
        self.run(&self.op, Direction::Injective, &m.dual(), cap.unwrap_or(self.cap), false)
    }

    pub fn projdim(&self, m: &Representation) -> Result<ExtNat> {
        Ok(self.projective_resolution(m, None)?.length)
    }

    pub fn injdim(&self, m: &Representation) -> Result<ExtNat> {
        Ok(self.injective_resolution(m, None)?.length)
    }

    /// Dominant dimension; stops at the first non-projective injective term.
    pub fn domdim(&self, m: &Representation) -> Result<ExtNat> {
        Ok(self.run(&self.op, Direction::Injective, &m.dual(), self.cap, true)?.dominant)
    }

    pub fn codomdim(&self, m: &Representation) -> Result<ExtNat> {
        Ok(self.run(&self.b, Direction::Projective, m, self.cap, true)?.dominant)
    }

    /// Minimum over the indecomposable projectives.
    pub fn domdim_algebra(&self) -> ExtNat {
        let mut best = ExtNat::Infinity;
        for p in &self.b.projectives {
            best = best.min(self.domdim(p).expect("projectives are nonzero"));
            if best == ExtNat::Finite(0) {
                break;
            }
        }
        best
    }

    /// Maximum projective dimension of the simples.
    pub fn gldim(&self) -> ExtNat {
        (0..self.b.alg.vertex_count())
            .map(|i| self.projdim(&self.simple(i).expect("vertex in range")).expect("simples are nonzero"))
            .fold(ExtNat::Finite(0), ExtNat::max)
    }

    pub fn gorenstein(&self) -> EngineGorenstein {
        let injdim_projectives: Vec<ExtNat> = self.b.projectives.iter().map(|p| self.injdim(p).expect("projectives are nonzero")).collect();
        let projdim_injectives: Vec<ExtNat> = (0..self.b.alg.vertex_count())
            .map(|i| {
                let inj = self.indecomposable_injective(i).expect("vertex in range");
                self.projdim(&inj).expect("injectives are nonzero")
            })
            .collect();
        let left = injdim_projectives.iter().copied().fold(ExtNat::Finite(0), ExtNat::max);
        let right = projdim_injectives.iter().copied().fold(ExtNat::Finite(0), ExtNat::max);
        let exact = left.is_finite() && left == right;
        let gorenstein_dim = if exact { left } else { ExtNat::AtLeast(left.lower_bound().max(right.lower_bound())) };
        EngineGorenstein { injdim_projectives, projdim_injectives, gorenstein_dim, exact }
    }

    pub fn hom_dim(&self, m: &Representation, n: &Representation) -> usize {
        hom_dim(&self.b.alg, m, n)
    }

    pub fn hom_space(&self, m: &Representation, n: &Representation) -> Vec<ModuleMap> {
        hom_space(&self.b.alg, m, n)
    }

    /// `dim Ext^k(M, N)` by dimension shifting: with
    /// `0 -> ΩX -> P -> X -> 0` and `X = Ω^{k-1} M`,
    /// `dim Ext^k(M, N) = dim Hom(ΩX, N) - dim Hom(P, N) + dim Hom(X, N)`.
    pub fn ext_dim(&self, m: &Representation, n: &Representation, k: usize) -> Result<usize> {
        if k == 0 {
            return Err(EngineError::InvalidExtDegree);
        }
        let mut x = m.clone();
        for _ in 1..k {
            if x.is_zero() {
                return Ok(0);
            }
            x = self.syzygy(&x);
        }
        if x.is_zero() {
            return Ok(0);
        }
        let c = self.b.cover(&x);
        Ok(self.ext1_from_cover(&x, &c.multiplicities, &c.syzygy, n))
    }

    pub(crate) fn ext1_from_cover(
        &self,
        x: &Representation,
        multiplicities: &[usize],
        syzygy: &Representation,
        n: &Representation,
    ) -> usize {
        let hom_p: usize = multiplicities.iter().zip(n.dims()).map(|(m, d)| m * d).sum();
        self.hom_dim(syzygy, n) + self.hom_dim(x, n) - hom_p
    }

    /// Cover multiplicities and syzygy in one pass.
    pub(crate) fn cover_parts(&self, m: &Representation) -> (Vec<usize>, Representation) {
        let c = self.b.cover(m);
        (c.multiplicities, c.syzygy)
    }
}
