//! Minimal injective and projective resolutions of interval modules, the
//! dimensions read off from them, canonical tilting modules and the opposite
//! algebra.
//!
//! The cosyzygy operator is a deterministic self-map of the finite set of
//! intervals (plus zero), so every orbit either reaches zero or enters a
//! cycle; detecting the first repeat gives exact infinite verdicts.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{Interval, KupischError, KupischSeries, ModuleList, Orientation, Result};
use crate::ExtNat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Injective,
    Projective,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionStep {
    /// The injective (resp. projective) term at this position.
    pub term: ModuleList,
    /// The cosyzygy (resp. syzygy) that the next term resolves.
    pub next: ModuleList,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionReport {
    pub direction: Direction,
    pub steps: Vec<ResolutionStep>,
    /// Injective (resp. projective) dimension.
    pub length: ExtNat,
    /// Number of leading terms that are also projective (resp. injective):
    /// the dominant (resp. codominant) dimension.
    pub dominant: ExtNat,
}

/// Injective dimensions of the projectives against projective dimensions of
/// the injectives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinReport {
    pub injdim_projectives: Vec<ExtNat>,
    pub projdim_injectives: Vec<ExtNat>,
    pub injdim_regular: ExtNat,
    pub projdim_cogenerator: ExtNat,
    pub gorenstein_dim: ExtNat,
    /// False if exactly one of the two sides is finite, which cannot happen
    /// for a correct computation.
    pub consistent: bool,
}

struct Orbit {
    states: Vec<Interval>,
    cycle_start: Option<usize>,
}

impl Orbit {
    fn state_at(&self, t: usize) -> Option<Interval> {
        if t < self.states.len() {
            return Some(self.states[t]);
        }
        let s = self.cycle_start?;
        let period = self.states.len() - s;
        Some(self.states[s + (t - s) % period])
    }
}

impl KupischSeries {
    /// Cap that can never be reached: an orbit visits at most `dim A`
    /// distinct intervals.
    pub fn default_step_cap(&self) -> usize {
        self.dim() + 1
    }

    fn orbit(&self, start: Interval, direction: Direction, cap: usize) -> Result<Orbit> {
        let mut seen = HashMap::new();
        let mut states = Vec::new();
        let mut current = Some(start);
        while let Some(m) = current {
            if let Some(&s) = seen.get(&m) {
                return Ok(Orbit { states, cycle_start: Some(s) });
            }
            if states.len() == cap {
                return Err(KupischError::StepCapExceeded { cap });
            }
            seen.insert(m, states.len());
            states.push(m);
            current = match direction {
                Direction::Injective => self.cosyzygy(&m),
                Direction::Projective => self.syzygy(&m),
            };
        }
        Ok(Orbit { states, cycle_start: None })
    }

    fn term_of(&self, m: &Interval, direction: Direction) -> Interval {
        match direction {
            Direction::Injective => self.injective_hull(m),
            Direction::Projective => self.projective_cover(m),
        }
    }

    fn term_is_dominant(&self, term: &Interval, direction: Direction) -> bool {
        match direction {
            Direction::Injective => self.is_projective(term),
            Direction::Projective => self.is_injective(term),
        }
    }

    fn resolve(&self, input: &ModuleList, direction: Direction, max_steps: Option<usize>) -> Result<ResolutionReport> {
        if input.is_zero() {
            return Err(KupischError::ZeroModule);
        }
        let cap = max_steps.unwrap_or_else(|| self.default_step_cap());
        let orbits = input.iter().map(|m| self.orbit(*m, direction, cap)).collect::<Result<Vec<_>>>()?;

        let mut length = ExtNat::Finite(0);
        let mut dominant = ExtNat::Infinity;
        for o in &orbits {
            let len = match o.cycle_start {
                Some(_) => ExtNat::Infinity,
                None => ExtNat::Finite(o.states.len() as u64 - 1),
            };
            let dom = o
                .states
                .iter()
                .position(|m| !self.term_is_dominant(&self.term_of(m, direction), direction))
                .map_or(ExtNat::Infinity, |t| ExtNat::Finite(t as u64));
            length = length.max(len);
            dominant = dominant.min(dom);
        }

        let horizon = orbits.iter().map(|o| o.states.len()).max().unwrap_or(0);
        let steps = (0..horizon)
            .map(|t| {
                let here: Vec<Interval> = orbits.iter().filter_map(|o| o.state_at(t)).collect();
                ResolutionStep {
                    term: here.iter().map(|m| self.term_of(m, direction)).collect(),
                    next: orbits.iter().filter_map(|o| o.state_at(t + 1)).collect(),
                }
            })
            .collect();
        Ok(ResolutionReport { direction, steps, length, dominant })
    }

    /// Minimal injective resolution, iterating cosyzygies per summand.
    pub fn min_injective_resolution(&self, m: &ModuleList, max_steps: Option<usize>) -> Result<ResolutionReport> {
        self.resolve(m, Direction::Injective, max_steps)
    }

    pub fn min_projective_resolution(&self, m: &ModuleList, max_steps: Option<usize>) -> Result<ResolutionReport> {
        self.resolve(m, Direction::Projective, max_steps)
    }

    fn single(&self, m: &Interval, direction: Direction) -> ResolutionReport {
        self.resolve(&ModuleList::new(vec![*m]), direction, None).expect("default cap exceeds the number of intervals")
    }

    pub fn injdim(&self, m: &Interval) -> ExtNat {
        self.single(m, Direction::Injective).length
    }

    pub fn projdim(&self, m: &Interval) -> ExtNat {
        self.single(m, Direction::Projective).length
    }

    /// Number of leading projective terms in the minimal injective
    /// resolution; `Infinity` when every term is projective.
    pub fn domdim_module(&self, m: &Interval) -> ExtNat {
        self.single(m, Direction::Injective).dominant
    }

    /// Number of leading injective terms in the minimal projective
    /// resolution. Agrees with the dominant dimension of `D(M)` over the
    /// opposite algebra.
    pub fn codomdim_module(&self, m: &Interval) -> ExtNat {
        self.single(m, Direction::Projective).dominant
    }

    pub fn domdim_algebra(&self) -> ExtNat {
        self.regular_module().iter().map(|p| self.domdim_module(p)).fold(ExtNat::Infinity, ExtNat::min)
    }

    /// Maximum projective dimension of the simples.
    pub fn gldim(&self) -> ExtNat {
        self.simples().iter().map(|s| self.projdim(s)).fold(ExtNat::Finite(0), ExtNat::max)
    }

    pub fn gorenstein(&self) -> GorensteinReport {
        let injdim_projectives: Vec<ExtNat> = self.regular_module().iter().map(|p| self.injdim(p)).collect();
        let projdim_injectives: Vec<ExtNat> =
            (0..self.n()).map(|i| self.projdim(&self.injective_at(i).expect("vertex in range"))).collect();
        let injdim_regular = injdim_projectives.iter().copied().fold(ExtNat::Finite(0), ExtNat::max);
        let projdim_cogenerator = projdim_injectives.iter().copied().fold(ExtNat::Finite(0), ExtNat::max);
        let consistent = injdim_regular.is_finite() == projdim_cogenerator.is_finite()
            && (!injdim_regular.is_finite() || injdim_regular == projdim_cogenerator);
        GorensteinReport {
            injdim_projectives,
            projdim_injectives,
            injdim_regular,
            projdim_cogenerator,
            gorenstein_dim: injdim_regular,
            consistent,
        }
    }

    /// Basic version of `eA + Omega^{-i}(A)` for `1 <= i <= domdim A`.
    pub fn canonical_tilting(&self, i: usize) -> Result<ModuleList> {
        if i == 0 {
            return Err(KupischError::ZeroTiltingIndex);
        }
        let domdim = self.domdim_algebra().finite().ok_or(KupischError::InfiniteDomdim)?;
        if i as u64 > domdim {
            return Err(KupischError::IndexExceedsDomdim { index: i, domdim });
        }
        let cosyz = self.cosyzygy_power(&self.regular_module(), i);
        Ok(self.faithful_module().union(&cosyz).basic())
    }

    /// Kupisch series of the opposite algebra, together with the vertex
    /// relabelling `sigma` (vertex `v` of `A` is vertex `sigma[v]` of
    /// `A^op`) that makes the opposite arrows run `j -> j+1` again.
    pub fn opposite(&self) -> (KupischSeries, Vec<usize>) {
        let n = self.n();
        let sigma: Vec<usize> = (0..n)
            .map(|v| match self.orientation {
                Orientation::Linear => n - 1 - v,
                Orientation::Cyclic => (n - v) % n,
            })
            .collect();
        let mut c_op = vec![0i64; n];
        for v in 0..n {
            c_op[sigma[v]] = self.d[v] as i64;
        }
        let op = KupischSeries::new(self.orientation, &c_op).expect("the opposite of a Nakayama algebra is Nakayama");
        (op, sigma)
    }

    /// `D(M)` as a module over the opposite algebra, labelled as in
    /// [`Self::opposite`]: its top is `D` of the socle of `M`.
    pub fn dual_interval(&self, m: &Interval, sigma: &[usize]) -> Interval {
        Interval { vertex: sigma[self.socle_vertex(m)], len: m.len }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kupisch::{enumerate_series, family_a};

    fn m(vertex: usize, len: usize) -> Interval {
        Interval { vertex, len }
    }

    #[test]
    fn resolution_of_e3a_over_a5() {
        let a5 = family_a(5).unwrap();
        let r = a5.min_injective_resolution(&ModuleList::new(vec![m(3, 2)]), None).unwrap();
        let terms: Vec<String> = r.steps.iter().map(|s| s.term.to_string()).collect();
        assert_eq!(terms, ["M(2,3)", "M(0,3)", "M(0,2)"]);
        assert_eq!(r.length, ExtNat::Finite(2));
        assert_eq!(r.steps.last().unwrap().next, ModuleList::zero());
    }

    #[test]
    fn injective_modules_have_length_zero() {
        let a5 = family_a(5).unwrap();
        for i in 0..5 {
            assert_eq!(a5.injdim(&a5.injective_at(i).unwrap()), ExtNat::Finite(0));
        }
    }

    #[test]
    fn cyclic_45_has_infinite_resolutions() {
        let k = KupischSeries::cyclic(&[4, 5]).unwrap();
        assert_eq!(k.projdim(&m(0, 1)), ExtNat::Infinity);
        assert_eq!(k.gldim(), ExtNat::Infinity);
        let g = k.gorenstein();
        assert_eq!(g.gorenstein_dim, ExtNat::Finite(2));
        assert!(g.consistent);
        for cap in [k.default_step_cap(), 10 * k.default_step_cap()] {
            let r = k.min_projective_resolution(&k.simples(), Some(cap)).unwrap();
            assert_eq!(r.length, ExtNat::Infinity);
        }
    }

    #[test]
    fn cap_too_small_is_reported() {
        let k = KupischSeries::cyclic(&[4, 5]).unwrap();
        let err = k.min_projective_resolution(&k.simples(), Some(1)).unwrap_err();
        assert_eq!(err, KupischError::StepCapExceeded { cap: 1 });
        assert_eq!(k.min_projective_resolution(&ModuleList::zero(), None).unwrap_err(), KupischError::ZeroModule);
    }

    #[test]
    fn dimension_examples() {
        let c23 = KupischSeries::cyclic(&[2, 3]).unwrap();
        assert_eq!(c23.domdim_module(&m(0, 2)), ExtNat::Finite(2));
        assert_eq!(c23.domdim_module(&m(1, 3)), ExtNat::Infinity);
        let a5 = family_a(5).unwrap();
        assert_eq!(a5.injdim(&m(4, 1)), ExtNat::Finite(3));
        assert_eq!(a5.domdim_algebra(), ExtNat::Finite(2));
        assert_eq!(a5.gldim(), ExtNat::Finite(3));
        assert_eq!(KupischSeries::cyclic(&[2, 2]).unwrap().domdim_algebra(), ExtNat::Infinity);
        let injdims: Vec<u64> = a5.gorenstein().injdim_projectives.iter().map(|x| x.finite().unwrap()).collect();
        assert_eq!(injdims, [0, 0, 0, 2, 3]);
    }

    #[test]
    fn canonical_tilting_examples() {
        let a4 = family_a(4).unwrap();
        assert_eq!(a4.canonical_tilting(1).unwrap().to_string(), "M(0,3) + M(1,1) + M(1,2) + M(1,3)");
        let a5 = family_a(5).unwrap();
        assert_eq!(a5.canonical_tilting(2).unwrap().to_string(), "M(0,2) + M(0,3) + M(1,1) + M(1,3) + M(2,3)");
        let a6 = family_a(6).unwrap();
        assert_eq!(a6.canonical_tilting(3).unwrap(), a6.injective_cogenerator());
        assert_eq!(a5.canonical_tilting(3), Err(KupischError::IndexExceedsDomdim { index: 3, domdim: 2 }));
        assert_eq!(a5.canonical_tilting(0), Err(KupischError::ZeroTiltingIndex));
        let selfinj = KupischSeries::cyclic(&[2, 2]).unwrap();
        assert_eq!(selfinj.canonical_tilting(1), Err(KupischError::InfiniteDomdim));
    }

    #[test]
    fn opposite_examples() {
        let a5 = family_a(5).unwrap();
        assert_eq!(a5.opposite().0, a5);
        let c23 = KupischSeries::cyclic(&[2, 3]).unwrap();
        assert_eq!(c23.opposite().0.c(), &[2, 3]);
    }

    #[test]
    fn opposite_is_an_involution_and_preserves_domdim() {
        for k in enumerate_series(6, 6) {
            let (op, sigma) = k.opposite();
            assert_eq!(op.opposite().0, k, "{k}");
            assert_eq!(op.domdim_algebra(), k.domdim_algebra(), "{k}");
            // codominant dimension of M is the dominant dimension of D(M)
            for x in k.all_intervals() {
                let dx = k.dual_interval(&x, &sigma);
                assert!(op.interval(dx.vertex, dx.len).is_ok());
                assert_eq!(op.domdim_module(&dx), k.codomdim_module(&x), "{k} {x}");
                assert_eq!(op.injdim(&dx), k.projdim(&x), "{k} {x}");
            }
        }
    }

    #[test]
    fn cycle_verdicts_are_stable_under_larger_caps() {
        for k in enumerate_series(4, 5) {
            for x in k.all_intervals() {
                let l = ModuleList::new(vec![x]);
                let a = k.min_injective_resolution(&l, None).unwrap();
                let b = k.min_injective_resolution(&l, Some(10 * k.default_step_cap())).unwrap();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn gorenstein_sides_agree() {
        for k in enumerate_series(6, 6) {
            assert!(k.gorenstein().consistent, "{k}");
        }
    }
}
