//! Simples, projectives, injectives, hulls, covers and Hom dimensions of
//! interval modules.

use super::{Interval, KupischSeries, ModuleList, Result};

impl KupischSeries {
    fn wrap(&self, v: i64) -> usize {
        self.shift(0, v).expect("interval arithmetic stays on the quiver")
    }

    pub fn simple_at(&self, i: usize) -> Result<Interval> {
        self.check_vertex(i)?;
        Ok(Interval { vertex: i, len: 1 })
    }

    /// `e_i A`.
    pub fn projective_at(&self, i: usize) -> Result<Interval> {
        self.check_vertex(i)?;
        Ok(Interval { vertex: i, len: self.c[i] })
    }

    /// `D(A e_i)`: the uniserial module of length `d_i` with socle `S_i`.
    pub fn injective_at(&self, i: usize) -> Result<Interval> {
        self.check_vertex(i)?;
        let d = self.d[i];
        Ok(Interval { vertex: self.wrap(i as i64 - d as i64 + 1), len: d })
    }

    pub fn top_vertex(&self, m: &Interval) -> usize {
        m.vertex
    }

    pub fn socle_vertex(&self, m: &Interval) -> usize {
        self.wrap((m.vertex + m.len) as i64 - 1)
    }

    pub fn is_projective(&self, m: &Interval) -> bool {
        m.len == self.c[m.vertex]
    }

    /// `M` is injective iff it is the whole injective envelope of its socle.
    pub fn is_injective(&self, m: &Interval) -> bool {
        m.len == self.d[self.socle_vertex(m)]
    }

    pub fn injective_hull(&self, m: &Interval) -> Interval {
        let d = self.d[self.socle_vertex(m)];
        Interval { vertex: self.wrap((m.vertex + m.len) as i64 - d as i64), len: d }
    }

    /// Cokernel of the injective hull; `None` when `M` is injective.
    pub fn cosyzygy(&self, m: &Interval) -> Option<Interval> {
        let hull = self.injective_hull(m);
        (hull.len > m.len).then(|| Interval { vertex: hull.vertex, len: hull.len - m.len })
    }

    pub fn projective_cover(&self, m: &Interval) -> Interval {
        Interval { vertex: m.vertex, len: self.c[m.vertex] }
    }

    /// Kernel of the projective cover; `None` when `M` is projective.
    pub fn syzygy(&self, m: &Interval) -> Option<Interval> {
        let c = self.c[m.vertex];
        (c > m.len).then(|| Interval { vertex: self.wrap((m.vertex + m.len) as i64), len: c - m.len })
    }

    /// `dim Hom(M(i,k), M(j,l))`: the number of residue paths of length `t`
    /// from `j` to `i` with `max(0, l-k) <= t < l`.
    pub fn hom_dim(&self, m: &Interval, n: &Interval) -> usize {
        self.hom_shifts(m, n).count()
    }

    /// Shifts `t` indexing a basis of `Hom(m, n)`: the basis map sends the top
    /// of `m` to the composition factor of `n` at position `t`.
    pub fn hom_shifts<'a>(&'a self, m: &'a Interval, n: &'a Interval) -> impl Iterator<Item = usize> + 'a {
        let lo = n.len.saturating_sub(m.len);
        (lo..n.len).filter(move |&t| self.shift(n.vertex, t as i64) == Some(m.vertex))
    }

    pub fn hom_dim_list(&self, m: &ModuleList, n: &ModuleList) -> usize {
        m.iter().map(|a| n.iter().map(|b| self.hom_dim(a, b)).sum::<usize>()).sum()
    }

    pub fn cosyzygy_list(&self, m: &ModuleList) -> ModuleList {
        m.iter().filter_map(|x| self.cosyzygy(x)).collect()
    }

    pub fn syzygy_list(&self, m: &ModuleList) -> ModuleList {
        m.iter().filter_map(|x| self.syzygy(x)).collect()
    }

    /// `Omega^{-i}(M)` with zero summands dropped.
    pub fn cosyzygy_power(&self, m: &ModuleList, i: usize) -> ModuleList {
        (0..i).fold(m.clone(), |acc, _| self.cosyzygy_list(&acc))
    }

    /// The regular module `A = e_0 A + ... + e_{n-1} A`.
    pub fn regular_module(&self) -> ModuleList {
        (0..self.n()).map(|i| Interval { vertex: i, len: self.c[i] }).collect()
    }

    /// `D(A)`, the direct sum of the indecomposable injectives.
    pub fn injective_cogenerator(&self) -> ModuleList {
        (0..self.n()).map(|i| self.injective_at(i).expect("vertex in range")).collect()
    }

    pub fn simples(&self) -> ModuleList {
        (0..self.n()).map(|i| Interval { vertex: i, len: 1 }).collect()
    }

    /// Vertices `i` with `e_i A` injective; `eA` is their direct sum.
    pub fn minimal_faithful_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.is_injective(&Interval { vertex: i, len: self.c[i] })).collect()
    }

    /// The minimal faithful projective-injective module `eA`.
    pub fn faithful_module(&self) -> ModuleList {
        self.minimal_faithful_vertices().into_iter().map(|i| Interval { vertex: i, len: self.c[i] }).collect()
    }

    /// `D(Ae)` for the idempotent `e` of [`Self::faithful_module`].
    pub fn faithful_dual(&self) -> ModuleList {
        self.minimal_faithful_vertices().into_iter().map(|i| self.injective_at(i).expect("vertex in range")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::family_a;
    use super::*;
    use crate::kupisch::enumerate_series;

    fn m(vertex: usize, len: usize) -> Interval {
        Interval { vertex, len }
    }

    #[test]
    fn injectives_and_projectives() {
        let a5 = family_a(5).unwrap();
        assert_eq!(a5.injective_at(2).unwrap(), m(0, 3));
        assert_eq!(a5.projective_at(0).unwrap(), m(0, 3));
        assert_eq!(a5.injective_at(0).unwrap(), m(0, 1));
        assert!(a5.injective_at(5).is_err());
        assert_eq!(a5.socle_vertex(&m(3, 2)), 4);
        assert_eq!(a5.top_vertex(&m(3, 2)), 3);
        let c23 = KupischSeries::cyclic(&[2, 3]).unwrap();
        assert_eq!(c23.socle_vertex(&m(1, 3)), 1);
        assert!(a5.is_injective(&m(0, 2)));
        assert!(!a5.is_injective(&m(1, 2)));
        assert!(c23.is_injective(&m(1, 3)) && c23.is_projective(&m(1, 3)));
    }

    #[test]
    fn hulls_and_covers() {
        let a5 = family_a(5).unwrap();
        assert_eq!(a5.cosyzygy(&m(3, 2)), Some(m(2, 1)));
        assert_eq!(a5.cosyzygy(&m(0, 1)), None);
        assert_eq!(a5.injective_hull(&m(4, 1)), m(2, 3));
        assert_eq!(a5.syzygy(&m(0, 1)), Some(m(1, 2)));
        assert_eq!(a5.syzygy(&m(0, 3)), None);
        let c23 = KupischSeries::cyclic(&[2, 3]).unwrap();
        assert_eq!(c23.syzygy(&m(1, 1)), Some(m(0, 2)));
    }

    #[test]
    fn hom_dims() {
        let a5 = family_a(5).unwrap();
        assert_eq!(a5.hom_dim(&m(2, 3), &m(0, 3)), 1);
        assert_eq!(a5.hom_dim(&m(0, 3), &m(2, 3)), 0);
        let c23 = KupischSeries::cyclic(&[2, 3]).unwrap();
        assert_eq!(c23.hom_dim(&m(1, 3), &m(1, 3)), 2);
    }

    #[test]
    fn faithful_vertices() {
        assert_eq!(family_a(5).unwrap().minimal_faithful_vertices(), vec![0, 1, 2]);
        assert_eq!(KupischSeries::cyclic(&[2, 3]).unwrap().minimal_faithful_vertices(), vec![1]);
        assert_eq!(KupischSeries::cyclic(&[2, 2]).unwrap().minimal_faithful_vertices(), vec![0, 1]);
    }

    #[test]
    fn exhaustive_interval_invariants() {
        for k in enumerate_series(6, 6) {
            for x in k.all_intervals() {
                let hull = k.injective_hull(&x);
                let cos = k.cosyzygy(&x);
                assert_eq!(hull.len, x.len + cos.map_or(0, |c| c.len), "{k} {x}");
                assert!(k.is_injective(&hull));
                assert_eq!(k.is_injective(&x), cos.is_none());
                let cover = k.projective_cover(&x);
                let syz = k.syzygy(&x);
                assert_eq!(cover.len, x.len + syz.map_or(0, |s| s.len));
                assert!(k.is_projective(&cover));
                assert_eq!(k.is_projective(&x), syz.is_none());
                assert!(k.hom_dim(&x, &x) >= 1);
                for y in [cos, syz].into_iter().flatten() {
                    assert!(k.interval(y.vertex, y.len).is_ok(), "{k}: {y} invalid");
                }
                // the classical test c_{i-1} <= k wherever the predecessor exists
                if let Some(prev) = k.shift(x.vertex, -1) {
                    assert_eq!(k.is_injective(&x), k.c()[prev] <= x.len, "{k} {x}");
                }
            }
        }
    }
}
