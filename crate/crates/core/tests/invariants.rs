//! Structural invariants over the exhaustive list of series with n <= 6 and
//! c_i <= 6, sampled by proptest. Indices into the enumeration shrink toward
//! the smallest algebras.

use std::sync::OnceLock;

use domdim::endo::{build_endo, find_isomorphism};
use domdim::engine::{interval_to_rep, nakayama_to_sc, Engine, Field};
use domdim::kupisch::{enumerate_series, family_a, Interval, KupischSeries, ModuleList};
use domdim::propstar::{is_higher_auslander_solberg, property_star_check};
use domdim::ExtNat;
use proptest::prelude::*;
use proptest::sample::Index;

fn all_series() -> &'static [KupischSeries] {
    static ALL: OnceLock<Vec<KupischSeries>> = OnceLock::new();
    ALL.get_or_init(|| enumerate_series(6, 6))
}

fn series(i: Index) -> KupischSeries {
    all_series()[i.index(all_series().len())].clone()
}

fn pick(k: &KupischSeries, picks: &[Index]) -> Vec<Interval> {
    let all = k.all_intervals();
    picks.iter().map(|i| all[i.index(all.len())]).collect()
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hulls_covers_and_their_cokernels(i in any::<Index>()) {
        let k = series(i);
        for m in k.all_intervals() {
            let cosyz = k.cosyzygy(&m);
            let syz = k.syzygy(&m);
            prop_assert_eq!(k.injective_hull(&m).len, m.len + cosyz.map_or(0, |x| x.len));
            prop_assert_eq!(k.projective_cover(&m).len, m.len + syz.map_or(0, |x| x.len));
            prop_assert_eq!(k.is_injective(&m), cosyz.is_none());
            prop_assert_eq!(k.is_projective(&m), syz.is_none());
        }
    }

    #[test]
    fn cokupisch_permutes_the_series(i in any::<Index>()) {
        let k = series(i);
        prop_assert_eq!(sorted(k.cokupisch()), sorted(k.c()));
    }

    #[test]
    fn cosyzygy_and_syzygy_are_additive(i in any::<Index>(), picks in prop::collection::vec(any::<Index>(), 1..5)) {
        let k = series(i);
        let parts = pick(&k, &picks);
        let sum = ModuleList::new(parts.clone());
        let each = |f: &dyn Fn(&Interval) -> Option<Interval>| ModuleList::new(parts.iter().filter_map(f).collect());
        prop_assert_eq!(k.cosyzygy_list(&sum), each(&|x| k.cosyzygy(x)));
        prop_assert_eq!(k.syzygy_list(&sum), each(&|x| k.syzygy(x)));
    }

    #[test]
    fn dominant_dimension_of_the_opposite(i in any::<Index>()) {
        let k = series(i);
        let (op, _) = k.opposite();
        prop_assert_eq!(k.domdim_algebra(), op.domdim_algebra());
    }

    #[test]
    fn infinite_verdicts_survive_larger_caps(i in any::<Index>()) {
        let k = series(i);
        let cap = 10 * k.default_step_cap();
        for m in k.all_intervals() {
            let list = ModuleList::new(vec![m]);
            let a = k.min_projective_resolution(&list, None).unwrap();
            let b = k.min_projective_resolution(&list, Some(cap)).unwrap();
            prop_assert_eq!((a.length, a.dominant), (b.length, b.dominant));
            let a = k.min_injective_resolution(&list, None).unwrap();
            let b = k.min_injective_resolution(&list, Some(cap)).unwrap();
            prop_assert_eq!((a.length, a.dominant), (b.length, b.dominant));
        }
    }

    #[test]
    fn projectives_hom_into_modules_by_vertex(i in any::<Index>(), picks in prop::collection::vec(any::<Index>(), 1..4)) {
        let k = series(i);
        let engine = Engine::new(nakayama_to_sc(&k, Field::Rational));
        for m in pick(&k, &picks) {
            let rep = interval_to_rep(engine.algebra(), &k, &m);
            for v in 0..k.n() {
                let p = engine.indecomposable_projective(v).unwrap();
                prop_assert_eq!(engine.hom_dim(p, &rep), rep.dims()[v]);
            }
        }
    }

    #[test]
    fn injectives_are_dual_to_left_projectives(i in any::<Index>()) {
        let k = series(i);
        let engine = Engine::new(nakayama_to_sc(&k, Field::Rational));
        for v in 0..k.n() {
            let inj = engine.indecomposable_injective(v).unwrap();
            prop_assert_eq!(inj.dim(), k.cokupisch()[v]);
            let mut simple_at_v = vec![0; k.n()];
            simple_at_v[v] = 1;
            prop_assert_eq!(engine.socle_multiplicities(&inj), simple_at_v);
        }
    }

    #[test]
    fn ext_vanishes_beyond_the_projective_dimension(i in any::<Index>(), picks in prop::collection::vec(any::<Index>(), 2..3)) {
        let k = series(i);
        let engine = Engine::new(nakayama_to_sc(&k, Field::Rational));
        let ms = pick(&k, &picks);
        let (x, y) = (ms[0], ms[1]);
        if let ExtNat::Finite(p) = k.projdim(&x) {
            let (rx, ry) = (interval_to_rep(engine.algebra(), &k, &x), interval_to_rep(engine.algebra(), &k, &y));
            for j in p as usize + 1..=p as usize + 2 {
                prop_assert_eq!(engine.ext_dim(&rx, &ry, j).unwrap(), 0);
            }
        }
    }

    #[test]
    fn endomorphism_algebra_dimension_and_radical(i in any::<Index>(), picks in prop::collection::vec(any::<Index>(), 1..5)) {
        let k = series(i);
        let list = ModuleList::new(pick(&k, &picks)).basic();
        let b = build_endo(&k, &list, Field::Rational).unwrap();
        let hom: usize = list.iter().map(|x| list.iter().map(|y| k.hom_dim(x, y)).sum::<usize>()).sum();
        prop_assert_eq!(b.dim(), hom);
        prop_assert_eq!(b.algebra().idempotents().len(), list.len());
        prop_assert!(b.algebra().nilpotency_index() <= b.dim());
        let mut reversed: Vec<Interval> = list.iter().copied().collect();
        reversed.reverse();
        let again = build_endo(&k, &ModuleList::new(reversed), Field::Rational).unwrap();
        prop_assert_eq!(again.quiver().arrow_count, b.quiver().arrow_count);
    }
}

#[test]
fn uniform_injectivity_test_matches_the_predecessor_criterion() {
    for k in all_series() {
        let n = k.n();
        for m in k.all_intervals() {
            let pred = if k.is_cyclic() { Some((m.vertex + n - 1) % n) } else { m.vertex.checked_sub(1) };
            if let Some(p) = pred {
                assert_eq!(k.is_injective(&m), k.c()[p] <= m.len, "{k} {m}");
            }
        }
    }
}

#[test]
fn higher_auslander_solberg_endos_keep_the_quiver() {
    for k in all_series().iter().filter(|k| is_higher_auslander_solberg(k)) {
        let d = k.domdim_algebra().finite().unwrap() as usize;
        let b = build_endo(k, &k.canonical_tilting(d).unwrap(), Field::Rational).unwrap();
        let own = nakayama_to_sc(k, Field::Rational).arrow_counts();
        assert!(find_isomorphism(&[b.quiver().arrow_count], &[own]).is_some(), "{k}");
    }
}

#[test]
fn family_counterexamples_lack_property_star() {
    for m in 1..=3 {
        for n in [3 * m + 1, 3 * m + 2] {
            let r = property_star_check(&family_a(n).unwrap(), Field::Rational).unwrap();
            assert_eq!(r.has_property_star, Some(false), "A_{n}");
        }
    }
}
