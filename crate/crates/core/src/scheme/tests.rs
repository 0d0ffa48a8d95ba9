use std::collections::{BTreeMap, BTreeSet};

use super::*;
use crate::dgcat::{builtin_presentation, kronecker_quiver, path_algebra_presentation, Builtin};
use crate::exactlin::{ChainComplexOfFree, RingSpec};
use crate::hochschild::{build_mixed_complex, hh_by_weight};

fn ws(r: std::ops::RangeInclusive<i64>) -> BTreeSet<i64> {
    r.collect()
}

fn d_squared_zero(c: &ChainComplexOfFree, lo: i64, hi: i64) -> bool {
    (lo + 1..hi).all(|t| c.differential(t).mul(&c.differential(t + 1)).is_zero())
}

#[test]
fn p1_hh_concentrated_in_degree_zero() {
    for ring in [RingSpec::Rationals, RingSpec::Integers] {
        let c = projective_line(&ring, &ws(-3..=3), 4);
        for w in -3..=3 {
            let t = cech_total_complex(&c, w, -1..=2, Mode::Hh).unwrap();
            assert!(d_squared_zero(&t, -2, 3));
        }
        let r = cech_homology(&c, -1..=2, Mode::Hh).unwrap();
        assert_eq!(r.total.free_ranks(), vec![0, 2, 0, 0]);
        assert!(r.total.degrees.values().all(|d| d.torsion.is_empty()));
        assert_eq!(r.by_weight[&0].get(0).free_rank, 2);
    }
}

#[test]
fn p1_hc_matches_kronecker() {
    let c = projective_line(&RingSpec::Rationals, &ws(-3..=3), 5);
    let k = path_algebra_presentation(RingSpec::Rationals, &kronecker_quiver(), 2).unwrap();
    let m = build_mixed_complex(&k, 5, &ws(0..=2)).unwrap();
    let v = keller_compare(&m, &c, 0..=3, Mode::Hc).unwrap();
    assert_eq!(v.scheme.free_ranks(), vec![2, 0, 2, 0]);
    assert!(v.pass && v.weightwise);
}

#[test]
fn keller_kronecker_over_q_and_z() {
    for ring in [RingSpec::Rationals, RingSpec::Integers] {
        let c = projective_line(&ring, &ws(-3..=3), 4);
        let k = path_algebra_presentation(ring.clone(), &kronecker_quiver(), 2).unwrap();
        let m = build_mixed_complex(&k, 3, &ws(0..=2)).unwrap();
        let v = keller_compare(&m, &c, 0..=3, Mode::Hh).unwrap();
        assert_eq!(v.categorical.free_ranks(), vec![2, 0, 0, 0]);
        assert!(v.pass, "{v:?}");
    }
}

#[test]
fn affine_line_backends_agree() {
    let weights = ws(0..=4);
    let bar = affine_line_bar(&RingSpec::Rationals, &weights, 3).unwrap();
    let dr = affine_line(&RingSpec::Rationals, &weights, 3);
    let (a, b) = (cech_homology(&bar, 0..=2, Mode::Hh).unwrap(), cech_homology(&dr, 0..=2, Mode::Hh).unwrap());
    assert_eq!(a.by_weight, b.by_weight);
    assert_eq!(b.by_weight[&0].free_ranks(), vec![1, 0, 0]);
    assert_eq!(b.by_weight[&3].free_ranks(), vec![1, 1, 0]);
    let p = builtin_presentation(Builtin::Polynomial, RingSpec::Rationals, (0, 4)).unwrap();
    let m = build_mixed_complex(&p, 2, &weights).unwrap();
    assert_eq!(hh_by_weight(&m, 0..=2).unwrap(), a.by_weight);
    let v = keller_compare(&m, &dr, 0..=2, Mode::Hh).unwrap();
    assert!(v.pass && v.weightwise);
}

#[test]
fn mayer_vietoris_on_p1() {
    for ring in [RingSpec::Rationals, RingSpec::Integers] {
        let c = projective_line(&ring, &ws(-3..=3), 4);
        let r = mayer_vietoris_check(&c, -1..=2, Mode::Hh).unwrap();
        assert!(r.exact(), "{r:?}");
        let row0 = &r.rows[&0];
        assert_eq!((row0.h_x, row0.h_v, row0.h_w, row0.h_vw), (2, 4, 4, 7));
        assert!(mayer_vietoris_check(&c, -1..=2, Mode::Hc).unwrap().exact());
    }
}

#[test]
fn mayer_vietoris_degenerate_covers() {
    let q = RingSpec::Rationals;
    let two = |inter| {
        let patches = [("V".to_string(), PatchKind::AffineX), ("W".to_string(), PatchKind::AffineX)];
        cover_from_kinds(&q, &patches, &BTreeMap::from([(vec![0, 1], inter)]), &ws(0..=3), 3).unwrap()
    };
    let disjoint = mayer_vietoris_check(&two(PatchKind::Zero), 0..=1, Mode::Hh).unwrap();
    assert!(disjoint.exact());
    assert!(disjoint.rows.values().all(|r| r.h_x == r.h_v + r.h_w && r.rank_connecting == 0));
    let dup = mayer_vietoris_check(&two(PatchKind::AffineX), 0..=1, Mode::Hh).unwrap();
    assert!(dup.exact());
    assert!(dup.rows.values().all(|r| r.h_x == r.h_v && r.rank_connecting == 0));
}

#[test]
fn malformed_covers_are_reported() {
    let mut c = projective_line(&RingSpec::Rationals, &ws(-1..=1), 3);
    let bad = derham_restriction(PatchKind::AffineY, PatchKind::Laurent, &ws(-1..=1)).unwrap();
    c.restrictions.insert((vec![0], vec![0, 1]), bad);
    assert!(matches!(c.check(), Err(SchemeError::NotAChainMap { .. })));

    let patches: Vec<_> = ["A", "B", "C"].iter().map(|n| (n.to_string(), PatchKind::AffineX)).collect();
    let inter = [vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 1, 2]].into_iter().map(|s| (s, PatchKind::AffineX)).collect();
    let mut c = cover_from_kinds(&RingSpec::Rationals, &patches, &inter, &ws(0..=1), 3).unwrap();
    assert!(c.check().is_ok());
    let two = crate::Coeff::from_integer(2.into());
    let m = c.restrictions.get_mut(&(vec![0], vec![0, 1])).unwrap();
    for cell in m.cells.values_mut() {
        *cell = cell.scale(&two);
    }
    assert!(matches!(c.check(), Err(SchemeError::PresheafConditionViolated { .. })));

    let small = projective_line(&RingSpec::Rationals, &ws(-1..=1), 2);
    assert!(matches!(cech_homology(&small, 0..=2, Mode::Hh), Err(SchemeError::WindowTooSmall { .. })));
}
