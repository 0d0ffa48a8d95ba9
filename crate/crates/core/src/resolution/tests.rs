use std::sync::Arc;

use num_bigint::BigInt;

use super::*;
use crate::dgcat::{builtin_presentation, kronecker_quiver, path_algebra_presentation, validate_presentation, Builtin, Quiver};
use crate::exactlin::RingSpec;
use crate::Coeff;

fn z2() -> Arc<crate::dgcat::DgPresentation> {
    Arc::new(builtin_presentation(Builtin::CyclicQuotient(2), RingSpec::Integers, (0, 0)).unwrap())
}

#[test]
fn z2_tower_kills_two() {
    let t = semifree_resolve(z2(), 4, 4, (0, 0)).unwrap();
    let r1 = check_resolution(&t, 1, 0..=2).unwrap();
    assert!(r1.surjective_on_cocycles());
    let bad: Vec<_> = r1.unresolved().collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0].degree, 0);
    assert_eq!(bad[0].display, "2*1_X");
    assert!(!is_boundary_at(&t, 1, bad[0]).unwrap());
    assert!(is_boundary_at(&t, 2, bad[0]).unwrap());
    let a1 = &t.generators[0];
    assert_eq!((a1.spec.degree, a1.stage), (1, 2));
    for s in 1..t.stages.len() {
        assert!(validate_presentation(t.stages[s].pres()).is_valid(), "stage {s}");
        assert!(t.stages[s].psi.validate().is_empty(), "stage {s}");
        assert!(check_resolution(&t, s, 0..=3).unwrap().surjective_on_cocycles());
    }
    let top = check_resolution(&t, t.stages.len() - 1, 0..=3).unwrap();
    assert!(top.quasi_isomorphic(), "{:?}", t.ledger);
}

#[test]
fn dual_numbers_resolve_over_q() {
    let mut q = Quiver::new(&["X"]);
    q.arrow("x", 0, 0);
    q.relation(vec![(Coeff::from_integer(BigInt::from(1)), vec![0, 0])]);
    let a = Arc::new(path_algebra_presentation(RingSpec::Rationals, &q, 4).unwrap());
    let t = semifree_resolve(a, 6, 4, (0, 4)).unwrap();
    assert_eq!(t.generators.iter().filter(|g| g.kind == GeneratorKind::Cocycle).count(), 1);
    let last = t.stages.len() - 1;
    for s in 1..=last {
        assert!(validate_presentation(t.stages[s].pres()).is_valid());
        assert!(t.stages[s].psi.validate().is_empty());
    }
    assert!(check_resolution(&t, last, 0..=3).unwrap().quasi_isomorphic(), "{:?}", t.ledger);
}

#[test]
fn kronecker_is_its_own_resolution() {
    let a = Arc::new(path_algebra_presentation(RingSpec::Integers, &kronecker_quiver(), 2).unwrap());
    let t = semifree_resolve(a, 5, 3, (0, 2)).unwrap();
    assert!(t.stable);
    assert_eq!(t.generators.len(), 2);
    assert!(check_resolution(&t, 3, 0..=2).unwrap().quasi_isomorphic());
}

#[test]
fn degree_zero_weight_zero_generator_is_refused() {
    let mut q = Quiver::new(&["P", "Q"]);
    q.arrow("g", 0, 1);
    let mut p = path_algebra_presentation(RingSpec::Integers, &q, 1).unwrap();
    let g = p.find("g").unwrap();
    let b = p.morphism(g).clone();
    let mut flat = crate::dgcat::DgPresentation::new(RingSpec::Integers, (0, 0)).unwrap();
    flat.add_object("P").unwrap();
    flat.add_object("Q").unwrap();
    flat.add_morphism(&b.name, b.source, b.target, 0, 0).unwrap();
    p = flat;
    assert!(matches!(
        semifree_resolve(Arc::new(p), 2, 2, (0, 0)),
        Err(ResolveError::ZeroGradedGenerator { .. })
    ));
}


#[test]
fn flatness_probe_detects_torsion() {
    let n = short_exact_test_complex(&RingSpec::Integers, 2);
    let k = builtin_presentation(Builtin::KoszulDga(2), RingSpec::Integers, (0, 0)).unwrap();
    assert!(flatness_probe(&k, &n, 0..=3).unwrap().all_acyclic());
    let r = flatness_probe(&z2(), &n, 0..=3).unwrap();
    assert!(!r.all_acyclic());
    let h = &r.pairs[&("X".to_string(), "X".to_string())].homology;
    let z2h = crate::exactlin::DegreeHomology { free_rank: 0, torsion: vec![BigInt::from(2)] };
    assert_eq!(h.get(2), z2h);
    assert!(h.get(1).is_zero());
    let q = builtin_presentation(Builtin::CyclicQuotient(2), RingSpec::Rationals, (0, 0)).unwrap();
    let nq = short_exact_test_complex(&RingSpec::Rationals, 5);
    assert!(flatness_probe(&q, &nq, 0..=3).unwrap().all_acyclic());
    let mut bad = crate::exactlin::ModuleComplex::new(RingSpec::Integers);
    bad.set_degree(1, vec![BigInt::from(0)]);
    bad.set_degree(0, vec![BigInt::from(0)]);
    bad.set_differential(1, crate::exactlin::ExactMatrix::from_rows(vec![vec![BigInt::from(3)]]));
    assert!(matches!(flatness_probe(&k, &bad, 0..=2), Err(ResolveError::TestComplexNotAcyclic(_))));
}

fn dual_quiver(objects: &[&str]) -> Quiver {
    let mut q = Quiver::new(objects);
    q.arrow("x", 0, 0);
    q.relation(vec![(Coeff::from_integer(BigInt::from(1)), vec![0, 0])]);
    q
}

fn functor(a: &Arc<crate::dgcat::DgPresentation>, b: &Arc<crate::dgcat::DgPresentation>, objects: Vec<usize>, named: &[(&str, &str)]) -> crate::dgcat::DgFunctorData {
    let mut images = vec![crate::dgcat::LinComb::zero(); a.basis().len()];
    for (x, &y) in objects.iter().enumerate() {
        images[a.unit(x)] = crate::dgcat::LinComb::basis(b.unit(y));
    }
    for (s, t) in named {
        images[a.find(s).unwrap()] = crate::dgcat::LinComb::basis(b.find(t).unwrap());
    }
    crate::dgcat::DgFunctorData::new(a.clone(), b.clone(), objects, images).unwrap()
}

#[test]
fn unit_inclusion_and_augmentation_lift() {
    let d1 = Arc::new(builtin_presentation(Builtin::Discrete(1), RingSpec::Integers, (0, 2)).unwrap());
    let dual = Arc::new(path_algebra_presentation(RingSpec::Integers, &dual_quiver(&["X0"]), 2).unwrap());
    let (ta, tb) = (semifree_resolve(d1.clone(), 4, 3, (0, 2)).unwrap(), semifree_resolve(dual.clone(), 4, 3, (0, 2)).unwrap());
    let f = functor(&d1, &dual, vec![0], &[]);
    assert!(f.validate().is_empty());
    let ft = lift_functor(&f, &ta, &tb).unwrap();
    assert!(check_lift(&f, &ft, &ta, &tb).is_empty());
    let id = crate::dgcat::DgFunctorData::identity(dual.clone());
    let idt = lift_functor(&id, &tb, &tb).unwrap();
    assert!((0..idt.images.len()).all(|i| idt.images[i] == crate::dgcat::LinComb::basis(i)));

    let k = Arc::new(builtin_presentation(Builtin::KoszulDga(2), RingSpec::Integers, (0, 0)).unwrap());
    let (tk, tz) = (semifree_resolve(k.clone(), 4, 3, (0, 0)).unwrap(), semifree_resolve(z2(), 4, 3, (0, 0)).unwrap());
    let aug = functor(&k, &z2(), vec![0], &[]);
    assert!(aug.validate().is_empty(), "{:?}", aug.validate());
    let at = lift_functor(&aug, &tk, &tz).unwrap();
    assert!(check_lift(&aug, &at, &tk, &tz).is_empty());
    assert!(!tk.generators.is_empty());
}

#[test]
fn composite_of_lifts_vanishes() {
    let a = Arc::new(path_algebra_presentation(RingSpec::Integers, &dual_quiver(&["X"]), 2).unwrap());
    let b = Arc::new(path_algebra_presentation(RingSpec::Integers, &dual_quiver(&["X", "Y"]), 2).unwrap());
    let mut c = crate::dgcat::DgPresentation::new(RingSpec::Integers, (0, 2)).unwrap();
    let z = c.add_object("Z").unwrap();
    c.add_object("W").unwrap();
    c.set_order(c.unit(z), BigInt::from(1)).unwrap();
    assert!(validate_presentation(&c).is_valid());
    let c = Arc::new(c);
    let f = functor(&a, &b, vec![0], &[("x", "x")]);
    let g = functor(&b, &c, vec![0, 1], &[]);
    assert!(f.validate().is_empty() && g.validate().is_empty());
    assert!(vanishes_off_units(&f.then(&g).unwrap()));
    let ta = semifree_resolve(a, 4, 3, (0, 2)).unwrap();
    let tb = semifree_resolve(b, 4, 3, (0, 2)).unwrap();
    let tc = semifree_resolve(c, 4, 3, (0, 2)).unwrap();
    let (ft, gt) = (lift_functor(&f, &ta, &tb).unwrap(), lift_functor(&g, &tb, &tc).unwrap());
    assert!(check_lift(&f, &ft, &ta, &tb).is_empty());
    assert!(check_lift(&g, &gt, &tb, &tc).is_empty());
    assert!(vanishes_off_units(&ft.then(&gt).unwrap()));
}

fn caps(t: i64, w: std::ops::RangeInclusive<i64>, s: usize) -> ShuklaCaps {
    ShuklaCaps { max_degree: t, weights: w.collect(), stage_cap: s }
}

#[test]
fn shukla_z2_matches_koszul() {
    let s = shukla_mixed_complex(z2(), &caps(4, 0..=0, 8)).unwrap();
    assert_eq!(s.path, ShuklaPath::Resolved);
    s.complex.check_identities().unwrap();
    let k = builtin_presentation(Builtin::KoszulDga(2), RingSpec::Integers, (0, 0)).unwrap();
    let oracle = crate::hochschild::build_mixed_complex(&k, 4, &(0..=0).collect()).unwrap();
    let got = crate::hochschild::hh(&s.complex, 0..=4).unwrap();
    assert_eq!(got, crate::hochschild::hh(&oracle, 0..=4).unwrap());
    assert!(matches!(shukla_mixed_complex(z2(), &caps(4, 0..=0, 2)), Err(ResolveError::CapExceeded { .. })));
}

#[test]
fn shukla_bypass_cases() {
    let a = Arc::new(path_algebra_presentation(RingSpec::Rationals, &dual_quiver(&["X"]), 4).unwrap());
    let s = shukla_mixed_complex(a.clone(), &caps(3, 0..=4, 3)).unwrap();
    assert_eq!(s.path, ShuklaPath::Bypass);
    let direct = crate::hochschild::build_mixed_complex(&a, 3, &(0..=4).collect()).unwrap();
    assert_eq!(crate::hochschild::hh(&s.complex, 0..=3).unwrap(), crate::hochschild::hh(&direct, 0..=3).unwrap());
    let q = Arc::new(builtin_presentation(Builtin::CyclicQuotient(2), RingSpec::modulo(2).unwrap(), (0, 0)).unwrap());
    let s = shukla_mixed_complex(q, &caps(3, 0..=0, 3)).unwrap();
    assert_eq!(s.path, ShuklaPath::Bypass);
    assert_eq!(crate::hochschild::hh(&s.complex, 0..=3).unwrap().free_ranks(), vec![1, 0, 0, 0]);
}
