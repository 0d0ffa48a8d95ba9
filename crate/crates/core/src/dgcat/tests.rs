use std::sync::Arc;

use num_bigint::BigInt;

use super::*;
use crate::exactlin::RingSpec;
use crate::Coeff;

fn int(n: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

#[test]
fn discrete_one_is_valid() {
    let p = builtin_presentation(Builtin::Discrete(1), RingSpec::Rationals, (0, 0)).unwrap();
    assert_eq!(p.basis().len(), 1);
    assert!(validate_presentation(&p).is_valid());
}

#[test]
fn discrete_three_has_only_units() {
    let p = builtin_presentation(Builtin::Discrete(3), RingSpec::Integers, (0, 0)).unwrap();
    assert_eq!(p.objects().len(), 3);
    for x in 0..3 {
        for y in 0..3 {
            assert_eq!(p.hom(x, y).len(), usize::from(x == y));
        }
    }
}

#[test]
fn koszul_is_valid() {
    let p = builtin_presentation(Builtin::KoszulDga(2), RingSpec::Integers, (0, 0)).unwrap();
    assert!(validate_presentation(&p).is_valid());
    let e = p.find("e").unwrap();
    assert_eq!(p.differential(e), &LinComb::term(p.unit(0), int(2)));
}

#[test]
fn leibniz_violation_has_witness() {
    // de = 2 and e*e = e' with de' = 1 forces d(ee) != de e - e de
    let mut p = builtin_presentation(Builtin::KoszulDga(2), RingSpec::Integers, (0, 0)).unwrap();
    let e = p.find("e").unwrap();
    let e2 = p.add_morphism("e2", 0, 0, 2, 0).unwrap();
    p.set_product(e, e, LinComb::basis(e2)).unwrap();
    p.set_differential(e2, LinComb::basis(e)).unwrap();
    let r = validate_presentation(&p);
    assert!(r.violations.iter().any(|v| matches!(v, Violation::Leibniz { g, f, .. } if g == "e" && f == "e")));
}

#[test]
fn dsquared_and_torsion_violations() {
    let mut p = DgPresentation::new(RingSpec::Integers, (0, 0)).unwrap();
    let x = p.add_object("X").unwrap();
    let a = p.add_morphism("a", x, x, 2, 0).unwrap();
    let b = p.add_morphism("b", x, x, 1, 0).unwrap();
    p.set_differential(a, LinComb::basis(b)).unwrap();
    p.set_differential(b, LinComb::basis(p.unit(x))).unwrap();
    let r = validate_presentation(&p);
    assert!(r.violations.iter().any(|v| matches!(v, Violation::DSquared { .. })));

    let q = builtin_presentation(Builtin::CyclicQuotient(2), RingSpec::Integers, (0, 0)).unwrap();
    assert!(validate_presentation(&q).is_valid());
    let mut bad = q.clone();
    let f = bad.add_morphism("f", 0, 0, 0, 0).unwrap();
    let _ = f;
    assert!(!validate_presentation(&bad).is_valid());
}

#[test]
fn kronecker_ranks() {
    let p = path_algebra_presentation(RingSpec::Rationals, &kronecker_quiver(), 2).unwrap();
    let r = p.ranks_by_weight();
    assert_eq!(r.get(&0), Some(&2));
    assert_eq!(r.get(&1), Some(&2));
    assert_eq!(r.get(&2), None);
    assert!(validate_presentation(&p).is_valid());
}

fn loop_quiver() -> Quiver {
    let mut q = Quiver::new(&["X"]);
    q.arrow("x", 0, 0);
    q
}

#[test]
fn polynomial_truncation_and_dual_numbers() {
    let p = path_algebra_presentation(RingSpec::Integers, &loop_quiver(), 3).unwrap();
    assert_eq!(p.ranks_by_weight().into_values().collect::<Vec<_>>(), vec![1, 1, 1, 1]);
    assert!(validate_presentation(&p).is_valid());

    let mut q = loop_quiver();
    q.relation(vec![(int(1), vec![0, 0])]);
    let d = path_algebra_presentation(RingSpec::Integers, &q, 3).unwrap();
    assert_eq!(d.ranks_by_weight().into_values().collect::<Vec<_>>(), vec![1, 1]);
    assert!(validate_presentation(&d).is_valid());
}

#[test]
fn commutative_plane_over_z() {
    let mut q = Quiver::new(&["X"]);
    q.arrow("x", 0, 0);
    q.arrow("y", 0, 0);
    q.relation(vec![(int(1), vec![0, 1]), (int(-1), vec![1, 0])]);
    let p = path_algebra_presentation(RingSpec::Integers, &q, 3).unwrap();
    let r = p.ranks_by_weight();
    assert_eq!((r[&0], r[&1], r[&2], r[&3]), (1, 2, 3, 4));
    assert!(validate_presentation(&p).is_valid());
}

#[test]
fn relation_errors() {
    let mut q = loop_quiver();
    q.relation(vec![(int(1), vec![0, 0]), (int(1), vec![0])]);
    assert!(matches!(
        path_algebra_presentation(RingSpec::Rationals, &q, 2),
        Err(DgError::RelationNotHomogeneous(0))
    ));
    let mut q = loop_quiver();
    q.relation(vec![(int(2), vec![0, 0])]);
    assert!(matches!(
        path_algebra_presentation(RingSpec::Integers, &q, 2),
        Err(DgError::InconsistentRelations { .. })
    ));
    assert!(path_algebra_presentation(RingSpec::Rationals, &q, 2).is_ok());
}

#[test]
fn laurent_rank_one_per_weight() {
    let p = builtin_presentation(Builtin::Laurent, RingSpec::Rationals, (-3, 3)).unwrap();
    let r = p.ranks_by_weight();
    assert_eq!(r.len(), 7);
    assert!(r.values().all(|&c| c == 1));
    assert!(validate_presentation(&p).is_valid());
    assert!(matches!(p.compose(p.find("x^3").unwrap(), p.find("x^1").unwrap()), Err(DgError::OutsideWindow { .. })));
}

#[test]
fn builtin_names_and_empty_window() {
    for s in ["Polynomial", "Laurent", "TruncatedPolynomial(3)", "KoszulDga(2)", "Discrete(2)", "CyclicQuotient(4)"] {
        let b: Builtin = s.parse().unwrap();
        assert_eq!(b.to_string(), s);
    }
    assert!(matches!("Nope".parse::<Builtin>(), Err(DgError::UnknownName(_))));
    assert!(matches!(
        builtin_presentation(Builtin::Polynomial, RingSpec::Rationals, (2, 1)),
        Err(DgError::EmptyWindow { .. })
    ));
}

#[test]
fn functor_validation_and_composite() {
    let ring = RingSpec::Rationals;
    let d1 = Arc::new(builtin_presentation(Builtin::Discrete(1), ring.clone(), (0, 2)).unwrap());
    let mut q = loop_quiver();
    q.relation(vec![(int(1), vec![0, 0])]);
    let dual = Arc::new(path_algebra_presentation(ring.clone(), &q, 2).unwrap());
    let f = DgFunctorData::new(d1.clone(), dual.clone(), vec![0], vec![LinComb::basis(dual.unit(0))]).unwrap();
    assert!(f.validate().is_empty());
    let id = DgFunctorData::identity(dual.clone());
    assert!(id.validate().is_empty());
    let gf = f.then(&id).unwrap();
    assert!(gf.validate().is_empty());
    assert_eq!(gf, f);

    // x -> 2x is not multiplicative on dual numbers only if x² ≠ 0; here it is a valid
    // endofunctor, while x -> 1 breaks the grading
    let x = dual.find("x").unwrap();
    let mut images: Vec<LinComb> = (0..dual.basis().len()).map(LinComb::basis).collect();
    images[x] = LinComb::term(x, int(2));
    let scale = DgFunctorData::new(dual.clone(), dual.clone(), vec![0], images.clone()).unwrap();
    assert!(scale.validate().is_empty());
    images[x] = LinComb::basis(dual.unit(0));
    let bad = DgFunctorData::new(dual.clone(), dual, vec![0], images).unwrap();
    assert!(bad.validate().iter().any(|v| matches!(v, FunctorViolation::Grading { .. })));
}
