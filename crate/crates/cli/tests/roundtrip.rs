use mixhom::dgcat::{builtin_presentation, kronecker_quiver, path_algebra_presentation, Builtin, Quiver};
use mixhom::exactlin::RingSpec;
use mixhom::resolution::semifree_resolve;
use mixhom_cli::{emit_dgc, parse_dgc, InputError};
use std::sync::Arc;

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/examples/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn builtins_survive_emit_and_parse() {
    let rings = [RingSpec::Integers, RingSpec::Rationals, RingSpec::IntegersModN(4)];
    let cases = [
        (Builtin::Polynomial, (0, 4)),
        (Builtin::Laurent, (-2, 3)),
        (Builtin::TruncatedPolynomial(3), (0, 5)),
        (Builtin::KoszulDga(2), (0, 0)),
        (Builtin::KoszulDga(-3), (0, 1)),
        (Builtin::Discrete(3), (0, 0)),
        (Builtin::CyclicQuotient(2), (0, 0)),
        (Builtin::CyclicQuotient(6), (0, 2)),
    ];
    for ring in &rings {
        for (b, w) in &cases {
            let p = builtin_presentation(*b, ring.clone(), *w).unwrap();
            let text = emit_dgc(&p);
            assert_eq!(parse_dgc(&text, None).unwrap(), p, "{b} over {ring}:\n{text}");
        }
    }
}

#[test]
fn path_algebras_and_towers_survive_emit_and_parse() {
    let mut q = Quiver::new(&["A", "B"]);
    let a = q.arrow("a", 0, 1);
    let b = q.arrow("b", 1, 0);
    q.relation(vec![(mixhom::Coeff::from_integer(1.into()), vec![a, b])]);
    for p in [
        path_algebra_presentation(RingSpec::Rationals, &kronecker_quiver(), 2).unwrap(),
        path_algebra_presentation(RingSpec::Integers, &q, 4).unwrap(),
    ] {
        assert_eq!(parse_dgc(&emit_dgc(&p), None).unwrap(), p);
    }
    let z2 = builtin_presentation(Builtin::CyclicQuotient(2), RingSpec::Integers, (0, 0)).unwrap();
    let t = semifree_resolve(Arc::new(z2), 4, 5, (0, 0)).unwrap();
    let top = t.top().pres();
    assert_eq!(&parse_dgc(&emit_dgc(top), None).unwrap(), top);
}

#[test]
fn fixtures_match_their_constructions() {
    let koszul = builtin_presentation(Builtin::KoszulDga(2), RingSpec::Integers, (0, 0)).unwrap();
    assert_eq!(parse_dgc(&fixture("koszul2.dgc"), None).unwrap(), koszul);
    let z2 = builtin_presentation(Builtin::CyclicQuotient(2), RingSpec::Integers, (0, 0)).unwrap();
    assert_eq!(parse_dgc(&fixture("z2.dgc"), None).unwrap(), z2);
    let kr = parse_dgc(&fixture("kronecker.dgc"), None).unwrap();
    let expected = path_algebra_presentation(RingSpec::Rationals, &kronecker_quiver(), 2).unwrap();
    assert_eq!(kr.ranks_by_weight(), expected.ranks_by_weight());
    assert_eq!(kr.ranks_by_weight().into_iter().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
    let over_z = parse_dgc(&fixture("kronecker.dgc"), Some(RingSpec::Integers)).unwrap();
    assert_eq!(over_z.ring(), &RingSpec::Integers);
}

#[test]
fn malformed_input_is_located() {
    let neg = "ring Z\nweights 0..0\nobject X\ngen e : X -> X deg -1 wt 0\n";
    match parse_dgc(neg, None) {
        Err(InputError::Schema { section, message }) => {
            assert_eq!(section, "gen");
            assert!(message.contains("negative homological degree"));
        }
        other => panic!("{other:?}"),
    }
    let unknown = "ring Q\nweights 0..1\nobject X\ngen x : X -> X deg 0 wt 1\nd x = 2*x + 3*y\n";
    assert_eq!(
        parse_dgc(unknown, None),
        Err(InputError::Parse { line: 5, column: 13, message: "unknown morphism `y`".into() })
    );
    assert!(matches!(parse_dgc("ring Z/0\n", None), Err(InputError::Parse { line: 1, .. })));
    assert!(matches!(parse_dgc("object X\n", None), Err(InputError::Schema { .. })));
    assert!(matches!(parse_dgc("ring Q\nweights 0..0\nobject X\nfoo\n", None), Err(InputError::Parse { line: 4, column: 1, .. })));
    let outside = "ring Q\nweights 0..1\nobject X\ngen x : X -> X deg 0 wt 2\n";
    assert!(matches!(parse_dgc(outside, None), Err(InputError::Schema { .. })));
}

#[test]
fn coefficients_and_signs_parse() {
    let text = "ring Q\nweights 0..1\nobject X\ngen x : X -> X deg 0 wt 1\ngen y : X -> X deg 1 wt 1\nd y = -1/2*x\n";
    let p = parse_dgc(text, None).unwrap();
    let y = p.find("y").unwrap();
    assert_eq!(p.display_lin(p.differential(y)), "-1/2*x");
    assert_eq!(parse_dgc(&emit_dgc(&p), None).unwrap(), p);
}
