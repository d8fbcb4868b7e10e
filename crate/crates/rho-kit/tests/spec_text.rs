//! Pair-grammar parsing and round-tripping.

use rho_kit::algebra::FactorSpec;
use rho_kit::embedding::{AmbientKind, ModuleExpr};
use rho_kit::spec_text::{pair_string, parse_module, parse_pair, parse_spec};
use rho_kit::RhoError;

#[test]
fn parses_basic_pair() {
    let p = parse_pair("g=sl:5; h=sl:3+sl:2; V=std1 (x) std2").unwrap();
    assert_eq!(p.ambient, (AmbientKind::Sl, 5));
    assert_eq!(p.factors, vec![FactorSpec::Sl(3), FactorSpec::Sl(2)]);
    assert_eq!(
        p.v,
        ModuleExpr::OuterTensor(vec![ModuleExpr::Std(0), ModuleExpr::Std(1)])
    );
    // Validates: 3·2 = 6 ≠ 5.
    assert!(p.into_spec().is_err());
    let s = parse_spec("g=sl:6; h=sl:3+sl:2; V=std1 (x) std2").unwrap();
    assert_eq!(s.dim_v(), 6);
}

#[test]
fn whitespace_insensitive() {
    let a = parse_pair("g=so:7;h=g2;V=irrep1[1,0](+)triv:0").unwrap();
    let b = parse_pair("  g = so : 7 ;\n h = g2 ;\n V = irrep 1 [ 1 , 0 ] (+) triv : 0 ").unwrap();
    assert_eq!(a, b);
}

#[test]
fn parses_module_atoms() {
    assert_eq!(parse_module("std3").unwrap(), ModuleExpr::Std(2));
    assert_eq!(parse_module("triv:4").unwrap(), ModuleExpr::Triv(4));
    assert_eq!(
        parse_module("dual(std1 (+) triv:1)").unwrap(),
        ModuleExpr::Dual(Box::new(ModuleExpr::DirectSum(vec![
            ModuleExpr::Std(0),
            ModuleExpr::Triv(1)
        ])))
    );
    assert_eq!(
        parse_module("irrep2[0,1,0]").unwrap(),
        ModuleExpr::Irrep(1, vec![0, 1, 0])
    );
}

#[test]
fn tensor_binds_tighter_than_sum() {
    let m = parse_module("std1 (+) std2 (x) std3").unwrap();
    assert_eq!(
        m,
        ModuleExpr::DirectSum(vec![
            ModuleExpr::Std(0),
            ModuleExpr::OuterTensor(vec![ModuleExpr::Std(1), ModuleExpr::Std(2)]),
        ])
    );
}

#[test]
fn parse_errors_carry_position() {
    let e = parse_pair("g=sl:5; h=sl:3+sl:2; V=std0").unwrap_err();
    match e {
        RhoError::Parse { line, col, msg } => {
            assert_eq!(line, 1);
            assert!(col > 20, "col = {col}");
            assert!(msg.contains("1-based"), "{msg}");
        }
        other => panic!("expected parse error, got {other:?}"),
    }
    assert!(parse_pair("g=su:5; h=sl:3; V=std1").is_err());
    assert!(parse_pair("g=sl:5; h=sl:3; V=std1 extra").is_err());
    assert!(parse_pair("g=sl:5; h=sl:3; V=").is_err());
    assert!(parse_pair("").is_err());
}

#[test]
fn round_trip_examples() {
    for text in [
        "g=sl:5; h=sl:3+sl:2; V=std1 (+) std2",
        "g=so:7; h=g2; V=irrep1[1,0]",
        "g=so:9; h=g2; V=irrep1[1,0] (+) triv:2",
        "g=sl:6; h=sl:3+sl:2; V=std1 (x) std2",
        "g=sp:3; h=sl:2+sl:2+sl:2; V=std1 (+) std2 (+) std3",
        "g=sl:6; h=sl:3; V=std1 (+) dual(std1)",
        "g=so:8; h=so:5+so:3; V=std1 (+) std2",
        "g=sp:8; h=sp:2+so:4; V=std1 (x) std2",
    ] {
        let spec = parse_spec(text).unwrap_or_else(|e| panic!("{text}: {e}"));
        let printed = pair_string(&spec);
        let back = parse_spec(&printed).unwrap_or_else(|e| panic!("{printed}: {e}"));
        assert_eq!(pair_string(&back), printed, "second round trip of {text}");
        assert_eq!(back.ambient, spec.ambient);
        assert_eq!(back.h.describe(), spec.h.describe());
    }
}

#[test]
fn printed_form_uses_grammar_tokens() {
    let spec = parse_spec("g=sl:6; h=sl:3+sl:2; V=std1(x)std2").unwrap();
    let s = pair_string(&spec);
    assert_eq!(s, "g=sl:6; h=sl:3+sl:2; V=std1 (x) std2");
}
