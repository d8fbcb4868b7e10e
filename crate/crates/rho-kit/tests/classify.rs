//! Classifier tests: small closed-form instances, pruning soundness, and the
//! bundled golden table.

use rho_kit::algebra::Covector;
use rho_kit::classify::{
    builtin_table1, classify, classify_with_options, verify_table1,
};
use rho_kit::cone::{cones_equal, ConeHRep};
use rho_kit::embedding::{AmbientKind, EmbeddingSpec};
use rho_kit::rat::rat;
use rho_kit::rho::{Relation, VerdictKind, WitnessCone};

/// Cone over a(h) cut out by the dominant chamber plus extra equalities given
/// in block coordinates.
fn chamber_with_eqs(spec: &EmbeddingSpec, eqs: &[&[i64]]) -> ConeHRep {
    let mut hrep: Vec<(Covector, Relation)> = spec
        .h
        .chamber()
        .into_iter()
        .map(|a| (a, Relation::Ge))
        .collect();
    for row in eqs {
        let coords: Vec<_> = row.iter().map(|&c| rat(c)).collect();
        hrep.push((Covector::new(&spec.h.space, &coords), Relation::Eq));
    }
    WitnessCone {
        rays: Vec::new(),
        hrep,
    }
    .cone_hrep(&spec.h)
}

fn witness_cone(row: &rho_kit::classify::ClassificationRow) -> &WitnessCone {
    match &row.verdict.kind {
        VerdictKind::DominatedWithWitness(wc) => wc,
        other => panic!("expected a witness cone, got {other:?}"),
    }
}

#[test]
fn classify_sl4_gives_equal_blocks() {
    let rows = classify(AmbientKind::Sl, 4, None).unwrap();
    assert_eq!(rows.len(), 1);
    let row = &rows[0];
    assert_eq!(row.h, "sl:2+sl:2");
    assert_eq!(row.v, "irrep1[1] (+) irrep2[1]");
    // Witness: a_1 = b_1 inside the dominant chamber.
    let expected = chamber_with_eqs(&row.spec, &[&[1, -1, -1, 1]]);
    let got = witness_cone(row).cone_hrep(&row.spec.h);
    assert!(cones_equal(&got, &expected).unwrap());
}

#[test]
fn classify_sp3_gives_triple_diagonal() {
    let rows = classify(AmbientKind::Sp, 3, None).unwrap();
    assert_eq!(rows.len(), 1);
    let row = &rows[0];
    assert_eq!(row.h, "sl:2+sl:2+sl:2");
    // Witness: a_1 = b_1 = c_1 inside the dominant chamber.
    let expected = chamber_with_eqs(
        &row.spec,
        &[&[1, -1, -1, 1, 0, 0], &[0, 0, 1, -1, -1, 1]],
    );
    let got = witness_cone(row).cone_hrep(&row.spec.h);
    assert!(cones_equal(&got, &expected).unwrap());
}

#[test]
fn classify_so7_gives_antisymmetric_sl3() {
    let rows = classify(AmbientKind::So, 7, None).unwrap();
    assert_eq!(rows.len(), 1);
    let row = &rows[0];
    assert_eq!(row.h, "sl:3");
    // Witness: a_i = -a_{4-i}, i.e. a_2 = 0 and a_1 + a_3 = 0.
    let expected = chamber_with_eqs(&row.spec, &[&[0, 1, 0], &[1, 0, 1]]);
    let got = witness_cone(row).cone_hrep(&row.spec.h);
    assert!(cones_equal(&got, &expected).unwrap());
}

#[test]
fn classify_sp1_is_empty() {
    let rows = classify(AmbientKind::Sp, 1, None).unwrap();
    assert!(rows.is_empty());
}

#[test]
fn classify_rejects_degenerate_ambients() {
    assert!(classify(AmbientKind::Sl, 1, None).is_err());
    assert!(classify(AmbientKind::So, 4, None).is_err());
}

#[test]
fn max_depth_caps_factor_count() {
    let rows = classify(AmbientKind::Sp, 4, Some(2)).unwrap();
    assert!(rows
        .iter()
        .all(|r| r.h.split('+').count() <= 2));
    let all = classify(AmbientKind::Sp, 4, None).unwrap();
    assert!(all.len() > rows.len());
}

#[test]
fn pruning_is_sound() {
    for (kind, n) in [
        (AmbientKind::Sl, 4),
        (AmbientKind::Sl, 5),
        (AmbientKind::Sl, 6),
        (AmbientKind::So, 7),
        (AmbientKind::So, 8),
        (AmbientKind::Sp, 2),
        (AmbientKind::Sp, 3),
        (AmbientKind::Sp, 4),
    ] {
        let pruned = classify_with_options(kind, n, None, true).unwrap();
        let full = classify_with_options(kind, n, None, false).unwrap();
        let keys = |rows: &[rho_kit::classify::ClassificationRow]| {
            rows.iter().map(|r| r.key.clone()).collect::<Vec<_>>()
        };
        assert_eq!(keys(&pruned), keys(&full), "{kind:?}:{n}");
    }
}

#[test]
fn golden_table_is_well_formed() {
    let golden = builtin_table1().unwrap();
    assert_eq!(golden.len(), 59);
    let families: std::collections::BTreeSet<&str> =
        golden.iter().map(|r| r.family.as_str()).collect();
    assert_eq!(families.len(), 11);
}

#[test]
fn verify_small_instances_match_golden() {
    let bounds = [
        (AmbientKind::Sl, 4),
        (AmbientKind::Sl, 5),
        (AmbientKind::So, 7),
        (AmbientKind::Sp, 2),
        (AmbientKind::Sp, 3),
    ];
    let wanted = ["sl:4", "sl:5", "so:7", "sp:2", "sp:3"];
    let golden: Vec<_> = builtin_table1()
        .unwrap()
        .into_iter()
        .filter(|r| wanted.contains(&r.g.as_str()))
        .collect();
    assert_eq!(golden.len(), 7);
    let report = verify_table1(&bounds, &golden).unwrap();
    assert!(
        report.is_empty(),
        "missing={:?} extra={:?} mismatched={:?}",
        report.missing,
        report.extra,
        report.mismatched
    );
}
