//! Golden tests for the maximal-subalgebra catalogs and the proposition
//! family builders.

use rho_kit::catalog::{
    maximal_irreducible_nonsimple, maximal_reducible, proposition_family, CatalogEntry,
};
use rho_kit::embedding::AmbientKind;

fn descriptions(entries: &[CatalogEntry]) -> Vec<String> {
    entries.iter().map(|e| e.description.clone()).collect()
}

#[test]
fn sl4_reducible_golden() {
    let entries = maximal_reducible(AmbientKind::Sl, 4).unwrap();
    assert_eq!(descriptions(&entries), vec!["sl:3", "sl:2+sl:2"]);
    for e in &entries {
        assert_eq!(e.spec.dim_v(), 4);
    }
}

#[test]
fn so8_reducible_golden() {
    let entries = maximal_reducible(AmbientKind::So, 8).unwrap();
    assert_eq!(descriptions(&entries), vec!["so:6", "sl:4", "so:4+so:4"]);
    for e in &entries {
        assert_eq!(e.spec.dim_v(), 8);
    }
}

#[test]
fn sp2_reducible_golden() {
    let entries = maximal_reducible(AmbientKind::Sp, 2).unwrap();
    assert_eq!(descriptions(&entries), vec!["sl:2", "sp:1+sp:1"]);
    for e in &entries {
        assert_eq!(e.spec.dim_v(), 4);
    }
}

#[test]
fn sl6_irreducible_golden() {
    let entries = maximal_irreducible_nonsimple(AmbientKind::Sl, 6).unwrap();
    assert_eq!(descriptions(&entries), vec!["sl:2(x)sl:3"]);
    assert_eq!(entries[0].spec.dim_v(), 6);
}

#[test]
fn sp6_irreducible_golden() {
    let entries = maximal_irreducible_nonsimple(AmbientKind::Sp, 6).unwrap();
    assert_eq!(descriptions(&entries), vec!["sp:2(x)so:3"]);
    assert_eq!(entries[0].spec.dim_v(), 12);
}

#[test]
fn so9_irreducible_golden() {
    let entries = maximal_irreducible_nonsimple(AmbientKind::So, 9).unwrap();
    assert_eq!(descriptions(&entries), vec!["so:3(x)so:3"]);
    assert_eq!(entries[0].spec.dim_v(), 9);
}

#[test]
fn so16_irreducible_has_sp_tensor() {
    // 16 = 4·4 (orthogonal tensor) and 16 = 4·2·2 (sp_2 ⊗ sp_2 preserves a
    // symmetric form on C^16).
    let entries = maximal_irreducible_nonsimple(AmbientKind::So, 16).unwrap();
    assert_eq!(descriptions(&entries), vec!["so:4(x)so:4", "sp:2(x)sp:2"]);
    for e in &entries {
        assert_eq!(e.spec.dim_v(), 16);
    }
}

#[test]
fn so12_reducible_golden() {
    let entries = maximal_reducible(AmbientKind::So, 12).unwrap();
    assert_eq!(
        descriptions(&entries),
        vec!["so:10", "sl:6", "so:4+so:8", "so:6+so:6"]
    );
}

#[test]
fn so11_reducible_golden() {
    let entries = maximal_reducible(AmbientKind::So, 11).unwrap();
    assert_eq!(
        descriptions(&entries),
        vec!["so:9", "so:4+so:7", "so:6+so:5", "so:8+so:3", "so:10+so:1"]
    );
    for e in &entries {
        assert_eq!(e.spec.dim_v(), 11);
    }
}

#[test]
fn catalogs_are_duplicate_free_and_validated() {
    for n in 2..=12usize {
        for (kind, min) in [
            (AmbientKind::Sl, 2usize),
            (AmbientKind::So, 5),
            (AmbientKind::Sp, 1),
        ] {
            if n < min {
                continue;
            }
            let mut all = maximal_reducible(kind, n).unwrap();
            all.extend(maximal_irreducible_nonsimple(kind, n).unwrap());
            let mut descs = descriptions(&all);
            let len = descs.len();
            descs.sort();
            descs.dedup();
            assert_eq!(descs.len(), len, "{kind}:{n} has duplicate entries");
            for e in &all {
                assert!(e.spec.validate().is_ok(), "{kind}:{n} {}", e.description);
                let expect = match kind {
                    AmbientKind::Sp => 2 * n as u64,
                    _ => n as u64,
                };
                assert_eq!(e.spec.dim_v(), expect, "{kind}:{n} {}", e.description);
            }
        }
    }
}

#[test]
fn reducible_counts_match_closed_forms() {
    // sl_n: one sl_{n−1} entry (n ≥ 3) plus unordered proper splits.
    for n in 4..=12usize {
        let count = maximal_reducible(AmbientKind::Sl, n).unwrap().len();
        assert_eq!(count, 1 + n / 2 - 1, "sl:{n}");
    }
    // sp_n: sl_n plus unordered splits k + (n−k).
    for n in 2..=12usize {
        let count = maximal_reducible(AmbientKind::Sp, n).unwrap().len();
        assert_eq!(count, 1 + n / 2, "sp:{n}");
    }
    // so_{2m+1}: so_{2m−1} plus even/odd splits 2k + (2(m−k)+1), 2 ≤ k ≤ m.
    for m in 2..=6usize {
        let n = 2 * m + 1;
        let count = maximal_reducible(AmbientKind::So, n).unwrap().len();
        assert_eq!(count, 1 + (m - 1), "so:{n}");
    }
}

#[test]
fn proposition_red2_examples() {
    let s = proposition_family("red2.1", &[3, 2]).unwrap();
    assert_eq!(s.describe(), "g=sl:5; h=sl:3+sl:2");
    assert_eq!(s.dim_v(), 5);

    // Degenerate tail: q = 1 contributes one trivial dimension.
    let s = proposition_family("red2.1", &[4, 1]).unwrap();
    assert_eq!(s.dim_v(), 5);
    assert_eq!(s.h.user_factors.len(), 1);

    // so with q = 2: the torus is dropped, two trivial dimensions remain.
    let s = proposition_family("red2.2", &[7, 2]).unwrap();
    assert_eq!(s.dim_v(), 9);
    assert_eq!(s.h.user_factors.len(), 1);

    assert!(proposition_family("red2.1", &[2, 3]).is_err());
    assert!(proposition_family("red2.1", &[1, 1]).is_err());
}

#[test]
fn proposition_incl_and_tens_examples() {
    assert_eq!(
        proposition_family("incl.2", &[3]).unwrap().describe(),
        "g=sl:6; h=sp:3"
    );
    assert_eq!(
        proposition_family("incl.4", &[4]).unwrap().describe(),
        "g=sp:4; h=sl:4"
    );
    let t = proposition_family("tens.3", &[2, 3]).unwrap();
    assert_eq!(t.dim_v(), 24);
    assert!(proposition_family("tens.2", &[2, 5]).is_err());
}

#[test]
fn proposition_red3_examples() {
    let s = proposition_family("red3.1", &[9, 3, 3, 2]).unwrap();
    assert_eq!(s.dim_v(), 9);
    assert_eq!(s.h.user_factors.len(), 3);

    // sp parts pad with 2·(n − Σ n_i) trivial dimensions.
    let s = proposition_family("red3.3", &[4, 2, 1]).unwrap();
    assert_eq!(s.dim_v(), 8);

    assert!(proposition_family("red3.1", &[5, 2, 3]).is_err()); // not sorted
    assert!(proposition_family("red3.2", &[5, 4, 4]).is_err()); // exceeds n
}

#[test]
fn proposition_redu_and_redex_examples() {
    let s = proposition_family("redu.1", &[2, 3]).unwrap();
    assert_eq!(s.describe(), "g=sl:7; h=sp:2+sl:3");

    let s = proposition_family("redu.4", &[2]).unwrap();
    assert_eq!(s.describe(), "g=so:8; h=sp:2");
    assert_eq!(s.dim_v(), 8);

    let s = proposition_family("redex.1", &[5]).unwrap();
    assert_eq!(s.dim_v(), 12);
    assert_eq!(s.h.user_factors.len(), 2);

    let s = proposition_family("redex.2", &[3]).unwrap();
    assert_eq!(s.dim_v(), 11);

    let s = proposition_family("khcomp", &[3, 2]).unwrap();
    assert_eq!(s.dim_v(), 10);

    assert!(proposition_family("nosuch.1", &[1]).is_err());
    assert!(proposition_family("redu.4", &[1, 2]).is_err());
}

#[test]
fn proposition_si_examples() {
    assert_eq!(
        proposition_family("si.1", &[3]).unwrap().describe(),
        "g=sl:6; h=sp:3"
    );
    let s = proposition_family("si.2", &[]).unwrap();
    assert_eq!(s.dim_v(), 7);
    let s = proposition_family("si.3", &[]).unwrap();
    assert_eq!(s.dim_v(), 8);
}
