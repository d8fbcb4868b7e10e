//! Oracle tests for the root-system realizations: root counts, the 2ρ
//! identity, closed-form adjoint ρ covectors, fundamental-weight tables, and
//! Weyl-orbit chamber representatives.

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rho_kit::algebra::{build_root_system, ip, Covector, FactorSpec, Kind, Point, RootSystemData, SemisimpleAlgebra};
use rho_kit::rat::{rat, ratq, Rat};

fn all_types() -> Vec<(Kind, usize)> {
    let mut v = Vec::new();
    for r in 1..=8 {
        v.push((Kind::A, r));
    }
    for r in 2..=8 {
        v.push((Kind::B, r));
    }
    for r in 1..=8 {
        v.push((Kind::C, r));
    }
    for r in 3..=8 {
        v.push((Kind::D, r));
    }
    v.extend([(Kind::G2, 2), (Kind::F4, 4), (Kind::E6, 6), (Kind::E7, 7), (Kind::E8, 8)]);
    v
}

fn random_chamber_point(rs: &RootSystemData, rng: &mut ChaCha8Rng) -> Point {
    // Nonnegative rational combination of the fundamental coweights.
    let mut y = Point::zero(rs.space.dim);
    for w in &rs.fundamental_coweights {
        let c = ratq(rng.gen_range(0..=12), rng.gen_range(1..=4));
        y = y.add(&w.scale(&c));
    }
    assert!(rs.chamber_contains(&y));
    y
}

#[test]
fn positive_root_counts_and_expansion() {
    for (kind, rank) in all_types() {
        let rs = build_root_system(kind, rank).unwrap();
        let expected = match kind {
            Kind::A => rank * (rank + 1) / 2,
            Kind::B | Kind::C => rank * rank,
            Kind::D => rank * (rank - 1),
            Kind::G2 => 6,
            Kind::F4 => 24,
            Kind::E6 => 36,
            Kind::E7 => 63,
            Kind::E8 => 120,
        };
        assert_eq!(rs.positive_roots.len(), expected, "{kind}{rank}");
        for root in &rs.positive_roots {
            let x = rs.expand_in_simple_roots(root).expect("root in simple span");
            assert!(
                x.iter().all(rho_kit::rat::is_nonneg_integer),
                "{kind}{rank}: positive root with non-nonneg-integer expansion"
            );
        }
    }
}

#[test]
fn invalid_types_rejected() {
    assert!(build_root_system(Kind::B, 1).is_err());
    assert!(build_root_system(Kind::D, 2).is_err());
    assert!(build_root_system(Kind::G2, 3).is_err());
    assert!(build_root_system(Kind::E6, 7).is_err());
}

#[test]
fn two_rho_identity() {
    // Σ positive roots = 2 Σ ϖ_k for every type.
    for (kind, rank) in all_types() {
        let rs = build_root_system(kind, rank).unwrap();
        let mut two_sum_fw = Covector::zero(rs.space.dim);
        for w in &rs.fundamental_weights {
            two_sum_fw = two_sum_fw.add(&w.scale(&rat(2)));
        }
        assert_eq!(rs.rho(), two_sum_fw, "{kind}{rank}");
    }
}

#[test]
fn fundamental_weights_pair_to_delta() {
    for (kind, rank) in all_types() {
        let rs = build_root_system(kind, rank).unwrap();
        for (k, w) in rs.fundamental_weights.iter().enumerate() {
            for (j, a) in rs.simple_roots.iter().enumerate() {
                let p = rs.pair_coroot(w, a);
                assert_eq!(p, if k == j { rat(1) } else { rat(0) }, "{kind}{rank}");
            }
        }
        for (k, om) in rs.fundamental_coweights.iter().enumerate() {
            for (j, a) in rs.simple_roots.iter().enumerate() {
                assert_eq!(a.eval(om), if k == j { rat(1) } else { rat(0) });
            }
        }
    }
}

/// ρ evaluated via the printed per-type coefficient formulas on sorted
/// chamber coordinates.
fn rho_closed_form(rs: &RootSystemData, y: &Point) -> Rat {
    let a = &y.coords;
    let n = rs.rank as i64;
    match rs.kind {
        Kind::A => (0..=n as usize)
            .map(|i| rat(n + 1 - 2 * (i as i64 + 1) + 1) * &a[i])
            .sum(),
        Kind::B => (0..n as usize)
            .map(|i| rat(2 * n + 1 - 2 * (i as i64 + 1)) * &a[i])
            .sum(),
        Kind::C => (0..n as usize)
            .map(|i| rat(2) * rat(n + 1 - (i as i64 + 1)) * &a[i])
            .sum(),
        Kind::D => (0..n as usize)
            .map(|i| rat(2) * rat(n - (i as i64 + 1)) * &a[i])
            .sum(),
        _ => unreachable!(),
    }
}

#[test]
fn rho_adjoint_closed_forms_classical() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA1);
    for (kind, rank) in all_types() {
        if !matches!(kind, Kind::A | Kind::B | Kind::C | Kind::D) {
            continue;
        }
        let rs = build_root_system(kind, rank).unwrap();
        for _ in 0..25 {
            let y = random_chamber_point(&rs, &mut rng);
            assert_eq!(rs.rho().eval(&y), rho_closed_form(&rs, &y), "{kind}{rank}");
        }
    }
}

fn alpha_coeffs(rs: &RootSystemData, w: &Covector) -> Vec<Rat> {
    rs.expand_in_simple_roots(w).expect("in simple-root span")
}

#[test]
fn rho_adjoint_exceptional_alpha_coordinates() {
    // G2: ρ = 10α1 + 6α2; F4: (16,30,42,22); E7: (34,49,66,96,75,52,27).
    let g2 = build_root_system(Kind::G2, 2).unwrap();
    assert_eq!(alpha_coeffs(&g2, &g2.rho()), vec![rat(10), rat(6)]);

    let f4 = build_root_system(Kind::F4, 4).unwrap();
    assert_eq!(
        alpha_coeffs(&f4, &f4.rho()),
        vec![rat(16), rat(30), rat(42), rat(22)]
    );

    let e7 = build_root_system(Kind::E7, 7).unwrap();
    assert_eq!(
        alpha_coeffs(&e7, &e7.rho()),
        [34, 49, 66, 96, 75, 52, 27].map(rat).to_vec()
    );
}

#[test]
fn fundamental_weight_tables_classical() {
    // A_{n−1}: ϖ_k = ε_1 + … + ε_k (mod the trace constraint).
    let a3 = build_root_system(Kind::A, 3).unwrap();
    for k in 0..3 {
        let mut raw = vec![rat(0); 4];
        for x in raw.iter_mut().take(k + 1) {
            *x = rat(1);
        }
        assert_eq!(a3.fundamental_weights[k], Covector::new(&a3.space, &raw));
    }
    // B_n: ϖ_n = ½Σε_i; C_n: ϖ_k = ε_1+…+ε_k; D_n: ϖ_{n−1} = ½Σε_i,
    // ϖ_n = ½Σε_i − ε_n (in the labelling where α_n = ε_{n−1}+ε_n).
    let b3 = build_root_system(Kind::B, 3).unwrap();
    assert_eq!(
        b3.fundamental_weights[2],
        Covector::new(&b3.space, &[ratq(1, 2), ratq(1, 2), ratq(1, 2)])
    );
    let c3 = build_root_system(Kind::C, 3).unwrap();
    assert_eq!(
        c3.fundamental_weights[1],
        Covector::new(&c3.space, &[rat(1), rat(1), rat(0)])
    );
    let d4 = build_root_system(Kind::D, 4).unwrap();
    let half = vec![ratq(1, 2); 4];
    assert_eq!(d4.fundamental_weights[3], Covector::new(&d4.space, &half));
    let mut spin_minus = half;
    spin_minus[3] = ratq(-1, 2);
    assert_eq!(
        d4.fundamental_weights[2],
        Covector::new(&d4.space, &spin_minus)
    );
}

#[test]
fn fundamental_weight_tables_exceptional() {
    // Printed α-expansions, coefficient for coefficient.
    let g2 = build_root_system(Kind::G2, 2).unwrap();
    assert_eq!(alpha_coeffs(&g2, &g2.fundamental_weights[0]), vec![rat(2), rat(1)]);
    assert_eq!(alpha_coeffs(&g2, &g2.fundamental_weights[1]), vec![rat(3), rat(2)]);

    let f4 = build_root_system(Kind::F4, 4).unwrap();
    let f4_table: [[i64; 4]; 4] = [[2, 3, 4, 2], [3, 6, 8, 4], [2, 4, 6, 3], [1, 2, 3, 2]];
    for (k, row) in f4_table.iter().enumerate() {
        assert_eq!(
            alpha_coeffs(&f4, &f4.fundamental_weights[k]),
            row.map(rat).to_vec()
        );
    }

    let e6 = build_root_system(Kind::E6, 6).unwrap();
    let third = |v: [i64; 6]| v.map(|x| ratq(x, 3)).to_vec();
    let ints = |v: [i64; 6]| v.map(rat).to_vec();
    let e6_table = vec![
        third([4, 3, 5, 6, 4, 2]),
        ints([1, 2, 2, 3, 2, 1]),
        third([5, 6, 10, 12, 8, 4]),
        ints([2, 3, 4, 6, 4, 2]),
        third([4, 6, 8, 12, 10, 5]),
        third([2, 3, 4, 6, 5, 4]),
    ];
    for (k, row) in e6_table.iter().enumerate() {
        assert_eq!(&alpha_coeffs(&e6, &e6.fundamental_weights[k]), row, "E6 w{}", k + 1);
    }

    let e7 = build_root_system(Kind::E7, 7).unwrap();
    let halves = |v: [i64; 7]| v.map(|x| ratq(x, 2)).to_vec();
    let ints7 = |v: [i64; 7]| v.map(rat).to_vec();
    let e7_table = vec![
        ints7([2, 2, 3, 4, 3, 2, 1]),
        halves([4, 7, 8, 12, 9, 6, 3]),
        ints7([3, 4, 6, 8, 6, 4, 2]),
        ints7([4, 6, 8, 12, 9, 6, 3]),
        halves([6, 9, 12, 18, 15, 10, 5]),
        ints7([2, 3, 4, 6, 5, 4, 2]),
        halves([2, 3, 4, 6, 5, 4, 3]),
    ];
    for (k, row) in e7_table.iter().enumerate() {
        assert_eq!(&alpha_coeffs(&e7, &e7.fundamental_weights[k]), row, "E7 w{}", k + 1);
    }

    let e8 = build_root_system(Kind::E8, 8).unwrap();
    let e8_table: [[i64; 8]; 8] = [
        [4, 5, 7, 10, 8, 6, 4, 2],
        [5, 8, 10, 15, 12, 9, 6, 3],
        [7, 10, 14, 20, 16, 12, 8, 4],
        [10, 15, 20, 30, 24, 18, 12, 6],
        [8, 12, 16, 24, 20, 15, 10, 5],
        [6, 9, 12, 18, 15, 12, 8, 4],
        [4, 6, 8, 12, 10, 8, 6, 3],
        [2, 3, 4, 6, 5, 4, 3, 2],
    ];
    for (k, row) in e8_table.iter().enumerate() {
        assert_eq!(
            alpha_coeffs(&e8, &e8.fundamental_weights[k]),
            row.map(rat).to_vec(),
            "E8 w{}",
            k + 1
        );
    }
}

#[test]
fn c2_example_block() {
    // (C,2): positive roots {ε1−ε2, ε1+ε2, 2ε1, 2ε2}; adjoint ρ = 4ε1+2ε2.
    let c2 = build_root_system(Kind::C, 2).unwrap();
    let mk = |v: [i64; 2]| Covector::new(&c2.space, &v.map(rat));
    let expected: std::collections::BTreeSet<_> =
        [[1, -1], [1, 1], [2, 0], [0, 2]].map(mk).into();
    let got: std::collections::BTreeSet<_> = c2.positive_roots.iter().cloned().collect();
    assert_eq!(got, expected);
    assert_eq!(c2.rho(), mk([4, 2]));
}

#[test]
fn a1_example_block() {
    let a1 = build_root_system(Kind::A, 1).unwrap();
    assert_eq!(a1.positive_roots.len(), 1);
    assert_eq!(
        a1.positive_roots[0],
        Covector::new(&a1.space, &[rat(1), rat(-1)])
    );
    // chamber {a1 ≥ a2}
    let y = Point::new(&a1.space, vec![rat(1), rat(-1)]).unwrap();
    assert!(a1.chamber_contains(&y));
    let y2 = Point::new(&a1.space, vec![rat(-1), rat(1)]).unwrap();
    assert!(!a1.chamber_contains(&y2));
}

#[test]
fn g2_chamber_orientation() {
    // Chamber realizes a_3 ≥ 0 ≥ a_1 ≥ a_2.
    let g2 = build_root_system(Kind::G2, 2).unwrap();
    let inside = Point::new(&g2.space, vec![rat(-1), rat(-2), rat(3)]).unwrap();
    assert!(g2.chamber_contains(&inside));
    let outside = Point::new(&g2.space, vec![rat(3), rat(-1), rat(-2)]).unwrap();
    assert!(!g2.chamber_contains(&outside));
}

#[test]
fn dominant_representatives() {
    let sl3 = SemisimpleAlgebra::new(&[FactorSpec::Sl(3)]).unwrap();
    let y = Point::new(&sl3.space, vec![rat(-1), rat(0), rat(1)]).unwrap();
    assert_eq!(
        sl3.dominant_representative(&y).coords,
        vec![rat(1), rat(0), rat(-1)]
    );

    let sp2 = SemisimpleAlgebra::new(&[FactorSpec::Sp(2)]).unwrap();
    let y = Point::new(&sp2.space, vec![rat(-1), rat(3)]).unwrap();
    assert_eq!(sp2.dominant_representative(&y).coords, vec![rat(3), rat(1)]);

    // so_8 = D4: derived by enumerating the Weyl orbit by closure under
    // simple reflections and picking the chamber element.
    let so8 = SemisimpleAlgebra::new(&[FactorSpec::So(8)]).unwrap();
    let y = Point::new(&so8.space, vec![rat(1), rat(1), rat(1), rat(-2)]).unwrap();
    let dom = so8.dominant_representative(&y);
    assert_eq!(dom.coords, vec![rat(2), rat(1), rat(1), rat(-1)]);
    // Independent check: dom is in the orbit computed by brute closure.
    let d4 = &so8.factors[0];
    let mut orbit = std::collections::BTreeSet::new();
    let mut stack = vec![y.clone()];
    while let Some(p) = stack.pop() {
        if orbit.insert(p.clone()) {
            for i in 0..d4.rank {
                stack.push(d4.simple_reflection(&p, i));
            }
        }
    }
    assert!(orbit.contains(&dom));
    assert_eq!(orbit.iter().filter(|p| d4.chamber_contains(p)).count(), 1);
}

#[test]
fn dominant_representative_idempotent_and_in_chamber() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let h = SemisimpleAlgebra::new(&[FactorSpec::So(8), FactorSpec::Sp(2)]).unwrap();
    for _ in 0..50 {
        let coords: Vec<Rat> = (0..h.space.dim)
            .map(|_| ratq(rng.gen_range(-12..=12), rng.gen_range(1..=4)))
            .collect();
        let y = Point::new(&h.space, coords).unwrap();
        let dom = h.dominant_representative(&y);
        assert!(h.chamber_contains(&dom));
        assert_eq!(h.dominant_representative(&dom), dom);
    }
}

#[test]
fn rho_adjoint_examples() {
    // sl_3 → 2ε1 − 2ε3, value 4 at (1,0,−1).
    let sl3 = SemisimpleAlgebra::new(&[FactorSpec::Sl(3)]).unwrap();
    let rho = sl3.rho_adjoint_covector();
    assert_eq!(
        rho,
        Covector::new(&sl3.space, &[rat(2), rat(0), rat(-2)])
    );
    let y = Point::new(&sl3.space, vec![rat(1), rat(0), rat(-1)]).unwrap();
    assert_eq!(rho.eval(&y), rat(4));

    // sp_1 → 2ε1.
    let sp1 = SemisimpleAlgebra::new(&[FactorSpec::Sp(1)]).unwrap();
    assert_eq!(
        sp1.rho_adjoint_covector(),
        Covector::new(&sp1.space, &[rat(2)])
    );
}

#[test]
fn small_so_normalizations() {
    // so_3 ≅ sl_2, so_4 ≅ sl_2⊕sl_2, so_5 ≅ sp_2, so_6 ≅ sl_4.
    let so3 = SemisimpleAlgebra::new(&[FactorSpec::So(3)]).unwrap();
    assert_eq!(so3.factors.len(), 1);
    assert_eq!((so3.factors[0].kind, so3.factors[0].rank), (Kind::A, 1));
    let so4 = SemisimpleAlgebra::new(&[FactorSpec::So(4)]).unwrap();
    assert_eq!(so4.factors.len(), 2);
    let so5 = SemisimpleAlgebra::new(&[FactorSpec::So(5)]).unwrap();
    assert_eq!((so5.factors[0].kind, so5.factors[0].rank), (Kind::C, 2));
    let so6 = SemisimpleAlgebra::new(&[FactorSpec::So(6)]).unwrap();
    assert_eq!((so6.factors[0].kind, so6.factors[0].rank), (Kind::A, 3));
    assert!(SemisimpleAlgebra::new(&[FactorSpec::So(2)]).is_err());
    assert!(SemisimpleAlgebra::new(&[FactorSpec::So(1)]).is_err());
    assert!(SemisimpleAlgebra::new(&[FactorSpec::Sl(1)]).is_err());

    // Dimensions agree with the matrix realizations.
    for (spec, dim) in [
        (FactorSpec::So(3), 3),
        (FactorSpec::So(4), 6),
        (FactorSpec::So(5), 10),
        (FactorSpec::So(6), 15),
        (FactorSpec::So(7), 21),
        (FactorSpec::So(8), 28),
        (FactorSpec::Sl(4), 15),
        (FactorSpec::Sp(3), 21),
        (FactorSpec::G2, 14),
        (FactorSpec::F4, 52),
        (FactorSpec::E6, 78),
        (FactorSpec::E7, 133),
        (FactorSpec::E8, 248),
    ] {
        let h = SemisimpleAlgebra::new(&[spec]).unwrap();
        assert_eq!(h.algebra_dim(), dim, "{spec}");
    }
}

#[test]
fn roots_have_at_most_two_lengths_and_w_invariant_ip() {
    // Sanity on the Euclidean structure: simple reflections preserve ⟨,⟩.
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (kind, rank) in [(Kind::F4, 4), (Kind::E6, 6), (Kind::G2, 2)] {
        let rs = build_root_system(kind, rank).unwrap();
        let lengths: std::collections::BTreeSet<Rat> =
            rs.positive_roots.iter().map(|r| ip(r, r)).collect();
        assert!(lengths.len() <= 2, "{kind}");
        for _ in 0..10 {
            let y = random_chamber_point(&rs, &mut rng);
            for i in 0..rs.rank {
                let ry = rs.simple_reflection(&y, i);
                assert_eq!(
                    rho_kit::linalg::dot(&y.coords, &y.coords),
                    rho_kit::linalg::dot(&ry.coords, &ry.coords)
                );
            }
        }
    }
}

#[test]
fn point_constraint_validation() {
    let sl3 = SemisimpleAlgebra::new(&[FactorSpec::Sl(3)]).unwrap();
    assert!(Point::new(&sl3.space, vec![rat(1), rat(0), rat(0)]).is_err());
    assert!(Point::new(&sl3.space, vec![rat(1), rat(0), rat(-1)]).is_ok());
}

#[test]
fn covector_canonicalization() {
    // ε_1 and ε_1 − ⅓Σε_i agree on the trace-zero subspace of sl_3.
    let sl3 = build_root_system(Kind::A, 2).unwrap();
    let w1 = Covector::new(&sl3.space, &[rat(1), rat(0), rat(0)]);
    let w2 = Covector::new(&sl3.space, &[ratq(2, 3), ratq(-1, 3), ratq(-1, 3)]);
    assert_eq!(w1, w2);
    assert!(!Covector::new(&sl3.space, &[rat(1), rat(1), rat(1)]).coords.iter().any(|c| !c.is_zero()));
}
