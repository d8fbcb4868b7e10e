//! Double description oracle tests.

use rho_kit::cone::{cones_equal, dd_rays, primitive, ConeHRep};
use rho_kit::rat::{rat, ratq, Rat};

fn rows(v: &[&[i64]]) -> Vec<Vec<Rat>> {
    v.iter()
        .map(|r| r.iter().map(|&x| rat(x)).collect())
        .collect()
}

#[test]
fn primitive_normalization() {
    assert_eq!(primitive(&[ratq(1, 2), ratq(-3, 4)]), vec![rat(2), rat(-3)]);
    assert_eq!(primitive(&[rat(4), rat(6)]), vec![rat(2), rat(3)]);
    assert_eq!(primitive(&[rat(0), rat(0)]), vec![rat(0), rat(0)]);
}

#[test]
fn orthant_rays() {
    let c = ConeHRep::new(3, rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), vec![]).unwrap();
    let r = dd_rays(&c).unwrap();
    assert_eq!(
        r,
        rows(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])
    );
}

#[test]
fn cube_cone_cross_section() {
    // x ≥ 0, y ≥ 0, x + y ≤ 2z (homogenized square pyramid over z).
    let c = ConeHRep::new(
        3,
        rows(&[&[1, 0, 0], &[0, 1, 0], &[-1, -1, 2]]),
        vec![],
    )
    .unwrap();
    let mut r = dd_rays(&c).unwrap();
    r.sort();
    assert_eq!(r, rows(&[&[0, 0, 1], &[0, 2, 1], &[2, 0, 1]]));
}

#[test]
fn equality_cuts_dimension() {
    // Positive orthant in R³ sliced by x = y.
    let c = ConeHRep::new(
        3,
        rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
        rows(&[&[1, -1, 0]]),
    )
    .unwrap();
    let r = dd_rays(&c).unwrap();
    assert_eq!(r, rows(&[&[0, 0, 1], &[1, 1, 0]]));
}

#[test]
fn redundant_constraints_ignored() {
    let a = ConeHRep::new(
        2,
        rows(&[&[1, 0], &[0, 1], &[1, 1], &[2, 3]]),
        vec![],
    )
    .unwrap();
    let r = dd_rays(&a).unwrap();
    assert_eq!(r, rows(&[&[0, 1], &[1, 0]]));
}

#[test]
fn square_cone_four_rays() {
    // {(x,y,z) : z ≥ |x|, z ≥ |y|} has 4 extreme rays.
    let c = ConeHRep::new(
        3,
        rows(&[&[1, 0, 1], &[-1, 0, 1], &[0, 1, 1], &[0, -1, 1]]),
        vec![],
    )
    .unwrap();
    let mut r = dd_rays(&c).unwrap();
    r.sort();
    assert_eq!(
        r,
        rows(&[&[-1, -1, 1], &[-1, 1, 1], &[1, -1, 1], &[1, 1, 1]])
    );
}

#[test]
fn single_point_cone() {
    // x ≥ 0, −x ≥ 0, y ≥ 0, −y ≥ 0 → only the origin; no rays.
    let c = ConeHRep::new(2, vec![], rows(&[&[1, 0], &[0, 1]])).unwrap();
    assert_eq!(dd_rays(&c).unwrap(), Vec::<Vec<Rat>>::new());
}

#[test]
fn unpointed_rejected() {
    // Half-plane x ≥ 0 in R² contains the line y — not pointed.
    let c = ConeHRep::new(2, rows(&[&[1, 0]]), vec![]).unwrap();
    assert!(dd_rays(&c).is_err());
}

#[test]
fn cone_equality() {
    let a = ConeHRep::new(2, rows(&[&[1, 0], &[0, 1]]), vec![]).unwrap();
    let b = ConeHRep::new(2, rows(&[&[0, 1], &[1, 0], &[1, 1]]), vec![]).unwrap();
    assert!(cones_equal(&a, &b).unwrap());
    let c = ConeHRep::new(2, rows(&[&[1, 0], &[-1, 1]]), vec![]).unwrap();
    assert!(!cones_equal(&a, &c).unwrap());
    // Same rays through an equality description.
    let d = ConeHRep::new(
        2,
        rows(&[&[1, 0], &[0, 1], &[1, 1]]),
        vec![],
    )
    .unwrap();
    assert!(cones_equal(&b, &d).unwrap());
}

#[test]
fn membership() {
    let c = ConeHRep::new(2, rows(&[&[1, -1]]), rows(&[&[0, 0]])).unwrap();
    assert!(c.contains(&[rat(3), rat(2)]));
    assert!(!c.contains(&[rat(1), rat(2)]));
}
