//! Realizations of maximal split abelian subspaces `a`, root systems, Weyl
//! chambers, fundamental weights, and adjoint ρ covectors for all simple
//! types, in explicit Euclidean ε-coordinates.
//!
//! Each simple type lives in R^N with an optional list of linear constraints
//! cutting out `a` (types A, G2, E6, E7 are proper subspaces). Covectors are
//! canonicalized modulo the constraint span so equality is decidable.

use crate::linalg::{self, Matrix, Vector};
use crate::rat::{rat, ratq, Rat};
use crate::RhoError;
use num::Zero;
use std::fmt;
use std::sync::Arc;

/// Simple Lie type of one irreducible factor.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Kind {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::A => "A",
            Kind::B => "B",
            Kind::C => "C",
            Kind::D => "D",
            Kind::G2 => "G2",
            Kind::F4 => "F4",
            Kind::E6 => "E6",
            Kind::E7 => "E7",
            Kind::E8 => "E8",
        };
        write!(f, "{s}")
    }
}

/// Ambient Euclidean space R^N together with the linear constraints that cut
/// out `a`, an orthogonalized copy of the constraints (for canonical
/// projection), and a basis of `a`.
#[derive(Clone, Debug)]
pub struct AmbientSpace {
    pub dim: usize,
    pub constraints: Matrix,
    /// Orthogonalized (not normalized) constraint covectors; same span.
    ortho: Matrix,
    /// Basis of the solution space `a` = {Y : c(Y) = 0 for all constraints}.
    pub basis: Vec<Vector>,
}

impl AmbientSpace {
    pub fn new(dim: usize, constraints: Matrix) -> Self {
        for c in &constraints {
            assert_eq!(c.len(), dim);
        }
        // Gram–Schmidt without normalization keeps everything rational.
        let mut ortho: Matrix = Vec::new();
        for c in &constraints {
            let mut v = c.clone();
            for u in &ortho {
                let f = linalg::dot(&v, u) / linalg::dot(u, u);
                v = linalg::sub(&v, &linalg::scale(u, &f));
            }
            if !linalg::is_zero_vec(&v) {
                ortho.push(v);
            }
        }
        let basis = if constraints.is_empty() {
            (0..dim)
                .map(|i| {
                    let mut v = linalg::zeros(dim);
                    v[i] = rat(1);
                    v
                })
                .collect()
        } else {
            linalg::nullspace(&constraints)
        };
        AmbientSpace {
            dim,
            constraints,
            ortho,
            basis,
        }
    }

    /// Dimension of `a` itself.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Orthogonal projection of a covector modulo the constraint span; the
    /// unique representative orthogonal to every constraint.
    pub fn canonicalize(&self, coords: &[Rat]) -> Vector {
        assert_eq!(coords.len(), self.dim);
        let mut v = coords.to_vec();
        for u in &self.ortho {
            let f = linalg::dot(&v, u) / linalg::dot(u, u);
            v = linalg::sub(&v, &linalg::scale(u, &f));
        }
        v
    }

    pub fn contains_point(&self, coords: &[Rat]) -> bool {
        coords.len() == self.dim
            && self
                .constraints
                .iter()
                .all(|c| linalg::dot(c, coords).is_zero())
    }
}

/// Linear functional on `a`, stored as a canonicalized coordinate vector in
/// the ambient R^N. Two functionals agreeing on `a` have equal coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Covector {
    pub coords: Vector,
}

impl Covector {
    pub fn new(space: &AmbientSpace, coords: &[Rat]) -> Self {
        Covector {
            coords: space.canonicalize(coords),
        }
    }

    pub fn zero(dim: usize) -> Self {
        Covector {
            coords: linalg::zeros(dim),
        }
    }

    pub fn eval(&self, p: &Point) -> Rat {
        linalg::dot(&self.coords, &p.coords)
    }

    pub fn add(&self, other: &Covector) -> Covector {
        Covector {
            coords: linalg::add(&self.coords, &other.coords),
        }
    }

    pub fn sub(&self, other: &Covector) -> Covector {
        Covector {
            coords: linalg::sub(&self.coords, &other.coords),
        }
    }

    pub fn neg(&self) -> Covector {
        Covector {
            coords: linalg::neg(&self.coords),
        }
    }

    pub fn scale(&self, c: &Rat) -> Covector {
        Covector {
            coords: linalg::scale(&self.coords, c),
        }
    }

    pub fn is_zero(&self) -> bool {
        linalg::is_zero_vec(&self.coords)
    }
}

/// A point Y of `a`, in ambient coordinates (satisfies all constraints).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Point {
    pub coords: Vector,
}

impl Point {
    pub fn new(space: &AmbientSpace, coords: Vector) -> Result<Self, RhoError> {
        if !space.contains_point(&coords) {
            return Err(RhoError::InvalidInput(format!(
                "point {:?} violates the subspace constraints",
                coords.iter().map(crate::rat::format_rat).collect::<Vec<_>>()
            )));
        }
        Ok(Point { coords })
    }

    pub fn zero(dim: usize) -> Self {
        Point {
            coords: linalg::zeros(dim),
        }
    }

    pub fn add(&self, other: &Point) -> Point {
        Point {
            coords: linalg::add(&self.coords, &other.coords),
        }
    }

    pub fn scale(&self, c: &Rat) -> Point {
        Point {
            coords: linalg::scale(&self.coords, c),
        }
    }

    pub fn is_zero(&self) -> bool {
        linalg::is_zero_vec(&self.coords)
    }
}

/// Inner product of two (canonicalized) covectors, from the Euclidean
/// structure of the ε-realization.
pub fn ip(w1: &Covector, w2: &Covector) -> Rat {
    linalg::dot(&w1.coords, &w2.coords)
}

/// Root-system data of one simple factor in its ε-realization.
#[derive(Clone, Debug)]
pub struct RootSystemData {
    pub kind: Kind,
    pub rank: usize,
    pub space: AmbientSpace,
    pub simple_roots: Vec<Covector>,
    pub positive_roots: Vec<Covector>,
    pub fundamental_weights: Vec<Covector>,
    /// H-representation of the closed chamber a_+ = {Y : α_i(Y) ≥ 0}.
    pub chamber: Vec<Covector>,
    /// Points ω_j^∨ of `a` with α_i(ω_j^∨) = δ_ij; they span the chamber.
    pub fundamental_coweights: Vec<Point>,
}

fn eps(dim: usize, i: usize) -> Vector {
    let mut v = linalg::zeros(dim);
    v[i] = rat(1);
    v
}

/// Raw (un-canonicalized) candidate roots of the full system Φ, per §-style
/// ε-data. Each type lists all roots; orientation happens afterwards.
fn raw_roots(kind: Kind, rank: usize) -> (usize, Matrix, Matrix) {
    // returns (ambient dim, constraints, all roots)
    let mut roots: Matrix = Vec::new();
    match kind {
        Kind::A => {
            let n = rank + 1;
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        roots.push(linalg::sub(&eps(n, i), &eps(n, j)));
                    }
                }
            }
            (n, vec![vec![rat(1); n]], roots)
        }
        Kind::B => {
            let n = rank;
            for i in 0..n {
                for j in (i + 1)..n {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        roots.push(linalg::add(
                            &linalg::scale(&eps(n, i), &rat(si)),
                            &linalg::scale(&eps(n, j), &rat(sj)),
                        ));
                    }
                }
                roots.push(eps(n, i));
                roots.push(linalg::neg(&eps(n, i)));
            }
            (n, vec![], roots)
        }
        Kind::C => {
            let n = rank;
            for i in 0..n {
                for j in (i + 1)..n {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        roots.push(linalg::add(
                            &linalg::scale(&eps(n, i), &rat(si)),
                            &linalg::scale(&eps(n, j), &rat(sj)),
                        ));
                    }
                }
                roots.push(linalg::scale(&eps(n, i), &rat(2)));
                roots.push(linalg::scale(&eps(n, i), &rat(-2)));
            }
            (n, vec![], roots)
        }
        Kind::D => {
            let n = rank;
            for i in 0..n {
                for j in (i + 1)..n {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        roots.push(linalg::add(
                            &linalg::scale(&eps(n, i), &rat(si)),
                            &linalg::scale(&eps(n, j), &rat(sj)),
                        ));
                    }
                }
            }
            (n, vec![], roots)
        }
        Kind::G2 => {
            // a = {a_1 + a_2 + a_3 = 0} ⊂ R^3; Φ = ±(ε_i − ε_j) ∪ ±(2ε_i − ε_j − ε_k).
            let n = 3;
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        roots.push(linalg::sub(&eps(n, i), &eps(n, j)));
                        let k = 3 - i - j;
                        let mut v = linalg::scale(&eps(n, i), &rat(2));
                        v = linalg::sub(&v, &eps(n, j));
                        v = linalg::sub(&v, &eps(n, k));
                        roots.push(linalg::neg(&v));
                        roots.push(v);
                    }
                }
            }
            (n, vec![vec![rat(1); n]], roots)
        }
        Kind::F4 => {
            let n = 4;
            for i in 0..n {
                for j in (i + 1)..n {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        roots.push(linalg::add(
                            &linalg::scale(&eps(n, i), &rat(si)),
                            &linalg::scale(&eps(n, j), &rat(sj)),
                        ));
                    }
                }
                roots.push(eps(n, i));
                roots.push(linalg::neg(&eps(n, i)));
            }
            for mask in 0..16u32 {
                let v: Vector = (0..4)
                    .map(|i| {
                        if mask >> i & 1 == 1 {
                            ratq(-1, 2)
                        } else {
                            ratq(1, 2)
                        }
                    })
                    .collect();
                roots.push(v);
            }
            (n, vec![], roots)
        }
        Kind::E6 => {
            // a ⊂ R^8, cut out by two constraints (see below).
            let n = 8;
            for i in 0..5 {
                for j in (i + 1)..5 {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        roots.push(linalg::add(
                            &linalg::scale(&eps(n, i), &rat(si)),
                            &linalg::scale(&eps(n, j), &rat(sj)),
                        ));
                    }
                }
            }
            // ±½(ε_8 − ε_7 − ε_6 + Σ_{i≤5} (−1)^{ν_i} ε_i), Σν_i even.
            for mask in 0..32u32 {
                if mask.count_ones() % 2 != 0 {
                    continue;
                }
                let mut v = linalg::zeros(n);
                v[7] = ratq(1, 2);
                v[6] = ratq(-1, 2);
                v[5] = ratq(-1, 2);
                for i in 0..5 {
                    v[i] = if mask >> i & 1 == 1 {
                        ratq(-1, 2)
                    } else {
                        ratq(1, 2)
                    };
                }
                roots.push(linalg::neg(&v));
                roots.push(v);
            }
            // Constraints cutting out the span of the roots: ε_6 = ε_7 = −ε_8
            // on a, so every root above is orthogonal to the constraint span
            // and the induced metric gives the standard E6 Cartan matrix.
            let c1 = linalg::sub(&eps(n, 5), &eps(n, 6));
            let c2 = linalg::add(&eps(n, 6), &eps(n, 7));
            (n, vec![c1, c2], roots)
        }
        Kind::E7 => {
            // a ⊂ R^8, cut out by one constraint (see below).
            let n = 8;
            for i in 0..6 {
                for j in (i + 1)..6 {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        roots.push(linalg::add(
                            &linalg::scale(&eps(n, i), &rat(si)),
                            &linalg::scale(&eps(n, j), &rat(sj)),
                        ));
                    }
                }
            }
            let e78 = linalg::sub(&eps(n, 6), &eps(n, 7));
            roots.push(e78.clone());
            roots.push(linalg::neg(&e78));
            // ±½(ε_7 − ε_8 + Σ_{i≤6} (−1)^{ν_i} ε_i), Σν_i odd.
            for mask in 0..64u32 {
                if mask.count_ones() % 2 != 1 {
                    continue;
                }
                let mut v = linalg::zeros(n);
                v[6] = ratq(1, 2);
                v[7] = ratq(-1, 2);
                for i in 0..6 {
                    v[i] = if mask >> i & 1 == 1 {
                        ratq(-1, 2)
                    } else {
                        ratq(1, 2)
                    };
                }
                roots.push(linalg::neg(&v));
                roots.push(v);
            }
            // Root span is {ε_7 = −ε_8}; same normalization as for E6.
            let c1 = linalg::add(&eps(n, 6), &eps(n, 7));
            (n, vec![c1], roots)
        }
        Kind::E8 => {
            let n = 8;
            for i in 0..8 {
                for j in (i + 1)..8 {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        roots.push(linalg::add(
                            &linalg::scale(&eps(n, i), &rat(si)),
                            &linalg::scale(&eps(n, j), &rat(sj)),
                        ));
                    }
                }
            }
            // ½ Σ (−1)^{ν_i} ε_i, Σν_i even.
            for mask in 0..256u32 {
                if mask.count_ones() % 2 != 0 {
                    continue;
                }
                let v: Vector = (0..8)
                    .map(|i| {
                        if mask >> i & 1 == 1 {
                            ratq(-1, 2)
                        } else {
                            ratq(1, 2)
                        }
                    })
                    .collect();
                roots.push(v);
            }
            (n, vec![], roots)
        }
    }
}

/// Simple roots in raw ε-coordinates, per the §5.1-style data blocks.
fn raw_simple_roots(kind: Kind, rank: usize, dim: usize) -> Matrix {
    let mut simples: Matrix = Vec::new();
    let step = |i: usize| linalg::sub(&eps(dim, i), &eps(dim, i + 1));
    match kind {
        Kind::A => {
            for i in 0..rank {
                simples.push(step(i));
            }
        }
        Kind::B => {
            for i in 0..rank - 1 {
                simples.push(step(i));
            }
            simples.push(eps(dim, rank - 1));
        }
        Kind::C => {
            for i in 0..rank - 1 {
                simples.push(step(i));
            }
            simples.push(linalg::scale(&eps(dim, rank - 1), &rat(2)));
        }
        Kind::D => {
            for i in 0..rank - 1 {
                simples.push(step(i));
            }
            simples.push(linalg::add(&eps(dim, rank - 2), &eps(dim, rank - 1)));
        }
        Kind::G2 => {
            // α_1 = ε_1 − ε_2, α_2 = −2ε_1 + ε_2 + ε_3; chamber a_3 ≥ 0 ≥ a_1 ≥ a_2.
            simples.push(step(0));
            let mut a2 = linalg::scale(&eps(dim, 0), &rat(-2));
            a2 = linalg::add(&a2, &eps(dim, 1));
            a2 = linalg::add(&a2, &eps(dim, 2));
            simples.push(a2);
        }
        Kind::F4 => {
            // α_1 = ε_2 − ε_3, α_2 = ε_3 − ε_4, α_3 = ε_4, α_4 = ½(ε_1−ε_2−ε_3−ε_4).
            simples.push(step(1));
            simples.push(step(2));
            simples.push(eps(dim, 3));
            let mut a4 = linalg::scale(&eps(dim, 0), &ratq(1, 2));
            for i in 1..4 {
                a4 = linalg::sub(&a4, &linalg::scale(&eps(dim, i), &ratq(1, 2)));
            }
            simples.push(a4);
        }
        Kind::E6 | Kind::E7 | Kind::E8 => {
            // α_1 = ½(ε_1 + ε_8) − ½(ε_2+…+ε_7), α_2 = ε_1 + ε_2,
            // α_i = ε_{i−1} − ε_{i−2} for 3 ≤ i ≤ rank.
            let mut a1 = linalg::add(&eps(dim, 0), &eps(dim, 7));
            a1 = linalg::scale(&a1, &ratq(1, 2));
            for i in 1..7 {
                a1 = linalg::sub(&a1, &linalg::scale(&eps(dim, i), &ratq(1, 2)));
            }
            simples.push(a1);
            simples.push(linalg::add(&eps(dim, 0), &eps(dim, 1)));
            for i in 3..=rank {
                simples.push(linalg::sub(&eps(dim, i - 2), &eps(dim, i - 3)));
            }
        }
    }
    simples
}

fn expected_positive_count(kind: Kind, rank: usize) -> usize {
    match kind {
        Kind::A => rank * (rank + 1) / 2,
        Kind::B | Kind::C => rank * rank,
        Kind::D => rank * (rank - 1),
        Kind::G2 => 6,
        Kind::F4 => 24,
        Kind::E6 => 36,
        Kind::E7 => 63,
        Kind::E8 => 120,
    }
}

/// Builds the complete root-system data block for one simple type.
pub fn build_root_system(kind: Kind, rank: usize) -> Result<RootSystemData, RhoError> {
    let valid = match kind {
        Kind::A => rank >= 1,
        Kind::B => rank >= 2,
        Kind::C => rank >= 1,
        Kind::D => rank >= 3,
        Kind::G2 => rank == 2,
        Kind::F4 => rank == 4,
        Kind::E6 => rank == 6,
        Kind::E7 => rank == 7,
        Kind::E8 => rank == 8,
    };
    if !valid {
        return Err(RhoError::InvalidInput(format!(
            "invalid simple type {kind}{rank}"
        )));
    }
    let (dim, constraints, roots_raw) = raw_roots(kind, rank);
    let space = AmbientSpace::new(dim, constraints);
    let simple_roots: Vec<Covector> = raw_simple_roots(kind, rank, dim)
        .iter()
        .map(|v| Covector::new(&space, v))
        .collect();
    assert_eq!(simple_roots.len(), rank);
    assert_eq!(space.rank(), rank, "{kind}{rank}: rank/constraint mismatch");

    // Orient: keep the roots whose simple-root expansion is nonnegative.
    let mut all: std::collections::BTreeSet<Covector> = std::collections::BTreeSet::new();
    for r in &roots_raw {
        let c = Covector::new(&space, r);
        assert!(!c.is_zero(), "{kind}{rank}: root restricts to zero");
        all.insert(c);
    }
    let expand_matrix: Matrix = (0..dim)
        .map(|row| {
            simple_roots
                .iter()
                .map(|s| s.coords[row].clone())
                .collect()
        })
        .collect();
    let mut positive_roots = Vec::new();
    for r in &all {
        let x = linalg::solve(&expand_matrix, &r.coords)
            .expect("root outside the simple-root span");
        let nonneg = x.iter().all(|c| !num::Signed::is_negative(c));
        let nonpos = x.iter().all(|c| !num::Signed::is_positive(c));
        assert!(
            nonneg || nonpos,
            "{kind}{rank}: root with mixed simple-root expansion"
        );
        assert!(x.iter().all(crate::rat::is_integer));
        if nonneg {
            positive_roots.push(r.clone());
        }
    }
    assert_eq!(
        positive_roots.len(),
        expected_positive_count(kind, rank),
        "{kind}{rank}: wrong number of positive roots"
    );

    // Fundamental weights: ϖ_k with ⟨ϖ_k, α_i^∨⟩ = δ_ik, solved inside the
    // span of the simple roots. Coefficient system: Cartan-pairing matrix.
    let gram: Matrix = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| ip(&simple_roots[i], &simple_roots[j]))
                .collect()
        })
        .collect();
    let cartan_t: Matrix = (0..rank)
        .map(|i| {
            // row i: pairing of each α_j against α_i^∨
            (0..rank)
                .map(|j| rat(2) * &gram[i][j] / &gram[i][i])
                .collect()
        })
        .collect();
    let mut fundamental_weights = Vec::new();
    let mut fundamental_coweights = Vec::new();
    for k in 0..rank {
        let mut e_k = linalg::zeros(rank);
        e_k[k] = rat(1);
        let x = linalg::solve(&cartan_t, &e_k).expect("Cartan system solvable");
        let mut w = Covector::zero(dim);
        for (j, c) in x.iter().enumerate() {
            w = w.add(&simple_roots[j].scale(c));
        }
        fundamental_weights.push(w);
        let y = linalg::solve(&gram, &e_k).expect("Gram system solvable");
        let mut p = linalg::zeros(dim);
        for (j, c) in y.iter().enumerate() {
            p = linalg::add(&p, &linalg::scale(&simple_roots[j].coords, c));
        }
        debug_assert!(space.contains_point(&p));
        fundamental_coweights.push(Point { coords: p });
    }

    let chamber = simple_roots.clone();
    Ok(RootSystemData {
        kind,
        rank,
        space,
        simple_roots,
        positive_roots,
        fundamental_weights,
        chamber,
        fundamental_coweights,
    })
}

impl RootSystemData {
    /// Coroot α^∨ = 2α/(α,α) as a covector.
    pub fn coroot(&self, alpha: &Covector) -> Covector {
        let n = ip(alpha, alpha);
        alpha.scale(&(rat(2) / n))
    }

    /// The coroot vector of α as a point of `a` (reflection direction).
    pub fn coroot_point(&self, alpha: &Covector) -> Point {
        let n = ip(alpha, alpha);
        Point {
            coords: linalg::scale(&alpha.coords, &(rat(2) / n)),
        }
    }

    /// Pairing ⟨w, α^∨⟩.
    pub fn pair_coroot(&self, w: &Covector, alpha: &Covector) -> Rat {
        rat(2) * ip(w, alpha) / ip(alpha, alpha)
    }

    /// Simple reflection s_i applied to a point.
    pub fn simple_reflection(&self, y: &Point, i: usize) -> Point {
        let a = &self.simple_roots[i];
        let v = a.eval(y);
        y.add(&self.coroot_point(a).scale(&-v))
    }

    /// Simple reflection s_i applied to a covector (weight).
    pub fn simple_reflection_cov(&self, w: &Covector, i: usize) -> Covector {
        let a = &self.simple_roots[i];
        let c = self.pair_coroot(w, a);
        w.sub(&a.scale(&c))
    }

    /// The unique chamber representative of the Weyl orbit of `y`.
    pub fn dominant_representative(&self, y: &Point) -> Point {
        let mut y = y.clone();
        loop {
            let mut moved = false;
            for i in 0..self.rank {
                if num::Signed::is_negative(&self.simple_roots[i].eval(&y)) {
                    y = self.simple_reflection(&y, i);
                    moved = true;
                }
            }
            if !moved {
                return y;
            }
        }
    }

    /// The chamber representative of the Weyl orbit of a weight.
    pub fn dominant_representative_cov(&self, w: &Covector) -> Covector {
        let mut w = w.clone();
        loop {
            let mut moved = false;
            for i in 0..self.rank {
                if num::Signed::is_negative(&self.pair_coroot(&w, &self.simple_roots[i])) {
                    w = self.simple_reflection_cov(&w, i);
                    moved = true;
                }
            }
            if !moved {
                return w;
            }
        }
    }

    /// Expands a covector in the simple-root basis (exact); `None` if it is
    /// outside the span.
    pub fn expand_in_simple_roots(&self, w: &Covector) -> Option<Vector> {
        let m: Matrix = (0..self.space.dim)
            .map(|row| {
                self.simple_roots
                    .iter()
                    .map(|s| s.coords[row].clone())
                    .collect()
            })
            .collect();
        let x = linalg::solve(&m, &w.coords)?;
        // solve() finds a preimage of the projection; verify exactly.
        let mut back = Covector::zero(self.space.dim);
        for (j, c) in x.iter().enumerate() {
            back = back.add(&self.simple_roots[j].scale(c));
        }
        (back == *w).then_some(x)
    }

    /// Sum of all positive roots (the adjoint ρ covector of this factor).
    pub fn rho(&self) -> Covector {
        let mut r = Covector::zero(self.space.dim);
        for a in &self.positive_roots {
            r = r.add(a);
        }
        r
    }

    pub fn chamber_contains(&self, y: &Point) -> bool {
        self.chamber
            .iter()
            .all(|a| !num::Signed::is_negative(&a.eval(y)))
    }

    /// Complex dimension of the simple Lie algebra of this type.
    pub fn algebra_dim(&self) -> usize {
        2 * self.positive_roots.len() + self.rank
    }
}

/// One user-level factor of a semisimple algebra, e.g. `sl:4`, `so:7`, `sp:2`,
/// `g2`. Small orthogonal ranks are normalized to their isomorphic images.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum FactorSpec {
    Sl(usize),
    So(usize),
    Sp(usize),
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl fmt::Display for FactorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorSpec::Sl(n) => write!(f, "sl:{n}"),
            FactorSpec::So(n) => write!(f, "so:{n}"),
            FactorSpec::Sp(n) => write!(f, "sp:{n}"),
            FactorSpec::G2 => write!(f, "g2"),
            FactorSpec::F4 => write!(f, "f4"),
            FactorSpec::E6 => write!(f, "e6"),
            FactorSpec::E7 => write!(f, "e7"),
            FactorSpec::E8 => write!(f, "e8"),
        }
    }
}

/// Resolution of one user factor into internal simple factors, plus the
/// coefficient data of its defining ("std") module when one exists.
#[derive(Clone, Debug)]
pub struct UserFactor {
    pub spec: FactorSpec,
    /// Indices into `SemisimpleAlgebra::factors`.
    pub internal: Vec<usize>,
    /// The std module as a joint highest weight: per internal factor of this
    /// user factor, the ϖ-coefficient vector. `None` for exceptional types.
    pub std_coeffs: Option<Vec<Vec<u64>>>,
}

/// A semisimple algebra h = direct sum of simple factors, with `a` realized
/// as the direct sum of the factor subspaces inside a concatenated R^N.
#[derive(Clone, Debug)]
pub struct SemisimpleAlgebra {
    pub factors: Vec<RootSystemData>,
    pub offsets: Vec<usize>,
    pub space: AmbientSpace,
    pub user_factors: Vec<UserFactor>,
}

fn normalize_factor(spec: FactorSpec) -> Result<(Vec<(Kind, usize)>, Option<Vec<Vec<u64>>>), RhoError> {
    let std1 = |r: usize| {
        let mut v = vec![0u64; r];
        v[0] = 1;
        v
    };
    match spec {
        FactorSpec::Sl(n) if n >= 2 => Ok((vec![(Kind::A, n - 1)], Some(vec![std1(n - 1)]))),
        FactorSpec::Sl(n) => Err(RhoError::InvalidInput(format!(
            "sl:{n} is not semisimple; use triv:{n} in the module expression"
        ))),
        FactorSpec::Sp(n) if n >= 1 => Ok((vec![(Kind::C, n)], Some(vec![std1(n)]))),
        FactorSpec::Sp(n) => Err(RhoError::InvalidInput(format!("invalid factor sp:{n}"))),
        FactorSpec::So(n) => match n {
            0 | 1 | 2 => Err(RhoError::InvalidInput(format!(
                "so:{n} is not semisimple; use triv:{n} in the module expression"
            ))),
            3 => Ok((vec![(Kind::A, 1)], Some(vec![vec![2]]))),
            4 => Ok((
                vec![(Kind::A, 1), (Kind::A, 1)],
                Some(vec![vec![1], vec![1]]),
            )),
            5 => Ok((vec![(Kind::C, 2)], Some(vec![vec![0, 1]]))),
            6 => Ok((vec![(Kind::A, 3)], Some(vec![vec![0, 1, 0]]))),
            _ => {
                if n % 2 == 1 {
                    Ok((vec![(Kind::B, n / 2)], Some(vec![std1(n / 2)])))
                } else {
                    Ok((vec![(Kind::D, n / 2)], Some(vec![std1(n / 2)])))
                }
            }
        },
        FactorSpec::G2 => Ok((vec![(Kind::G2, 2)], None)),
        FactorSpec::F4 => Ok((vec![(Kind::F4, 4)], None)),
        FactorSpec::E6 => Ok((vec![(Kind::E6, 6)], None)),
        FactorSpec::E7 => Ok((vec![(Kind::E7, 7)], None)),
        FactorSpec::E8 => Ok((vec![(Kind::E8, 8)], None)),
    }
}

impl SemisimpleAlgebra {
    pub fn new(specs: &[FactorSpec]) -> Result<Arc<Self>, RhoError> {
        if specs.is_empty() {
            return Err(RhoError::InvalidInput(
                "a semisimple algebra needs at least one factor".into(),
            ));
        }
        let mut factors = Vec::new();
        let mut user_factors = Vec::new();
        for &spec in specs {
            let (kinds, std_coeffs) = normalize_factor(spec)?;
            let mut internal = Vec::new();
            for (kind, rank) in kinds {
                internal.push(factors.len());
                factors.push(build_root_system(kind, rank)?);
            }
            user_factors.push(UserFactor {
                spec,
                internal,
                std_coeffs,
            });
        }
        let mut offsets = Vec::new();
        let mut dim = 0;
        let mut constraints: Matrix = Vec::new();
        for f in &factors {
            offsets.push(dim);
            for c in &f.space.constraints {
                let mut row = linalg::zeros(dim);
                row.extend(c.iter().cloned());
                constraints.push(row);
            }
            dim += f.space.dim;
        }
        for c in &mut constraints {
            c.resize(dim, Rat::zero());
        }
        let space = AmbientSpace::new(dim, constraints);
        Ok(Arc::new(SemisimpleAlgebra {
            factors,
            offsets,
            space,
            user_factors,
        }))
    }

    /// Builds from internal simple types directly (no user-factor sugar).
    pub fn from_internal(kinds: &[(Kind, usize)]) -> Result<Arc<Self>, RhoError> {
        let specs: Vec<FactorSpec> = kinds
            .iter()
            .map(|&(k, r)| match k {
                Kind::A => FactorSpec::Sl(r + 1),
                Kind::B => FactorSpec::So(2 * r + 1),
                Kind::C => FactorSpec::Sp(r),
                Kind::D => FactorSpec::So(2 * r),
                Kind::G2 => FactorSpec::G2,
                Kind::F4 => FactorSpec::F4,
                Kind::E6 => FactorSpec::E6,
                Kind::E7 => FactorSpec::E7,
                Kind::E8 => FactorSpec::E8,
            })
            .collect();
        SemisimpleAlgebra::new(&specs)
    }

    pub fn lift_covector(&self, factor: usize, w: &Covector) -> Covector {
        let off = self.offsets[factor];
        let mut coords = linalg::zeros(self.space.dim);
        coords[off..off + w.coords.len()].clone_from_slice(&w.coords);
        Covector { coords }
    }

    pub fn lift_point(&self, factor: usize, p: &Point) -> Point {
        let off = self.offsets[factor];
        let mut coords = linalg::zeros(self.space.dim);
        coords[off..off + p.coords.len()].clone_from_slice(&p.coords);
        Point { coords }
    }

    /// Restricts a point of the joint space to one factor's coordinates.
    pub fn project_point(&self, factor: usize, p: &Point) -> Point {
        let off = self.offsets[factor];
        let d = self.factors[factor].space.dim;
        Point {
            coords: p.coords[off..off + d].to_vec(),
        }
    }

    /// All simple roots, lifted, with their (factor, local index) origin.
    pub fn simple_roots(&self) -> Vec<(usize, usize, Covector)> {
        let mut out = Vec::new();
        for (fi, f) in self.factors.iter().enumerate() {
            for (i, a) in f.simple_roots.iter().enumerate() {
                out.push((fi, i, self.lift_covector(fi, a)));
            }
        }
        out
    }

    /// Chamber H-representation on the joint space.
    pub fn chamber(&self) -> Vec<Covector> {
        self.simple_roots().into_iter().map(|(_, _, a)| a).collect()
    }

    pub fn chamber_contains(&self, y: &Point) -> bool {
        self.chamber()
            .iter()
            .all(|a| !num::Signed::is_negative(&a.eval(y)))
    }

    /// Sum of all positive roots over all factors.
    pub fn rho_adjoint_covector(&self) -> Covector {
        let mut r = Covector::zero(self.space.dim);
        for (fi, f) in self.factors.iter().enumerate() {
            r = r.add(&self.lift_covector(fi, &f.rho()));
        }
        r
    }

    /// Joint chamber representative (factorwise Weyl orbit walk).
    pub fn dominant_representative(&self, y: &Point) -> Point {
        let mut coords = linalg::zeros(self.space.dim);
        for (fi, f) in self.factors.iter().enumerate() {
            let local = self.project_point(fi, y);
            let dom = f.dominant_representative(&local);
            let off = self.offsets[fi];
            coords[off..off + dom.coords.len()].clone_from_slice(&dom.coords);
        }
        Point { coords }
    }

    pub fn total_rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }

    /// Complex dimension of the semisimple algebra.
    pub fn algebra_dim(&self) -> usize {
        self.factors.iter().map(|f| f.algebra_dim()).sum()
    }

    /// Fundamental coweights of all factors, lifted; they generate the joint
    /// chamber as a simplicial cone.
    pub fn fundamental_coweights(&self) -> Vec<Point> {
        let mut out = Vec::new();
        for (fi, f) in self.factors.iter().enumerate() {
            for w in &f.fundamental_coweights {
                out.push(self.lift_point(fi, w));
            }
        }
        out
    }

    pub fn describe(&self) -> String {
        self.user_factors
            .iter()
            .map(|u| u.spec.to_string())
            .collect::<Vec<_>>()
            .join("+")
    }
}
