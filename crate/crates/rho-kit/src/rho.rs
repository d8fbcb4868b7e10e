//! The ρ-engine: evaluate ρ_V, build the convex piecewise-linear difference
//! D = ρ_g − 2ρ_h on the closed positive chamber, decide the trichotomy by
//! exact linear programming, and extract witness cones.

use crate::algebra::{Covector, Point, SemisimpleAlgebra};
use crate::cone::{dd_rays, primitive, ConeHRep};
use crate::embedding::{ambient_weight_multiset, EmbeddingSpec};
use crate::linalg;
use crate::lp::{minimize_with_nonneg, Constraint, LpResult, Rel};
use crate::rat::{rat, ratq, Rat};
use crate::weights::WeightMultiset;
use crate::RhoError;
use num::{Signed, Zero};
use std::sync::Arc;

/// ρ_V(Y) = ½ Σ m·|w(Y)|.
pub fn rho_eval(m: &WeightMultiset, y: &Point) -> Rat {
    let mut s = Rat::zero();
    for (w, mult) in &m.entries {
        s += rat(*mult as i64) * w.eval(y).abs();
    }
    s / rat(2)
}

/// D(Y) = Σ c_i·|w_i(Y)| + ℓ(Y), convex and positively homogeneous on the
/// closed chamber of h.
#[derive(Clone, Debug)]
pub struct PLDifference {
    pub h: Arc<SemisimpleAlgebra>,
    /// (covector, positive coefficient); only one of each ± pair is kept.
    pub abs_terms: Vec<(Covector, Rat)>,
    pub linear_term: Covector,
}

impl PLDifference {
    pub fn eval(&self, y: &Point) -> Rat {
        let mut s = self.linear_term.eval(y);
        for (w, c) in &self.abs_terms {
            s += c * w.eval(y).abs();
        }
        s
    }
}

/// D = ρ_g − 2ρ_h as a PLDifference: abs terms from the ambient weight
/// multiset (± pairs merged), linear term −2·(sum of positive roots of h).
pub fn difference_function(spec: &EmbeddingSpec) -> Result<PLDifference, RhoError> {
    let m = ambient_weight_multiset(spec)?;
    let mut abs_terms: Vec<(Covector, Rat)> = Vec::new();
    let mut seen: std::collections::BTreeSet<Covector> = std::collections::BTreeSet::new();
    for (w, mult) in &m.entries {
        if w.is_zero() || seen.contains(w) {
            continue;
        }
        let nw = w.neg();
        let paired = m.entries.get(&nw) == Some(mult);
        if !paired {
            return Err(RhoError::Internal(
                "ambient weight multiset is not negation-stable".into(),
            ));
        }
        seen.insert(w.clone());
        seen.insert(nw);
        // ½(m|w| + m|−w|) = m|w|.
        abs_terms.push((w.clone(), rat(*mult as i64)));
    }
    // Merge proportional terms: c·|k·w| = (c·|k|)·|w|.
    let mut merged: Vec<(Covector, Rat)> = Vec::new();
    for (w, c) in abs_terms {
        let dir_coords = primitive(&w.coords);
        // Canonical orientation: first nonzero entry positive.
        let flip = dir_coords
            .iter()
            .find(|x| !x.is_zero())
            .is_some_and(|x| x.is_negative());
        let dir_coords = if flip {
            linalg::neg(&dir_coords)
        } else {
            dir_coords
        };
        let j = dir_coords.iter().position(|x| !x.is_zero()).unwrap();
        let scale = (&w.coords[j] / &dir_coords[j]).abs();
        let dir = Covector { coords: dir_coords };
        if let Some(e) = merged.iter_mut().find(|(v, _)| *v == dir) {
            e.1 += c * &scale;
        } else {
            merged.push((dir, c * &scale));
        }
    }
    let abs_terms = merged;
    let linear_term = spec.h.rho_adjoint_covector().scale(&rat(-2));
    Ok(PLDifference {
        h: spec.h.clone(),
        abs_terms,
        linear_term,
    })
}

/// Coordinate bridge: covector as a row over the basis of a.
fn cov_row(h: &SemisimpleAlgebra, w: &Covector) -> Vec<Rat> {
    h.space
        .basis
        .iter()
        .map(|b| linalg::dot(&w.coords, b))
        .collect()
}

fn point_from_z(h: &SemisimpleAlgebra, z: &[Rat]) -> Point {
    let mut coords = linalg::zeros(h.space.dim);
    for (j, b) in h.space.basis.iter().enumerate() {
        coords = linalg::add(&coords, &linalg::scale(b, &z[j]));
    }
    Point { coords }
}

/// The slice functional Σ_i α_i over all simple roots of h, as a z-row.
fn slice_row(h: &SemisimpleAlgebra) -> Vec<Rat> {
    let mut s = Covector::zero(h.space.dim);
    for a in h.chamber() {
        s = s.add(&a);
    }
    cov_row(h, &s)
}

/// The LP feasible region {(z, t) : t_i ≥ ±w_i(z), chamber, slice = 1}, plus
/// the objective row Σ c_i t_i + ℓ(z).
fn slice_lp(d: &PLDifference) -> (Vec<Rat>, Vec<Constraint>) {
    let h = &d.h;
    let r = h.space.rank();
    let k = d.abs_terms.len();
    let nv = r + k;
    let pad = |row: &[Rat]| -> Vec<Rat> {
        let mut v = row.to_vec();
        v.resize(nv, Rat::zero());
        v
    };
    let mut cons: Vec<Constraint> = Vec::new();
    for (i, (w, _)) in d.abs_terms.iter().enumerate() {
        let row = cov_row(h, w);
        // t_i − w(z) ≥ 0 and t_i + w(z) ≥ 0.
        for sign in [1i64, -1] {
            let mut v = pad(&linalg::scale(&row, &rat(-sign)));
            v[r + i] = rat(1);
            cons.push(Constraint::new(v, Rel::Ge, rat(0)));
        }
    }
    for a in h.chamber() {
        cons.push(Constraint::new(pad(&cov_row(h, &a)), Rel::Ge, rat(0)));
    }
    cons.push(Constraint::new(pad(&slice_row(h)), Rel::Eq, rat(1)));
    let mut obj = pad(&cov_row(h, &d.linear_term));
    for (i, (_, c)) in d.abs_terms.iter().enumerate() {
        obj[r + i] = c.clone();
    }
    (obj, cons)
}

/// Variable sign flags for the slice LP: the z coordinates are free, the t
/// variables are structurally nonnegative (t_i ≥ |w_i(z)| ≥ 0).
fn t_nonneg(d: &PLDifference) -> Vec<bool> {
    let r = d.h.space.rank();
    let mut v = vec![false; r];
    v.extend(std::iter::repeat(true).take(d.abs_terms.len()));
    v
}

/// Exact minimum of D over the compact slice {Y ∈ a_+ : Σα_i(Y) = 1}, with a
/// minimizer.
pub fn min_over_slice(d: &PLDifference) -> Result<(Rat, Point), RhoError> {
    let (obj, cons) = slice_lp(d);
    match minimize_with_nonneg(&obj, &cons, &t_nonneg(d))? {
        LpResult::Optimal { value, point } => {
            let r = d.h.space.rank();
            let y = point_from_z(&d.h, &point[..r]);
            debug_assert_eq!(d.eval(&y), value);
            Ok((value, y))
        }
        other => Err(RhoError::Internal(format!(
            "slice LP must be bounded and feasible, got {other:?}"
        ))),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Relation {
    Ge,
    Eq,
}

/// The witness set {Y ∈ a_+ : D(Y) = 0}: a convex polyhedral cone, returned
/// with primitive integer ray generators and an H-representation.
#[derive(Clone, Debug)]
pub struct WitnessCone {
    pub rays: Vec<Point>,
    pub hrep: Vec<(Covector, Relation)>,
}

impl WitnessCone {
    /// H-representation as a coordinate cone over the basis of a.
    pub fn cone_hrep(&self, h: &SemisimpleAlgebra) -> ConeHRep {
        let mut ineqs = Vec::new();
        let mut eqs = Vec::new();
        for (w, rel) in &self.hrep {
            let row = cov_row(h, w);
            match rel {
                Relation::Ge => ineqs.push(row),
                Relation::Eq => eqs.push(row),
            }
        }
        ConeHRep {
            dim: h.space.rank(),
            ineqs,
            eqs,
        }
    }

    pub fn is_full_chamber(&self, h: &SemisimpleAlgebra) -> bool {
        let chamber = ConeHRep {
            dim: h.space.rank(),
            ineqs: h.chamber().iter().map(|a| cov_row(h, a)).collect(),
            eqs: vec![],
        };
        crate::cone::cones_equal(&self.cone_hrep(h), &chamber).unwrap_or(false)
    }
}

#[derive(Clone, Debug)]
pub enum VerdictKind {
    NotDominated,
    DominatedWithWitness(WitnessCone),
    StrictlyDominated,
}

/// Trichotomy outcome: sign of the exact minimum of D over the slice, plus a
/// minimizer (a negativity certificate when NotDominated).
#[derive(Clone, Debug)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub exact_min: Rat,
    pub minimizer: Point,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Trichotomy {
    NotDominated,
    Dominated,
    StrictlyDominated,
}

impl Verdict {
    pub fn trichotomy(&self) -> Trichotomy {
        match self.kind {
            VerdictKind::NotDominated => Trichotomy::NotDominated,
            VerdictKind::DominatedWithWitness(_) => Trichotomy::Dominated,
            VerdictKind::StrictlyDominated => Trichotomy::StrictlyDominated,
        }
    }
}

pub fn decide(spec: &EmbeddingSpec) -> Result<Verdict, RhoError> {
    let d = difference_function(spec)?;
    decide_difference(&d)
}

/// The trichotomy alone (a single LP), skipping witness-cone extraction.
pub fn trichotomy_of(spec: &EmbeddingSpec) -> Result<Trichotomy, RhoError> {
    let d = difference_function(spec)?;
    let (min, _) = min_over_slice(&d)?;
    Ok(if min.is_negative() {
        Trichotomy::NotDominated
    } else if min.is_zero() {
        Trichotomy::Dominated
    } else {
        Trichotomy::StrictlyDominated
    })
}

pub fn decide_difference(d: &PLDifference) -> Result<Verdict, RhoError> {
    let (min, y) = min_over_slice(d)?;
    let kind = if min.is_negative() {
        VerdictKind::NotDominated
    } else if min.is_zero() {
        VerdictKind::DominatedWithWitness(witness_cone(d)?)
    } else {
        VerdictKind::StrictlyDominated
    };
    Ok(Verdict {
        kind,
        exact_min: min,
        minimizer: y,
    })
}

/// Compute {Y ∈ a_+ : D(Y) = 0} for D with min 0. Since D ≥ 0 is convex and
/// vanishes on a convex set, each |w_i| is linear there, i.e. each w_i has a
/// constant sign s_i on the witness set; the signs are found by linear
/// programs over the optimal face, and the cone is then cut out by
/// { s_i·w_i ≥ 0 } ∩ { Σ c_i·s_i·w_i + ℓ = 0 } inside the chamber.
pub fn witness_cone(d: &PLDifference) -> Result<WitnessCone, RhoError> {
    let h = &d.h;
    let r = h.space.rank();
    let (min, _) = min_over_slice(d)?;
    if !min.is_zero() {
        return Err(RhoError::InvalidInput(
            "witness_cone requires min_over_slice = 0".into(),
        ));
    }
    let (obj, mut cons) = slice_lp(d);
    // Restrict to the optimal face: objective = 0.
    cons.push(Constraint::new(obj, Rel::Eq, rat(0)));
    let nv = r + d.abs_terms.len();

    let mut signs: Vec<i64> = Vec::new();
    for (w, _) in &d.abs_terms {
        let mut row = cov_row(h, w);
        row.resize(nv, Rat::zero());
        let lo = match minimize_with_nonneg(&row, &cons, &t_nonneg(d))? {
            LpResult::Optimal { value, .. } => value,
            LpResult::Infeasible => {
                return Err(RhoError::InvalidInput(
                    "witness_cone requires min_over_slice = 0".into(),
                ))
            }
            LpResult::Unbounded => {
                return Err(RhoError::Internal("optimal face is compact".into()))
            }
        };
        if !lo.is_negative() {
            signs.push(1);
            continue;
        }
        let hi = match minimize_with_nonneg(&linalg::neg(&row), &cons, &t_nonneg(d))? {
            LpResult::Optimal { value, .. } => -value,
            other => return Err(RhoError::Internal(format!("sign LP: {other:?}"))),
        };
        if !hi.is_positive() {
            signs.push(-1);
        } else {
            return Err(RhoError::Internal(
                "abs term changes sign on the witness set, contradicting convexity".into(),
            ));
        }
    }

    // H-representation of the cone.
    let mut hrep: Vec<(Covector, Relation)> = Vec::new();
    for a in h.chamber() {
        hrep.push((a, Relation::Ge));
    }
    let mut lin = d.linear_term.clone();
    for ((w, c), &s) in d.abs_terms.iter().zip(&signs) {
        let sw = w.scale(&rat(s));
        lin = lin.add(&sw.scale(c));
        if !hrep.iter().any(|(v, _)| *v == sw) {
            hrep.push((sw, Relation::Ge));
        }
    }
    hrep.push((lin, Relation::Eq));

    let cone = WitnessCone { rays: Vec::new(), hrep };
    let zrays = dd_rays(&cone.cone_hrep(h))?;
    let mut rays: Vec<Point> = zrays
        .iter()
        .map(|z| {
            let p = point_from_z(h, z);
            Point {
                coords: primitive(&p.coords),
            }
        })
        .collect();
    rays.sort();
    for ray in &rays {
        if !d.eval(ray).is_zero() {
            return Err(RhoError::Internal(
                "witness ray fails D(ray) = 0 check".into(),
            ));
        }
    }
    Ok(WitnessCone { rays, hrep: cone.hrep })
}

/// Independent brute-force witness-set oracle for small ranks: enumerate sign
/// patterns over the distinct directions of the abs terms; each feasible
/// pattern contributes the face {D_σ = 0} of its linearity region. Returns
/// the union's primitive rays, sorted.
pub fn witness_rays_brute(d: &PLDifference) -> Result<Vec<Point>, RhoError> {
    let h = &d.h;
    let r = h.space.rank();
    // Group abs terms by primitive direction.
    let mut dirs: Vec<(Vec<Rat>, Vec<usize>)> = Vec::new();
    for (i, (w, _)) in d.abs_terms.iter().enumerate() {
        let p = primitive(&cov_row(h, w));
        let np = linalg::neg(&p);
        if let Some(e) = dirs.iter_mut().find(|(q, _)| *q == p || *q == np) {
            e.1.push(i);
        } else {
            dirs.push((p, vec![i]));
        }
    }
    let k = dirs.len();
    if k > 22 {
        return Err(RhoError::InvalidInput(format!(
            "brute-force oracle limited to 22 directions, got {k}"
        )));
    }
    let chamber_rows: Vec<Vec<Rat>> = h.chamber().iter().map(|a| cov_row(h, a)).collect();
    let term_rows: Vec<Vec<Rat>> = d
        .abs_terms
        .iter()
        .map(|(w, _)| cov_row(h, w))
        .collect();
    let lin_row = cov_row(h, &d.linear_term);

    let mut all_rays: std::collections::BTreeSet<Vec<Rat>> = std::collections::BTreeSet::new();
    for mask in 0u64..(1u64 << k) {
        let mut ineqs = chamber_rows.clone();
        let mut lin = lin_row.clone();
        for (j, (dir, members)) in dirs.iter().enumerate() {
            let s = if mask & (1 << j) != 0 { rat(-1) } else { rat(1) };
            ineqs.push(linalg::scale(dir, &s));
            for &i in members {
                // Sign of the term row matches the sign of its direction
                // times σ_j.
                let same = primitive(&term_rows[i]) == *dir;
                let sgn = if same { s.clone() } else { -&s };
                let c = &d.abs_terms[i].1;
                lin = linalg::add(&lin, &linalg::scale(&term_rows[i], &(sgn * c)));
            }
        }
        let cone = ConeHRep {
            dim: r,
            ineqs,
            eqs: vec![lin],
        };
        for ray in dd_rays(&cone)? {
            // Keep only genuine zeros of D (guards against sign-region
            // bookkeeping errors).
            let p = point_from_z(h, &ray);
            if d.eval(&p).is_zero() {
                all_rays.insert(primitive(&p.coords));
            }
        }
    }
    Ok(all_rays
        .into_iter()
        .map(|coords| Point { coords })
        .collect())
}

/// Direct-sum reduction: for g = ⊕ g_i with h = ⊕ h_i (plus optional
/// diagonally embedded ideals), the pair is dominated iff every ideal is, and
/// strictly dominated iff every ideal is strictly dominated and no diagonal
/// ideal is present (a diagonal forces ρ_h ≡ ρ_q on its part).
pub fn reduce_direct_sum(
    per_ideal: &[Trichotomy],
    diag_flags: &[(usize, usize, bool)],
) -> Trichotomy {
    if per_ideal
        .iter()
        .any(|t| *t == Trichotomy::NotDominated)
    {
        return Trichotomy::NotDominated;
    }
    let any_diag = diag_flags.iter().any(|&(_, _, f)| f);
    if !any_diag && per_ideal.iter().all(|t| *t == Trichotomy::StrictlyDominated) {
        Trichotomy::StrictlyDominated
    } else {
        Trichotomy::Dominated
    }
}

/// Monotone pruning: a strict verdict for a compatible superalgebra h̃ ⊇ h
/// propagates to h; nothing follows otherwise.
pub fn monotone_prune(strict_for_superalgebra: bool) -> bool {
    strict_for_superalgebra
}

/// Convenience: D of a bare weight multiset against a given h (used by
/// reduction-lemma tests).
pub fn difference_from_multiset(
    h: &Arc<SemisimpleAlgebra>,
    m: &WeightMultiset,
) -> Result<PLDifference, RhoError> {
    let mut abs_terms = Vec::new();
    for (w, mult) in &m.entries {
        if !w.is_zero() {
            abs_terms.push((w.clone(), ratq(*mult as i64, 2)));
        }
    }
    Ok(PLDifference {
        h: h.clone(),
        abs_terms,
        linear_term: h.rho_adjoint_covector().scale(&rat(-2)),
    })
}
