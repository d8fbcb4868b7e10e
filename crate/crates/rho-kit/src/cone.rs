//! Polyhedral cones in coordinates: H-representations (homogeneous
//! inequalities/equalities), ray enumeration by the incremental double
//! description method, and exact cone equality by mutual inclusion.

use crate::linalg::{self, Matrix, Vector};
use crate::rat::{rat, Rat};
use crate::RhoError;
use num::{BigInt, Integer, One, Signed, Zero};

/// Homogeneous H-representation: { z : row·z ≥ 0 for ineqs, row·z = 0 for eqs }.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeHRep {
    pub dim: usize,
    pub ineqs: Vec<Vector>,
    pub eqs: Vec<Vector>,
}

impl ConeHRep {
    pub fn new(dim: usize, ineqs: Vec<Vector>, eqs: Vec<Vector>) -> Result<Self, RhoError> {
        for r in ineqs.iter().chain(&eqs) {
            if r.len() != dim {
                return Err(RhoError::InvalidInput(
                    "cone constraint row has the wrong length".into(),
                ));
            }
        }
        Ok(ConeHRep { dim, ineqs, eqs })
    }

    pub fn contains(&self, z: &[Rat]) -> bool {
        self.ineqs.iter().all(|r| !linalg::dot(r, z).is_negative())
            && self.eqs.iter().all(|r| linalg::dot(r, z).is_zero())
    }

    /// All constraints as inequalities (each equality contributes both signs).
    fn as_inequalities(&self) -> Vec<Vector> {
        let mut rows = self.ineqs.clone();
        for e in &self.eqs {
            rows.push(e.clone());
            rows.push(linalg::neg(e));
        }
        rows
    }
}

/// Scale a rational vector to a primitive integer vector (entries returned as
/// integral `Rat`s), preserving direction.
pub fn primitive(v: &[Rat]) -> Vector {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for i in &ints {
        g = g.gcd(i);
    }
    if g.is_zero() {
        return vec![Rat::zero(); v.len()];
    }
    ints.into_iter()
        .map(|i| Rat::from_integer(i / &g))
        .collect()
}

/// Enumerate the extreme rays of a pointed cone given by `hrep`, as primitive
/// integer vectors sorted lexicographically. The constraint rows must have
/// full rank `dim` (which forces pointedness); otherwise an error is returned.
pub fn dd_rays(hrep: &ConeHRep) -> Result<Vec<Vector>, RhoError> {
    let d = hrep.dim;
    if d == 0 {
        return Ok(Vec::new());
    }
    let rows = hrep.as_inequalities();
    // Pick d linearly independent rows for the simplicial start.
    let mut chosen: Vec<usize> = Vec::new();
    let mut basis_rows: Matrix = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut trial = basis_rows.clone();
        trial.push(r.clone());
        if linalg::rank(&trial) > basis_rows.len() {
            basis_rows.push(r.clone());
            chosen.push(i);
            if basis_rows.len() == d {
                break;
            }
        }
    }
    if basis_rows.len() < d {
        return Err(RhoError::Internal(
            "dd_rays requires a pointed cone (full-rank constraint set)".into(),
        ));
    }
    // Initial rays: dual basis v_j with basis_rows[i]·v_j = δ_ij.
    let mut rays: Vec<Vector> = Vec::new();
    for j in 0..d {
        let rhs: Vector = (0..d).map(|i| if i == j { rat(1) } else { rat(0) }).collect();
        let v = linalg::solve(&basis_rows, &rhs)
            .ok_or_else(|| RhoError::Internal("dual basis solve failed".into()))?;
        rays.push(primitive(&v));
    }

    // Incrementally cut by the remaining inequalities. `tight[k]` is the set
    // of already-processed row indices active at ray k.
    let mut processed: Vec<usize> = chosen.clone();
    let mut tight: Vec<std::collections::BTreeSet<usize>> = rays
        .iter()
        .map(|ray| {
            processed
                .iter()
                .copied()
                .filter(|&i| linalg::dot(&rows[i], ray).is_zero())
                .collect()
        })
        .collect();

    for (i, row) in rows.iter().enumerate() {
        if chosen.contains(&i) {
            continue;
        }
        let vals: Vec<Rat> = rays.iter().map(|ray| linalg::dot(row, ray)).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            for (k, v) in vals.iter().enumerate() {
                if v.is_zero() {
                    tight[k].insert(i);
                }
            }
            processed.push(i);
            continue;
        }
        let mut new_rays: Vec<Vector> = Vec::new();
        let mut new_tight: Vec<std::collections::BTreeSet<usize>> = Vec::new();
        for (k, v) in vals.iter().enumerate() {
            if !v.is_negative() {
                let mut t = tight[k].clone();
                if v.is_zero() {
                    t.insert(i);
                }
                new_rays.push(rays[k].clone());
                new_tight.push(t);
            }
        }
        // Combine adjacent (+,−) pairs into boundary rays.
        for (p, vp) in vals.iter().enumerate() {
            if !vp.is_positive() {
                continue;
            }
            for (m, vm) in vals.iter().enumerate() {
                if !vm.is_negative() {
                    continue;
                }
                let common: std::collections::BTreeSet<usize> =
                    tight[p].intersection(&tight[m]).copied().collect();
                // Combinatorial adjacency: no third ray is tight on all of
                // `common`.
                let adjacent = (0..rays.len()).all(|q| {
                    q == p || q == m || !common.iter().all(|c| tight[q].contains(c))
                });
                if !adjacent {
                    continue;
                }
                let combo: Vector = rays[p]
                    .iter()
                    .zip(&rays[m])
                    .map(|(rp, rm)| vp * rm - vm * rp)
                    .collect();
                let combo = primitive(&combo);
                if linalg::is_zero_vec(&combo) || new_rays.contains(&combo) {
                    continue;
                }
                let mut t = common;
                t.insert(i);
                new_rays.push(combo);
                new_tight.push(t);
            }
        }
        rays = new_rays;
        tight = new_tight;
        processed.push(i);
    }

    rays.sort();
    rays.dedup();
    Ok(rays)
}

/// Exact cone equality by mutual inclusion of ray generators.
pub fn cones_equal(a: &ConeHRep, b: &ConeHRep) -> Result<bool, RhoError> {
    if a.dim != b.dim {
        return Ok(false);
    }
    let ra = dd_rays(a)?;
    let rb = dd_rays(b)?;
    Ok(ra.iter().all(|r| b.contains(r)) && rb.iter().all(|r| a.contains(r)))
}
