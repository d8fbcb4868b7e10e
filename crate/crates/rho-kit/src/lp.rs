//! Exact linear programming over the rationals: a two-phase primal simplex
//! with Bland's pivoting rule (no cycling, no floating point). Variables are
//! free; each is split internally into a difference of nonnegative parts.

use crate::rat::Rat;
use crate::RhoError;
use num::{Signed, Zero};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rel {
    Le,
    Ge,
    Eq,
}

/// One linear constraint `coeffs · x REL rhs` on the free variables x.
#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub rel: Rel,
    pub rhs: Rat,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rat>, rel: Rel, rhs: Rat) -> Self {
        Constraint { coeffs, rel, rhs }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpResult {
    Optimal { value: Rat, point: Vec<Rat> },
    Infeasible,
    Unbounded,
}

struct Tableau {
    /// rows × (cols + 1); the last column is the rhs (kept ≥ 0).
    a: Vec<Vec<Rat>>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let piv = self.a[r][c].clone();
        debug_assert!(!piv.is_zero());
        for x in self.a[r].iter_mut() {
            *x /= &piv;
        }
        for i in 0..self.a.len() {
            if i == r || self.a[i][c].is_zero() {
                continue;
            }
            let f = self.a[i][c].clone();
            for j in 0..=self.cols {
                let d = &f * &self.a[r][j];
                self.a[i][j] -= d;
            }
        }
        self.basis[r] = c;
    }

    /// Minimize cost over the current feasible basis. `allowed(j)` limits the
    /// entering columns. Returns false on unboundedness.
    ///
    /// A reduced-cost row is maintained alongside the tableau. Entering
    /// columns follow Dantzig's rule (most negative reduced cost) for speed,
    /// with a switch to Bland's rule after a degeneracy budget to guarantee
    /// termination.
    fn simplex(&mut self, cost: &[Rat], allowed: &dyn Fn(usize) -> bool) -> bool {
        // red[j] = c_j − c_B · B⁻¹ A_j.
        let mut red: Vec<Rat> = (0..self.cols)
            .map(|j| {
                let mut r = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.a[i][j].is_zero() {
                        r -= &cost[b] * &self.a[i][j];
                    }
                }
                r
            })
            .collect();
        let bland_after = 50 * (self.cols + self.a.len());
        let mut iters = 0usize;
        loop {
            iters += 1;
            let use_bland = iters > bland_after;
            let mut entering: Option<usize> = None;
            for j in 0..self.cols {
                if !red[j].is_negative() || !allowed(j) {
                    continue;
                }
                match entering {
                    None => entering = Some(j),
                    Some(e) => {
                        if !use_bland && red[j] < red[e] {
                            entering = Some(j);
                        }
                    }
                }
                if use_bland {
                    break; // Bland: smallest index.
                }
            }
            let Some(c) = entering else { return true };
            // Ratio test, ties broken by smallest basis index (Bland).
            let mut leave: Option<(usize, Rat)> = None;
            for i in 0..self.a.len() {
                if !self.a[i][c].is_positive() {
                    continue;
                }
                let ratio = &self.a[i][self.cols] / &self.a[i][c];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else { return false };
            self.pivot(r, c);
            // Update the reduced-cost row against the normalized pivot row.
            let f = red[c].clone();
            for j in 0..self.cols {
                if !self.a[r][j].is_zero() {
                    let d = &f * &self.a[r][j];
                    red[j] -= d;
                }
            }
        }
    }
}

/// Minimize `objective · x` over free x subject to `constraints`.
pub fn minimize(objective: &[Rat], constraints: &[Constraint]) -> Result<LpResult, RhoError> {
    minimize_with_nonneg(objective, constraints, &vec![false; objective.len()])
}

/// Like [`minimize`], but variables flagged `nonneg` are constrained to be
/// ≥ 0 structurally (they are not split into positive/negative parts, which
/// keeps the tableau smaller).
pub fn minimize_with_nonneg(
    objective: &[Rat],
    constraints: &[Constraint],
    nonneg: &[bool],
) -> Result<LpResult, RhoError> {
    let n = objective.len();
    if nonneg.len() != n {
        return Err(RhoError::InvalidInput("nonneg flag length mismatch".into()));
    }
    for con in constraints {
        if con.coeffs.len() != n {
            return Err(RhoError::InvalidInput(format!(
                "constraint has {} coefficients, expected {}",
                con.coeffs.len(),
                n
            )));
        }
    }
    // Normalize Ge rows to Le by negation so that homogeneous inequalities
    // (rhs = 0) keep a +1 slack and need no artificial variable.
    let constraints: Vec<Constraint> = constraints
        .iter()
        .map(|con| match con.rel {
            Rel::Ge => Constraint::new(
                con.coeffs.iter().map(|c| -c).collect(),
                Rel::Le,
                -&con.rhs,
            ),
            _ => con.clone(),
        })
        .collect();
    let constraints = &constraints[..];
    let m = constraints.len();
    // Column layout: for each variable a positive part, plus a negative part
    // for free variables; then one slack/surplus per inequality; artificials
    // appended only for rows that need them.
    let mut pos_col = vec![0usize; n];
    let mut neg_col = vec![usize::MAX; n];
    let mut next = 0usize;
    for j in 0..n {
        pos_col[j] = next;
        next += 1;
        if !nonneg[j] {
            neg_col[j] = next;
            next += 1;
        }
    }
    let var_cols = next;
    let ineq: usize = constraints.iter().filter(|c| c.rel != Rel::Eq).count();
    let slack0 = var_cols;
    let art0 = var_cols + ineq;
    // Determine which rows need an artificial: a row normalized to rhs ≥ 0
    // whose slack enters with +1 can use the slack as its initial basic
    // variable; Ge-normalized and Eq rows need an artificial.
    let mut needs_art: Vec<bool> = Vec::with_capacity(m);
    for con in constraints {
        let flip = con.rhs.is_negative();
        let rel = match (con.rel, flip) {
            (Rel::Eq, _) => Rel::Eq,
            (Rel::Le, false) | (Rel::Ge, true) => Rel::Le,
            _ => Rel::Ge,
        };
        needs_art.push(rel != Rel::Le);
    }
    let n_art = needs_art.iter().filter(|&&b| b).count();
    let cols = art0 + n_art;

    let mut a = vec![vec![Rat::zero(); cols + 1]; m];
    let mut basis = vec![0usize; m];
    let mut slack_idx = slack0;
    let mut art_idx = art0;
    for (i, con) in constraints.iter().enumerate() {
        let flip = con.rhs.is_negative();
        let s = if flip {
            -Rat::from_integer(1.into())
        } else {
            Rat::from_integer(1.into())
        };
        for j in 0..n {
            let v = &s * &con.coeffs[j];
            if neg_col[j] != usize::MAX {
                a[i][neg_col[j]] = -&v;
            }
            a[i][pos_col[j]] = v;
        }
        match con.rel {
            Rel::Le => {
                a[i][slack_idx] = s.clone();
                slack_idx += 1;
            }
            Rel::Ge => {
                a[i][slack_idx] = -&s;
                slack_idx += 1;
            }
            Rel::Eq => {}
        }
        a[i][cols] = &s * &con.rhs;
        if needs_art[i] {
            a[i][art_idx] = Rat::from_integer(1.into());
            basis[i] = art_idx;
            art_idx += 1;
        } else {
            // The slack just added enters with coefficient +1 and rhs ≥ 0.
            basis[i] = slack_idx - 1;
        }
    }

    let mut t = Tableau { a, basis, cols };

    if n_art > 0 {
        // Phase 1: minimize the sum of artificials.
        let mut phase1 = vec![Rat::zero(); cols];
        for j in art0..cols {
            phase1[j] = Rat::from_integer(1.into());
        }
        let bounded = t.simplex(&phase1, &|_| true);
        debug_assert!(bounded, "phase-1 objective is bounded below by 0");
        let p1_value: Rat = t
            .basis
            .iter()
            .enumerate()
            .filter(|(_, &b)| b >= art0)
            .map(|(i, _)| t.a[i][t.cols].clone())
            .sum();
        if !p1_value.is_zero() {
            return Ok(LpResult::Infeasible);
        }
        // Drive any degenerate artificials out of the basis.
        for i in 0..m {
            if t.basis[i] < art0 {
                continue;
            }
            if let Some(c) = (0..art0).find(|&j| !t.a[i][j].is_zero()) {
                t.pivot(i, c);
            }
            // A fully zero row is a redundant constraint; the lingering
            // artificial stays basic at value 0 and never re-enters (banned
            // below).
        }
    }

    // Phase 2.
    let mut cost = vec![Rat::zero(); cols];
    for j in 0..n {
        cost[pos_col[j]] = objective[j].clone();
        if neg_col[j] != usize::MAX {
            cost[neg_col[j]] = -&objective[j];
        }
    }
    if !t.simplex(&cost, &|j| j < art0) {
        return Ok(LpResult::Unbounded);
    }

    let mut point = vec![Rat::zero(); n];
    for (i, &b) in t.basis.iter().enumerate() {
        for j in 0..n {
            if b == pos_col[j] {
                point[j] += &t.a[i][t.cols];
            } else if b == neg_col[j] {
                point[j] -= &t.a[i][t.cols];
            }
        }
    }
    let value: Rat = objective.iter().zip(&point).map(|(c, x)| c * x).sum();
    Ok(LpResult::Optimal { value, point })
}
