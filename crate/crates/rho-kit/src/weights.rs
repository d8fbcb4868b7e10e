//! Weight engine for one simple factor: dominant weights, the dominance
//! order ≺, full weight systems Λ(λ) with exact Freudenthal multiplicities,
//! the Weyl dimension formula, and the comparison function f(λ;Y).

use crate::algebra::{ip, Covector, Point, RootSystemData};
use crate::rat::{is_nonneg_integer, rat, Rat};
use crate::RhoError;
use num::{BigInt, One, Signed, Zero};
use std::collections::BTreeMap;

/// Dominant integral weight of one factor, as nonnegative coefficients over
/// the fundamental weights ϖ_k.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DominantWeight {
    pub factor_index: usize,
    pub coeffs: Vec<u64>,
}

impl DominantWeight {
    pub fn new(factor_index: usize, coeffs: Vec<u64>) -> Self {
        DominantWeight {
            factor_index,
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// Finite map from (canonicalized) covectors to positive multiplicities.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WeightMultiset {
    pub entries: BTreeMap<Covector, u64>,
}

impl WeightMultiset {
    pub fn new() -> Self {
        WeightMultiset {
            entries: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, w: Covector, mult: u64) {
        if mult == 0 {
            return;
        }
        *self.entries.entry(w).or_insert(0) += mult;
    }

    pub fn union(&mut self, other: &WeightMultiset) {
        for (w, m) in &other.entries {
            self.insert(w.clone(), *m);
        }
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn negated(&self) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for (w, m) in &self.entries {
            out.insert(w.neg(), *m);
        }
        out
    }

    pub fn is_negation_stable(&self) -> bool {
        self.entries
            .iter()
            .all(|(w, m)| self.entries.get(&w.neg()) == Some(m))
    }

    /// All weight sums across two multisets (outer tensor product).
    pub fn tensor(&self, other: &WeightMultiset) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for (w1, m1) in &self.entries {
            for (w2, m2) in &other.entries {
                out.insert(w1.add(w2), m1 * m2);
            }
        }
        out
    }

    pub fn get(&self, w: &Covector) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }
}

/// λ = Σ coeffs_k ϖ_k as a covector.
pub fn weight_from_coeffs(rs: &RootSystemData, coeffs: &[u64]) -> Covector {
    assert_eq!(coeffs.len(), rs.rank);
    let mut w = Covector::zero(rs.space.dim);
    for (k, &c) in coeffs.iter().enumerate() {
        if c != 0 {
            w = w.add(&rs.fundamental_weights[k].scale(&rat(c as i64)));
        }
    }
    w
}

/// Pairings ⟨w, α_k^∨⟩ for all simple roots.
pub fn coroot_pairings(rs: &RootSystemData, w: &Covector) -> Vec<Rat> {
    rs.simple_roots
        .iter()
        .map(|a| rs.pair_coroot(w, a))
        .collect()
}

pub fn is_dominant(rs: &RootSystemData, w: &Covector) -> bool {
    coroot_pairings(rs, w).iter().all(|c| !c.is_negative())
}

/// μ ≺ λ in the dominance order: λ − μ is a nonnegative integer combination
/// of simple roots.
pub fn dominance_leq_cov(rs: &RootSystemData, mu: &Covector, lambda: &Covector) -> bool {
    let diff = lambda.sub(mu);
    match rs.expand_in_simple_roots(&diff) {
        Some(x) => x.iter().all(is_nonneg_integer),
        None => false,
    }
}

/// Dominance comparison on coefficient vectors of the same factor.
pub fn dominance_leq(
    rs: &RootSystemData,
    mu: &DominantWeight,
    lambda: &DominantWeight,
) -> Result<bool, RhoError> {
    if mu.factor_index != lambda.factor_index {
        return Err(RhoError::InvalidInput(
            "dominance comparison across different factors".into(),
        ));
    }
    Ok(dominance_leq_cov(
        rs,
        &weight_from_coeffs(rs, &mu.coeffs),
        &weight_from_coeffs(rs, &lambda.coeffs),
    ))
}

/// Half-sum of positive roots (the "usual" ρ = Σ_k ϖ_k).
fn rho_half(rs: &RootSystemData) -> Covector {
    let mut r = Covector::zero(rs.space.dim);
    for w in &rs.fundamental_weights {
        r = r.add(w);
    }
    r
}

/// Weyl dimension formula, exact.
pub fn dimension(rs: &RootSystemData, coeffs: &[u64]) -> BigInt {
    let lambda = weight_from_coeffs(rs, coeffs);
    let rho = rho_half(rs);
    let lr = lambda.add(&rho);
    let mut num = Rat::one();
    let mut den = Rat::one();
    for a in &rs.positive_roots {
        num *= ip(&lr, a);
        den *= ip(&rho, a);
    }
    let d = num / den;
    assert!(
        d.denom().is_one() && d.numer().is_positive(),
        "Weyl dimension must be a positive integer"
    );
    d.numer().clone()
}

/// All dominant μ ≼ λ in the same root-lattice coset, with the number of
/// simple-root steps λ − μ = Σ k_j α_j (the "depth" Σ k_j).
fn dominant_weights_below(rs: &RootSystemData, lambda: &Covector) -> Vec<(Covector, u64)> {
    // Box bound: k_j = (λ−μ)(ω_j^∨) ≤ λ(ω_j^∨) since μ(ω_j^∨) ≥ 0 for
    // dominant μ (fundamental coweights lie in the closed chamber).
    let bounds: Vec<i64> = rs
        .fundamental_coweights
        .iter()
        .map(|om| {
            let b = lambda.eval(om);
            assert!(!b.is_negative());
            (b.numer() / b.denom()).try_into().unwrap_or(i64::MAX)
        })
        .collect();
    let mut out = Vec::new();
    let mut k = vec![0i64; rs.rank];
    loop {
        let mut mu = lambda.clone();
        let mut depth = 0u64;
        for (j, &kj) in k.iter().enumerate() {
            if kj > 0 {
                mu = mu.sub(&rs.simple_roots[j].scale(&rat(kj)));
                depth += kj as u64;
            }
        }
        if is_dominant(rs, &mu) {
            out.push((mu, depth));
        }
        // Odometer over the box.
        let mut j = 0;
        loop {
            if j == rs.rank {
                out.sort_by_key(|(_, d)| *d);
                return out;
            }
            if k[j] < bounds[j] {
                k[j] += 1;
                break;
            }
            k[j] = 0;
            j += 1;
        }
    }
}

/// Full Weyl orbit of a weight, by closure under simple reflections.
fn weyl_orbit(rs: &RootSystemData, w: &Covector) -> Vec<Covector> {
    let mut seen = std::collections::BTreeSet::new();
    let mut stack = vec![w.clone()];
    while let Some(v) = stack.pop() {
        if seen.insert(v.clone()) {
            for i in 0..rs.rank {
                stack.push(rs.simple_reflection_cov(&v, i));
            }
        }
    }
    seen.into_iter().collect()
}

/// The full weight multiset of the irreducible module V(λ): saturation of
/// the dominant weights ≼ λ, with Freudenthal multiplicities.
pub fn weight_system(rs: &RootSystemData, coeffs: &[u64]) -> WeightMultiset {
    let lambda = weight_from_coeffs(rs, coeffs);
    let rho = rho_half(rs);
    let dominants = dominant_weights_below(rs, &lambda);
    let lr = lambda.add(&rho);
    let c_top = ip(&lr, &lr);

    // Freudenthal recursion in increasing depth; multiplicities of
    // non-dominant weights via their chamber representative.
    let mut mult: BTreeMap<Covector, Rat> = BTreeMap::new();
    for (mu, depth) in &dominants {
        if *depth == 0 {
            mult.insert(mu.clone(), Rat::one());
            continue;
        }
        let mut num = Rat::zero();
        for a in &rs.positive_roots {
            let mut k = 1i64;
            loop {
                let nu = mu.add(&a.scale(&rat(k)));
                let dom_nu = rs.dominant_representative_cov(&nu);
                let Some(m) = mult.get(&dom_nu) else { break };
                num += rat(2) * m * ip(&nu, a);
                k += 1;
            }
        }
        let mur = mu.add(&rho);
        let den = &c_top - ip(&mur, &mur);
        assert!(den.is_positive(), "Freudenthal denominator must be positive");
        let m = num / den;
        assert!(is_nonneg_integer(&m));
        if m.is_positive() {
            mult.insert(mu.clone(), m);
        }
    }

    let mut out = WeightMultiset::new();
    for (mu, m) in &mult {
        let m_u64: u64 = m.numer().try_into().expect("multiplicity fits u64");
        for w in weyl_orbit(rs, mu) {
            out.insert(w, m_u64);
        }
    }
    let total = BigInt::from(out.total_multiplicity());
    assert_eq!(
        total,
        dimension(rs, coeffs),
        "Freudenthal total must equal the Weyl dimension"
    );
    out
}

/// All dominant coefficient vectors with dimension ≤ max_dim (including 0),
/// each exactly once, in graded lexicographic order.
pub fn enumerate_dominant(rs: &RootSystemData, max_dim: u64) -> Vec<Vec<u64>> {
    let bound = BigInt::from(max_dim);
    let mut seen = std::collections::BTreeSet::new();
    let mut stack = vec![vec![0u64; rs.rank]];
    let mut out = Vec::new();
    while let Some(c) = stack.pop() {
        if !seen.insert(c.clone()) {
            continue;
        }
        if dimension(rs, &c) > bound {
            // Dimension is strictly monotone in every coefficient, so no
            // successor of c can qualify either.
            continue;
        }
        for j in 0..rs.rank {
            let mut s = c.clone();
            s[j] += 1;
            stack.push(s);
        }
        out.push(c);
    }
    out.sort_by_key(|c| (dimension(rs, c), c.iter().sum::<u64>(), c.clone()));
    out
}

/// The comparison function f(λ;Y): half the sum of |λ_i(Y) − λ_j(Y)| over
/// unordered pairs of *distinct* weights (multiplicities ignored) whose sum
/// is nonzero. A lower bound for ρ_g of any classical ambient through V(λ),
/// monotone in the dominance order because Λ(μ) ⊆ Λ(λ) as sets when μ ≺ λ.
pub fn f_lambda(rs: &RootSystemData, coeffs: &[u64], y: &Point) -> Result<Rat, RhoError> {
    if !rs.chamber_contains(y) {
        return Err(RhoError::InvalidInput(
            "f(λ;Y) requires Y in the closed positive chamber".into(),
        ));
    }
    let system = weight_system(rs, coeffs);
    let ws: Vec<&Covector> = system.entries.keys().collect();
    let mut sum = Rat::zero();
    for (i, w1) in ws.iter().enumerate() {
        for w2 in ws.iter().skip(i + 1) {
            if w1.add(w2).is_zero() {
                continue;
            }
            sum += (w1.eval(y) - w2.eval(y)).abs();
        }
    }
    Ok(sum / rat(2))
}
