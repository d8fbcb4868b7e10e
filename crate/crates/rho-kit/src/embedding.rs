//! Module-expression language for h-modules, invariant-bilinear-form typing,
//! and construction of the ambient algebra's weight multiset — everything
//! needed to realize an embedding h ⊂ g with g = sl(V), so(V), or sp(V).

use crate::algebra::{Covector, SemisimpleAlgebra};
use crate::rat::{rat, Rat};
use crate::weights::{self, WeightMultiset};
use crate::RhoError;
use num::Zero;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// AST of an h-module. Factor indices are 0-based indices into the algebra's
/// user factors (`SemisimpleAlgebra::user_factors`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ModuleExpr {
    /// Defining module of one user factor (sl:n → C^n, so:n → C^n,
    /// sp:n → C^2n). Undefined for exceptional factors.
    Std(usize),
    /// Irreducible module of one user factor; coefficient vector over the
    /// fundamental weights of its internal factors, concatenated.
    Irrep(usize, Vec<u64>),
    /// k-dimensional trivial module.
    Triv(u64),
    Dual(Box<ModuleExpr>),
    DirectSum(Vec<ModuleExpr>),
    /// Outer tensor product; children must touch disjoint factor subsets.
    OuterTensor(Vec<ModuleExpr>),
}

impl fmt::Display for ModuleExpr {
    /// Renders in the pair-spec grammar: `std1`, `irrep2[1,0]`, `triv:3`,
    /// `dual(...)`, with `(+)` for direct sums and `(x)` for outer tensors
    /// (1-based factor indices).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleExpr::Std(u) => write!(f, "std{}", u + 1),
            ModuleExpr::Irrep(u, cs) => {
                let list = cs
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                write!(f, "irrep{}[{}]", u + 1, list)
            }
            ModuleExpr::Triv(k) => write!(f, "triv:{k}"),
            ModuleExpr::Dual(e) => write!(f, "dual({e})"),
            ModuleExpr::DirectSum(es) => {
                let parts: Vec<String> = es
                    .iter()
                    .map(|e| match e {
                        ModuleExpr::DirectSum(_) => format!("({e})"),
                        _ => e.to_string(),
                    })
                    .collect();
                write!(f, "{}", parts.join(" (+) "))
            }
            ModuleExpr::OuterTensor(es) => {
                let parts: Vec<String> = es
                    .iter()
                    .map(|e| match e {
                        ModuleExpr::DirectSum(_) | ModuleExpr::OuterTensor(_) => {
                            format!("({e})")
                        }
                        _ => e.to_string(),
                    })
                    .collect();
                write!(f, "{}", parts.join(" (x) "))
            }
        }
    }
}

/// Invariant bilinear form type of a module.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FormType {
    None,
    Symmetric,
    Skew,
}

/// Ambient classical type g = sl(V) / so(V) / sp(V).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum AmbientKind {
    Sl,
    So,
    Sp,
}

impl fmt::Display for AmbientKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AmbientKind::Sl => "sl",
            AmbientKind::So => "so",
            AmbientKind::Sp => "sp",
        };
        write!(f, "{s}")
    }
}

/// The pair (g, h): h with a module expression V and an ambient type.
#[derive(Clone, Debug)]
pub struct EmbeddingSpec {
    pub h: Arc<SemisimpleAlgebra>,
    pub v: ModuleExpr,
    pub ambient: AmbientKind,
}

/// The set of user factors a module expression acts through.
pub fn factor_support(h: &SemisimpleAlgebra, expr: &ModuleExpr) -> Result<BTreeSet<usize>, RhoError> {
    let check = |u: usize| {
        if u < h.user_factors.len() {
            Ok(u)
        } else {
            Err(RhoError::InvalidInput(format!(
                "module references factor {} but h has {} factors",
                u + 1,
                h.user_factors.len()
            )))
        }
    };
    match expr {
        ModuleExpr::Std(u) => Ok([check(*u)?].into()),
        ModuleExpr::Irrep(u, _) => Ok([check(*u)?].into()),
        ModuleExpr::Triv(_) => Ok(BTreeSet::new()),
        ModuleExpr::Dual(e) => factor_support(h, e),
        ModuleExpr::DirectSum(es) => {
            let mut s = BTreeSet::new();
            for e in es {
                s.extend(factor_support(h, e)?);
            }
            Ok(s)
        }
        ModuleExpr::OuterTensor(es) => {
            let mut s = BTreeSet::new();
            for e in es {
                let se = factor_support(h, e)?;
                if !s.is_disjoint(&se) {
                    return Err(RhoError::InvalidInput(
                        "outer tensor children must act through disjoint factors".into(),
                    ));
                }
                s.extend(se);
            }
            Ok(s)
        }
    }
}

/// Weight multiset of the joint irreducible module with the given
/// ϖ-coefficients on each listed internal factor, lifted to h's space.
pub fn joint_irrep_weights(
    h: &SemisimpleAlgebra,
    parts: &[(usize, Vec<u64>)],
) -> WeightMultiset {
    let mut acc = WeightMultiset::new();
    acc.insert(Covector::zero(h.space.dim), 1);
    for (fi, coeffs) in parts {
        let local = weights::weight_system(&h.factors[*fi], coeffs);
        let mut lifted = WeightMultiset::new();
        for (w, m) in &local.entries {
            lifted.insert(h.lift_covector(*fi, w), *m);
        }
        acc = acc.tensor(&lifted);
    }
    acc
}

fn user_irrep_parts(
    h: &SemisimpleAlgebra,
    u: usize,
    coeffs: &[u64],
) -> Result<Vec<(usize, Vec<u64>)>, RhoError> {
    let uf = &h.user_factors[u];
    let total_rank: usize = uf.internal.iter().map(|&fi| h.factors[fi].rank).sum();
    if coeffs.len() != total_rank {
        return Err(RhoError::InvalidInput(format!(
            "irrep coefficient vector for factor {} must have length {}, got {}",
            u + 1,
            total_rank,
            coeffs.len()
        )));
    }
    let mut parts = Vec::new();
    let mut pos = 0;
    for &fi in &uf.internal {
        let r = h.factors[fi].rank;
        parts.push((fi, coeffs[pos..pos + r].to_vec()));
        pos += r;
    }
    Ok(parts)
}

/// Exact weight multiset of a module expression on a(h).
pub fn module_weights(
    h: &SemisimpleAlgebra,
    expr: &ModuleExpr,
) -> Result<WeightMultiset, RhoError> {
    factor_support(h, expr)?;
    module_weights_inner(h, expr)
}

fn module_weights_inner(
    h: &SemisimpleAlgebra,
    expr: &ModuleExpr,
) -> Result<WeightMultiset, RhoError> {
    match expr {
        ModuleExpr::Std(u) => {
            let uf = &h.user_factors[*u];
            let Some(std_coeffs) = &uf.std_coeffs else {
                return Err(RhoError::InvalidInput(format!(
                    "factor {} ({}) has no defining module; use an explicit irrep",
                    u + 1,
                    uf.spec
                )));
            };
            let parts: Vec<(usize, Vec<u64>)> = uf
                .internal
                .iter()
                .zip(std_coeffs)
                .map(|(&fi, c)| (fi, c.clone()))
                .collect();
            Ok(joint_irrep_weights(h, &parts))
        }
        ModuleExpr::Irrep(u, coeffs) => {
            let parts = user_irrep_parts(h, *u, coeffs)?;
            Ok(joint_irrep_weights(h, &parts))
        }
        ModuleExpr::Triv(k) => {
            let mut m = WeightMultiset::new();
            m.insert(Covector::zero(h.space.dim), *k);
            Ok(m)
        }
        ModuleExpr::Dual(e) => Ok(module_weights_inner(h, e)?.negated()),
        ModuleExpr::DirectSum(es) => {
            if es.is_empty() {
                return Err(RhoError::InvalidInput("empty direct sum".into()));
            }
            let mut acc = WeightMultiset::new();
            for e in es {
                acc.union(&module_weights_inner(h, e)?);
            }
            Ok(acc)
        }
        ModuleExpr::OuterTensor(es) => {
            if es.is_empty() {
                return Err(RhoError::InvalidInput("empty tensor product".into()));
            }
            let mut acc = WeightMultiset::new();
            acc.insert(Covector::zero(h.space.dim), 1);
            for e in es {
                acc = acc.tensor(&module_weights_inner(h, e)?);
            }
            Ok(acc)
        }
    }
}

pub fn module_dim(h: &SemisimpleAlgebra, expr: &ModuleExpr) -> Result<u64, RhoError> {
    Ok(module_weights(h, expr)?.total_multiplicity())
}

/// One isotypic block of a module: the joint highest weight (ϖ-coefficients
/// per internal factor of h) and its multiplicity. All-zero coefficients mean
/// the 1-dimensional trivial module.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Component {
    pub coeffs: Vec<Vec<u64>>,
    pub mult: u64,
}

impl Component {
    pub fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(|c| c.iter().all(|&x| x == 0))
    }
}

/// Decomposes a weight multiset into joint irreducibles by repeatedly
/// extracting a maximal weight (which must be a joint highest weight) and
/// subtracting its weight system. Exact; fails only if the multiset is not a
/// genuine module weight multiset.
pub fn decompose_weights(
    h: &SemisimpleAlgebra,
    m: &WeightMultiset,
) -> Result<Vec<Component>, RhoError> {
    // A strictly dominant evaluation point: positive on every simple root.
    let mut xi = crate::algebra::Point::zero(h.space.dim);
    for p in h.fundamental_coweights() {
        xi = xi.add(&p);
    }
    let mut rest = m.clone();
    let mut out: std::collections::BTreeMap<Vec<Vec<u64>>, u64> = Default::default();
    while rest.total_multiplicity() > 0 {
        // Maximal weight: highest value at xi, lex-greatest among ties.
        let top = rest
            .entries
            .keys()
            .max_by(|a, b| a.eval(&xi).cmp(&b.eval(&xi)).then(a.cmp(b)))
            .unwrap()
            .clone();
        let mult = rest.get(&top);
        let mut coeffs = Vec::new();
        for (fi, f) in h.factors.iter().enumerate() {
            let local = Covector {
                coords: top.coords[h.offsets[fi]..h.offsets[fi] + f.space.dim].to_vec(),
            };
            let pair = weights::coroot_pairings(f, &local);
            let mut c = Vec::new();
            for x in &pair {
                if !crate::rat::is_nonneg_integer(x) {
                    return Err(RhoError::Internal(
                        "maximal weight is not dominant integral; not a module multiset".into(),
                    ));
                }
                c.push(u64::try_from(x.numer()).unwrap());
            }
            coeffs.push(c);
        }
        let parts: Vec<(usize, Vec<u64>)> =
            coeffs.iter().enumerate().map(|(fi, c)| (fi, c.clone())).collect();
        let sys = joint_irrep_weights(h, &parts);
        // Subtract `mult` copies.
        for (w, wm) in &sys.entries {
            let have = rest.get(w);
            let need = wm * mult;
            if have < need {
                return Err(RhoError::Internal(
                    "weight multiset is not a sum of joint irreducibles".into(),
                ));
            }
            if have == need {
                rest.entries.remove(w);
            } else {
                rest.entries.insert(w.clone(), have - need);
            }
        }
        *out.entry(coeffs).or_insert(0) += mult;
    }
    Ok(out
        .into_iter()
        .map(|(coeffs, mult)| Component { coeffs, mult })
        .collect())
}

/// Dual of a joint highest weight: −w0·λ, computed per internal factor.
pub fn dual_component_coeffs(h: &SemisimpleAlgebra, coeffs: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for (fi, c) in coeffs.iter().enumerate() {
        let f = &h.factors[fi];
        let lam = weights::weight_from_coeffs(f, c);
        let dual = f.dominant_representative_cov(&lam.neg());
        let pair = weights::coroot_pairings(f, &dual);
        out.push(
            pair.iter()
                .map(|x| u64::try_from(x.numer()).expect("dominant integral"))
                .collect(),
        );
    }
    out
}

/// Frobenius–Schur parity of a self-dual joint irreducible: symmetric iff
/// ⟨λ, 2ρ^∨⟩ is even (sum over the factors it acts through).
pub fn frobenius_schur_symmetric(h: &SemisimpleAlgebra, coeffs: &[Vec<u64>]) -> bool {
    let mut total = Rat::zero();
    for (fi, c) in coeffs.iter().enumerate() {
        let f = &h.factors[fi];
        let lam = weights::weight_from_coeffs(f, c);
        for a in &f.positive_roots {
            total += f.pair_coroot(&lam, a);
        }
    }
    assert!(crate::rat::is_nonneg_integer(&total));
    let n: num::BigInt = total.numer().clone();
    (n % 2u32).is_zero()
}

fn form_admissible(h: &SemisimpleAlgebra, comps: &[Component], skew: bool) -> bool {
    for c in comps {
        let dual = dual_component_coeffs(h, &c.coeffs);
        if dual != c.coeffs {
            // Non-self-dual components must come in dual pairs.
            let partner = comps.iter().find(|d| d.coeffs == dual);
            if partner.map(|d| d.mult) != Some(c.mult) {
                return false;
            }
        } else {
            let fs_sym = frobenius_schur_symmetric(h, &c.coeffs);
            // A form of the requested parity restricts to isotypic blocks;
            // blocks of the opposite intrinsic parity must pair up evenly.
            if fs_sym == skew && c.mult % 2 != 0 {
                return false;
            }
        }
    }
    true
}

/// True iff V carries an invariant non-degenerate symmetric form.
pub fn admits_symmetric(h: &SemisimpleAlgebra, expr: &ModuleExpr) -> Result<bool, RhoError> {
    let comps = decompose_weights(h, &module_weights(h, expr)?)?;
    Ok(form_admissible(h, &comps, false))
}

/// True iff V carries an invariant non-degenerate skew-symmetric form.
pub fn admits_skew(h: &SemisimpleAlgebra, expr: &ModuleExpr) -> Result<bool, RhoError> {
    let comps = decompose_weights(h, &module_weights(h, expr)?)?;
    Ok(form_admissible(h, &comps, true))
}

/// Reports an invariant form type of V: `Symmetric` if a symmetric form
/// exists, else `Skew` if a skew form exists, else `None`. (A module such as
/// W⊕W with W orthogonal admits both; the symmetric answer is reported.)
pub fn form_type(h: &SemisimpleAlgebra, expr: &ModuleExpr) -> Result<FormType, RhoError> {
    let m = module_weights(h, expr)?;
    if !m.is_negation_stable() {
        return Ok(FormType::None);
    }
    let comps = decompose_weights(h, &m)?;
    if form_admissible(h, &comps, false) {
        Ok(FormType::Symmetric)
    } else if form_admissible(h, &comps, true) {
        Ok(FormType::Skew)
    } else {
        Ok(FormType::None)
    }
}

impl EmbeddingSpec {
    pub fn new(
        h: Arc<SemisimpleAlgebra>,
        v: ModuleExpr,
        ambient: AmbientKind,
    ) -> Result<Self, RhoError> {
        let spec = EmbeddingSpec { h, v, ambient };
        spec.validate()?;
        Ok(spec)
    }

    /// Form/dimension validation per the ambient type.
    pub fn validate(&self) -> Result<(), RhoError> {
        let dim = module_dim(&self.h, &self.v)?;
        if dim < 2 {
            return Err(RhoError::InvalidInput(format!(
                "dim V = {dim} < 2 does not define an ambient algebra"
            )));
        }
        match self.ambient {
            AmbientKind::Sl => {}
            AmbientKind::So => {
                if !admits_symmetric(&self.h, &self.v)? {
                    return Err(RhoError::InvalidInput(
                        "ambient so requires an invariant symmetric form on V".into(),
                    ));
                }
            }
            AmbientKind::Sp => {
                if dim % 2 != 0 || !admits_skew(&self.h, &self.v)? {
                    return Err(RhoError::InvalidInput(
                        "ambient sp requires an invariant skew-symmetric form on V".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn dim_v(&self) -> u64 {
        module_dim(&self.h, &self.v).expect("validated spec")
    }

    /// Complex dimension of the ambient algebra.
    pub fn dim_g(&self) -> u64 {
        let n = self.dim_v();
        match self.ambient {
            AmbientKind::Sl => n * n - 1,
            AmbientKind::So => n * (n - 1) / 2,
            AmbientKind::Sp => n * (n + 1) / 2,
        }
    }

    pub fn describe(&self) -> String {
        format!(
            "g={}:{}; h={}",
            self.ambient,
            match self.ambient {
                AmbientKind::Sp => self.dim_v() / 2,
                _ => self.dim_v(),
            },
            self.h.describe()
        )
    }
}

/// Weight multiset of g as an h-module. With μ the module weights counted
/// with multiplicity: sl(V): {μ_a − μ_b, a ≠ b} plus (dim V − 1) zeros;
/// so(V): {μ_a + μ_b, a < b}; sp(V): {μ_a + μ_b, a ≤ b}.
pub fn ambient_weight_multiset(spec: &EmbeddingSpec) -> Result<WeightMultiset, RhoError> {
    spec.validate()?;
    let mw = module_weights(&spec.h, &spec.v)?;
    let flat: Vec<(&Covector, u64)> = mw.entries.iter().map(|(w, m)| (w, *m)).collect();
    let n = mw.total_multiplicity();
    let dim = spec.h.space.dim;
    let mut out = WeightMultiset::new();
    match spec.ambient {
        AmbientKind::Sl => {
            for (i, (w1, m1)) in flat.iter().enumerate() {
                for (j, (w2, m2)) in flat.iter().enumerate() {
                    if i != j {
                        out.insert(w1.sub(w2), m1 * m2);
                    }
                }
                // a ≠ b within the same weight value.
                out.insert(Covector::zero(dim), m1 * (m1 - 1));
            }
            out.insert(Covector::zero(dim), n - 1);
        }
        AmbientKind::So | AmbientKind::Sp => {
            for (i, (w1, m1)) in flat.iter().enumerate() {
                for (w2, m2) in flat.iter().skip(i + 1) {
                    out.insert(w1.add(w2), m1 * m2);
                }
                let same = match spec.ambient {
                    AmbientKind::So => m1 * (m1 - 1) / 2,
                    _ => m1 * (m1 + 1) / 2,
                };
                out.insert(w1.scale(&rat(2)), same);
            }
        }
    }
    let expected = spec.dim_g();
    debug_assert_eq!(out.total_multiplicity(), expected);
    Ok(out)
}
