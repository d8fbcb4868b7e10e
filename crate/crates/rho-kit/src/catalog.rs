//! Dynkin's maximal-subalgebra catalogs for classical ambient algebras
//! (reducible and irreducible non-simple actions), plus parametric builders
//! for every proposition family used by the classification. The catalogs are
//! transcribed data, not derivations.

use crate::algebra::{FactorSpec, SemisimpleAlgebra};
use crate::embedding::{AmbientKind, EmbeddingSpec, ModuleExpr};
use crate::RhoError;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub ambient: (AmbientKind, usize),
    pub description: String,
    pub spec: EmbeddingSpec,
}

/// One direct summand of h together with the part of V it acts on. A `None`
/// factor stands for a degenerate "algebra" (sl_1, so_1, so_2) that
/// contributes only trivial module dimensions (so_2's torus is dropped; the
/// framework handles semisimple h only).
#[derive(Clone, Debug)]
enum Summand {
    /// Semisimple factor acting by Std on its slot.
    Std(FactorSpec),
    /// Semisimple factor acting by Std ⊕ Dual (an sl factor inside so/sp).
    StdPlusDual(FactorSpec),
    /// Trivial dimensions.
    Triv(u64),
}

fn sl_summand(n: usize) -> Summand {
    if n <= 1 {
        Summand::Triv(1)
    } else {
        Summand::Std(FactorSpec::Sl(n))
    }
}

fn so_summand(n: usize) -> Summand {
    if n <= 2 {
        Summand::Triv(n as u64)
    } else {
        Summand::Std(FactorSpec::So(n))
    }
}

fn sp_summand(n: usize) -> Summand {
    Summand::Std(FactorSpec::Sp(n))
}

/// Assemble h and V from summands (direct sum of their slots).
fn build_spec(
    ambient: AmbientKind,
    summands: &[Summand],
) -> Result<EmbeddingSpec, RhoError> {
    let mut factors: Vec<FactorSpec> = Vec::new();
    for s in summands {
        match s {
            Summand::Std(f) | Summand::StdPlusDual(f) => factors.push(f.clone()),
            Summand::Triv(_) => {}
        }
    }
    if factors.is_empty() {
        return Err(RhoError::InvalidInput(
            "no semisimple factor remains in h".into(),
        ));
    }
    let h = SemisimpleAlgebra::new(&factors)?;
    let mut parts: Vec<ModuleExpr> = Vec::new();
    let mut idx = 0usize;
    for s in summands {
        match s {
            Summand::Std(_) => {
                parts.push(ModuleExpr::Std(idx));
                idx += 1;
            }
            Summand::StdPlusDual(_) => {
                parts.push(ModuleExpr::Std(idx));
                parts.push(ModuleExpr::Dual(Box::new(ModuleExpr::Std(idx))));
                idx += 1;
            }
            Summand::Triv(d) => {
                if *d > 0 {
                    parts.push(ModuleExpr::Triv(*d));
                }
            }
        }
    }
    let v = if parts.len() == 1 {
        parts.pop().unwrap()
    } else {
        ModuleExpr::DirectSum(parts)
    };
    EmbeddingSpec::new(h, v, ambient)
}

/// Tensor-product entry h = f1 ⊕ f2 acting by Std ⊠ Std.
fn build_tensor_spec(
    ambient: AmbientKind,
    f1: FactorSpec,
    f2: FactorSpec,
) -> Result<EmbeddingSpec, RhoError> {
    let h = SemisimpleAlgebra::new(&[f1, f2])?;
    let v = ModuleExpr::OuterTensor(vec![ModuleExpr::Std(0), ModuleExpr::Std(1)]);
    EmbeddingSpec::new(h, v, ambient)
}

fn entry(
    ambient: (AmbientKind, usize),
    description: &str,
    spec: EmbeddingSpec,
) -> CatalogEntry {
    CatalogEntry {
        ambient,
        description: description.to_string(),
        spec,
    }
}

/// Maximal semisimple subalgebras acting reducibly on the defining module.
pub fn maximal_reducible(
    kind: AmbientKind,
    n: usize,
) -> Result<Vec<CatalogEntry>, RhoError> {
    let mut out = Vec::new();
    match kind {
        AmbientKind::Sl => {
            if n < 2 {
                return Err(RhoError::InvalidInput("sl_n requires n ≥ 2".into()));
            }
            if n >= 3 {
                out.push(entry(
                    (kind, n),
                    &format!("sl:{}", n - 1),
                    build_spec(kind, &[sl_summand(n - 1), Summand::Triv(1)])?,
                ));
            }
            for k in 2..=n / 2 {
                if n - k < 2 || k > n - 2 {
                    continue;
                }
                out.push(entry(
                    (kind, n),
                    &format!("sl:{}+sl:{}", k, n - k),
                    build_spec(kind, &[sl_summand(k), sl_summand(n - k)])?,
                ));
            }
        }
        AmbientKind::So => {
            if n < 5 {
                return Err(RhoError::InvalidInput(
                    "so_n catalog requires n ≥ 5".into(),
                ));
            }
            if n % 2 == 1 {
                // so_{2m+1}: so_{2m−1}, and so_{2k} ⊕ so_{2(m−k)+1} (2 ≤ k ≤ m).
                let m = n / 2;
                out.push(entry(
                    (kind, n),
                    &format!("so:{}", n - 2),
                    build_spec(kind, &[so_summand(n - 2), Summand::Triv(2)])?,
                ));
                for k in 2..=m {
                    let q = 2 * (m - k) + 1;
                    out.push(entry(
                        (kind, n),
                        &format!("so:{}+so:{}", 2 * k, q),
                        build_spec(kind, &[so_summand(2 * k), so_summand(q)])?,
                    ));
                }
            } else {
                // so_{2m}: so_{2m−2}, sl_m, and so_{2k} ⊕ so_{2(m−k)} (2 ≤ k ≤ m−2).
                let m = n / 2;
                if n - 2 >= 3 {
                    out.push(entry(
                        (kind, n),
                        &format!("so:{}", n - 2),
                        build_spec(kind, &[so_summand(n - 2), Summand::Triv(2)])?,
                    ));
                }
                if m >= 2 {
                    out.push(entry(
                        (kind, n),
                        &format!("sl:{m}"),
                        build_spec(kind, &[Summand::StdPlusDual(FactorSpec::Sl(m))])?,
                    ));
                }
                for k in 2..=m / 2 {
                    if k > m - 2 || m - k < 2 {
                        continue;
                    }
                    out.push(entry(
                        (kind, n),
                        &format!("so:{}+so:{}", 2 * k, 2 * (m - k)),
                        build_spec(kind, &[so_summand(2 * k), so_summand(2 * (m - k))])?,
                    ));
                }
            }
        }
        AmbientKind::Sp => {
            if n < 1 {
                return Err(RhoError::InvalidInput("sp_n requires n ≥ 1".into()));
            }
            if n >= 2 {
                out.push(entry(
                    (kind, n),
                    &format!("sl:{n}"),
                    build_spec(kind, &[Summand::StdPlusDual(FactorSpec::Sl(n))])?,
                ));
            }
            for k in 1..=n / 2 {
                if k > n - 1 {
                    continue;
                }
                out.push(entry(
                    (kind, n),
                    &format!("sp:{}+sp:{}", k, n - k),
                    build_spec(kind, &[sp_summand(k), sp_summand(n - k)])?,
                ));
            }
        }
    }
    Ok(out)
}

/// Maximal non-simple semisimple subalgebras acting irreducibly
/// (tensor-product embeddings).
pub fn maximal_irreducible_nonsimple(
    kind: AmbientKind,
    n: usize,
) -> Result<Vec<CatalogEntry>, RhoError> {
    let mut out = Vec::new();
    match kind {
        AmbientKind::Sl => {
            // sl_p ⊗ sl_q, pq = n, p, q ≥ 2.
            for p in 2..=n {
                if p * p > n {
                    break;
                }
                if n % p == 0 && n / p >= 2 {
                    let q = n / p;
                    out.push(entry(
                        (kind, n),
                        &format!("sl:{p}(x)sl:{q}"),
                        build_tensor_spec(kind, FactorSpec::Sl(p), FactorSpec::Sl(q))?,
                    ));
                }
            }
        }
        AmbientKind::So => {
            // so_p ⊗ so_q (pq = n, p, q ≥ 3) and sp_p ⊗ sp_q (4pq = n, p, q ≥ 2).
            for p in 3..=n {
                if p * p > n {
                    break;
                }
                if n % p == 0 && n / p >= 3 {
                    let q = n / p;
                    out.push(entry(
                        (kind, n),
                        &format!("so:{p}(x)so:{q}"),
                        build_tensor_spec(kind, FactorSpec::So(p), FactorSpec::So(q))?,
                    ));
                }
            }
            if n % 4 == 0 {
                let m = n / 4;
                for p in 2..=m {
                    if p * p > m {
                        break;
                    }
                    if m % p == 0 && m / p >= 2 {
                        let q = m / p;
                        out.push(entry(
                            (kind, n),
                            &format!("sp:{p}(x)sp:{q}"),
                            build_tensor_spec(kind, FactorSpec::Sp(p), FactorSpec::Sp(q))?,
                        ));
                    }
                }
            }
        }
        AmbientKind::Sp => {
            // sp_p ⊗ so_q, pq = n, p ≥ 2, q ≥ 3.
            for p in 2..=n {
                if n % p == 0 && n / p >= 3 {
                    let q = n / p;
                    out.push(entry(
                        (kind, n),
                        &format!("sp:{p}(x)so:{q}"),
                        build_tensor_spec(kind, FactorSpec::Sp(p), FactorSpec::So(q))?,
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// h = first ⊕ so_q acting by V(irrep of first) ⊕ Std(so_q), into so.
/// Degenerate so_q (q ≤ 2) contributes trivial dimensions only.
fn irrep_plus_so(
    first: FactorSpec,
    irrep_coeffs: Vec<u64>,
    q: usize,
) -> Result<EmbeddingSpec, RhoError> {
    let (h, second) = match so_summand(q) {
        Summand::Std(f) => (
            SemisimpleAlgebra::new(&[first, f])?,
            ModuleExpr::Std(1),
        ),
        Summand::Triv(d) => (SemisimpleAlgebra::new(&[first])?, ModuleExpr::Triv(d)),
        Summand::StdPlusDual(_) => unreachable!(),
    };
    let v = ModuleExpr::DirectSum(vec![ModuleExpr::Irrep(0, irrep_coeffs), second]);
    EmbeddingSpec::new(h, v, AmbientKind::So)
}

fn need(params: &[usize], k: usize, id: &str) -> Result<(), RhoError> {
    if params.len() != k {
        return Err(RhoError::InvalidInput(format!(
            "proposition {id} takes {k} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

/// Build the exact embedding spec a proposition family addresses.
///
/// Supported ids: `red2.1..3` (p,q with p ≥ q ≥ 1), `incl.1..4` (p),
/// `tens.1..4` (p,q), `si.1` (p) / `si.2` / `si.3` (no params),
/// `red3.1..3` (n, n_1, …, n_r), `redu.1..3` (p,q), `redu.4` (p),
/// `redex.1..2` (q), `khcomp` (p,q with p ≥ q ≥ 1), and `final.1..3`
/// (p,q; the boundary product subalgebra).
pub fn proposition_family(id: &str, params: &[usize]) -> Result<EmbeddingSpec, RhoError> {
    let bad = |msg: &str| Err(RhoError::InvalidInput(format!("{id}: {msg}")));
    match id {
        "red2.1" | "final.1" => {
            need(params, 2, id)?;
            let (p, q) = (params[0], params[1]);
            if p < q || q < 1 {
                return bad("requires p ≥ q ≥ 1");
            }
            build_spec(AmbientKind::Sl, &[sl_summand(p), sl_summand(q)])
        }
        "red2.2" | "final.2" => {
            need(params, 2, id)?;
            let (p, q) = (params[0], params[1]);
            if p < q || q < 1 {
                return bad("requires p ≥ q ≥ 1");
            }
            build_spec(AmbientKind::So, &[so_summand(p), so_summand(q)])
        }
        "red2.3" | "final.3" => {
            need(params, 2, id)?;
            let (p, q) = (params[0], params[1]);
            if p < q || q < 1 {
                return bad("requires p ≥ q ≥ 1");
            }
            build_spec(AmbientKind::Sp, &[sp_summand(p), sp_summand(q)])
        }
        "incl.1" => {
            need(params, 1, id)?;
            build_spec(AmbientKind::Sl, &[so_summand(params[0])])
        }
        "incl.2" => {
            need(params, 1, id)?;
            build_spec(AmbientKind::Sl, &[sp_summand(params[0])])
        }
        "incl.3" => {
            need(params, 1, id)?;
            build_spec(
                AmbientKind::So,
                &[Summand::StdPlusDual(FactorSpec::Sl(params[0]))],
            )
        }
        "incl.4" => {
            need(params, 1, id)?;
            build_spec(
                AmbientKind::Sp,
                &[Summand::StdPlusDual(FactorSpec::Sl(params[0]))],
            )
        }
        "tens.1" => {
            need(params, 2, id)?;
            let (p, q) = (params[0], params[1]);
            if p < 2 || q < 2 {
                return bad("requires p, q > 1");
            }
            build_tensor_spec(AmbientKind::Sl, FactorSpec::Sl(p), FactorSpec::Sl(q))
        }
        "tens.2" => {
            need(params, 2, id)?;
            let (p, q) = (params[0], params[1]);
            if p < 3 || q < 3 {
                return bad("requires p, q ≥ 3 (so_1/so_2 are not semisimple)");
            }
            build_tensor_spec(AmbientKind::So, FactorSpec::So(p), FactorSpec::So(q))
        }
        "tens.3" => {
            need(params, 2, id)?;
            let (p, q) = (params[0], params[1]);
            if q < 2 {
                return bad("requires q > 1");
            }
            build_tensor_spec(AmbientKind::So, FactorSpec::Sp(p), FactorSpec::Sp(q))
        }
        "tens.4" => {
            need(params, 2, id)?;
            let (p, q) = (params[0], params[1]);
            if q < 3 {
                return bad("requires q ≥ 3 (so_1/so_2 are not semisimple)");
            }
            build_tensor_spec(AmbientKind::Sp, FactorSpec::Sp(p), FactorSpec::So(q))
        }
        "si.1" => {
            need(params, 1, id)?;
            build_spec(AmbientKind::Sl, &[sp_summand(params[0])])
        }
        "si.2" => {
            need(params, 0, id)?;
            let h = SemisimpleAlgebra::new(&[FactorSpec::G2])?;
            EmbeddingSpec::new(h, ModuleExpr::Irrep(0, vec![1, 0]), AmbientKind::So)
        }
        "si.3" => {
            need(params, 0, id)?;
            let h = SemisimpleAlgebra::new(&[FactorSpec::So(7)])?;
            EmbeddingSpec::new(h, ModuleExpr::Irrep(0, vec![0, 0, 1]), AmbientKind::So)
        }
        "red3.1" | "red3.2" | "red3.3" => {
            if params.len() < 2 {
                return bad("requires n followed by the part sizes n_1 ≥ … ≥ n_r");
            }
            let n = params[0];
            let parts = &params[1..];
            if parts.windows(2).any(|w| w[0] < w[1]) || parts.iter().any(|&x| x < 1) {
                return bad("part sizes must be non-increasing and ≥ 1");
            }
            let total: usize = parts.iter().sum();
            if total > n {
                return bad("part sizes exceed n");
            }
            let pad = n - total;
            let mut summands: Vec<Summand> = Vec::new();
            match id {
                "red3.1" => {
                    for &ni in parts {
                        summands.push(sl_summand(ni));
                    }
                    summands.push(Summand::Triv(pad as u64));
                    build_spec(AmbientKind::Sl, &summands)
                }
                "red3.2" => {
                    for &ni in parts {
                        summands.push(so_summand(ni));
                    }
                    summands.push(Summand::Triv(pad as u64));
                    build_spec(AmbientKind::So, &summands)
                }
                _ => {
                    for &ni in parts {
                        summands.push(sp_summand(ni));
                    }
                    summands.push(Summand::Triv(2 * pad as u64));
                    build_spec(AmbientKind::Sp, &summands)
                }
            }
        }
        "redu.1" => {
            need(params, 2, id)?;
            let (p, q) = (params[0], params[1]);
            build_spec(AmbientKind::Sl, &[sp_summand(p), sl_summand(q)])
        }
        "redu.2" => {
            need(params, 2, id)?;
            let (p, q) = (params[0], params[1]);
            if p < 2 {
                return bad("requires p ≥ 2 (sl_1 leaves no semisimple part)");
            }
            build_spec(
                AmbientKind::So,
                &[Summand::StdPlusDual(FactorSpec::Sl(p)), so_summand(q)],
            )
        }
        "redu.3" => {
            need(params, 2, id)?;
            let (p, q) = (params[0], params[1]);
            if p < 2 {
                return bad("requires p ≥ 2 (sl_1 leaves no semisimple part)");
            }
            build_spec(
                AmbientKind::Sp,
                &[Summand::StdPlusDual(FactorSpec::Sl(p)), sp_summand(q)],
            )
        }
        "redu.4" => {
            need(params, 1, id)?;
            let p = params[0];
            if p < 2 {
                return bad("requires p ≥ 2");
            }
            let h = SemisimpleAlgebra::new(&[FactorSpec::Sp(p)])?;
            let v = ModuleExpr::DirectSum(vec![ModuleExpr::Std(0), ModuleExpr::Std(0)]);
            EmbeddingSpec::new(h, v, AmbientKind::So)
        }
        "redex.1" => {
            need(params, 1, id)?;
            irrep_plus_so(FactorSpec::G2, vec![1, 0], params[0])
        }
        "redex.2" => {
            need(params, 1, id)?;
            irrep_plus_so(FactorSpec::So(7), vec![0, 0, 1], params[0])
        }
        "khcomp" => {
            need(params, 2, id)?;
            let (p, q) = (params[0], params[1]);
            if q < 1 {
                return bad("requires q ≥ 1");
            }
            let h = SemisimpleAlgebra::new(&[FactorSpec::Sp(q)])?;
            let v = ModuleExpr::DirectSum(vec![
                ModuleExpr::Std(0),
                ModuleExpr::Triv(2 * p as u64),
            ]);
            EmbeddingSpec::new(h, v, AmbientKind::Sp)
        }
        _ => Err(RhoError::InvalidInput(format!(
            "unknown proposition id '{id}'"
        ))),
    }
}

/// Convenience re-export used by the classifier: the defining dimension of a
/// classical ambient algebra.
pub fn ambient_defining_dim(kind: AmbientKind, n: usize) -> usize {
    match kind {
        AmbientKind::Sl | AmbientKind::So => n,
        AmbientKind::Sp => 2 * n,
    }
}

/// The h side of a catalog entry, for display and dedup.
pub fn describe_entry(e: &CatalogEntry) -> String {
    format!(
        "{}:{} ⊃ {}",
        e.ambient.0,
        e.ambient.1,
        e.description
    )
}

pub type SharedAlgebra = Arc<SemisimpleAlgebra>;
