//! rho-kit command-line front end.

use clap::{Parser, Subcommand};
use rho_kit::algebra::{Point, SemisimpleAlgebra};
use rho_kit::classify::{self, ClassificationRow};
use rho_kit::embedding::{ambient_weight_multiset, AmbientKind, EmbeddingSpec, ModuleExpr};
use rho_kit::rat::{format_rat, Rat};
use rho_kit::rho::{
    decide_difference, difference_function, rho_eval, Relation, Verdict, VerdictKind,
};
use rho_kit::spec_text::{pair_string, parse_algebra, parse_spec};
use rho_kit::weights::WeightMultiset;
use rho_kit::RhoError;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "rho-kit",
    about = "Exact ρ-function comparison for semisimple subalgebras of classical Lie algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide the trichotomy for one pair specification.
    Check {
        /// Pair in the grammar g=<ambient>; h=<algebra>; V=<modexpr>.
        spec: String,
        /// Emit the verdict as JSON.
        #[arg(long)]
        json: bool,
        /// Run parsing and embedding validation only (no LP).
        #[arg(long)]
        validate_only: bool,
    },
    /// List all dominated-but-not-strict pairs inside one ambient algebra.
    Classify {
        /// Ambient algebra, e.g. "sl:6", "so:8", "sp:3".
        ambient: String,
        /// Cap on the number of simple factors of h.
        #[arg(long)]
        max_depth: Option<usize>,
        /// Emit rows as JSON lines.
        #[arg(long)]
        json: bool,
    },
    /// Compare the classifier against the golden classification table.
    VerifyTable {
        /// Bounds file: lines "sl:4-9", "so:7-11", "sp:2" (default: the
        /// built-in bounds sl 4-9, so 7-11, sp 2-6).
        #[arg(long)]
        bounds: Option<String>,
        /// Golden table file (JSON lines; default: built-in).
        #[arg(long)]
        golden: Option<String>,
        /// Emit the diff report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Evaluate ρ-functions at a point of a(h).
    Rho {
        /// A full pair spec, or a bare algebra (then only ρ_h is printed).
        spec: String,
        /// The point Y, comma-separated exact rationals in a(h)'s ambient
        /// coordinates.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        /// Emit values as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Dump the weight system of one irreducible module.
    Weights {
        /// The algebra, e.g. "sl:3" or "g2".
        algebra: String,
        /// ϖ-coefficients, comma-separated, e.g. "1,0".
        coeffs: String,
        /// 1-based factor index for multi-factor algebras.
        #[arg(long, default_value_t = 1)]
        factor: usize,
        /// Emit weights as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Dump the maximal-subalgebra catalog of one classical algebra.
    Catalog {
        /// Ambient algebra, e.g. "sl:6".
        ambient: String,
        /// Emit entries as JSON lines.
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, RhoError> {
    match cli.command {
        Command::Check {
            spec,
            json,
            validate_only,
        } => cmd_check(&spec, json, validate_only),
        Command::Classify {
            ambient,
            max_depth,
            json,
        } => cmd_classify(&ambient, max_depth, json),
        Command::VerifyTable {
            bounds,
            golden,
            json,
        } => cmd_verify_table(bounds.as_deref(), golden.as_deref(), json),
        Command::Rho { spec, at, json } => cmd_rho(&spec, &at, json),
        Command::Weights {
            algebra,
            coeffs,
            factor,
            json,
        } => cmd_weights(&algebra, &coeffs, factor, json),
        Command::Catalog { ambient, json } => cmd_catalog(&ambient, json),
    }
}

// ---------------------------------------------------------------------------
// Helpers.
// ---------------------------------------------------------------------------

fn parse_ambient(text: &str) -> Result<(AmbientKind, usize), RhoError> {
    let t = text.trim();
    let (kind, rest) = if let Some(r) = t.strip_prefix("sl") {
        (AmbientKind::Sl, r)
    } else if let Some(r) = t.strip_prefix("so") {
        (AmbientKind::So, r)
    } else if let Some(r) = t.strip_prefix("sp") {
        (AmbientKind::Sp, r)
    } else {
        return Err(RhoError::InvalidInput(format!(
            "ambient {t:?} is not sl:n, so:n, or sp:n"
        )));
    };
    let rest = rest.trim().strip_prefix(':').ok_or_else(|| {
        RhoError::InvalidInput(format!("ambient {t:?} is missing \":n\""))
    })?;
    let n: usize = rest
        .trim()
        .parse()
        .map_err(|_| RhoError::InvalidInput(format!("bad ambient size {rest:?}")))?;
    Ok((kind, n))
}

fn parse_point(h: &SemisimpleAlgebra, text: &str) -> Result<Point, RhoError> {
    let coords: Result<Vec<Rat>, RhoError> = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<Rat>()
                .map_err(|e| RhoError::InvalidInput(format!("bad rational {s:?}: {e}")))
        })
        .collect();
    let coords = coords?;
    if coords.len() != h.space.dim {
        return Err(RhoError::InvalidInput(format!(
            "Y has {} coordinates, a(h) sits in R^{}",
            coords.len(),
            h.space.dim
        )));
    }
    Point::new(&h.space, coords)
}

fn verdict_name(v: &Verdict) -> &'static str {
    match v.kind {
        VerdictKind::NotDominated => "not_tempered",
        VerdictKind::DominatedWithWitness(_) => "tempered_not_strict",
        VerdictKind::StrictlyDominated => "square_integrable_strict",
    }
}

fn rats(v: &[Rat]) -> Vec<String> {
    v.iter().map(format_rat).collect()
}

fn witness_json(v: &Verdict) -> serde_json::Value {
    match &v.kind {
        VerdictKind::DominatedWithWitness(wc) => {
            let mut eqs = Vec::new();
            let mut ineqs = Vec::new();
            for (w, rel) in &wc.hrep {
                match rel {
                    Relation::Eq => eqs.push(rats(&w.coords)),
                    Relation::Ge => ineqs.push(rats(&w.coords)),
                }
            }
            serde_json::json!({
                "rays": wc.rays.iter().map(|p| rats(&p.coords)).collect::<Vec<_>>(),
                "equalities": eqs,
                "inequalities": ineqs,
            })
        }
        _ => serde_json::Value::Null,
    }
}

fn verdict_json(spec: &EmbeddingSpec, v: &Verdict) -> serde_json::Value {
    serde_json::json!({
        "spec": pair_string(spec),
        "verdict": verdict_name(v),
        "min_value": format_rat(&v.exact_min),
        "minimizer": rats(&v.minimizer.coords),
        "witness": witness_json(v),
    })
}

fn print_verdict_text(spec: &EmbeddingSpec, v: &Verdict) {
    println!("spec:    {}", pair_string(spec));
    println!("verdict: {}", verdict_name(v));
    println!("min D:   {}", format_rat(&v.exact_min));
    println!(
        "at Y:    ({})",
        rats(&v.minimizer.coords).join(", ")
    );
    if let VerdictKind::DominatedWithWitness(wc) = &v.kind {
        println!("witness cone rays (a(h) ambient coordinates):");
        for r in &wc.rays {
            println!("  ({})", rats(&r.coords).join(", "));
        }
        for (w, rel) in &wc.hrep {
            let op = match rel {
                Relation::Eq => "= 0",
                Relation::Ge => ">= 0",
            };
            println!("  constraint ({}) {op}", rats(&w.coords).join(", "));
        }
    }
}

/// ρ of h itself: half the sum of |α(Y)| over all roots of h.
fn h_root_multiset(h: &SemisimpleAlgebra) -> WeightMultiset {
    let mut m = WeightMultiset::new();
    for (fi, f) in h.factors.iter().enumerate() {
        for r in &f.positive_roots {
            let lifted = h.lift_covector(fi, r);
            m.insert(lifted.neg(), 1);
            m.insert(lifted, 1);
        }
    }
    m
}

// ---------------------------------------------------------------------------
// Commands.
// ---------------------------------------------------------------------------

fn cmd_check(text: &str, json: bool, validate_only: bool) -> Result<ExitCode, RhoError> {
    let spec = parse_spec(text)?;
    if validate_only {
        if json {
            println!(
                "{}",
                serde_json::json!({"spec": pair_string(&spec), "valid": true})
            );
        } else {
            println!("valid: {}", pair_string(&spec));
        }
        return Ok(ExitCode::SUCCESS);
    }
    let d = difference_function(&spec)?;
    let v = decide_difference(&d)?;
    if json {
        println!("{}", verdict_json(&spec, &v));
    } else {
        print_verdict_text(&spec, &v);
    }
    Ok(ExitCode::SUCCESS)
}

fn row_json(r: &ClassificationRow) -> serde_json::Value {
    let mut v = verdict_json(&r.spec, &r.verdict);
    v["g"] = serde_json::json!(format!(
        "{}:{}",
        match r.ambient.0 {
            AmbientKind::Sl => "sl",
            AmbientKind::So => "so",
            AmbientKind::Sp => "sp",
        },
        r.ambient.1
    ));
    v["h"] = serde_json::json!(r.h);
    v["V"] = serde_json::json!(r.v);
    v
}

fn cmd_classify(
    ambient: &str,
    max_depth: Option<usize>,
    json: bool,
) -> Result<ExitCode, RhoError> {
    let (kind, n) = parse_ambient(ambient)?;
    let rows = classify::classify(kind, n, max_depth)?;
    if json {
        for r in &rows {
            println!("{}", row_json(r));
        }
    } else {
        if rows.is_empty() {
            println!("no dominated-but-not-strict pairs in {ambient}");
        }
        for r in &rows {
            println!("h={}; V={}", r.h, r.v);
            if let VerdictKind::DominatedWithWitness(wc) = &r.verdict.kind {
                let rays: Vec<String> = wc
                    .rays
                    .iter()
                    .map(|p| format!("({})", rats(&p.coords).join(", ")))
                    .collect();
                println!("  witness rays: {}", rays.join("  "));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_bounds(text: &str) -> Result<Vec<(AmbientKind, usize)>, RhoError> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (kind_part, range) = line.split_once(':').ok_or_else(|| {
            RhoError::InvalidInput(format!("bounds line {line:?}: expected kind:lo-hi"))
        })?;
        let kind = match kind_part.trim() {
            "sl" => AmbientKind::Sl,
            "so" => AmbientKind::So,
            "sp" => AmbientKind::Sp,
            other => {
                return Err(RhoError::InvalidInput(format!(
                    "bounds line {line:?}: unknown kind {other:?}"
                )))
            }
        };
        let (lo, hi) = match range.split_once('-') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (range.trim(), range.trim()),
        };
        let lo: usize = lo.parse().map_err(|_| {
            RhoError::InvalidInput(format!("bounds line {line:?}: bad lower bound"))
        })?;
        let hi: usize = hi.parse().map_err(|_| {
            RhoError::InvalidInput(format!("bounds line {line:?}: bad upper bound"))
        })?;
        for n in lo..=hi {
            out.push((kind, n));
        }
    }
    Ok(out)
}

fn default_bounds() -> Vec<(AmbientKind, usize)> {
    let mut v = Vec::new();
    for n in 4..=9 {
        v.push((AmbientKind::Sl, n));
    }
    for n in 7..=11 {
        v.push((AmbientKind::So, n));
    }
    for n in 2..=6 {
        v.push((AmbientKind::Sp, n));
    }
    v
}

fn cmd_verify_table(
    bounds: Option<&str>,
    golden: Option<&str>,
    json: bool,
) -> Result<ExitCode, RhoError> {
    let bounds = match bounds {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                RhoError::InvalidInput(format!("cannot read bounds file {path}: {e}"))
            })?;
            parse_bounds(&text)?
        }
        None => default_bounds(),
    };
    let golden_rows = match golden {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                RhoError::InvalidInput(format!("cannot read golden file {path}: {e}"))
            })?;
            classify::parse_golden(&text)?
        }
        None => classify::builtin_table1()?,
    };
    let report = classify::verify_table1(&bounds, &golden_rows)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else if report.is_empty() {
        println!("empty diff: all {} instances match", bounds.len());
    } else {
        for m in &report.missing {
            println!("missing:    {m}");
        }
        for m in &report.extra {
            println!("extra:      {m}");
        }
        for m in &report.mismatched {
            println!("mismatched: {m}");
        }
    }
    Ok(if report.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_rho(text: &str, at: &str, json: bool) -> Result<ExitCode, RhoError> {
    // Full pair spec, or a bare algebra.
    let spec = if text.contains("g=") {
        Some(parse_spec(text)?)
    } else {
        None
    };
    let h = match &spec {
        Some(s) => s.h.clone(),
        None => SemisimpleAlgebra::new(&parse_algebra(text)?)?,
    };
    let y = parse_point(&h, at)?;
    let rho_h = rho_eval(&h_root_multiset(&h), &y);
    let mut fields = vec![("rho_h", rho_h.clone())];
    if let Some(s) = &spec {
        let rho_g = rho_eval(&ambient_weight_multiset(s)?, &y);
        let rho_q = &rho_g - &rho_h;
        let d_val = &rho_q - &rho_h;
        fields.push(("rho_g", rho_g));
        fields.push(("rho_q", rho_q));
        fields.push(("D", d_val));
    }
    if json {
        let obj: serde_json::Map<String, serde_json::Value> = fields
            .iter()
            .map(|(k, v)| (k.to_string(), serde_json::json!(format_rat(v))))
            .collect();
        println!("{}", serde_json::Value::Object(obj));
    } else {
        for (k, v) in &fields {
            println!("{k} = {}", format_rat(v));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_weights(
    algebra: &str,
    coeffs: &str,
    factor: usize,
    json: bool,
) -> Result<ExitCode, RhoError> {
    let h = SemisimpleAlgebra::new(&parse_algebra(algebra)?)?;
    if factor == 0 || factor > h.user_factors.len() {
        return Err(RhoError::InvalidInput(format!(
            "factor index {factor} out of range (1..={})",
            h.user_factors.len()
        )));
    }
    let cs: Result<Vec<u64>, RhoError> = coeffs
        .split(',')
        .map(|s| {
            s.trim().parse::<u64>().map_err(|_| {
                RhoError::InvalidInput(format!("bad coefficient {s:?}"))
            })
        })
        .collect();
    let expr = ModuleExpr::Irrep(factor - 1, cs?);
    let m = rho_kit::embedding::module_weights(&h, &expr)?;
    if json {
        let rows: Vec<serde_json::Value> = m
            .entries
            .iter()
            .map(|(w, mult)| serde_json::json!({"weight": rats(&w.coords), "mult": mult}))
            .collect();
        println!("{}", serde_json::json!(rows));
    } else {
        println!("dim = {}", m.total_multiplicity());
        for (w, mult) in &m.entries {
            println!("({})  x{mult}", rats(&w.coords).join(", "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_catalog(ambient: &str, json: bool) -> Result<ExitCode, RhoError> {
    let (kind, n) = parse_ambient(ambient)?;
    let mut entries = rho_kit::catalog::maximal_reducible(kind, n)?;
    entries.extend(rho_kit::catalog::maximal_irreducible_nonsimple(kind, n)?);
    for e in &entries {
        if json {
            println!(
                "{}",
                serde_json::json!({
                    "ambient": ambient,
                    "h": e.description,
                    "spec": pair_string(&e.spec),
                })
            );
        } else {
            println!("{} -> {}", e.description, pair_string(&e.spec));
        }
    }
    Ok(ExitCode::SUCCESS)
}
