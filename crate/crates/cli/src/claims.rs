//! `verify` claims. Sub-checks fan out over rayon; output order is fixed.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use jacobi_gkn::catalog::{jacobi_poly, phi, psi};
use jacobi_gkn::domains::JacobiPower;
use jacobi_gkn::gkn::{float_preview, BoundaryConditionSet};
use jacobi_gkn::{Endpoint, Error, Params, Result, TermFunction};

pub const CLAIMS: [&str; 5] = ["secondkinddefect", "overn", "m-rank", "any-jacobi", "leftdef-equal"];

#[derive(Debug, Serialize)]
pub struct ClaimOutcome {
    pub claim: String,
    pub passed: bool,
    pub evidence: Value,
    pub counterexample: Option<Value>,
}

fn outcome(claim: &str, checks: Vec<Value>, evidence: Value) -> ClaimOutcome {
    let counterexample = checks.iter().find(|c| c["passed"] == json!(false)).cloned();
    ClaimOutcome {
        claim: claim.into(),
        passed: counterexample.is_none(),
        evidence: json!({ "checks": checks, "summary": evidence }),
        counterexample,
    }
}

pub fn run(claim: &str, ctx: &JacobiPower, indices: Option<Vec<u32>>, seed: u64) -> Result<ClaimOutcome> {
    match claim {
        "secondkinddefect" => second_kind_defect(ctx),
        "overn" => over_n(ctx),
        "m-rank" => m_rank(ctx),
        "any-jacobi" => any_jacobi(ctx, indices, seed),
        "leftdef-equal" => leftdef_equal(ctx),
        other => Err(Error::InvalidParameter(format!(
            "unknown claim {other:?}; expected one of {}",
            CLAIMS.join(", ")
        ))),
    }
}

fn second_kind_defect(ctx: &JacobiPower) -> Result<ClaimOutcome> {
    let n = ctx.n();
    let p = ctx.params();
    p.require_both_positive()?;
    let mut checks = Vec::new();
    for side in Endpoint::BOTH {
        let m = ctx.pairing_matrix(side)?;
        for y in 0..n {
            let v = m.phi_psi(y as usize, (n - 1 - y) as usize);
            checks.push(json!({
                "check": "pairing-nonzero",
                "side": side,
                "s": y,
                "t": n - 1 - y,
                "value": v,
                "preview": v.to_f64(),
                "passed": !v.is_zero(),
            }));
        }
    }
    let psis: Vec<(Endpoint, u32, TermFunction)> = Endpoint::BOTH
        .iter()
        .flat_map(|&e| (0..n).map(move |j| (e, j)))
        .map(|(e, j)| psi(j, e, p).map(|f| (e, j, f)))
        .collect::<Result<_>>()?;
    let minimal: Vec<Value> = psis
        .par_iter()
        .map(|(e, j, f)| {
            ctx.in_minimal(f).map(|inside| {
                json!({ "check": "not-minimal", "function": format!("psi{}:{j}", sign(*e)), "in_minimal": inside, "passed": !inside })
            })
        })
        .collect::<Result<_>>()?;
    checks.extend(minimal);
    Ok(outcome("secondkinddefect", checks, json!({ "n": n })))
}

fn sign(e: Endpoint) -> &'static str {
    match e {
        Endpoint::Plus => "+",
        Endpoint::Minus => "-",
    }
}

fn over_n(ctx: &JacobiPower) -> Result<ClaimOutcome> {
    let n = ctx.n() as usize;
    let mut checks = Vec::new();
    for side in Endpoint::BOTH {
        let m = ctx.pairing_matrix(side)?;
        for s in 0..n {
            for t in (n.saturating_sub(s))..n {
                let v = m.phi_psi(s, t);
                checks.push(json!({ "side": side, "s": s, "t": t, "value": v, "passed": v.is_zero() }));
            }
        }
    }
    let count = checks.len();
    Ok(outcome("overn", checks, json!({ "pairings_checked": count })))
}

fn m_rank(ctx: &JacobiPower) -> Result<ClaimOutcome> {
    let expected = 2 * ctx.n() as usize;
    let mut checks = Vec::new();
    let mut ranks = serde_json::Map::new();
    for side in Endpoint::BOTH {
        let m = ctx.pairing_matrix(side)?;
        let rank = m.rank();
        ranks.insert(side.label().to_string(), json!(rank));
        checks.push(json!({
            "side": side,
            "labels": m.labels,
            "matrix": m.entries,
            "preview": float_preview(&m.entries),
            "rank": rank,
            "passed": rank == expected,
        }));
    }
    Ok(outcome("m-rank", checks, json!({ "expected": expected, "ranks": ranks })))
}

/// `n` distinct indices from `0..=12`, drawn from the seed.
pub fn random_indices(n: u32, seed: u64) -> Vec<u32> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<u32> = (0..=12).collect();
    pool.shuffle(&mut rng);
    let mut out: Vec<u32> = pool.into_iter().take(n as usize).collect();
    out.sort_unstable();
    out
}

fn any_jacobi(ctx: &JacobiPower, indices: Option<Vec<u32>>, seed: u64) -> Result<ClaimOutcome> {
    let n = ctx.n();
    let indices = indices.unwrap_or_else(|| random_indices(n, seed));
    if indices.len() != n as usize {
        return Err(Error::InvalidParameter(format!(
            "--indices needs exactly {n} entries, got {}",
            indices.len()
        )));
    }
    let first: Vec<u32> = (0..n).collect();
    let w1 = BoundaryConditionSet::jacobi(ctx, &first);
    let w2 = BoundaryConditionSet::jacobi(ctx, &indices);
    let (equal, reason) = match ctx.domain_equal(&w1, &w2) {
        Ok(eq) => (eq, None),
        Err(Error::PreconditionViolated(r)) => (false, Some(r)),
        Err(e) => return Err(e),
    };
    let check = json!({ "first": first, "indices": indices, "domain_equal": equal, "reason": reason, "passed": equal });
    Ok(outcome("any-jacobi", vec![check], json!({ "n": n })))
}

/// φ_j, ψ_j at both ends for `j < n+3`, and `P_m` for `m ≤ 6`.
pub fn leftdef_catalog(n: u32, p: &Params) -> Result<Vec<(String, TermFunction)>> {
    let mut fns = Vec::new();
    for e in Endpoint::BOTH {
        for j in 0..n + 3 {
            fns.push((format!("phi{}:{j}", sign(e)), phi(j, e)));
            fns.push((format!("psi{}:{j}", sign(e)), psi(j, e, p)?));
        }
    }
    for m in 0..=6 {
        fns.push((format!("P:{m}"), jacobi_poly(m, p)));
    }
    Ok(fns)
}

fn leftdef_equal(ctx: &JacobiPower) -> Result<ClaimOutcome> {
    ctx.params().require_both_positive()?;
    let fns = leftdef_catalog(ctx.n(), ctx.params())?;
    let rows: Vec<(String, jacobi_gkn::domains::LeftDefFlags)> = fns
        .par_iter()
        .map(|(label, f)| ctx.leftdef_flags(f).map(|flags| (label.clone(), flags)))
        .collect::<Result<_>>()?;
    let mut separations = Vec::new();
    let checks = rows
        .into_iter()
        .map(|(label, flags)| {
            let agree = flags.all_agree();
            let a_only = !agree && flags.only_a_separates();
            if a_only {
                separations.push(label.clone());
            }
            json!({ "function": label, "flags": flags, "a_separates_from_lw": a_only, "passed": agree || a_only })
        })
        .collect();
    Ok(outcome(
        "leftdef-equal",
        checks,
        json!({ "functions": fns.len(), "open_question_separations": separations }),
    ))
}
