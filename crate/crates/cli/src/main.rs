//! `jacobi-gkn`: scriptable verification commands with JSON output.

mod claims;
mod funcspec;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use jacobi_gkn::domains::JacobiPower;
use jacobi_gkn::exact::{AlgebraicValue, GaussianRational, Rational};
use jacobi_gkn::gkn::{BoundaryConditionSet, ExtensionMatrix};
use jacobi_gkn::numerics::verify::{default_probe_ks, limit_probe};
use jacobi_gkn::operator::{apply_ln_composed, apply_ln_symmetric, derive_symmetric_coefficients};
use jacobi_gkn::sesqui::SesquilinearForm;
use jacobi_gkn::{Endpoint, Error, Params, TermFunction};

use funcspec::{parse_function, render};

const FUNCTION_HELP: &str = "Function specs: phi+:j, phi-:j, psi+:j, psi-:j, P:m, const:c, \
terms:[c,a,b;...] meaning Σ c(1−x)^a(1+x)^b. Coefficients are Gaussian rationals such as 1/2 or 2-3i.";

#[derive(Parser, Debug)]
#[command(name = "jacobi-gkn", version, about = "Exact verification for powers of the Jacobi operator", after_help = FUNCTION_HELP)]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone, Serialize)]
struct RunConfig {
    /// α as p/q
    #[arg(long, global = true, default_value = "1/2", value_parser = parse_rational)]
    #[serde(serialize_with = "display")]
    alpha: Rational,
    /// β as p/q
    #[arg(long, global = true, default_value = "1/2", value_parser = parse_rational)]
    #[serde(serialize_with = "display")]
    beta: Rational,
    /// Power of the operator
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    /// Working precision for numeric cross-checks
    #[arg(long, global = true, env = "JACOBI_GKN_PRECISION", default_value_t = 256)]
    precision_bits: usize,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
    /// Seed for randomized sweeps
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

fn display<S: serde::Serializer, T: std::fmt::Display>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e| format!("{e}"))
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize, PartialEq)]
#[serde(rename_all = "lowercase")]
enum Output {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
enum ApplyMethod {
    Composed,
    Symmetric,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
enum DomainCheck {
    Maximal,
    Minimal,
    Report,
    Leftdef,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
enum Side {
    #[value(name = "+1")]
    Plus,
    #[value(name = "-1")]
    Minus,
    #[value(name = "both")]
    Both,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "command", rename_all = "lowercase")]
enum Command {
    /// Apply ℓⁿ to a function
    Apply {
        function: String,
        #[arg(long, value_enum, default_value_t = ApplyMethod::Composed)]
        method: ApplyMethod,
    },
    /// Verify a named claim: secondkinddefect, overn, m-rank, any-jacobi, leftdef-equal
    Verify {
        claim: String,
        /// Comma-separated Jacobi indices for any-jacobi; drawn from --seed when absent
        #[arg(long, value_delimiter = ',')]
        indices: Option<Vec<u32>>,
    },
    /// Defect pairing matrix
    Matrix {
        #[arg(long, value_enum, default_value_t = Side::Both)]
        side: Side,
    },
    /// Boundary form [f, g]_n with numeric limit probes
    Sesqui { f: String, g: String },
    /// Domain membership checks
    Domain {
        #[arg(long, value_enum, default_value_t = DomainCheck::Report)]
        check: DomainCheck,
        function: String,
    },
    /// Boundary conditions of the extension given by a unitary matrix
    Extension {
        /// JSON array of rows of Gaussian rationals, e.g. '[["1","0"],["0","1"]]'
        #[arg(long)]
        unitary: String,
    },
}

/// Result of one command: payload plus pass/fail.
struct Outcome {
    result: Value,
    passed: bool,
}

fn ok(result: Value) -> Result<Outcome, Error> {
    Ok(Outcome { result, passed: true })
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::InvalidParameter(_) | Error::NotUnitary => 2,
        Error::DegenerateParameter(_) => 3,
        _ => 1,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidParameter(_) => "InvalidParameter",
        Error::DegenerateParameter(_) => "DegenerateParameter",
        Error::IndeterminateLimit(_) => "IndeterminateLimit",
        Error::SingularSystem(_) => "SingularSystem",
        Error::VerificationFailed(_) => "VerificationFailed",
        Error::PreconditionViolated(_) => "PreconditionViolated",
        Error::NotUnitary => "NotUnitary",
        Error::NoGlobalForm => "NoGlobalForm",
        Error::ToleranceNotMet { .. } => "ToleranceNotMet",
        Error::Parse(_) => "ParseError",
    }
}

fn multiple_of(input: &TermFunction, output: &TermFunction) -> Option<GaussianRational> {
    if output.is_zero() {
        return Some(GaussianRational::zero());
    }
    let t0 = input.germ_plus().terms().first()?;
    let t1 = output.germ_plus().terms().iter().find(|t| t.a == t0.a && t.b == t0.b)?;
    let c = &t1.coeff / &t0.coeff;
    (input.scale(&c) == *output).then_some(c)
}

fn cmd_apply(cfg: &RunConfig, p: &Params, function: &str, method: ApplyMethod) -> Result<Outcome, Error> {
    let f = parse_function(function, p)?;
    let out = match method {
        ApplyMethod::Composed => apply_ln_composed(&f, cfg.n, p),
        ApplyMethod::Symmetric => apply_ln_symmetric(&f, &derive_symmetric_coefficients(cfg.n, p)?, p)?,
    };
    let multiple = multiple_of(&f, &out);
    ok(json!({
        "input": f,
        "output": out,
        "output_text": render(&out),
        "is_zero": out.is_zero(),
        "multiple_of_input": multiple,
    }))
}

fn cmd_matrix(ctx: &JacobiPower, side: Side) -> Result<Outcome, Error> {
    let sides: Vec<Endpoint> = match side {
        Side::Plus => vec![Endpoint::Plus],
        Side::Minus => vec![Endpoint::Minus],
        Side::Both => Endpoint::BOTH.to_vec(),
    };
    let mats = sides
        .into_iter()
        .map(|s| {
            let m = ctx.pairing_matrix(s)?;
            let rank = m.rank();
            Ok(json!({ "matrix": m, "rank": rank }))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    ok(json!({ "matrices": mats }))
}

fn preview(v: &AlgebraicValue) -> [f64; 2] {
    let (re, im) = v.to_f64();
    [re, im]
}

fn cmd_sesqui(cfg: &RunConfig, p: &Params, f: &str, g: &str) -> Result<Outcome, Error> {
    let (f, g) = (parse_function(f, p)?, parse_function(g, p)?);
    let form = SesquilinearForm::new(cfg.n, p)?;
    let r = form.classify(&f, &g);
    let expr = form.expression(&f, &g);
    let ks = default_probe_ks();
    let probes: Vec<_> = Endpoint::BOTH
        .iter()
        .map(|&e| limit_probe(&expr, e, &ks, cfg.precision_bits, 1e-10))
        .collect();
    let agree = probes.iter().all(|p| p.passed);
    Ok(Outcome {
        passed: agree && r.full.is_some(),
        result: json!({
            "at_plus": r.at_plus,
            "at_minus": r.at_minus,
            "full": r.full,
            "full_preview": r.full.as_ref().map(preview),
            "probes": probes,
        }),
    })
}

fn cmd_domain(ctx: &JacobiPower, check: DomainCheck, function: &str) -> Result<Outcome, Error> {
    let f = parse_function(function, ctx.params())?;
    let (value, passed) = match check {
        DomainCheck::Maximal => {
            let v = ctx.in_maximal(&f);
            (json!(v), v)
        }
        DomainCheck::Minimal => {
            let v = ctx.in_minimal(&f)?;
            (json!(v), v)
        }
        DomainCheck::Report => (serde_json::to_value(ctx.smoothness_report(&f)?).unwrap_or(Value::Null), true),
        DomainCheck::Leftdef => {
            let flags = ctx.leftdef_flags(&f)?;
            (serde_json::to_value(flags).unwrap_or(Value::Null), flags.all_agree())
        }
    };
    Ok(Outcome {
        result: json!({ "check": check, "function": f, "value": value }),
        passed,
    })
}

fn cmd_extension(ctx: &JacobiPower, unitary: &str) -> Result<Outcome, Error> {
    let rows: Vec<Vec<String>> = serde_json::from_str(unitary)
        .map_err(|e| jacobi_gkn::ParseError::Scalar(format!("unitary: {e}")))?;
    let entries = rows
        .iter()
        .map(|r| r.iter().map(|s| s.parse::<GaussianRational>().map(AlgebraicValue::from)).collect())
        .collect::<Result<Vec<Vec<AlgebraicValue>>, _>>()?;
    let u = ExtensionMatrix::new(ctx.n(), entries)?;
    let w: BoundaryConditionSet = ctx.extension_from_unitary(&u)?;
    let glazman = ctx.glazman_symmetry_check(&w)?;
    let independent = ctx.lin_indep_mod_minimal(&w)?;
    Ok(Outcome {
        passed: glazman && independent,
        result: json!({
            "unitary": u,
            "conditions": w,
            "glazman": glazman,
            "linearly_independent": independent,
        }),
    })
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let cfg = &cli.config;
    let p = Params::new(cfg.alpha.clone(), cfg.beta.clone())?;
    let ctx = || JacobiPower::new(cfg.n, &p);
    match &cli.command {
        Command::Apply { function, method } => cmd_apply(cfg, &p, function, *method),
        Command::Verify { claim, indices } => {
            let out = claims::run(claim, &ctx()?, indices.clone(), cfg.seed)?;
            Ok(Outcome {
                passed: out.passed,
                result: serde_json::to_value(&out).unwrap_or(Value::Null),
            })
        }
        Command::Matrix { side } => cmd_matrix(&ctx()?, *side),
        Command::Sesqui { f, g } => cmd_sesqui(cfg, &p, f, g),
        Command::Domain { check, function } => cmd_domain(&ctx()?, *check, function),
        Command::Extension { unitary } => cmd_extension(&ctx()?, unitary),
    }
}

fn print_text(doc: &Value) {
    if let Value::Object(map) = doc {
        for (k, v) in map {
            match v {
                Value::Object(inner) if k == "result" => {
                    for (ik, iv) in inner {
                        println!("{ik}: {iv}");
                    }
                }
                _ => println!("{k}: {v}"),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut config = serde_json::to_value(&cli.config).expect("serializable");
    config["invocation"] = serde_json::to_value(&cli.command).expect("serializable");
    let (doc, code) = match run(&cli) {
        Ok(out) => (
            json!({ "schema": 1, "config": config, "passed": out.passed, "result": out.result }),
            if out.passed { 0 } else { 1 },
        ),
        Err(e) => {
            eprintln!("error: {e}");
            let code = exit_code(&e);
            (
                json!({ "schema": 1, "config": config, "error": { "kind": error_kind(&e), "message": e.to_string() } }),
                code,
            )
        }
    };
    match cli.config.output {
        Output::Json => println!("{}", serde_json::to_string_pretty(&doc).expect("serializable")),
        Output::Text => print_text(&doc),
    }
    ExitCode::from(code)
}
