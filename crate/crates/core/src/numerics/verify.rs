//! Numerical cross-checks of the exact engine.

use serde::Serialize;
use serde_json::{json, Value};

use super::eval::CompiledTerms;
use super::extrapolate::wynn_epsilon;
use super::quadrature::{integrate, QuadratureResult, QuadratureSpec};
use super::real::{Complex, Real};
use crate::endpoint::{Endpoint, LimitClass, Params, Term, TermFunction};
use crate::error::{Error, Result};
use crate::exact::{GaussianRational, Rational};
use crate::operator::apply_ln_composed;
use crate::sesqui::SesquilinearForm;

/// Evidence for one numeric claim.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub claim: String,
    pub symbolic: Value,
    pub numeric: Value,
    pub abs_err: f64,
    pub rel_err: f64,
    pub spec: Value,
    pub passed: bool,
}

/// Exponents at which a fitted leading exponent counts as zero.
pub const EXPONENT_TOLERANCE: f64 = 1e-3;

pub fn complex_json(z: &Complex) -> Value {
    json!({ "re": z.re.to_decimal(), "im": z.im.to_decimal() })
}

fn weight(p: &Params) -> Term {
    Term::new(GaussianRational::one(), p.alpha().clone(), p.beta().clone())
}

/// Terms of `h` valid on the whole quadrature interval.
fn terms_on(h: &TermFunction, spec: &QuadratureSpec) -> Result<Vec<Term>> {
    if let Some(t) = h.global_terms() {
        return Ok(t.to_vec());
    }
    let half = Rational::new(1, 2);
    if spec.lo() >= &half {
        return Ok(h.germ(Endpoint::Plus).terms().to_vec());
    }
    if spec.hi() <= &-half {
        return Ok(h.germ(Endpoint::Minus).terms().to_vec());
    }
    Err(Error::NoGlobalForm)
}

fn integrate_terms(terms: &[Term], spec: &QuadratureSpec) -> Result<QuadratureResult> {
    let compiled = CompiledTerms::new(terms, spec.precision_bits);
    integrate(|x| compiled.eval(x), spec)
}

/// `⟨f, g⟩ = ∫ f ḡ w` over the quadrature interval.
pub fn weighted_integral(f: &TermFunction, g: &TermFunction, spec: &QuadratureSpec, p: &Params) -> Result<QuadratureResult> {
    let h = (f * &g.conj()).mul_term(&weight(p));
    integrate_terms(&terms_on(&h, spec)?, spec)
}

/// `⟨f, g⟩_n = ∫ ℓⁿ[f] ḡ w`.
pub fn leftdef_inner(f: &TermFunction, g: &TermFunction, n: u32, spec: &QuadratureSpec, p: &Params) -> Result<QuadratureResult> {
    if !f.has_global() || !g.has_global() {
        return Err(Error::NoGlobalForm);
    }
    weighted_integral(&apply_ln_composed(f, n, p), g, spec, p)
}

fn rel(abs: f64, scale: f64) -> f64 {
    if scale == 0.0 {
        if abs == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        abs / scale
    }
}

/// Quadrature of `(ℓⁿ[f]ḡ − f ℓⁿ[ḡ]) w` against `−[f,g]_n |_lo^hi`.
pub fn green_identity_check(
    f: &TermFunction,
    g: &TermFunction,
    n: u32,
    spec: &QuadratureSpec,
    p: &Params,
    tolerance: f64,
) -> Result<Report> {
    if !f.has_global() || !g.has_global() {
        return Err(Error::NoGlobalForm);
    }
    let gbar = g.conj();
    let lhs = &(&apply_ln_composed(f, n, p) * &gbar) - &(f * &apply_ln_composed(&gbar, n, p));
    let integrand = lhs.mul_term(&weight(p));
    let q = integrate_terms(integrand.global_terms().ok_or(Error::NoGlobalForm)?, spec)?;

    let form = SesquilinearForm::new(n, p)?;
    let expr = form.expression(f, g);
    let terms = expr.global_terms().ok_or(Error::NoGlobalForm)?;
    let compiled = CompiledTerms::new(terms, spec.precision_bits);
    let lo = Real::from_rational(spec.lo(), spec.precision_bits);
    let hi = Real::from_rational(spec.hi(), spec.precision_bits);
    let boundary = &compiled.eval(&lo) - &compiled.eval(&hi);

    let abs_err = (&q.value - &boundary).abs().to_f64();
    let scale = q.value.abs().to_f64().max(boundary.abs().to_f64());
    let rel_err = rel(abs_err, scale);
    Ok(Report {
        claim: "green-identity".into(),
        symbolic: json!({ "boundary_expression": expr, "boundary_difference": complex_json(&boundary) }),
        numeric: json!({ "quadrature": complex_json(&q.value), "error_estimate": q.error, "evaluations": q.evaluations }),
        abs_err,
        rel_err,
        spec: json!({ "n": n, "params": p, "quadrature": spec, "tolerance": tolerance }),
        passed: rel_err < tolerance || abs_err < tolerance * q.l1,
    })
}

/// Result of probing a germ along `x = ±(1 − 2^{-k})`.
#[derive(Clone, Debug, Serialize)]
pub struct LimitProbe {
    pub endpoint: Endpoint,
    pub ks: Vec<u32>,
    pub fitted_exponent: Option<f64>,
    pub class: &'static str,
    pub value: Option<[f64; 2]>,
    #[serde(skip)]
    pub value_exact: Option<Complex>,
    pub extrapolation_error: f64,
}

pub fn default_probe_ks() -> Vec<u32> {
    (10..=40).collect()
}

/// Numerical limit of `expr` at `endpoint`.
pub fn probe(expr: &TermFunction, endpoint: Endpoint, ks: &[u32], precision: usize) -> LimitProbe {
    let compiled = CompiledTerms::new(expr.germ(endpoint).terms(), precision);
    let two = Real::from_i64(2, precision);
    let samples: Vec<Complex> = ks
        .iter()
        .map(|&k| {
            let t = Real::pow2i(-(k as i64), precision);
            let far = &two - &t;
            match endpoint {
                Endpoint::Plus => compiled.eval_uv(&t, &far),
                Endpoint::Minus => compiled.eval_uv(&far, &t),
            }
        })
        .collect();
    let zero_probe = |class| LimitProbe {
        endpoint,
        ks: ks.to_vec(),
        fitted_exponent: None,
        class,
        value: None,
        value_exact: None,
        extrapolation_error: 0.0,
    };
    if samples.iter().all(|s| s.re.is_zero() && s.im.is_zero()) {
        return zero_probe("Zero");
    }
    // local exponents log2(|f_i| / |f_{i+1}|) / (k_{i+1} − k_i)
    let exps: Vec<Complex> = samples
        .windows(2)
        .zip(ks.windows(2))
        .map(|(s, k)| {
            let r = (&s[0].abs() / &s[1].abs()).log2();
            Complex::real(&r / &Real::from_i64((k[1] - k[0]) as i64, precision))
        })
        .collect();
    let (e, e_err) = wynn_epsilon(&exps);
    let exponent = e.re.to_f64();
    if exponent < -EXPONENT_TOLERANCE {
        return LimitProbe {
            fitted_exponent: Some(exponent),
            extrapolation_error: e_err,
            ..zero_probe("Infinite")
        };
    }
    if exponent > EXPONENT_TOLERANCE {
        return LimitProbe {
            fitted_exponent: Some(exponent),
            extrapolation_error: e_err,
            ..zero_probe("Zero")
        };
    }
    let (v, v_err) = wynn_epsilon(&samples);
    let (re, im) = v.to_f64();
    LimitProbe {
        fitted_exponent: Some(exponent),
        value: Some([re, im]),
        value_exact: Some(v),
        extrapolation_error: v_err,
        ..zero_probe("Finite")
    }
}

/// Compares [`probe`] with the exact limit classification.
pub fn limit_probe(expr: &TermFunction, endpoint: Endpoint, ks: &[u32], precision: usize, tolerance: f64) -> Report {
    let exact = expr.limit(endpoint);
    let pr = probe(expr, endpoint, ks, precision);
    let (abs_err, rel_err) = match (&exact, &pr.value_exact) {
        (LimitClass::Finite(v), Some(num)) => {
            let sym = v.embed(precision);
            let abs = (&sym - num).abs().to_f64();
            (abs, rel(abs, sym.abs().to_f64()))
        }
        _ => (0.0, 0.0),
    };
    let passed = exact.tag() == pr.class && (abs_err <= tolerance || rel_err <= tolerance);
    Report {
        claim: "limit-probe".into(),
        symbolic: serde_json::to_value(&exact).unwrap_or(Value::Null),
        numeric: serde_json::to_value(&pr).unwrap_or(Value::Null),
        abs_err,
        rel_err,
        spec: json!({ "endpoint": endpoint, "ks": ks, "precision_bits": precision, "tolerance": tolerance }),
        passed,
    }
}
