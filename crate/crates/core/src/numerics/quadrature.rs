//! Adaptive quadrature on closed subintervals of `(−1, 1)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::real::{Complex, Real};
use crate::error::{Error, Result};
use crate::exact::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    GaussLegendre,
    TanhSinh,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub interval: [Rational; 2],
    pub method: Method,
    pub target_rel_error: f64,
    pub max_subdivisions: usize,
    pub precision_bits: usize,
}

pub const DEFAULT_PRECISION: usize = 256;

impl QuadratureSpec {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        let one = Rational::one();
        if !(-&one < lo && lo < hi && hi < one) {
            return Err(Error::InvalidParameter(format!(
                "quadrature interval [{lo}, {hi}] must satisfy -1 < lo < hi < 1"
            )));
        }
        Ok(QuadratureSpec {
            interval: [lo, hi],
            method: Method::GaussLegendre,
            target_rel_error: 1e-14,
            max_subdivisions: 2000,
            precision_bits: DEFAULT_PRECISION,
        })
    }

    /// `[−1 + 2^{-k}, 1 − 2^{-k}]`.
    pub fn symmetric_truncation(k: u32) -> Self {
        let eps = Rational::new(1, 1i64 << k.min(62));
        QuadratureSpec::new(&eps - &Rational::one(), &Rational::one() - &eps).expect("k ≥ 1")
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }

    pub fn with_target(mut self, target: f64) -> Self {
        self.target_rel_error = target;
        self
    }

    pub fn with_precision(mut self, bits: usize) -> Self {
        self.precision_bits = bits;
        self
    }

    pub fn lo(&self) -> &Rational {
        &self.interval[0]
    }

    pub fn hi(&self) -> &Rational {
        &self.interval[1]
    }
}

#[derive(Clone, Debug)]
pub struct QuadratureResult {
    pub value: Complex,
    /// Absolute error estimate.
    pub error: f64,
    /// `∫|f|`, the scale the relative target refers to.
    pub l1: f64,
    pub evaluations: usize,
}

const GL_ORDER: usize = 20;
const MAX_TANH_SINH_LEVELS: usize = 10;

type Rule = Arc<Vec<(Real, Real)>>;

fn gauss_legendre_rule(order: usize, precision: usize) -> Rule {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Rule>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(r) = cache.lock().unwrap().get(&(order, precision)) {
        return r.clone();
    }
    let rule = Arc::new(compute_gauss_legendre(order, precision));
    cache.lock().unwrap().insert((order, precision), rule.clone());
    rule
}

fn compute_gauss_legendre(order: usize, prec: usize) -> Vec<(Real, Real)> {
    let one = Real::from_i64(1, prec);
    let two = Real::from_i64(2, prec);
    let tol = Real::pow2i(-(prec as i64) + 8, prec);
    let mut rule = Vec::with_capacity(order);
    for i in 1..=order {
        let guess = (std::f64::consts::PI * (i as f64 - 0.25) / (order as f64 + 0.5)).cos();
        let mut x = Real::from_f64(guess, prec);
        let mut dp = one.clone();
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(order, &x);
            dp = d;
            let dx = &p / &dp;
            x = &x - &dx;
            if dx.abs() <= tol {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(order, &x);
        if !d.is_zero() {
            dp = d;
        }
        let w = &two / &(&(&one - &(&x * &x)) * &(&dp * &dp));
        rule.push((x, w));
    }
    rule
}

fn legendre_with_derivative(order: usize, x: &Real) -> (Real, Real) {
    let prec = x.precision();
    let mut p0 = Real::from_i64(1, prec);
    let mut p1 = x.clone();
    for k in 2..=order {
        let a = &Real::from_i64(2 * k as i64 - 1, prec) * &(x * &p1);
        let b = &Real::from_i64(k as i64 - 1, prec) * &p0;
        let p2 = &(&a - &b) / &Real::from_i64(k as i64, prec);
        p0 = p1;
        p1 = p2;
    }
    let one = Real::from_i64(1, prec);
    let d = &(&Real::from_i64(order as i64, prec) * &(&(x * &p1) - &p0)) / &(&(x * x) - &one);
    (p1, d)
}

/// `(Σ w f, Σ w |f|)` over `[a, b]`.
fn gl_panel<F: Fn(&Real) -> Complex + Sync>(f: &F, a: &Real, b: &Real, rule: &[(Real, Real)]) -> (Complex, Real) {
    let prec = a.precision();
    let two = Real::from_i64(2, prec);
    let half = &(b - a) / &two;
    let mid = &(a + b) / &two;
    let mut acc = Complex::zero(prec);
    let mut abs = Real::zero(prec);
    for (t, w) in rule {
        let y = f(&(&mid + &(&half * t)));
        abs = &abs + &(w * &y.abs());
        acc = &acc + &y.scale(w);
    }
    (acc.scale(&half), &abs * &half)
}

struct Panel {
    a: Real,
    b: Real,
    left: (Complex, Real),
    right: (Complex, Real),
    error: Real,
}

impl Panel {
    fn build<F: Fn(&Real) -> Complex + Sync>(f: &F, a: Real, b: Real, whole: Complex, rule: &[(Real, Real)]) -> Panel {
        let mid = &(&a + &b) / &Real::from_i64(2, a.precision());
        let left = gl_panel(f, &a, &mid, rule);
        let right = gl_panel(f, &mid, &b, rule);
        let error = (&whole - &(&left.0 + &right.0)).abs();
        Panel {
            a,
            b,
            left,
            right,
            error,
        }
    }

    fn value(&self) -> Complex {
        &self.left.0 + &self.right.0
    }

    fn l1(&self) -> Real {
        &self.left.1 + &self.right.1
    }
}

/// Breakpoints graded geometrically toward `±1`.
fn graded_breakpoints(lo: &Rational, hi: &Rational) -> Vec<Rational> {
    let mut pts = vec![lo.clone(), hi.clone(), Rational::zero()];
    for k in 1..=62 {
        let d = &Rational::one() - &Rational::new(1, 1i64 << k);
        pts.push(d.clone());
        pts.push(-d);
    }
    pts.retain(|x| lo <= x && x <= hi);
    pts.sort();
    pts.dedup();
    pts
}

fn adaptive_gauss_legendre<F: Fn(&Real) -> Complex + Sync>(f: &F, spec: &QuadratureSpec) -> Result<QuadratureResult> {
    let prec = spec.precision_bits;
    let rule = gauss_legendre_rule(GL_ORDER, prec);
    let pts = graded_breakpoints(spec.lo(), spec.hi());
    let mut panels: Vec<Panel> = pts
        .par_windows(2)
        .map(|w| {
            let (a, b) = (Real::from_rational(&w[0], prec), Real::from_rational(&w[1], prec));
            let whole = gl_panel(f, &a, &b, &rule).0;
            Panel::build(f, a, b, whole, &rule)
        })
        .collect();
    let mut evaluations = panels.len() * 3 * GL_ORDER;
    let mut subdivisions = 0;
    loop {
        let l1 = panels.iter().fold(Real::zero(prec), |s, p| &s + &p.l1());
        let err = panels.iter().fold(Real::zero(prec), |s, p| &s + &p.error);
        let budget = &l1 * &Real::from_f64(spec.target_rel_error, prec);
        if err <= budget || l1.is_zero() {
            let value = panels.iter().fold(Complex::zero(prec), |s, p| &s + &p.value());
            return Ok(QuadratureResult {
                value,
                error: err.to_f64(),
                l1: l1.to_f64(),
                evaluations,
            });
        }
        if subdivisions >= spec.max_subdivisions {
            return Err(Error::ToleranceNotMet {
                estimate: (&err / &l1).to_f64(),
                target: spec.target_rel_error,
            });
        }
        let share = &budget / &Real::from_i64(panels.len() as i64, prec);
        let max_err = panels.iter().map(|p| p.error.clone()).fold(Real::zero(prec), |m, e| m.max(&e));
        let split: Vec<bool> = panels.iter().map(|p| p.error > share || p.error == max_err).collect();
        let old = std::mem::take(&mut panels);
        let mut work: Vec<(Real, Real, Complex)> = Vec::new();
        for (p, s) in old.into_iter().zip(split) {
            if s {
                let mid = &(&p.a + &p.b) / &Real::from_i64(2, prec);
                work.push((p.a, mid.clone(), p.left.0));
                work.push((mid, p.b, p.right.0));
                subdivisions += 1;
            } else {
                panels.push(p);
            }
        }
        evaluations += work.len() * 2 * GL_ORDER;
        let fresh: Vec<Panel> = work
            .into_par_iter()
            .map(|(a, b, whole)| Panel::build(f, a, b, whole, &rule))
            .collect();
        panels.extend(fresh);
        panels.sort_by(|x, y| x.a.partial_cmp(&y.a).expect("ordered reals"));
    }
}

fn tanh_sinh<F: Fn(&Real) -> Complex + Sync>(f: &F, spec: &QuadratureSpec) -> Result<QuadratureResult> {
    let prec = spec.precision_bits;
    let a = Real::from_rational(spec.lo(), prec);
    let b = Real::from_rational(spec.hi(), prec);
    let two = Real::from_i64(2, prec);
    let half = &(&b - &a) / &two;
    let mid = &(&a + &b) / &two;
    let half_pi = &Real::pi(prec) / &two;
    let cutoff = Real::pow2i(-(prec as i64), prec);
    // nodes at kh for k with the given parity step
    let node = |k: i64, h: &Real| -> Option<(Real, Real)> {
        let s = &Real::from_i64(k, prec) * h;
        let y = &half_pi * &s.sinh();
        let c = y.cosh();
        let w = &(&half_pi * &s.cosh()) / &(&c * &c);
        if w < cutoff {
            return None;
        }
        Some((&mid + &(&half * &y.tanh()), &w * &half))
    };
    let level_sum = |h: &Real, step: i64, start: i64| -> (Complex, Real, usize) {
        let mut ks = vec![];
        let mut k = start;
        loop {
            let Some(n) = node(k, h) else { break };
            ks.push(n);
            if let Some(m) = node(-k, h).filter(|_| k != 0) {
                ks.push(m);
            }
            k += step;
        }
        let count = ks.len();
        let vals: Vec<(Complex, Real)> = ks
            .par_iter()
            .map(|(x, w)| {
                let y = f(x);
                (y.scale(w), w * &y.abs())
            })
            .collect();
        let (mut s, mut l) = (Complex::zero(prec), Real::zero(prec));
        for (v, a) in vals {
            s = &s + &v;
            l = &l + &a;
        }
        (s, l, count)
    };
    let mut h = Real::from_i64(1, prec);
    let (mut sum, mut l1sum, mut evaluations) = level_sum(&h, 1, 0);
    let mut estimate = sum.scale(&h);
    let mut last_rel_err = f64::INFINITY;
    for _level in 0..spec.max_subdivisions.min(MAX_TANH_SINH_LEVELS) {
        h = &h / &two;
        let (s, l, c) = level_sum(&h, 2, 1);
        evaluations += c;
        sum = &sum + &s;
        l1sum = &l1sum + &l;
        let next = sum.scale(&h);
        let err = (&next - &estimate).abs();
        let l1 = &l1sum * &h;
        estimate = next;
        last_rel_err = (&err / &l1).to_f64();
        if err <= &l1 * &Real::from_f64(spec.target_rel_error, prec) {
            return Ok(QuadratureResult {
                value: estimate,
                error: err.to_f64(),
                l1: l1.to_f64(),
                evaluations,
            });
        }
    }
    Err(Error::ToleranceNotMet {
        estimate: last_rel_err,
        target: spec.target_rel_error,
    })
}

/// `∫_lo^hi f(x) dx`.
pub fn integrate<F: Fn(&Real) -> Complex + Sync>(f: F, spec: &QuadratureSpec) -> Result<QuadratureResult> {
    match spec.method {
        Method::GaussLegendre => adaptive_gauss_legendre(&f, spec),
        Method::TanhSinh => tanh_sinh(&f, spec),
    }
}
