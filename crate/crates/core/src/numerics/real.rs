//! Thin arbitrary-precision real/complex layer over `astro_float`.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};

use crate::exact::Rational;

const RM: RoundingMode = RoundingMode::ToEven;

/// Smallest precision the backend supports; requests below it are raised.
pub const MIN_PRECISION: usize = 64;

fn bits(precision: usize) -> usize {
    precision.max(MIN_PRECISION)
}

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Arbitrary-precision real carrying its working precision in bits.
#[derive(Clone)]
pub struct Real {
    value: BigFloat,
    precision: usize,
}

impl Real {
    pub fn zero(precision: usize) -> Self {
        let precision = bits(precision);
        Real {
            value: BigFloat::from_i64(0, precision),
            precision,
        }
    }

    pub fn from_i64(n: i64, precision: usize) -> Self {
        let precision = bits(precision);
        Real {
            value: BigFloat::from_i64(n, precision),
            precision,
        }
    }

    pub fn from_f64(x: f64, precision: usize) -> Self {
        let precision = bits(precision);
        Real {
            value: BigFloat::from_f64(x, precision),
            precision,
        }
    }

    pub fn from_rational(r: &Rational, precision: usize) -> Self {
        let precision = bits(precision);
        let parse = |s: String| with_consts(|cc| BigFloat::parse(&s, Radix::Dec, precision, RM, cc));
        let n = parse(r.numer().to_string());
        if r.is_integer() {
            return Real {
                value: n,
                precision,
            };
        }
        let d = parse(r.denom().to_string());
        Real {
            value: n.div(&d, precision, RM),
            precision,
        }
    }

    /// Exactly `2^k`.
    pub fn pow2i(k: i64, precision: usize) -> Self {
        let one = Real::from_i64(1, precision);
        let two = Real::from_i64(2, precision);
        let p = two.powi(k.unsigned_abs() as usize);
        if k >= 0 {
            p
        } else {
            &one / &p
        }
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn with_precision(&self, precision: usize) -> Self {
        let precision = bits(precision);
        let mut v = self.value.clone();
        v.set_precision(precision, RM).expect("valid precision");
        Real {
            value: v,
            precision,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.value.is_negative() && !self.value.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !self.value.is_nan() && !self.value.is_inf()
    }

    pub fn abs(&self) -> Self {
        self.wrap(self.value.abs())
    }

    pub fn sqrt(&self) -> Self {
        self.wrap(self.value.sqrt(self.precision, RM))
    }

    pub fn ln(&self) -> Self {
        let v = with_consts(|cc| self.value.ln(self.precision, RM, cc));
        self.wrap(v)
    }

    pub fn exp(&self) -> Self {
        let v = with_consts(|cc| self.value.exp(self.precision, RM, cc));
        self.wrap(v)
    }

    /// `2^self`.
    pub fn exp2(&self) -> Self {
        let ln2 = with_consts(|cc| cc.ln_2(self.precision, RM));
        self.wrap(self.value.mul(&ln2, self.precision, RM)).exp()
    }

    pub fn log2(&self) -> Self {
        let ln2 = with_consts(|cc| cc.ln_2(self.precision, RM));
        self.wrap(self.ln().value.div(&ln2, self.precision, RM))
    }

    pub fn powi(&self, n: usize) -> Self {
        self.wrap(self.value.powi(n, self.precision, RM))
    }

    /// `self^e` for `self > 0`, rational `e`.
    pub fn powr(&self, e: &Rational) -> Self {
        let k = e.floor_i64();
        let int = |x: &Real, k: i64| {
            let p = x.powi(k.unsigned_abs() as usize);
            if k >= 0 {
                p
            } else {
                &Real::from_i64(1, x.precision) / &p
            }
        };
        if e.is_integer() {
            return int(self, k);
        }
        let frac = e.fract();
        match (u32::try_from(frac.denom_u64()), i64::try_from(frac.numer())) {
            (Ok(q), Ok(p)) if q <= 1 << 16 => &int(self, k) * &self.root(q).powi(p as usize),
            _ => {
                let e = Real::from_rational(e, self.precision);
                (&self.ln() * &e).exp()
            }
        }
    }

    /// Positive `q`-th root of `self > 0`, by Newton from an `f64` seed.
    pub fn root(&self, q: u32) -> Self {
        if q == 1 {
            return self.clone();
        }
        if q == 2 {
            return self.sqrt();
        }
        let seed = self.to_f64().powf(1.0 / q as f64);
        if !seed.is_normal() {
            let e = Real::from_rational(&Rational::new(1, q as i64), self.precision);
            return (&self.ln() * &e).exp();
        }
        let prec = self.precision;
        let qr = Real::from_i64(q as i64, prec);
        let qm1 = Real::from_i64(q as i64 - 1, prec);
        let tol = Real::pow2i(-(prec as i64) + 4, prec);
        let mut y = Real::from_f64(seed, prec);
        // quadratic convergence from ~50 bits
        for _ in 0..(usize::BITS - prec.leading_zeros() + 2) {
            let next = &(&(&qm1 * &y) + &(self / &y.powi(q as usize - 1))) / &qr;
            let step = (&next - &y).abs();
            y = next;
            if step <= &tol * &y {
                break;
            }
        }
        y
    }

    pub fn pi(precision: usize) -> Self {
        let precision = bits(precision);
        Real {
            value: with_consts(|cc| cc.pi(precision, RM)),
            precision,
        }
    }

    pub fn cosh(&self) -> Self {
        let v = with_consts(|cc| self.value.cosh(self.precision, RM, cc));
        self.wrap(v)
    }

    pub fn sinh(&self) -> Self {
        let v = with_consts(|cc| self.value.sinh(self.precision, RM, cc));
        self.wrap(v)
    }

    pub fn tanh(&self) -> Self {
        let v = with_consts(|cc| self.value.tanh(self.precision, RM, cc));
        self.wrap(v)
    }

    pub fn max(&self, other: &Real) -> Real {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Nearest double.
    pub fn to_f64(&self) -> f64 {
        if self.value.is_nan() {
            return f64::NAN;
        }
        if self.value.is_inf() {
            return if self.value.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            };
        }
        let Some((words, _, sign, exponent, _)) = self.value.as_raw_parts() else {
            return f64::NAN;
        };
        if self.value.is_zero() || words.is_empty() {
            return 0.0;
        }
        // value = 0.m × 2^exponent, most significant word last
        let top = *words.last().unwrap() as f64;
        let next = if words.len() > 1 {
            words[words.len() - 2] as f64
        } else {
            0.0
        };
        let m = (top + next / 18446744073709551616.0) / 18446744073709551616.0;
        let v = m * (exponent as f64).exp2();
        if sign == Sign::Neg {
            -v
        } else {
            v
        }
    }

    /// Full decimal rendering.
    pub fn to_decimal(&self) -> String {
        with_consts(|cc| self.value.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".into())
    }

    fn wrap(&self, value: BigFloat) -> Self {
        Real {
            value,
            precision: self.precision,
        }
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.value.cmp(&other.value) == Some(0)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.cmp(&other.value).map(|c| c.cmp(&0))
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} bits)", self.to_f64(), self.precision)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}

macro_rules! real_binop {
    ($tr:ident, $method:ident) => {
        impl<'a, 'b> $tr<&'b Real> for &'a Real {
            type Output = Real;
            fn $method(self, rhs: &'b Real) -> Real {
                let p = self.precision.max(rhs.precision);
                Real {
                    value: self.value.$method(&rhs.value, p, RM),
                    precision: p,
                }
            }
        }
        impl $tr for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
    };
}

real_binop!(Add, add);
real_binop!(Sub, sub);
real_binop!(Mul, mul);
real_binop!(Div, div);

impl<'a> Neg for &'a Real {
    type Output = Real;
    fn neg(self) -> Real {
        self.wrap(-&self.value)
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        -&self
    }
}

/// Arbitrary-precision complex number.
#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    pub fn zero(precision: usize) -> Self {
        Complex::new(Real::zero(precision), Real::zero(precision))
    }

    pub fn real(re: Real) -> Self {
        let p = re.precision();
        Complex::new(re, Real::zero(p))
    }

    pub fn abs(&self) -> Real {
        if self.im.is_zero() {
            return self.re.abs();
        }
        (&(&self.re * &self.re) + &(&self.im * &self.im)).sqrt()
    }

    pub fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -&self.im)
    }

    pub fn scale(&self, r: &Real) -> Self {
        Complex::new(&self.re * r, &self.im * r)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl<'a, 'b> Add<&'b Complex> for &'a Complex {
    type Output = Complex;
    fn add(self, rhs: &'b Complex) -> Complex {
        Complex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a, 'b> Sub<&'b Complex> for &'a Complex {
    type Output = Complex;
    fn sub(self, rhs: &'b Complex) -> Complex {
        Complex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a, 'b> Mul<&'b Complex> for &'a Complex {
    type Output = Complex;
    fn mul(self, rhs: &'b Complex) -> Complex {
        if self.im.is_zero() && rhs.im.is_zero() {
            let p = self.re.precision().max(rhs.re.precision());
            return Complex::new(&self.re * &rhs.re, Real::zero(p));
        }
        Complex::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}

impl<'a, 'b> Div<&'b Complex> for &'a Complex {
    type Output = Complex;
    fn div(self, rhs: &'b Complex) -> Complex {
        let den = &(&rhs.re * &rhs.re) + &(&rhs.im * &rhs.im);
        let num = self * &rhs.conj();
        Complex::new(&num.re / &den, &num.im / &den)
    }
}
