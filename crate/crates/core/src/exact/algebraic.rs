use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::integer::Integer;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::linalg::{self, FieldElement, Solution};
use super::{GaussianRational, Rational};
use crate::numerics::real::{Complex, Real};

/// Element of ℚ(i)(t) with t = 2^{1/D}, stored densely as Σ c_k t^k with
/// `0 ≤ k < D`. `D` is kept minimal: it is the least common denominator of
/// the exponents k/D that carry a nonzero coefficient.
///
/// x^D − 2 is Eisenstein at 2, and stays irreducible over ℚ(i) because
/// ℚ(2^{1/D}) is real and does not contain i, so this is a field and
/// the zero test is coefficient-wise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraicValue {
    den: u32,
    coeffs: Vec<GaussianRational>,
}

impl AlgebraicValue {
    pub fn zero() -> Self {
        AlgebraicValue {
            den: 1,
            coeffs: vec![GaussianRational::zero()],
        }
    }

    pub fn one() -> Self {
        Self::from_gaussian(GaussianRational::one())
    }

    pub fn from_gaussian(c: GaussianRational) -> Self {
        AlgebraicValue {
            den: 1,
            coeffs: vec![c],
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_gaussian(r.into())
    }

    /// `2^e` for rational `e`.
    pub fn pow2(e: &Rational) -> Self {
        Self::monomial(GaussianRational::one(), e)
    }

    /// `c · 2^e`.
    pub fn monomial(c: GaussianRational, e: &Rational) -> Self {
        let den = u32::try_from(e.denom_u64()).expect("exponent denominator too large");
        let whole = e.floor_i64();
        let k = ((e - &Rational::from_integer(whole)) * Rational::from(den as i64)).floor_i64();
        let c = c.scale(&Rational::from(2).pow(whole as i32));
        let mut coeffs = vec![GaussianRational::zero(); den as usize];
        coeffs[k as usize] = c;
        AlgebraicValue { den, coeffs }.normalized()
    }

    /// Least D with the value in ℚ(i)(2^{1/D}).
    pub fn degree(&self) -> u32 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(GaussianRational::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.den == 1 && self.coeffs[0].is_real()
    }

    /// The ℚ(i) value if the element has degree 1.
    pub fn as_gaussian(&self) -> Option<&GaussianRational> {
        (self.den == 1).then(|| &self.coeffs[0])
    }

    /// Nonzero parts as `(coefficient, exponent of 2)` with exponents in `[0, 1)`.
    pub fn terms(&self) -> impl Iterator<Item = (&GaussianRational, Rational)> + '_ {
        let den = self.den as i64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (c, Rational::new(k as i64, den)))
    }

    pub fn conj(&self) -> Self {
        AlgebraicValue {
            den: self.den,
            coeffs: self.coeffs.iter().map(GaussianRational::conj).collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        AlgebraicValue {
            den: self.den,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
        .normalized()
    }

    fn lifted(&self, den: u32) -> Vec<GaussianRational> {
        debug_assert_eq!(den % self.den, 0);
        let step = (den / self.den) as usize;
        let mut out = vec![GaussianRational::zero(); den as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k * step] = c.clone();
        }
        out
    }

    fn normalized(mut self) -> Self {
        let mut g = self.den;
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                g = g.gcd(&(k as u32));
            }
        }
        if g == self.den {
            // only the k = 0 slot can be nonzero
            let c0 = std::mem::take(&mut self.coeffs[0]);
            return AlgebraicValue {
                den: 1,
                coeffs: vec![c0],
            };
        }
        if g > 1 {
            let den = self.den / g;
            let coeffs = (0..den as usize)
                .map(|k| std::mem::take(&mut self.coeffs[k * g as usize]))
                .collect();
            return AlgebraicValue { den, coeffs };
        }
        self
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.den == 1 {
            return Some(Self::from_gaussian(self.coeffs[0].inv()?));
        }
        // Solve self · y = 1 via the multiplication matrix on the power basis.
        let d = self.den as usize;
        let mut rows = vec![vec![GaussianRational::zero(); d]; d];
        for j in 0..d {
            let mut basis = vec![GaussianRational::zero(); d];
            basis[j] = GaussianRational::one();
            let col = mul_dense(&self.coeffs, &basis);
            for (i, x) in col.into_iter().enumerate() {
                rows[i][j] = x;
            }
        }
        let mut rhs = vec![GaussianRational::zero(); d];
        rhs[0] = GaussianRational::one();
        match linalg::solve(&rows, &rhs) {
            Solution::Unique(y) => Some(
                AlgebraicValue {
                    den: self.den,
                    coeffs: y,
                }
                .normalized(),
            ),
            _ => unreachable!("x^D - 2 is irreducible, nonzero elements are invertible"),
        }
    }

    /// Embedding into ℂ at the given working precision.
    pub fn embed(&self, precision_bits: usize) -> Complex {
        let mut re = Real::zero(precision_bits);
        let mut im = Real::zero(precision_bits);
        for (c, e) in self.terms() {
            let p = Real::from_rational(&e, precision_bits).exp2();
            if !c.re.is_zero() {
                re = &re + &(&p * &Real::from_rational(&c.re, precision_bits));
            }
            if !c.im.is_zero() {
                im = &im + &(&p * &Real::from_rational(&c.im, precision_bits));
            }
        }
        Complex::new(re, im)
    }

    /// Real part of the embedding into ℂ.
    pub fn embed_real(&self, precision_bits: usize) -> Real {
        self.embed(precision_bits).re
    }

    /// Double-precision preview `(re, im)`.
    pub fn to_f64(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (c, e) in self.terms() {
            let p = e.to_f64().exp2();
            re += c.re.to_f64() * p;
            im += c.im.to_f64() * p;
        }
        (re, im)
    }
}

fn mul_dense(x: &[GaussianRational], y: &[GaussianRational]) -> Vec<GaussianRational> {
    let d = x.len();
    let two = Rational::from(2);
    let mut out = vec![GaussianRational::zero(); d];
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let prod = a * b;
            if i + j >= d {
                out[i + j - d] += &prod.scale(&two);
            } else {
                out[i + j] += &prod;
            }
        }
    }
    out
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

impl<'a, 'b> Add<&'b AlgebraicValue> for &'a AlgebraicValue {
    type Output = AlgebraicValue;
    fn add(self, rhs: &'b AlgebraicValue) -> AlgebraicValue {
        let den = lcm(self.den, rhs.den);
        let mut x = self.lifted(den);
        for (a, b) in x.iter_mut().zip(rhs.lifted(den)) {
            *a += &b;
        }
        AlgebraicValue { den, coeffs: x }.normalized()
    }
}

impl<'a, 'b> Sub<&'b AlgebraicValue> for &'a AlgebraicValue {
    type Output = AlgebraicValue;
    fn sub(self, rhs: &'b AlgebraicValue) -> AlgebraicValue {
        self + &(-rhs)
    }
}

impl<'a, 'b> Mul<&'b AlgebraicValue> for &'a AlgebraicValue {
    type Output = AlgebraicValue;
    fn mul(self, rhs: &'b AlgebraicValue) -> AlgebraicValue {
        let den = lcm(self.den, rhs.den);
        let coeffs = mul_dense(&self.lifted(den), &rhs.lifted(den));
        AlgebraicValue { den, coeffs }.normalized()
    }
}

impl<'a> Neg for &'a AlgebraicValue {
    type Output = AlgebraicValue;
    fn neg(self) -> AlgebraicValue {
        AlgebraicValue {
            den: self.den,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for AlgebraicValue {
    type Output = AlgebraicValue;
    fn neg(self) -> AlgebraicValue {
        -&self
    }
}

impl Add for AlgebraicValue {
    type Output = AlgebraicValue;
    fn add(self, rhs: AlgebraicValue) -> AlgebraicValue {
        &self + &rhs
    }
}

impl Sub for AlgebraicValue {
    type Output = AlgebraicValue;
    fn sub(self, rhs: AlgebraicValue) -> AlgebraicValue {
        &self - &rhs
    }
}

impl Mul for AlgebraicValue {
    type Output = AlgebraicValue;
    fn mul(self, rhs: AlgebraicValue) -> AlgebraicValue {
        &self * &rhs
    }
}

impl From<GaussianRational> for AlgebraicValue {
    fn from(c: GaussianRational) -> Self {
        AlgebraicValue::from_gaussian(c)
    }
}

impl From<Rational> for AlgebraicValue {
    fn from(r: Rational) -> Self {
        AlgebraicValue::from_rational(r)
    }
}

impl FieldElement for AlgebraicValue {
    fn zero() -> Self {
        AlgebraicValue::zero()
    }
    fn one() -> Self {
        AlgebraicValue::one()
    }
    fn is_zero(&self) -> bool {
        AlgebraicValue::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inverse(&self) -> Option<Self> {
        self.inv()
    }
}

impl FieldElement for GaussianRational {
    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn one() -> Self {
        GaussianRational::one()
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inverse(&self) -> Option<Self> {
        self.inv()
    }
}

impl FieldElement for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inverse(&self) -> Option<Self> {
        self.recip()
    }
}

impl fmt::Display for AlgebraicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, e) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff = if c.is_real() {
                c.to_string()
            } else {
                format!("({c})")
            };
            if e.is_zero() {
                write!(f, "{coeff}")?;
            } else {
                write!(f, "{coeff}·2^({e})")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct AlgebraicPart {
    coeff: GaussianRational,
    pow2: String,
}

impl Serialize for AlgebraicValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let den = self.den;
        let parts: Vec<AlgebraicPart> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| AlgebraicPart {
                coeff: c.clone(),
                pow2: format!("{k}/{den}"),
            })
            .collect();
        parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraicValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<AlgebraicPart>::deserialize(d)?;
        let mut acc = AlgebraicValue::zero();
        for p in parts {
            let e: Rational = p.pow2.parse().map_err(D::Error::custom)?;
            acc = &acc + &AlgebraicValue::monomial(p.coeff, &e);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn sqrt2_squared_is_two() {
        let s = AlgebraicValue::pow2(&q(1, 2));
        let sq = &s * &s;
        assert_eq!(sq, AlgebraicValue::from_rational(2.into()));
        assert_eq!(sq.degree(), 1);
    }

    #[test]
    fn additive_identity_and_cancellation() {
        let x = &AlgebraicValue::one() + &AlgebraicValue::pow2(&q(1, 3));
        assert_eq!(&x + &AlgebraicValue::zero(), x);
        let z = &x - &x;
        assert!(z.is_zero());
        assert_eq!(z.degree(), 1);
    }

    #[test]
    fn exponents_reduce_into_range() {
        // 2^(7/5) = 2 · t^2 with t = 2^(1/5)
        let v = AlgebraicValue::pow2(&q(7, 5));
        let terms: Vec<_> = v.terms().collect();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].0, &GaussianRational::from_integer(2));
        assert_eq!(terms[0].1, q(2, 5));
        // negative exponents: 2^(-1/2) = (1/2)·2^(1/2)
        let w = AlgebraicValue::pow2(&q(-1, 2));
        let terms: Vec<_> = w.terms().collect();
        assert_eq!(terms[0].0, &GaussianRational::real(q(1, 2)));
        assert_eq!(terms[0].1, q(1, 2));
    }

    #[test]
    fn joint_extension_degree() {
        let a = AlgebraicValue::pow2(&q(1, 2));
        let b = AlgebraicValue::pow2(&q(1, 3));
        assert_eq!((&a * &b).degree(), 6);
        assert_eq!((&a + &b).degree(), 6);
        // 2^(1/6)^6 = 2
        let c = AlgebraicValue::pow2(&q(1, 6));
        let mut p = AlgebraicValue::one();
        for _ in 0..6 {
            p = &p * &c;
        }
        assert_eq!(p, AlgebraicValue::from_rational(2.into()));
    }

    #[test]
    fn inverse_in_extension() {
        let x = &AlgebraicValue::one() + &AlgebraicValue::pow2(&q(1, 3));
        let inv = x.inv().unwrap();
        assert_eq!(&x * &inv, AlgebraicValue::one());
        let y = AlgebraicValue::monomial(GaussianRational::i(), &q(3, 4));
        assert_eq!(&y * &y.inv().unwrap(), AlgebraicValue::one());
        assert!(AlgebraicValue::zero().inv().is_none());
    }

    #[test]
    fn serde_format() {
        let v = AlgebraicValue::monomial(GaussianRational::real(q(-1, 2)), &q(7, 5));
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"[{"coeff":"-1/1","pow2":"2/5"}]"#);
        let back: AlgebraicValue = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn embedding_of_sqrt2() {
        let v = AlgebraicValue::pow2(&q(1, 2)).embed_real(128);
        let err = (v.to_f64() - std::f64::consts::SQRT_2).abs();
        assert!(err < 1e-15);
        assert!(AlgebraicValue::zero().embed_real(64).is_zero());
    }
}
