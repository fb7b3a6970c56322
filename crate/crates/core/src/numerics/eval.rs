//! Floating evaluation of term lists.

use std::collections::HashMap;

use super::real::{Complex, Real};
use crate::endpoint::Term;
use crate::exact::{GaussianRational, Rational};

/// A term list prepared for repeated evaluation: each term is split into a
/// fractional class factor `u^{fa} v^{fb}` and integer powers.
#[derive(Clone, Debug)]
pub struct CompiledTerms {
    precision: usize,
    // fractional exponents `u^{fa} v^{fb}` of each class
    classes: Vec<(Rational, Rational)>,
    terms: Vec<(usize, i64, i64, Complex)>,
}

pub fn embed_gaussian(c: &GaussianRational, precision: usize) -> Complex {
    Complex::new(
        Real::from_rational(&c.re, precision),
        Real::from_rational(&c.im, precision),
    )
}

impl CompiledTerms {
    pub fn new(terms: &[Term], precision: usize) -> Self {
        let mut classes: Vec<(Rational, Rational)> = Vec::new();
        let mut compiled = Vec::with_capacity(terms.len());
        for t in terms {
            let key = (t.a.fract(), t.b.fract());
            let idx = match classes.iter().position(|c| *c == key) {
                Some(i) => i,
                None => {
                    classes.push(key);
                    classes.len() - 1
                }
            };
            compiled.push((
                idx,
                t.a.floor_i64(),
                t.b.floor_i64(),
                embed_gaussian(&t.coeff, precision),
            ));
        }
        CompiledTerms {
            precision,
            classes,
            terms: compiled,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at `u = 1−x`, `v = 1+x`, both positive.
    pub fn eval_uv(&self, u: &Real, v: &Real) -> Complex {
        let prec = self.precision;
        let mut acc = Complex::zero(prec);
        if self.terms.is_empty() {
            return acc;
        }
        let one = Real::from_i64(1, prec);
        let factors: Vec<Real> = self
            .classes
            .iter()
            .map(|(a, b)| {
                let fu = if a.is_zero() { one.clone() } else { u.powr(a) };
                if b.is_zero() {
                    fu
                } else {
                    &fu * &v.powr(b)
                }
            })
            .collect();
        let mut upow: HashMap<i64, Real> = HashMap::new();
        let mut vpow: HashMap<i64, Real> = HashMap::new();
        for (class, ia, ib, c) in &self.terms {
            let pu = upow.entry(*ia).or_insert_with(|| int_pow(u, *ia)).clone();
            let pv = vpow.entry(*ib).or_insert_with(|| int_pow(v, *ib)).clone();
            let m = &(&factors[*class] * &pu) * &pv;
            acc = &acc + &c.scale(&m);
        }
        acc
    }

    pub fn eval(&self, x: &Real) -> Complex {
        let one = Real::from_i64(1, self.precision);
        self.eval_uv(&(&one - x), &(&one + x))
    }
}

fn int_pow(x: &Real, k: i64) -> Real {
    let p = x.powi(k.unsigned_abs() as usize);
    if k >= 0 {
        p
    } else {
        &Real::from_i64(1, x.precision()) / &p
    }
}

/// One-shot evaluation at `x`.
pub fn evaluate(terms: &[Term], x: &Real) -> Complex {
    CompiledTerms::new(terms, x.precision()).eval(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_f64_powers() {
        let terms = vec![
            Term::new(GaussianRational::new(Rational::new(3, 2), Rational::new(-1, 3)), Rational::new(-1, 3), Rational::new(7, 5)),
            Term::new(GaussianRational::from_integer(2), Rational::from(3), Rational::from(-2)),
        ];
        let x = 0.3f64;
        let (u, v) = (1.0 - x, 1.0 + x);
        let base = u.powf(-1.0 / 3.0) * v.powf(1.4);
        let re = 1.5 * base + 2.0 * u.powi(3) * v.powi(-2);
        let im = -base / 3.0;
        let got = evaluate(&terms, &Real::from_f64(x, 128)).to_f64();
        assert!((got.0 - re).abs() < 1e-14 && (got.1 - im).abs() < 1e-14, "{got:?}");
    }
}
