//! Exact boundary form `[f, g]_n` of `ℓⁿ` and its endpoint limits.
//!
//! Orientation: `[f,g]_1 = a_1·(f′ḡ − f ḡ′)`, and in general
//!
//! `[f,g]_n = Σ_k C(n,k) Σ_{j=1}^k (−1)^{k+j} { [a_k f^{(k)}]^{(k−j)} ḡ^{(j−1)}
//!                                            − [a_k ḡ^{(k)}]^{(k−j)} f^{(j−1)} }`
//!
//! so that `∫_{x0}^{x1} (ℓⁿ[f] ḡ − f ℓⁿ[ḡ]) w dx = −[f,g]_n |_{x0}^{x1}`.

use serde::Serialize;

use crate::endpoint::{Endpoint, Germ, LimitClass, Params, TermFunction};
use crate::error::{Error, Result};
use crate::exact::{AlgebraicValue, GaussianRational};
use crate::operator::{derive_symmetric_coefficients, SymmetricForm};

/// The order-`n` boundary form for fixed parameters.
#[derive(Clone, Debug)]
pub struct SesquilinearForm {
    form: SymmetricForm,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SesquiResult {
    pub n: u32,
    pub at_plus: LimitClass,
    pub at_minus: LimitClass,
    /// `[f,g]_n(1) − [f,g]_n(−1)`, present when both limits are finite.
    pub full: Option<AlgebraicValue>,
}

impl SesquiResult {
    fn new(n: u32, at_plus: LimitClass, at_minus: LimitClass) -> Self {
        let full = match (at_plus.value(), at_minus.value()) {
            (Some(p), Some(m)) => Some(&p - &m),
            _ => None,
        };
        SesquiResult {
            n,
            at_plus,
            at_minus,
            full,
        }
    }

    pub fn at(&self, e: Endpoint) -> &LimitClass {
        match e {
            Endpoint::Plus => &self.at_plus,
            Endpoint::Minus => &self.at_minus,
        }
    }
}

/// Limits of `(1−x)^{α+1}(1+x)^{β+1} f ḡ′` at both endpoints.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StrongLimitPoint {
    pub at_plus: LimitClass,
    pub at_minus: LimitClass,
}

impl SesquilinearForm {
    pub fn new(n: u32, p: &Params) -> Result<Self> {
        Ok(SesquilinearForm {
            form: derive_symmetric_coefficients(n, p)?,
        })
    }

    pub fn n(&self) -> u32 {
        self.form.n()
    }

    pub fn params(&self) -> &Params {
        self.form.params()
    }

    pub fn symmetric_form(&self) -> &SymmetricForm {
        &self.form
    }

    /// The form as a germ at one endpoint, with `g` conjugated.
    pub fn expression_germ(&self, f: &Germ, g: &Germ) -> Germ {
        let n = self.n();
        let p = self.params();
        let gbar = g.conj();
        let f_derivs = derivatives(f, n);
        let g_derivs = derivatives(&gbar, n);
        let mut acc = Germ::zero(f.endpoint());
        for k in 1..=n {
            let c = GaussianRational::real(self.form.coeff(k).clone());
            let ak = p.a_k(k);
            let af = derivatives(&f_derivs[k as usize].mul_term(&ak), k - 1);
            let ag = derivatives(&g_derivs[k as usize].mul_term(&ak), k - 1);
            let mut block = Germ::zero(f.endpoint());
            for j in 1..=k {
                let (r, s) = ((k - j) as usize, (j - 1) as usize);
                let piece = &(&af[r] * &g_derivs[s]) - &(&ag[r] * &f_derivs[s]);
                block = if (k + j) % 2 == 0 {
                    &block + &piece
                } else {
                    &block - &piece
                };
            }
            acc = &acc + &block.scale(&c);
        }
        acc
    }

    /// The full expression as a term function, built germ-wise.
    pub fn expression(&self, f: &TermFunction, g: &TermFunction) -> TermFunction {
        let minus = self.expression_germ(f.germ_minus(), g.germ_minus());
        let plus = self.expression_germ(f.germ_plus(), g.germ_plus());
        if f.has_global() && g.has_global() {
            // global forms are stored in the +1 normal form
            TermFunction::global(plus.terms().iter().cloned())
        } else {
            TermFunction::from_germs(minus, plus)
        }
    }

    /// Limit of the form at one endpoint.
    pub fn limit_at(&self, f: &TermFunction, g: &TermFunction, e: Endpoint) -> LimitClass {
        let (fg, gg) = (f.germ(e), g.germ(e));
        if fg.is_zero() || gg.is_zero() {
            return LimitClass::Zero;
        }
        self.expression_germ(fg, gg).limit()
    }

    /// Endpoint classification without failing on divergence.
    pub fn classify(&self, f: &TermFunction, g: &TermFunction) -> SesquiResult {
        SesquiResult::new(
            self.n(),
            self.limit_at(f, g, Endpoint::Plus),
            self.limit_at(f, g, Endpoint::Minus),
        )
    }

    /// `[f,g]_n` at both endpoints and from −1 to 1.
    pub fn eval(&self, f: &TermFunction, g: &TermFunction) -> Result<SesquiResult> {
        let r = self.classify(f, g);
        for e in Endpoint::BOTH {
            if r.at(e).is_infinite() {
                return Err(Error::IndeterminateLimit(e.label()));
            }
        }
        Ok(r)
    }

    /// `[f,g]_n |_{−1}^{1}`.
    pub fn full(&self, f: &TermFunction, g: &TermFunction) -> Result<AlgebraicValue> {
        Ok(self.eval(f, g)?.full.expect("finite limits"))
    }
}

fn derivatives(g: &Germ, upto: u32) -> Vec<Germ> {
    let mut out = Vec::with_capacity(upto as usize + 1);
    out.push(g.clone());
    for i in 0..upto as usize {
        let next = out[i].differentiate();
        out.push(next);
    }
    out
}

/// One-shot expression builder.
pub fn sesqui_form_expression(f: &TermFunction, g: &TermFunction, n: u32, p: &Params) -> Result<TermFunction> {
    Ok(SesquilinearForm::new(n, p)?.expression(f, g))
}

/// One-shot evaluation.
pub fn sesqui_eval(f: &TermFunction, g: &TermFunction, n: u32, p: &Params) -> Result<SesquiResult> {
    SesquilinearForm::new(n, p)?.eval(f, g)
}

/// Limits of `(1−x)^{α+1}(1+x)^{β+1} f ḡ′` at `±1`.
pub fn strong_limit_point_check(f: &TermFunction, g: &TermFunction, p: &Params) -> StrongLimitPoint {
    let expr = (f * &g.conj().differentiate(1)).mul_term(&p.a_k(1));
    StrongLimitPoint {
        at_plus: expr.limit(Endpoint::Plus),
        at_minus: expr.limit(Endpoint::Minus),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{jacobi_poly, phi, psi};
    use crate::endpoint::Term;
    use crate::exact::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn equal_constants_pair_to_zero() {
        let form = SesquilinearForm::new(1, &Params::ratio((1, 2), (2, 5))).unwrap();
        assert!(form.expression(&TermFunction::one(), &TermFunction::one()).is_zero());
    }

    #[test]
    fn first_order_is_modified_wronskian() {
        let p = Params::ratio((1, 3), (1, 5));
        let form = SesquilinearForm::new(1, &p).unwrap();
        let f = jacobi_poly(2, &p);
        let g = TermFunction::global([Term::new(GaussianRational::i(), q(1, 2), q(3, 1))]);
        let gbar = g.conj();
        let wronskian = &(&f.differentiate(1) * &gbar) - &(&f * &gbar.differentiate(1));
        assert_eq!(form.expression(&f, &g), wronskian.mul_term(&p.a_k(1)));
    }

    #[test]
    fn regression_phi0_psi0() {
        let p = Params::ratio((1, 2), (2, 5));
        let r = sesqui_eval(&phi(0, Endpoint::Plus), &psi(0, Endpoint::Plus, &p).unwrap(), 1, &p).unwrap();
        // −α·2^{β+1}
        let expected = AlgebraicValue::monomial(GaussianRational::real(q(-1, 2)), &q(7, 5));
        assert_eq!(r.full, Some(expected.clone()));
        assert_eq!(r.at_plus, LimitClass::Finite(expected));
        assert_eq!(r.at_minus, LimitClass::Zero);
    }

    #[test]
    fn skew_hermitian() {
        let p = Params::ratio((1, 3), (3, 4));
        let form = SesquilinearForm::new(2, &p).unwrap();
        let f = &phi(1, Endpoint::Plus) + &psi(0, Endpoint::Plus, &p).unwrap().scale(&GaussianRational::i());
        let g = &psi(1, Endpoint::Plus, &p).unwrap() + &phi(0, Endpoint::Minus);
        let fg = form.full(&f, &g).unwrap();
        let gf = form.full(&g, &f).unwrap();
        assert_eq!(gf, -fg.conj());
    }

    #[test]
    fn divergent_pairs_are_reported() {
        let p = Params::ratio((1, 2), (1, 2));
        let bad = TermFunction::supported_at(Endpoint::Plus, [Term::u(q(-3, 2))]);
        let err = sesqui_eval(&bad, &psi(0, Endpoint::Plus, &p).unwrap(), 1, &p).unwrap_err();
        assert_eq!(err, Error::IndeterminateLimit("+1"));
    }

    #[test]
    fn strong_limit_point_values() {
        let p = Params::ratio((1, 2), (2, 5));
        let pm = jacobi_poly(3, &p);
        let s = strong_limit_point_check(&pm, &pm, &p);
        assert!(s.at_plus.is_zero() && s.at_minus.is_zero());
        let psi0 = psi(0, Endpoint::Plus, &p).unwrap();
        assert!(strong_limit_point_check(&psi0, &TermFunction::one(), &p).at_plus.is_zero());
        // d/dx (1−x)^{−α} = +α(1−x)^{−α−1}
        let s = strong_limit_point_check(&TermFunction::one(), &psi0, &p);
        let expected = AlgebraicValue::monomial(GaussianRational::real(q(1, 2)), &q(7, 5));
        assert_eq!(s.at_plus, LimitClass::Finite(expected));
    }
}
