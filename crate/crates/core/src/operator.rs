//! The Jacobi expression, its powers, and their Lagrangian symmetric form.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Serialize, Serializer};

use crate::endpoint::{Params, Term, TermFunction};
use crate::error::{Error, Result};
use crate::exact::linalg::{self, Solution};
use crate::exact::{GaussianRational, Rational};

/// `ℓ[f] = −(1/w)·[(1−x)^{α+1}(1+x)^{β+1} f′]′`.
pub fn apply_l(f: &TermFunction, p: &Params) -> TermFunction {
    -&f
        .differentiate(1)
        .mul_term(&p.a_k(1))
        .differentiate(1)
        .divide_by_weight(p)
}

/// `ℓⁿ[f]` by repeated application.
pub fn apply_ln_composed(f: &TermFunction, n: u32, p: &Params) -> TermFunction {
    (0..n).fold(f.clone(), |g, _| apply_l(&g, p))
}

/// Coefficients `C(n,1..n)` with
/// `ℓⁿ[f] = (1/w)·Σ_k (−1)^k [C(n,k)·a_k·f^{(k)}]^{(k)}`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricForm {
    n: u32,
    coeffs: Vec<Rational>,
    params: Params,
}

impl SymmetricForm {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    /// `C(n,k)` for `1 ≤ k ≤ n`.
    pub fn coeff(&self, k: u32) -> &Rational {
        &self.coeffs[k as usize - 1]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }
}

impl Serialize for SymmetricForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: u32,
            #[serde(rename = "C")]
            c: &'a [Rational],
        }
        Repr {
            n: self.n,
            c: &self.coeffs,
        }
        .serialize(s)
    }
}

/// Unweighted block `(1/w)(−1)^k [a_k f^{(k)}]^{(k)}`.
fn lagrangian_block(f: &TermFunction, k: u32, p: &Params) -> TermFunction {
    let inner = f.differentiate(k).mul_term(&p.a_k(k)).differentiate(k);
    let block = inner.divide_by_weight(p);
    if k % 2 == 0 {
        block
    } else {
        -&block
    }
}

fn coefficient_map(f: &TermFunction) -> BTreeMap<(Rational, Rational), GaussianRational> {
    f.global_terms()
        .expect("test functions are global")
        .iter()
        .map(|t| ((t.a.clone(), t.b.clone()), t.coeff.clone()))
        .collect()
}

fn real_part(c: &GaussianRational) -> Rational {
    debug_assert!(c.is_real(), "real parameters give real coefficients");
    c.re.clone()
}

/// Builds `Σ_k C_k·block_k = ℓⁿ[f]` row equations for one test function.
fn push_equations(
    rows: &mut Vec<Vec<Rational>>,
    rhs: &mut Vec<Rational>,
    f: &TermFunction,
    n: u32,
    p: &Params,
) {
    let blocks: Vec<_> = (1..=n)
        .map(|k| coefficient_map(&lagrangian_block(f, k, p)))
        .collect();
    let target = coefficient_map(&apply_ln_composed(f, n, p));
    let keys: BTreeSet<_> = blocks
        .iter()
        .flat_map(|b| b.keys().cloned())
        .chain(target.keys().cloned())
        .collect();
    for key in keys {
        rows.push(
            blocks
                .iter()
                .map(|b| b.get(&key).map(real_part).unwrap_or_default())
                .collect(),
        );
        rhs.push(target.get(&key).map(real_part).unwrap_or_default());
    }
}

fn residual(form: &SymmetricForm, f: &TermFunction) -> TermFunction {
    &apply_ln_symmetric_unchecked(f, form) - &apply_ln_composed(f, form.n, &form.params)
}

/// Solves for `C(n,k)` against composition on `(1−x)^j`, `j ≤ 2n+2`, then
/// checks the result on `(1+x)^j`.
pub fn derive_symmetric_coefficients(n: u32, p: &Params) -> Result<SymmetricForm> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for j in 0..=(2 * n + 2) {
        let f = TermFunction::global([Term::u(Rational::from(j as i64))]);
        push_equations(&mut rows, &mut rhs, &f, n, p);
    }
    let coeffs = match linalg::solve(&rows, &rhs) {
        Solution::Unique(c) => c,
        Solution::Underdetermined { rank } => {
            return Err(Error::SingularSystem(format!(
                "symmetric form for n = {n} has rank {rank} < {n}"
            )))
        }
        Solution::Inconsistent => {
            return Err(Error::SingularSystem(format!(
                "no symmetric form reproduces the composition for n = {n}"
            )))
        }
    };
    let form = SymmetricForm {
        n,
        coeffs,
        params: p.clone(),
    };
    for j in 0..=(2 * n + 2) {
        let f = TermFunction::global([Term::v(Rational::from(j as i64))]);
        if !residual(&form, &f).is_zero() {
            return Err(Error::VerificationFailed(format!(
                "symmetric form for n = {n} disagrees with composition on (1+x)^{j}"
            )));
        }
    }
    Ok(form)
}

fn apply_ln_symmetric_unchecked(f: &TermFunction, form: &SymmetricForm) -> TermFunction {
    (1..=form.n)
        .map(|k| {
            lagrangian_block(f, k, &form.params)
                .scale(&GaussianRational::real(form.coeff(k).clone()))
        })
        .sum()
}

/// Evaluates `ℓⁿ` through the symmetric form.
pub fn apply_ln_symmetric(f: &TermFunction, form: &SymmetricForm, p: &Params) -> Result<TermFunction> {
    if form.params != *p {
        return Err(Error::PreconditionViolated(
            "symmetric form was derived for different parameters".into(),
        ));
    }
    Ok(apply_ln_symmetric_unchecked(f, form))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endpoint::Endpoint;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn jacobi_stirling(n: u32, p: &Params) -> Vec<Rational> {
        // P(n,k) = P(n−1,k−1) + k(k+α+β+1)·P(n−1,k), P(0,0) = 1
        let s = p.alpha() + p.beta() + Rational::one();
        let mut row = vec![Rational::one()];
        for m in 1..=n as usize {
            let mut next = vec![Rational::zero(); m + 1];
            for (k, slot) in next.iter_mut().enumerate().skip(1) {
                let kq = Rational::from(k as i64);
                let stay = row.get(k).cloned().unwrap_or_default() * (&kq * (&kq + &s));
                *slot = row[k - 1].clone() + stay;
            }
            row = next;
        }
        row[1..].to_vec()
    }

    #[test]
    fn constants_are_annihilated() {
        let p = Params::ratio((1, 3), (2, 5));
        assert!(apply_l(&TermFunction::one(), &p).is_zero());
        assert!(apply_ln_composed(&TermFunction::one(), 2, &p).is_zero());
    }

    #[test]
    fn second_kind_power() {
        // ℓ[(1−x)^{−α}] = −α(β+1)(1−x)^{−α}
        let p = Params::ratio((1, 2), (2, 5));
        let f = TermFunction::global([Term::u(-p.alpha())]);
        let c = -(p.alpha() * (p.beta() + Rational::one()));
        assert_eq!(apply_l(&f, &p), f.scale(&GaussianRational::real(c)));
    }

    #[test]
    fn first_form_is_trivial() {
        let p = Params::ratio((1, 3), (2, 5));
        let form = derive_symmetric_coefficients(1, &p).unwrap();
        assert_eq!(form.coeffs(), &[Rational::one()]);
    }

    #[test]
    fn coefficients_match_jacobi_stirling() {
        for p in [Params::legendre(), Params::ratio((1, 3), (2, 5)), Params::ratio((1, 2), (3, 4))] {
            for n in 1..=4 {
                let form = derive_symmetric_coefficients(n, &p).unwrap();
                assert_eq!(form.coeffs(), jacobi_stirling(n, &p).as_slice(), "n={n} {p:?}");
                assert!(form.coeff(n).is_one());
            }
        }
        // Legendre n = 2: ℓ² = (1/w)[(a_2 y'')'' − 2 (a_1 y')']
        let form = derive_symmetric_coefficients(2, &Params::legendre()).unwrap();
        assert_eq!(form.coeff(1), &q(2, 1));
    }

    #[test]
    fn symmetric_path_on_germs() {
        let p = Params::ratio((1, 2), (1, 5));
        let form = derive_symmetric_coefficients(3, &p).unwrap();
        let psi = TermFunction::supported_at(Endpoint::Plus, [Term::u(-p.alpha())]);
        assert_eq!(
            apply_ln_symmetric(&psi, &form, &p).unwrap(),
            apply_ln_composed(&psi, 3, &p)
        );
        assert!(apply_ln_symmetric(&TermFunction::zero(), &form, &p).unwrap().is_zero());
        assert!(apply_ln_symmetric(&psi, &form, &Params::legendre()).is_err());
    }

    #[test]
    fn serializes_coefficients() {
        let form = derive_symmetric_coefficients(2, &Params::legendre()).unwrap();
        assert_eq!(serde_json::to_string(&form).unwrap(), r#"{"n":2,"C":["2/1","1/1"]}"#);
    }
}
