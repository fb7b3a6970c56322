//! Named test functions: φ_j^±, ψ_j^±, Jacobi polynomials and truncated
//! local solutions of the eigenvalue equation.

use serde::{Deserialize, Serialize};

use crate::endpoint::{Endpoint, Germ, Params, Term, TermFunction};
use crate::error::Result;
use crate::exact::{factorial, AlgebraicValue, GaussianRational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
    JacobiPoly,
    LocalSolution,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CatalogEntry {
    pub kind: Kind,
    pub index: u32,
    pub function: TermFunction,
}

impl CatalogEntry {
    pub fn label(&self) -> String {
        match self.kind {
            Kind::PhiPlus => format!("phi+:{}", self.index),
            Kind::PhiMinus => format!("phi-:{}", self.index),
            Kind::PsiPlus => format!("psi+:{}", self.index),
            Kind::PsiMinus => format!("psi-:{}", self.index),
            Kind::JacobiPoly => format!("P:{}", self.index),
            Kind::LocalSolution => format!("local:{}", self.index),
        }
    }
}

/// Local power `(1−x)^e` at `+1` or `(1+x)^e` at `−1`.
fn local_power(endpoint: Endpoint, e: Rational) -> Term {
    match endpoint {
        Endpoint::Plus => Term::u(e),
        Endpoint::Minus => Term::v(e),
    }
}

/// φ_j: `(1∓x)^j` near the chosen endpoint, zero near the other.
pub fn phi(j: u32, endpoint: Endpoint) -> TermFunction {
    TermFunction::supported_at(endpoint, [local_power(endpoint, Rational::from(j as i64))])
}

/// ψ_j: `(1−x)^{−α+j}` near `+1` (`(1+x)^{−β+j}` near `−1`), zero near the other.
pub fn psi(j: u32, endpoint: Endpoint, p: &Params) -> Result<TermFunction> {
    p.require_positive(endpoint)?;
    let e = Rational::from(j as i64) - p.at(endpoint);
    Ok(TermFunction::supported_at(endpoint, [local_power(endpoint, e)]))
}

/// Coefficients of `P_m^{(α,β)}` in powers of `(1−x)`.
pub fn jacobi_coefficients(m: u32, p: &Params) -> Vec<Rational> {
    let s = Rational::from(m as i64) + p.alpha() + p.beta() + Rational::one();
    (0..=m)
        .map(|j| {
            let head = Rational::new(-1, 2).pow(j as i32) * s.pochhammer(j);
            let tail = (p.alpha() + Rational::from(j as i64 + 1)).pochhammer(m - j);
            head * tail / (factorial(j) * factorial(m - j))
        })
        .collect()
}

/// `P_m^{(α,β)}` as a global term function.
pub fn jacobi_poly(m: u32, p: &Params) -> TermFunction {
    TermFunction::global(
        jacobi_coefficients(m, p)
            .into_iter()
            .enumerate()
            .map(|(j, c)| Term::new(GaussianRational::real(c), Rational::from(j as i64), Rational::zero())),
    )
}

/// Truncated first- and second-kind local solutions of `ℓ f = μ(μ+α+β+1) f`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LocalSolution {
    pub first_kind: Germ,
    pub second_kind: Germ,
    /// Constant `2^{α}` (or `2^{β}`) multiplying `second_kind`, kept apart
    /// because it is not a Gaussian rational.
    pub second_kind_prefactor: AlgebraicValue,
}

/// Truncated `₂F₁(a, b; c; s/2)` coefficients times `s^{shift+k}`, `k ≤ order`.
fn hypergeometric_germ(
    endpoint: Endpoint,
    a: &Rational,
    b: &Rational,
    c: &Rational,
    shift: &Rational,
    order: u32,
) -> Germ {
    let mut coeff = Rational::one();
    let mut terms = Vec::new();
    for k in 0..=order {
        if k > 0 {
            let km = Rational::from(k as i64 - 1);
            let den = (c + &km) * Rational::from(k as i64) * Rational::from(2);
            coeff = coeff * (a + &km) * (b + &km) / den;
        }
        terms.push(
            local_power(endpoint, shift + &Rational::from(k as i64))
                .scaled(&GaussianRational::real(coeff.clone())),
        );
    }
    Germ::new(endpoint, terms)
}

/// Both local solutions at `endpoint`, truncated at local power `order`.
pub fn local_solution_germ(mu: &Rational, endpoint: Endpoint, order: u32, p: &Params) -> Result<LocalSolution> {
    p.require_positive(endpoint)?;
    let (near, far) = (p.at(endpoint), p.at(endpoint.opposite()));
    let one = Rational::one();
    let a = -mu;
    let b = mu + near + far + &one;
    let c = near + &one;
    let first = hypergeometric_germ(endpoint, &a, &b, &c, &Rational::zero(), order);
    // s^{1−c} ₂F₁(a−c+1, b−c+1; 2−c; s/2), with (s/2)^{−near} = 2^{near}·s^{−near}
    let two = Rational::from(2);
    let second = hypergeometric_germ(
        endpoint,
        &(&a - &c + &one),
        &(&b - &c + &one),
        &(&two - &c),
        &(-near),
        order,
    );
    Ok(LocalSolution {
        first_kind: first,
        second_kind: second,
        second_kind_prefactor: AlgebraicValue::pow2(near),
    })
}

/// φ_j and ψ_j at both endpoints for `j < count`, then `P_m` for `m ≤ max_degree`.
/// ψ entries are omitted where the parameter vanishes.
pub fn catalog(count: u32, max_degree: u32, p: &Params) -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for j in 0..count {
        out.push(CatalogEntry {
            kind: Kind::PhiPlus,
            index: j,
            function: phi(j, Endpoint::Plus),
        });
        out.push(CatalogEntry {
            kind: Kind::PhiMinus,
            index: j,
            function: phi(j, Endpoint::Minus),
        });
    }
    for j in 0..count {
        if let Ok(f) = psi(j, Endpoint::Plus, p) {
            out.push(CatalogEntry {
                kind: Kind::PsiPlus,
                index: j,
                function: f,
            });
        }
        if let Ok(f) = psi(j, Endpoint::Minus, p) {
            out.push(CatalogEntry {
                kind: Kind::PsiMinus,
                index: j,
                function: f,
            });
        }
    }
    for m in 0..=max_degree {
        out.push(CatalogEntry {
            kind: Kind::JacobiPoly,
            index: m,
            function: jacobi_poly(m, p),
        });
    }
    out
}
