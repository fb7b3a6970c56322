//! Membership predicates for the maximal, minimal and left-definite domains.

use serde::Serialize;

use crate::catalog::{jacobi_poly, phi, psi};
use crate::endpoint::{Endpoint, LimitClass, Params, Term, TermFunction};
use crate::error::{Error, Result};
use crate::exact::{GaussianRational, Rational};
use crate::operator::apply_ln_composed;
use crate::sesqui::SesquilinearForm;

/// `ℓⁿ` for fixed parameters, with its boundary form cached.
#[derive(Clone, Debug)]
pub struct JacobiPower {
    form: SesquilinearForm,
}

/// Labelled member of the defect basis.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BasisElement {
    pub label: String,
    pub function: TermFunction,
}

impl JacobiPower {
    pub fn new(n: u32, p: &Params) -> Result<Self> {
        Ok(JacobiPower {
            form: SesquilinearForm::new(n, p)?,
        })
    }

    pub fn n(&self) -> u32 {
        self.form.n()
    }

    pub fn params(&self) -> &Params {
        self.form.params()
    }

    pub fn form(&self) -> &SesquilinearForm {
        &self.form
    }

    /// `φ_0..φ_{n−1}, ψ_0..ψ_{n−1}` at one endpoint.
    pub fn defect_basis(&self, side: Endpoint) -> Result<Vec<BasisElement>> {
        let p = self.params();
        let sign = if side == Endpoint::Plus { '+' } else { '-' };
        let mut out: Vec<BasisElement> = (0..self.n())
            .map(|j| BasisElement {
                label: format!("phi{sign}:{j}"),
                function: phi(j, side),
            })
            .collect();
        for j in 0..self.n() {
            out.push(BasisElement {
                label: format!("psi{sign}:{j}"),
                function: psi(j, side, p)?,
            });
        }
        Ok(out)
    }

    /// All `4n` defect-basis elements, `+1` side first.
    pub fn full_defect_basis(&self) -> Result<Vec<BasisElement>> {
        let mut out = self.defect_basis(Endpoint::Plus)?;
        out.extend(self.defect_basis(Endpoint::Minus)?);
        Ok(out)
    }

    pub fn in_maximal(&self, f: &TermFunction) -> bool {
        let p = self.params();
        f.is_l2(p) && apply_ln_composed(f, self.n(), p).is_l2(p)
    }

    fn require_maximal(&self, f: &TermFunction) -> Result<()> {
        if self.in_maximal(f) {
            Ok(())
        } else {
            Err(Error::PreconditionViolated(format!(
                "function is not in the maximal domain of the order-{} operator",
                2 * self.n()
            )))
        }
    }

    /// Pairs to zero with the whole defect basis.
    pub fn in_minimal(&self, f: &TermFunction) -> Result<bool> {
        self.params().require_both_positive()?;
        self.require_maximal(f)?;
        for b in self.full_defect_basis()? {
            if !self.form.full(f, &b.function)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every limit the maximal-domain decomposition theorem asserts finite.
    pub fn smoothness_report(&self, f: &TermFunction) -> Result<DomainReport> {
        self.require_maximal(f)?;
        let p = self.params();
        let n = self.n();
        let mut weighted = Vec::new();
        let mut nested = Vec::new();
        for e in Endpoint::BOTH {
            for j in 0..=n {
                let g = f.differentiate(j).mul_term(&p.a_k(j));
                weighted.push(WeightedLimit {
                    endpoint: e,
                    j,
                    limit: g.limit(e),
                });
            }
            for k in 0..=n {
                let base = f.differentiate(k).mul_term(&p.a_k(k));
                for j in 1..k {
                    nested.push(NestedLimit {
                        endpoint: e,
                        k,
                        j,
                        limit: base.differentiate(k - j).limit(e),
                    });
                }
            }
        }
        let in_min = if p.require_both_positive().is_ok() {
            Some(self.in_minimal(f)?)
        } else {
            None
        };
        let leftdef_flags = LeftDefFlags {
            a: self.leftdef_a(f),
            b: self.leftdef_b(f),
            f: self.leftdef_f(f),
            lw: self.leftdef_lw(f),
        };
        let counterexample = weighted.iter().any(|w| w.limit.is_infinite())
            || nested.iter().any(|w| w.limit.is_infinite());
        Ok(DomainReport {
            n,
            in_max: true,
            weighted_limits: weighted,
            nested_limits: nested,
            in_min,
            leftdef_flags,
            counterexample,
        })
    }

    /// `p^n f^{(2n)} ∈ L²_w` with `p = (1−x)^{α+1}(1+x)^{β+1}`.
    fn leftdef_a(&self, f: &TermFunction) -> bool {
        let p = self.params();
        let n = self.n();
        let pn = Term::new(
            GaussianRational::one(),
            (p.alpha() + Rational::one()) * Rational::from(n as i64),
            (p.beta() + Rational::one()) * Rational::from(n as i64),
        );
        f.differentiate(2 * n).mul_term(&pn).is_l2(p)
    }

    /// `[f, P_j]_n(±1) = 0` for `j < n`, at each endpoint separately.
    fn leftdef_b(&self, f: &TermFunction) -> bool {
        self.vanishes_against_polys(f, 0..self.n())
    }

    fn vanishes_against_polys(&self, f: &TermFunction, indices: impl IntoIterator<Item = u32>) -> bool {
        indices.into_iter().all(|m| {
            let pm = jacobi_poly(m, self.params());
            Endpoint::BOTH
                .iter()
                .all(|&e| self.form.limit_at(f, &pm, e).is_zero())
        })
    }

    /// `[a_j f^{(j)}]^{(j−1)} → 0` at each endpoint for `j = 1..n`.
    fn leftdef_f(&self, f: &TermFunction) -> bool {
        let p = self.params();
        (1..=self.n()).all(|j| {
            let g = f.differentiate(j).mul_term(&p.a_k(j)).differentiate(j - 1);
            Endpoint::BOTH.iter().all(|&e| g.limit(e).is_zero())
        })
    }

    /// `(1−x)^{j/2}(1+x)^{j/2} f^{(j)} ∈ L²_w` for `j = 0..2n`.
    fn leftdef_lw(&self, f: &TermFunction) -> bool {
        let p = self.params();
        (0..=2 * self.n()).all(|j| {
            let half = Rational::new(j as i64, 2);
            let t = Term::new(GaussianRational::one(), half.clone(), half);
            f.differentiate(j).mul_term(&t).is_l2(p)
        })
    }

    /// `[f,1]_j(±1) = 0` for `j = 1..n`; equivalent to the `F_n` conditions.
    pub fn leftdef_f_by_forms(&self, f: &TermFunction) -> Result<bool> {
        self.require_maximal(f)?;
        let one = TermFunction::one();
        for j in 1..=self.n() {
            let form = SesquilinearForm::new(j, self.params())?;
            for e in Endpoint::BOTH {
                if !form.limit_at(f, &one, e).is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn leftdef_membership(&self, f: &TermFunction, which: LeftDef) -> Result<bool> {
        self.require_maximal(f)?;
        Ok(match which {
            LeftDef::A => self.leftdef_a(f),
            LeftDef::B => {
                self.params().require_both_positive()?;
                self.leftdef_b(f)
            }
            LeftDef::F => self.leftdef_f(f),
            LeftDef::LW => self.leftdef_lw(f),
        })
    }

    /// All four flags at once (B is evaluated even when a parameter vanishes).
    pub fn leftdef_flags(&self, f: &TermFunction) -> Result<LeftDefFlags> {
        self.require_maximal(f)?;
        Ok(LeftDefFlags {
            a: self.leftdef_a(f),
            b: self.leftdef_b(f),
            f: self.leftdef_f(f),
            lw: self.leftdef_lw(f),
        })
    }

    /// `C̃_n(M)`: `[f, P_m]_n(±1) = 0` for every `m ∈ M`.
    pub fn in_c_tilde(&self, f: &TermFunction, indices: &[u32]) -> Result<bool> {
        self.require_maximal(f)?;
        Ok(self.vanishes_against_polys(f, indices.iter().copied()))
    }

    pub fn verify_maxdomain_theorem(&self, sample: &[TermFunction]) -> Result<MaxDomainVerdict> {
        let mut counterexamples = Vec::new();
        let mut limits_checked = 0;
        for (i, f) in sample.iter().enumerate() {
            let r = self.smoothness_report(f)?;
            limits_checked += r.weighted_limits.len() + r.nested_limits.len();
            if r.counterexample {
                counterexamples.push(i);
            }
        }
        Ok(MaxDomainVerdict {
            n: self.n(),
            params: self.params().clone(),
            functions_tested: sample.len(),
            limits_checked,
            counterexamples: counterexamples.clone(),
            passed: counterexamples.is_empty(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LeftDef {
    A,
    B,
    F,
    LW,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LeftDefFlags {
    #[serde(rename = "A_n")]
    pub a: bool,
    #[serde(rename = "B_n")]
    pub b: bool,
    #[serde(rename = "F_n")]
    pub f: bool,
    #[serde(rename = "LW")]
    pub lw: bool,
}

impl LeftDefFlags {
    pub fn all_agree(&self) -> bool {
        self.a == self.b && self.b == self.f && self.f == self.lw
    }

    /// B, F and LW agree while A differs from them.
    pub fn only_a_separates(&self) -> bool {
        self.b == self.f && self.f == self.lw && self.a != self.lw
    }
}

/// Limit of `(1−x)^{α+j}(1+x)^{β+j} f^{(j)}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeightedLimit {
    pub endpoint: Endpoint,
    pub j: u32,
    pub limit: LimitClass,
}

/// Limit of `[(1−x)^{α+k}(1+x)^{β+k} f^{(k)}]^{(k−j)}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NestedLimit {
    pub endpoint: Endpoint,
    pub k: u32,
    pub j: u32,
    pub limit: LimitClass,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DomainReport {
    pub n: u32,
    pub in_max: bool,
    pub weighted_limits: Vec<WeightedLimit>,
    pub nested_limits: Vec<NestedLimit>,
    /// `None` when a parameter vanishes and the defect basis is unavailable.
    pub in_min: Option<bool>,
    pub leftdef_flags: LeftDefFlags,
    /// Any of the listed limits classified as infinite.
    pub counterexample: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MaxDomainVerdict {
    pub n: u32,
    pub params: Params,
    pub functions_tested: usize,
    pub limits_checked: usize,
    pub counterexamples: Vec<usize>,
    pub passed: bool,
}

pub fn in_maximal(f: &TermFunction, n: u32, p: &Params) -> Result<bool> {
    Ok(JacobiPower::new(n, p)?.in_maximal(f))
}

pub fn in_minimal(f: &TermFunction, n: u32, p: &Params) -> Result<bool> {
    JacobiPower::new(n, p)?.in_minimal(f)
}

pub fn smoothness_report(f: &TermFunction, n: u32, p: &Params) -> Result<DomainReport> {
    JacobiPower::new(n, p)?.smoothness_report(f)
}

pub fn leftdef_membership(f: &TermFunction, n: u32, p: &Params, which: LeftDef) -> Result<bool> {
    JacobiPower::new(n, p)?.leftdef_membership(f, which)
}

pub fn verify_maxdomain_theorem(n: u32, p: &Params, sample: &[TermFunction]) -> Result<MaxDomainVerdict> {
    JacobiPower::new(n, p)?.verify_maxdomain_theorem(sample)
}
