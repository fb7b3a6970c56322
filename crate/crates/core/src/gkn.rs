//! GKN extension machinery over the defect basis.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::catalog::jacobi_poly;
use crate::domains::{BasisElement, JacobiPower};
use crate::endpoint::{Endpoint, TermFunction};
use crate::error::{Error, Result};
use crate::exact::linalg::{self, Solution};
use crate::exact::{AlgebraicValue, GaussianRational, Rational};

/// Matrix of `[b_i, b_j]_n |_{−1}^{1}` over the defect basis at one side.
#[derive(Clone, Debug, PartialEq)]
pub struct PairingMatrix {
    pub n: u32,
    pub side: Endpoint,
    pub labels: Vec<String>,
    pub entries: Vec<Vec<AlgebraicValue>>,
}

impl PairingMatrix {
    pub fn entry(&self, i: usize, j: usize) -> &AlgebraicValue {
        &self.entries[i][j]
    }

    /// `(φ_s, ψ_t)` entry.
    pub fn phi_psi(&self, s: usize, t: usize) -> &AlgebraicValue {
        &self.entries[s][self.n as usize + t]
    }

    pub fn rank(&self) -> usize {
        exact_rank(&self.entries)
    }
}

impl Serialize for PairingMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: u32,
            side: Endpoint,
            labels: &'a [String],
            entries: &'a [Vec<AlgebraicValue>],
            preview: Vec<Vec<[f64; 2]>>,
        }
        Repr {
            n: self.n,
            side: self.side,
            labels: &self.labels,
            entries: &self.entries,
            preview: float_preview(&self.entries),
        }
        .serialize(s)
    }
}

pub fn float_preview(m: &[Vec<AlgebraicValue>]) -> Vec<Vec<[f64; 2]>> {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    let (re, im) = x.to_f64();
                    [re, im]
                })
                .collect()
        })
        .collect()
}

fn pair_all(ctx: &JacobiPower, rows: &[TermFunction], cols: &[TermFunction]) -> Result<Vec<Vec<AlgebraicValue>>> {
    let cells: Vec<(usize, usize)> = (0..rows.len())
        .flat_map(|i| (0..cols.len()).map(move |j| (i, j)))
        .collect();
    let values: Vec<AlgebraicValue> = cells
        .par_iter()
        .map(|&(i, j)| ctx.form().full(&rows[i], &cols[j]))
        .collect::<Result<_>>()?;
    Ok(values
        .chunks(cols.len().max(1))
        .take(rows.len())
        .map(|c| c.to_vec())
        .collect())
}

impl JacobiPower {
    pub fn pairing_matrix(&self, side: Endpoint) -> Result<PairingMatrix> {
        self.params().require_both_positive()?;
        let basis = self.defect_basis(side)?;
        let fns: Vec<TermFunction> = basis.iter().map(|b| b.function.clone()).collect();
        Ok(PairingMatrix {
            n: self.n(),
            side,
            labels: basis.into_iter().map(|b| b.label).collect(),
            entries: pair_all(self, &fns, &fns)?,
        })
    }
}

pub fn build_pairing_matrix(n: u32, p: &crate::endpoint::Params, side: Endpoint) -> Result<PairingMatrix> {
    JacobiPower::new(n, p)?.pairing_matrix(side)
}

/// Exact rank over ℚ(i)(2^{1/D}).
pub fn exact_rank(m: &[Vec<AlgebraicValue>]) -> usize {
    linalg::rank(m)
}

// ---------------------------------------------------------------------------
// boundary conditions

/// `Σ c_k f_k` with algebraic coefficients.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundaryCondition {
    pub components: Vec<(AlgebraicValue, TermFunction)>,
}

impl BoundaryCondition {
    pub fn single(f: TermFunction) -> Self {
        BoundaryCondition {
            components: vec![(AlgebraicValue::one(), f)],
        }
    }

    /// Collapses to one term function when all coefficients are Gaussian rationals.
    pub fn as_term_function(&self) -> Option<TermFunction> {
        let mut acc = TermFunction::zero();
        for (c, f) in &self.components {
            acc = &acc + &f.scale(c.as_gaussian()?);
        }
        Some(acc)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundaryConditionSet {
    pub n: u32,
    pub conditions: Vec<BoundaryCondition>,
}

impl BoundaryConditionSet {
    pub fn new(n: u32, functions: impl IntoIterator<Item = TermFunction>) -> Self {
        BoundaryConditionSet {
            n,
            conditions: functions.into_iter().map(BoundaryCondition::single).collect(),
        }
    }

    /// Each function split into its `+1` and `−1` parts, giving one condition
    /// per endpoint.
    pub fn per_endpoint(n: u32, functions: impl IntoIterator<Item = TermFunction>) -> Self {
        let fns: Vec<TermFunction> = functions.into_iter().collect();
        let split = Endpoint::BOTH
            .iter()
            .flat_map(|&e| fns.iter().map(move |f| f.localize(e)))
            .filter(|f| !f.is_zero());
        BoundaryConditionSet::new(n, split)
    }

    /// `{P_m : m ∈ indices}`, one condition per endpoint each.
    pub fn jacobi(ctx: &JacobiPower, indices: &[u32]) -> Self {
        BoundaryConditionSet::per_endpoint(
            ctx.n(),
            indices.iter().map(|&m| jacobi_poly(m, ctx.params())),
        )
    }

    pub fn len(&self) -> usize {
        self.conditions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.conditions.is_empty()
    }
}

/// Memoized pairings between component functions.
struct PairingCache<'a> {
    ctx: &'a JacobiPower,
    ids: HashMap<TermFunction, usize>,
    values: HashMap<(usize, usize), AlgebraicValue>,
}

impl<'a> PairingCache<'a> {
    fn new(ctx: &'a JacobiPower) -> Self {
        PairingCache {
            ctx,
            ids: HashMap::new(),
            values: HashMap::new(),
        }
    }

    fn id(&mut self, f: &TermFunction) -> usize {
        let next = self.ids.len();
        *self.ids.entry(f.clone()).or_insert(next)
    }

    fn pair(&mut self, f: &TermFunction, g: &TermFunction) -> Result<AlgebraicValue> {
        let key = (self.id(f), self.id(g));
        if let Some(v) = self.values.get(&key) {
            return Ok(v.clone());
        }
        let v = self.ctx.form().full(f, g)?;
        self.values.insert(key, v.clone());
        Ok(v)
    }

    /// `[Σ c_a f_a, Σ d_b g_b] = Σ c_a conj(d_b) [f_a, g_b]`.
    fn pair_conditions(&mut self, w: &BoundaryCondition, v: &BoundaryCondition) -> Result<AlgebraicValue> {
        let mut acc = AlgebraicValue::zero();
        for (c, f) in &w.components {
            for (d, g) in &v.components {
                let val = self.pair(f, g)?;
                if !val.is_zero() {
                    acc = &acc + &(&(c * &d.conj()) * &val);
                }
            }
        }
        Ok(acc)
    }

    fn pair_function(&mut self, f: &TermFunction, v: &BoundaryCondition) -> Result<AlgebraicValue> {
        self.pair_conditions(&BoundaryCondition::single(f.clone()), v)
    }
}

impl JacobiPower {
    /// `[w_j, w_k]_n |_{−1}^{1} = 0` for all `j, k`.
    pub fn glazman_symmetry_check(&self, w: &BoundaryConditionSet) -> Result<bool> {
        let mut cache = PairingCache::new(self);
        for a in &w.conditions {
            for b in &w.conditions {
                if !cache.pair_conditions(a, b)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Rows `[w_i, b_j]` against the full defect basis.
    pub fn defect_pairings(&self, w: &BoundaryConditionSet) -> Result<Vec<Vec<AlgebraicValue>>> {
        self.params().require_both_positive()?;
        let basis: Vec<BasisElement> = self.full_defect_basis()?;
        let mut cache = PairingCache::new(self);
        w.conditions
            .iter()
            .map(|c| {
                basis
                    .iter()
                    .map(|b| cache.pair_conditions(c, &BoundaryCondition::single(b.function.clone())))
                    .collect()
            })
            .collect()
    }

    /// Linear independence modulo the minimal domain.
    pub fn lin_indep_mod_minimal(&self, w: &BoundaryConditionSet) -> Result<bool> {
        let rows = self.defect_pairings(w)?;
        Ok(exact_rank(&rows) == w.len())
    }

    /// `[f, w_k]_n |_{−1}^{1} = 0` for every condition.
    pub fn satisfies(&self, f: &TermFunction, w: &BoundaryConditionSet) -> Result<bool> {
        let mut cache = PairingCache::new(self);
        for c in &w.conditions {
            if !cache.pair_function(f, c)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn condition_satisfies(&self, cache: &mut PairingCache, v: &BoundaryCondition, w: &BoundaryConditionSet) -> Result<bool> {
        for c in &w.conditions {
            if !cache.pair_conditions(v, c)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_valid(&self, w: &BoundaryConditionSet, name: &str) -> Result<()> {
        let expected = 2 * self.n() as usize;
        if w.len() != expected {
            return Err(Error::PreconditionViolated(format!(
                "{name} has {} conditions, expected {expected}",
                w.len()
            )));
        }
        if !self.glazman_symmetry_check(w)? {
            return Err(Error::PreconditionViolated(format!(
                "{name} violates the Glazman symmetry conditions"
            )));
        }
        // without second-kind germs the defect basis is unavailable
        if self.params().require_both_positive().is_ok() && !self.lin_indep_mod_minimal(w)? {
            return Err(Error::PreconditionViolated(format!(
                "{name} is not linearly independent modulo the minimal domain"
            )));
        }
        Ok(())
    }

    /// Both sets define the same self-adjoint domain.
    pub fn domain_equal(&self, w1: &BoundaryConditionSet, w2: &BoundaryConditionSet) -> Result<bool> {
        self.check_valid(w1, "first condition set")?;
        self.check_valid(w2, "second condition set")?;
        let mut cache = PairingCache::new(self);
        for v in &w2.conditions {
            if !self.condition_satisfies(&mut cache, v, w1)? {
                return Ok(false);
            }
        }
        for v in &w1.conditions {
            if !self.condition_satisfies(&mut cache, v, w2)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Boundary conditions of the extension parametrized by `u`.
    pub fn extension_from_unitary(&self, u: &ExtensionMatrix) -> Result<BoundaryConditionSet> {
        self.params().require_both_positive()?;
        let n = self.n() as usize;
        if u.n != self.n() {
            return Err(Error::PreconditionViolated(format!(
                "unitary is for n = {}, operator has n = {n}",
                u.n
            )));
        }
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for side in Endpoint::BOTH {
            let (e, d) = self.hyperbolic_pairs(side)?;
            positive.extend(e);
            negative.extend(d);
        }
        let conditions = (0..2 * n)
            .map(|j| {
                let mut comps = positive[j].clone();
                for (k, neg) in negative.iter().enumerate() {
                    let c = &u.entries[k][j];
                    if c.is_zero() {
                        continue;
                    }
                    comps.extend(neg.iter().map(|(a, f)| (c * a, f.clone())));
                }
                BoundaryCondition {
                    components: merge_components(comps),
                }
            })
            .collect();
        Ok(BoundaryConditionSet {
            n: self.n(),
            conditions,
        })
    }

    /// Bases `e_t`, `d_t` at one side with `h(e_s,e_t) = δ`, `h(d_s,d_t) = −δ`,
    /// `h(e_s,d_t) = 0`, where `h = −i·[·,·]_n |_{−1}^{1}` restricted to the side
    /// is Hermitian.
    #[allow(clippy::type_complexity)]
    fn hyperbolic_pairs(
        &self,
        side: Endpoint,
    ) -> Result<(Vec<Vec<(AlgebraicValue, TermFunction)>>, Vec<Vec<(AlgebraicValue, TermFunction)>>)> {
        let n = self.n() as usize;
        let m = self.pairing_matrix(side)?;
        let basis = self.defect_basis(side)?;
        // the pairing matrix already carries the endpoint sign of the full form
        let scale = AlgebraicValue::from_gaussian(GaussianRational::new(Rational::zero(), Rational::from(-1)));
        let h = |i: usize, j: usize| &scale * &m.entries[i][j];
        // conj(C)·Hφψᵀ = I  ⇒  conj(C)ᵀ = Hφψ^{-1}
        let h_phi_psi: Vec<Vec<AlgebraicValue>> = (0..n).map(|s| (0..n).map(|u| h(s, n + u)).collect()).collect();
        let inv = invert(&h_phi_psi)?;
        let c: Vec<Vec<AlgebraicValue>> = (0..n)
            .map(|t| (0..n).map(|u| inv[u][t].conj()).collect())
            .collect();
        // S = C Hψψ C*
        let s: Vec<Vec<AlgebraicValue>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let mut acc = AlgebraicValue::zero();
                        for u in 0..n {
                            for v in 0..n {
                                acc = &acc + &(&(&c[a][u] * &c[b][v].conj()) * &h(n + u, n + v));
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        let half = AlgebraicValue::from_rational(Rational::new(1, 2));
        let inv_sqrt2 = AlgebraicValue::pow2(&Rational::new(-1, 2));
        let mut e_vecs = Vec::with_capacity(n);
        let mut d_vecs = Vec::with_capacity(n);
        for t in 0..n {
            // ψ'_t = Σ_u C_tu ψ_u − ½ Σ_u S_tu φ_u
            let mut psi_prime: Vec<(AlgebraicValue, TermFunction)> = Vec::new();
            for u in 0..n {
                psi_prime.push((c[t][u].clone(), basis[n + u].function.clone()));
                psi_prime.push((-(&half * &s[t][u]), basis[u].function.clone()));
            }
            let phi_t = (AlgebraicValue::one(), basis[t].function.clone());
            let mut e = vec![phi_t.clone()];
            e.extend(psi_prime.iter().cloned());
            let mut d = vec![phi_t];
            d.extend(psi_prime.iter().map(|(a, f)| (-a, f.clone())));
            e_vecs.push(merge_components(e.into_iter().map(|(a, f)| (&a * &inv_sqrt2, f)).collect()));
            d_vecs.push(merge_components(d.into_iter().map(|(a, f)| (&a * &inv_sqrt2, f)).collect()));
        }
        Ok((e_vecs, d_vecs))
    }
}

fn merge_components(comps: Vec<(AlgebraicValue, TermFunction)>) -> Vec<(AlgebraicValue, TermFunction)> {
    let mut out: Vec<(AlgebraicValue, TermFunction)> = Vec::new();
    for (c, f) in comps {
        match out.iter_mut().find(|(_, g)| *g == f) {
            Some(slot) => slot.0 = &slot.0 + &c,
            None => out.push((c, f)),
        }
    }
    out.retain(|(c, _)| !c.is_zero());
    out
}

fn invert(m: &[Vec<AlgebraicValue>]) -> Result<Vec<Vec<AlgebraicValue>>> {
    let n = m.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<AlgebraicValue> = (0..n)
            .map(|i| if i == j { AlgebraicValue::one() } else { AlgebraicValue::zero() })
            .collect();
        match linalg::solve(m, &e) {
            Solution::Unique(x) => cols.push(x),
            _ => return Err(Error::SingularSystem("defect pairing block is singular".into())),
        }
    }
    Ok((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

/// Exactly unitary `2n × 2n` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtensionMatrix {
    pub n: u32,
    entries: Vec<Vec<AlgebraicValue>>,
}

impl ExtensionMatrix {
    pub fn new(n: u32, entries: Vec<Vec<AlgebraicValue>>) -> Result<Self> {
        let size = 2 * n as usize;
        if entries.len() != size || entries.iter().any(|r| r.len() != size) {
            return Err(Error::PreconditionViolated(format!(
                "unitary must be {size}x{size}"
            )));
        }
        for i in 0..size {
            for j in 0..size {
                let mut acc = AlgebraicValue::zero();
                for k in 0..size {
                    acc = &acc + &(&entries[i][k] * &entries[j][k].conj());
                }
                let expected = if i == j { AlgebraicValue::one() } else { AlgebraicValue::zero() };
                if acc != expected {
                    return Err(Error::NotUnitary);
                }
            }
        }
        Ok(ExtensionMatrix { n, entries })
    }

    pub fn from_gaussian(n: u32, entries: Vec<Vec<GaussianRational>>) -> Result<Self> {
        ExtensionMatrix::new(
            n,
            entries
                .into_iter()
                .map(|r| r.into_iter().map(AlgebraicValue::from).collect())
                .collect(),
        )
    }

    pub fn identity(n: u32) -> Self {
        let size = 2 * n as usize;
        let entries = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| if i == j { AlgebraicValue::one() } else { AlgebraicValue::zero() })
                    .collect()
            })
            .collect();
        ExtensionMatrix { n, entries }
    }

    pub fn entries(&self) -> &[Vec<AlgebraicValue>] {
        &self.entries
    }
}

impl Serialize for ExtensionMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

pub fn glazman_symmetry_check(w: &BoundaryConditionSet, p: &crate::endpoint::Params) -> Result<bool> {
    JacobiPower::new(w.n, p)?.glazman_symmetry_check(w)
}

pub fn lin_indep_mod_minimal(w: &BoundaryConditionSet, p: &crate::endpoint::Params) -> Result<bool> {
    JacobiPower::new(w.n, p)?.lin_indep_mod_minimal(w)
}

pub fn domain_equal(w1: &BoundaryConditionSet, w2: &BoundaryConditionSet, p: &crate::endpoint::Params) -> Result<bool> {
    if w1.n != w2.n {
        return Err(Error::PreconditionViolated("condition sets for different n".into()));
    }
    JacobiPower::new(w1.n, p)?.domain_equal(w1, w2)
}

pub fn extension_from_unitary(u: &ExtensionMatrix, p: &crate::endpoint::Params) -> Result<BoundaryConditionSet> {
    JacobiPower::new(u.n, p)?.extension_from_unitary(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{phi, psi};
    use crate::endpoint::Params;

    fn ctx(n: u32) -> (JacobiPower, Params) {
        let p = Params::ratio((1, 2), (2, 5));
        (JacobiPower::new(n, &p).unwrap(), p)
    }

    #[test]
    fn pairing_matrix_n1() {
        let (c, _) = ctx(1);
        let m = c.pairing_matrix(Endpoint::Plus).unwrap();
        assert!(m.entry(0, 0).is_zero());
        let expected = AlgebraicValue::monomial(GaussianRational::real(Rational::new(-1, 2)), &Rational::new(7, 5));
        assert_eq!(m.entry(0, 1), &expected);
        // skew-Hermitian: M_10 = −conj(M_01)
        assert_eq!(m.entry(1, 0), &-expected.conj());
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rank_edge_cases() {
        let z = vec![vec![AlgebraicValue::zero(); 3]; 3];
        assert_eq!(exact_rank(&z), 0);
        let id = ExtensionMatrix::identity(2);
        assert_eq!(exact_rank(id.entries()), 4);
    }

    #[test]
    fn glazman_examples() {
        let (c, p) = ctx(2);
        let w = BoundaryConditionSet::new(2, (0..2).map(|m| jacobi_poly(m, &p)));
        assert!(c.glazman_symmetry_check(&w).unwrap());
        let bad = BoundaryConditionSet::new(2, [phi(0, Endpoint::Plus), psi(1, Endpoint::Plus, &p).unwrap()]);
        assert!(!c.glazman_symmetry_check(&bad).unwrap());
        let (c1, _) = ctx(1);
        assert!(c1.glazman_symmetry_check(&BoundaryConditionSet::new(1, [TermFunction::one()])).unwrap());
    }

    #[test]
    fn independence_examples() {
        let (c, p) = ctx(2);
        assert!(c.lin_indep_mod_minimal(&BoundaryConditionSet::new(2, (0..2).map(|m| jacobi_poly(m, &p)))).unwrap());
        assert!(c.lin_indep_mod_minimal(&BoundaryConditionSet::jacobi(&c, &[3, 7])).unwrap());
        assert!(!c.lin_indep_mod_minimal(&BoundaryConditionSet::new(2, [phi(2, Endpoint::Plus)])).unwrap());
    }

    #[test]
    fn jacobi_domains_coincide() {
        let (c, p) = ctx(2);
        let base = BoundaryConditionSet::jacobi(&c, &[0, 1]);
        assert!(c.domain_equal(&base, &BoundaryConditionSet::jacobi(&c, &[4, 7])).unwrap());
        let friedrichs = c.extension_from_unitary(&ExtensionMatrix::identity(2)).unwrap();
        assert!(c.domain_equal(&base, &friedrichs).unwrap());
        let mut rotated = vec![vec![GaussianRational::zero(); 4]; 4];
        for (k, row) in rotated.iter_mut().enumerate() {
            row[k] = if k == 0 { GaussianRational::i() } else { GaussianRational::one() };
        }
        let other = c
            .extension_from_unitary(&ExtensionMatrix::from_gaussian(2, rotated).unwrap())
            .unwrap();
        assert!(!c.domain_equal(&base, &other).unwrap());
        let with_psi = BoundaryConditionSet::new(
            2,
            [
                psi(0, Endpoint::Plus, &p).unwrap(),
                phi(1, Endpoint::Plus),
                phi(0, Endpoint::Minus),
                phi(1, Endpoint::Minus),
            ],
        );
        assert!(matches!(c.domain_equal(&base, &with_psi), Err(Error::PreconditionViolated(_))));
        let short = BoundaryConditionSet::new(2, [TermFunction::one()]);
        assert!(matches!(c.domain_equal(&base, &short), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn legendre_first_order() {
        let p = Params::legendre();
        let c = JacobiPower::new(1, &p).unwrap();
        let w1 = BoundaryConditionSet::per_endpoint(1, [TermFunction::one()]);
        for m in 0..=8 {
            let w2 = BoundaryConditionSet::jacobi(&c, &[m]);
            assert!(c.domain_equal(&w1, &w2).unwrap(), "m={m}");
        }
    }

    #[test]
    fn unitary_extensions_are_symmetric() {
        let (c, _) = ctx(1);
        let id = c.extension_from_unitary(&ExtensionMatrix::identity(1)).unwrap();
        assert!(c.glazman_symmetry_check(&id).unwrap());
        // identity gives span{φ_0^+, φ_0^−}
        for cond in &id.conditions {
            let f = cond.as_term_function();
            assert!(cond.components.iter().all(|(_, f)| f == &phi(0, Endpoint::Plus) || f == &phi(0, Endpoint::Minus)), "{f:?}");
        }
        let i = GaussianRational::i();
        let z = GaussianRational::zero();
        let diag = ExtensionMatrix::from_gaussian(1, vec![vec![i, z.clone()], vec![z, -GaussianRational::one()]]).unwrap();
        let w = c.extension_from_unitary(&diag).unwrap();
        assert!(c.glazman_symmetry_check(&w).unwrap());
        assert!(c.lin_indep_mod_minimal(&w).unwrap());
    }

    #[test]
    fn rejects_non_unitary() {
        let two = GaussianRational::from_integer(2);
        let z = GaussianRational::zero();
        let m = vec![vec![two, z.clone()], vec![z, GaussianRational::one()]];
        assert_eq!(ExtensionMatrix::from_gaussian(1, m).unwrap_err(), Error::NotUnitary);
    }
}
