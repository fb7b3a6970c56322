//! Closed term algebra `c·(1−x)^a·(1+x)^b` and its germs at `x = ±1`.
//!
//! Throughout, `u = 1−x` and `v = 1+x`. Because `u + v = 2` a function has
//! many term representations, so every germ is kept in a canonical normal
//! form: terms are grouped by the fractional parts of their exponents, and
//! inside each class the Laurent polynomial in `u`, `v` is reduced by partial
//! fractions to the basis `{u^i : i ∈ ℤ} ∪ {v^j : j < 0}` at `+1` (mirrored
//! at `−1`). Two germs are then equal as functions exactly when they are
//! equal as data.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{AlgebraicValue, GaussianRational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Endpoint {
    #[serde(rename = "-1")]
    Minus,
    #[serde(rename = "+1")]
    Plus,
}

impl Endpoint {
    pub const BOTH: [Endpoint; 2] = [Endpoint::Plus, Endpoint::Minus];

    pub fn sign(self) -> i64 {
        match self {
            Endpoint::Plus => 1,
            Endpoint::Minus => -1,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Endpoint::Plus => "+1",
            Endpoint::Minus => "-1",
        }
    }

    pub fn opposite(self) -> Endpoint {
        match self {
            Endpoint::Plus => Endpoint::Minus,
            Endpoint::Minus => Endpoint::Plus,
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Jacobi parameters with `0 ≤ α, β < 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct Params {
    alpha: Rational,
    beta: Rational,
}

#[derive(Deserialize)]
struct RawParams {
    alpha: Rational,
    beta: Rational,
}

impl TryFrom<RawParams> for Params {
    type Error = Error;
    fn try_from(raw: RawParams) -> Result<Self> {
        Params::new(raw.alpha, raw.beta)
    }
}

impl Params {
    pub fn new(alpha: Rational, beta: Rational) -> Result<Self> {
        for (name, v) in [("alpha", &alpha), ("beta", &beta)] {
            if v.is_negative() || *v >= Rational::one() {
                return Err(Error::InvalidParameter(format!(
                    "{name} = {v} is outside [0, 1)"
                )));
            }
        }
        Ok(Params { alpha, beta })
    }

    /// Shorthand for tests and examples; panics on invalid input.
    pub fn ratio(a: (i64, i64), b: (i64, i64)) -> Self {
        Params::new(Rational::new(a.0, a.1), Rational::new(b.0, b.1)).expect("valid parameters")
    }

    pub fn legendre() -> Self {
        Params {
            alpha: Rational::zero(),
            beta: Rational::zero(),
        }
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    /// The parameter governing the singular behaviour at `e`.
    pub fn at(&self, e: Endpoint) -> &Rational {
        match e {
            Endpoint::Plus => &self.alpha,
            Endpoint::Minus => &self.beta,
        }
    }

    /// Errors unless the parameter at `e` is strictly positive.
    pub fn require_positive(&self, e: Endpoint) -> Result<()> {
        if self.at(e).is_zero() {
            let name = if e == Endpoint::Plus { "alpha" } else { "beta" };
            return Err(Error::DegenerateParameter(format!(
                "{name} = 0: the second solution at {e} carries a logarithm"
            )));
        }
        Ok(())
    }

    pub fn require_both_positive(&self) -> Result<()> {
        self.require_positive(Endpoint::Plus)?;
        self.require_positive(Endpoint::Minus)
    }

    /// `a_k(x) = (1−x)^{α+k}(1+x)^{β+k}` as a single term.
    pub fn a_k(&self, k: u32) -> Term {
        let k = Rational::from(k as i64);
        Term::new(GaussianRational::one(), &self.alpha + &k, &self.beta + &k)
    }
}

/// `coeff·(1−x)^a·(1+x)^b`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Term {
    pub coeff: GaussianRational,
    pub a: Rational,
    pub b: Rational,
}

impl Term {
    pub fn new(coeff: GaussianRational, a: Rational, b: Rational) -> Self {
        Term { coeff, a, b }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Term::new(c, Rational::zero(), Rational::zero())
    }

    /// `(1−x)^a`.
    pub fn u(a: Rational) -> Self {
        Term::new(GaussianRational::one(), a, Rational::zero())
    }

    /// `(1+x)^b`.
    pub fn v(b: Rational) -> Self {
        Term::new(GaussianRational::one(), Rational::zero(), b)
    }

    pub fn times(&self, other: &Term) -> Term {
        Term::new(&self.coeff * &other.coeff, &self.a + &other.a, &self.b + &other.b)
    }

    pub fn scaled(&self, c: &GaussianRational) -> Term {
        Term::new(&self.coeff * c, self.a.clone(), self.b.clone())
    }

    pub fn conj(&self) -> Term {
        Term::new(self.coeff.conj(), self.a.clone(), self.b.clone())
    }

    /// d/dx, as two terms (either may have a zero coefficient).
    pub fn derivative(&self) -> [Term; 2] {
        let one = Rational::one();
        [
            Term::new(-self.coeff.scale(&self.a), &self.a - &one, self.b.clone()),
            Term::new(self.coeff.scale(&self.b), self.a.clone(), &self.b - &one),
        ]
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})·u^{}·v^{}", self.coeff, self.a, self.b)
    }
}

// ---------------------------------------------------------------------------
// canonical form

type Reduction = Rc<Vec<((i64, i64), Rational)>>;

thread_local! {
    static REDUCE_CACHE: RefCell<HashMap<(i64, i64), Reduction>> = RefCell::new(HashMap::new());
}

/// `u^i v^j` in the `+1` basis `{u^k} ∪ {v^l : l < 0}`.
fn reduce_plus(i: i64, j: i64) -> Reduction {
    if let Some(hit) = REDUCE_CACHE.with(|c| c.borrow().get(&(i, j)).cloned()) {
        return hit;
    }
    let mut acc: BTreeMap<(i64, i64), Rational> = BTreeMap::new();
    let mut push = |key: (i64, i64), c: Rational| {
        *acc.entry(key).or_default() += c;
    };
    let two = Rational::from(2);
    if j == 0 {
        push((i, 0), Rational::one());
    } else if j > 0 {
        // v^j = (2 − u)^j
        for k in 0..=j {
            let c = Rational::from(j).binomial(k as u32) * two.pow((j - k) as i32);
            push((i + k, 0), if k % 2 == 0 { c } else { -c });
        }
    } else if i >= 0 {
        // u^i = (2 − v)^i
        for k in 0..=i {
            let c = Rational::from(i).binomial(k as u32) * two.pow((i - k) as i32);
            let c = if k % 2 == 0 { c } else { -c };
            if j + k < 0 {
                push((0, j + k), c);
            } else {
                for (key, r) in reduce_plus(0, j + k).iter() {
                    push(*key, &c * r);
                }
            }
        }
    } else {
        // 1 = (u + v)/2
        let half = Rational::new(1, 2);
        for (key, r) in reduce_plus(i + 1, j).iter().chain(reduce_plus(i, j + 1).iter()) {
            push(*key, &half * r);
        }
    }
    let out: Reduction = Rc::new(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
    REDUCE_CACHE.with(|c| c.borrow_mut().insert((i, j), out.clone()));
    out
}

fn reduce(endpoint: Endpoint, i: i64, j: i64) -> Vec<((i64, i64), Rational)> {
    match endpoint {
        Endpoint::Plus => reduce_plus(i, j).as_ref().clone(),
        Endpoint::Minus => reduce_plus(j, i)
            .iter()
            .map(|((p, q), c)| ((*q, *p), c.clone()))
            .collect(),
    }
}

fn canonicalize(endpoint: Endpoint, terms: impl IntoIterator<Item = Term>) -> Vec<Term> {
    let mut acc: HashMap<(Rational, Rational, i64, i64), GaussianRational> = HashMap::new();
    for t in terms {
        if t.coeff.is_zero() {
            continue;
        }
        let (fa, fb) = (t.a.fract(), t.b.fract());
        for ((i, j), r) in reduce(endpoint, t.a.floor_i64(), t.b.floor_i64()) {
            *acc.entry((fa.clone(), fb.clone(), i, j)).or_default() += &t.coeff.scale(&r);
        }
    }
    let mut out: Vec<Term> = acc
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((fa, fb, i, j), c)| Term::new(c, fa + Rational::from(i), fb + Rational::from(j)))
        .collect();
    sort_terms(endpoint, &mut out);
    out
}

fn sort_terms(endpoint: Endpoint, terms: &mut [Term]) {
    match endpoint {
        Endpoint::Plus => terms.sort_by(|x, y| (&x.a, &x.b).cmp(&(&y.a, &y.b))),
        Endpoint::Minus => terms.sort_by(|x, y| (&x.b, &x.a).cmp(&(&y.b, &y.a))),
    }
}

// ---------------------------------------------------------------------------
// germs

/// Classified endpoint limit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "tag", content = "value")]
pub enum LimitClass {
    Zero,
    Finite(AlgebraicValue),
    Infinite,
}

impl LimitClass {
    /// Normalizes `Finite(0)` to `Zero`.
    pub fn finite(v: AlgebraicValue) -> Self {
        if v.is_zero() {
            LimitClass::Zero
        } else {
            LimitClass::Finite(v)
        }
    }

    /// The limit value, with `Zero` read as 0; `None` when infinite.
    pub fn value(&self) -> Option<AlgebraicValue> {
        match self {
            LimitClass::Zero => Some(AlgebraicValue::zero()),
            LimitClass::Finite(v) => Some(v.clone()),
            LimitClass::Infinite => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, LimitClass::Zero)
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, LimitClass::Infinite)
    }

    pub fn tag(&self) -> &'static str {
        match self {
            LimitClass::Zero => "Zero",
            LimitClass::Finite(_) => "Finite",
            LimitClass::Infinite => "Infinite",
        }
    }
}

/// Behaviour of a function in a one-sided neighbourhood of an endpoint.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Germ {
    endpoint: Endpoint,
    terms: Vec<Term>,
}

impl Germ {
    pub fn new(endpoint: Endpoint, terms: impl IntoIterator<Item = Term>) -> Self {
        Germ {
            endpoint,
            terms: canonicalize(endpoint, terms),
        }
    }

    pub fn zero(endpoint: Endpoint) -> Self {
        Germ {
            endpoint,
            terms: Vec::new(),
        }
    }

    pub fn endpoint(&self) -> Endpoint {
        self.endpoint
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same function, normal form taken at the other endpoint.
    pub fn rebased(&self, endpoint: Endpoint) -> Germ {
        if endpoint == self.endpoint {
            return self.clone();
        }
        Germ::new(endpoint, self.terms.iter().cloned())
    }

    fn map_terms(&self, f: impl Fn(&Term) -> Vec<Term>) -> Germ {
        Germ::new(self.endpoint, self.terms.iter().flat_map(f))
    }

    pub fn scale(&self, c: &GaussianRational) -> Germ {
        if c.is_zero() {
            return Germ::zero(self.endpoint);
        }
        Germ {
            endpoint: self.endpoint,
            terms: self.terms.iter().map(|t| t.scaled(c)).collect(),
        }
    }

    pub fn conj(&self) -> Germ {
        Germ {
            endpoint: self.endpoint,
            terms: self.terms.iter().map(Term::conj).collect(),
        }
    }

    pub fn mul_term(&self, t: &Term) -> Germ {
        self.map_terms(|s| vec![s.times(t)])
    }

    pub fn differentiate(&self) -> Germ {
        self.map_terms(|t| t.derivative().to_vec())
    }

    pub fn nth_derivative(&self, order: u32) -> Germ {
        (0..order).fold(self.clone(), |g, _| g.differentiate())
    }

    /// Generalized series in the local variable (`1−x` at `+1`, `1+x` at
    /// `−1`), returning all coefficients at exponents `≤ upto`, nonzero only.
    pub fn series(&self, upto: &Rational) -> Vec<(Rational, AlgebraicValue)> {
        let mut acc: BTreeMap<Rational, AlgebraicValue> = BTreeMap::new();
        let minus_half = Rational::new(-1, 2);
        for t in &self.terms {
            // local power s, far factor (2 − s)^f = 2^f Σ binom(f,k)(−1/2)^k s^k
            let (s, far) = match self.endpoint {
                Endpoint::Plus => (&t.a, &t.b),
                Endpoint::Minus => (&t.b, &t.a),
            };
            let mut k = 0u32;
            loop {
                let e = s + &Rational::from(k as i64);
                if &e > upto {
                    break;
                }
                let c = far.binomial(k) * minus_half.pow(k as i32);
                if !c.is_zero() {
                    let term = AlgebraicValue::monomial(t.coeff.scale(&c), far);
                    let slot = acc.entry(e).or_insert_with(AlgebraicValue::zero);
                    *slot = &*slot + &term;
                }
                if far.is_integer() && !far.is_negative() && k as i64 >= far.floor_i64() {
                    break;
                }
                k += 1;
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// Least exponent with a nonzero series coefficient, and that coefficient.
    pub fn leading(&self) -> Option<(Rational, AlgebraicValue)> {
        let start = self
            .terms
            .iter()
            .map(|t| match self.endpoint {
                Endpoint::Plus => t.a.clone(),
                Endpoint::Minus => t.b.clone(),
            })
            .min()?;
        let mut window = Rational::from(4);
        loop {
            if let Some(first) = self.series(&(&start + &window)).into_iter().next() {
                return Some(first);
            }
            window = &window * &Rational::from(2);
        }
    }

    pub fn limit(&self) -> LimitClass {
        let series = self.series(&Rational::zero());
        match series.first() {
            None => LimitClass::Zero,
            Some((e, _)) if e.is_negative() => LimitClass::Infinite,
            Some((_, v)) => LimitClass::finite(v.clone()),
        }
    }

    /// Square integrability near the endpoint against `s^weight`.
    pub fn is_l2(&self, weight: &Rational) -> bool {
        // need 2e + weight > −1 for every surviving exponent e
        let threshold = -(Rational::one() + weight) / Rational::from(2);
        self.series(&threshold).is_empty()
    }
}

impl Serialize for Germ {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            endpoint: Endpoint,
            terms: &'a [Term],
        }
        Repr {
            endpoint: self.endpoint,
            terms: &self.terms,
        }
        .serialize(s)
    }
}

impl fmt::Debug for Germ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Germ@{}{:?}", self.endpoint, self.terms)
    }
}

impl<'a, 'b> Add<&'b Germ> for &'a Germ {
    type Output = Germ;
    fn add(self, rhs: &'b Germ) -> Germ {
        let rhs = rhs.rebased(self.endpoint);
        Germ::new(self.endpoint, self.terms.iter().chain(rhs.terms.iter()).cloned())
    }
}

impl<'a> Neg for &'a Germ {
    type Output = Germ;
    fn neg(self) -> Germ {
        self.scale(&-GaussianRational::one())
    }
}

impl<'a, 'b> Sub<&'b Germ> for &'a Germ {
    type Output = Germ;
    fn sub(self, rhs: &'b Germ) -> Germ {
        self + &(-rhs)
    }
}

impl<'a, 'b> Mul<&'b Germ> for &'a Germ {
    type Output = Germ;
    fn mul(self, rhs: &'b Germ) -> Germ {
        Germ::new(
            self.endpoint,
            self.terms
                .iter()
                .flat_map(|s| rhs.terms.iter().map(move |t| s.times(t))),
        )
    }
}

// ---------------------------------------------------------------------------
// term functions

/// A function on (−1, 1) described by its germs at both endpoints, plus an
/// optional term list valid on the whole interval.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TermFunction {
    germ_minus: Germ,
    germ_plus: Germ,
    global: Option<Germ>,
}

impl TermFunction {
    pub fn zero() -> Self {
        TermFunction::global(Vec::new())
    }

    pub fn constant(c: GaussianRational) -> Self {
        TermFunction::global(vec![Term::constant(c)])
    }

    pub fn one() -> Self {
        TermFunction::constant(GaussianRational::one())
    }

    /// A function given by one term list on all of (−1, 1).
    pub fn global(terms: impl IntoIterator<Item = Term>) -> Self {
        let g = Germ::new(Endpoint::Plus, terms);
        TermFunction {
            germ_minus: g.rebased(Endpoint::Minus),
            germ_plus: g.clone(),
            global: Some(g),
        }
    }

    /// A germ-only function (no interior formula).
    pub fn from_germs(minus: Germ, plus: Germ) -> Self {
        TermFunction {
            germ_minus: minus.rebased(Endpoint::Minus),
            germ_plus: plus.rebased(Endpoint::Plus),
            global: None,
        }
    }

    /// A function equal to `terms` near `endpoint` and vanishing near the other.
    pub fn supported_at(endpoint: Endpoint, terms: impl IntoIterator<Item = Term>) -> Self {
        let g = Germ::new(endpoint, terms);
        let z = Germ::zero(endpoint.opposite());
        match endpoint {
            Endpoint::Plus => TermFunction::from_germs(z, g),
            Endpoint::Minus => TermFunction::from_germs(g, z),
        }
    }

    pub fn germ(&self, e: Endpoint) -> &Germ {
        match e {
            Endpoint::Plus => &self.germ_plus,
            Endpoint::Minus => &self.germ_minus,
        }
    }

    pub fn germ_plus(&self) -> &Germ {
        &self.germ_plus
    }

    pub fn germ_minus(&self) -> &Germ {
        &self.germ_minus
    }

    pub fn global_terms(&self) -> Option<&[Term]> {
        self.global.as_ref().map(|g| g.terms())
    }

    pub fn has_global(&self) -> bool {
        self.global.is_some()
    }

    pub fn is_zero(&self) -> bool {
        self.germ_plus.is_zero() && self.germ_minus.is_zero()
    }

    /// Keeps only the behaviour at `e`; the result vanishes near the other end.
    pub fn localize(&self, e: Endpoint) -> TermFunction {
        TermFunction::supported_at(e, self.germ(e).terms().iter().cloned())
    }

    fn map(&self, f: impl Fn(&Germ) -> Germ) -> TermFunction {
        TermFunction {
            germ_minus: f(&self.germ_minus),
            germ_plus: f(&self.germ_plus),
            global: self.global.as_ref().map(f),
        }
    }

    fn zip(&self, other: &TermFunction, f: impl Fn(&Germ, &Germ) -> Germ) -> TermFunction {
        TermFunction {
            germ_minus: f(&self.germ_minus, &other.germ_minus),
            germ_plus: f(&self.germ_plus, &other.germ_plus),
            global: match (&self.global, &other.global) {
                (Some(x), Some(y)) => Some(f(x, y)),
                _ => None,
            },
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> TermFunction {
        self.map(|g| g.scale(c))
    }

    pub fn conj(&self) -> TermFunction {
        self.map(Germ::conj)
    }

    pub fn mul_term(&self, t: &Term) -> TermFunction {
        self.map(|g| g.mul_term(t))
    }

    pub fn differentiate(&self, order: u32) -> TermFunction {
        self.map(|g| g.nth_derivative(order))
    }

    /// Divides by the weight `(1−x)^α(1+x)^β`.
    pub fn divide_by_weight(&self, p: &Params) -> TermFunction {
        let w = Term::new(GaussianRational::one(), -p.alpha(), -p.beta());
        self.mul_term(&w)
    }

    pub fn is_l2(&self, p: &Params) -> bool {
        self.germ_plus.is_l2(p.alpha()) && self.germ_minus.is_l2(p.beta())
    }

    pub fn limit(&self, e: Endpoint) -> LimitClass {
        self.germ(e).limit()
    }
}

/// Exact endpoint limit of a germ.
pub fn limit_classify(g: &Germ) -> LimitClass {
    g.limit()
}

/// Membership in `L²((1−x)^α(1+x)^β dx)` near both endpoints.
pub fn is_l2(f: &TermFunction, p: &Params) -> bool {
    f.is_l2(p)
}

impl<'a, 'b> Add<&'b TermFunction> for &'a TermFunction {
    type Output = TermFunction;
    fn add(self, rhs: &'b TermFunction) -> TermFunction {
        self.zip(rhs, |x, y| x + y)
    }
}

impl<'a, 'b> Sub<&'b TermFunction> for &'a TermFunction {
    type Output = TermFunction;
    fn sub(self, rhs: &'b TermFunction) -> TermFunction {
        self.zip(rhs, |x, y| x - y)
    }
}

impl<'a, 'b> Mul<&'b TermFunction> for &'a TermFunction {
    type Output = TermFunction;
    fn mul(self, rhs: &'b TermFunction) -> TermFunction {
        self.zip(rhs, |x, y| x * y)
    }
}

impl<'a> Neg for &'a TermFunction {
    type Output = TermFunction;
    fn neg(self) -> TermFunction {
        self.map(|g| -g)
    }
}

impl std::iter::Sum for TermFunction {
    fn sum<I: Iterator<Item = TermFunction>>(iter: I) -> TermFunction {
        iter.fold(TermFunction::zero(), |acc, f| &acc + &f)
    }
}

impl fmt::Debug for TermFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.global {
            Some(g) => write!(f, "TermFunction(global {:?})", g.terms),
            None => write!(
                f,
                "TermFunction(-1: {:?}, +1: {:?})",
                self.germ_minus.terms, self.germ_plus.terms
            ),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TermFunctionRepr {
    germ_minus: Vec<Term>,
    germ_plus: Vec<Term>,
    global: Option<Vec<Term>>,
}

impl Serialize for TermFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TermFunctionRepr {
            germ_minus: self.germ_minus.terms.clone(),
            germ_plus: self.germ_plus.terms.clone(),
            global: self.global.as_ref().map(|g| g.terms.clone()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TermFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = TermFunctionRepr::deserialize(d)?;
        Ok(match r.global {
            Some(g) => TermFunction::global(g),
            None => TermFunction::from_germs(
                Germ::new(Endpoint::Minus, r.germ_minus),
                Germ::new(Endpoint::Plus, r.germ_plus),
            ),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_integer(n)
    }

    #[test]
    fn u_plus_v_is_two() {
        let f = TermFunction::global([Term::u(q(1, 1)), Term::v(q(1, 1))]);
        assert_eq!(f, TermFunction::constant(g(2)));
    }

    #[test]
    fn hidden_cancellation_is_collected() {
        // u^{-1} v − 2 u^{-1} + 1 ≡ 0
        let f = TermFunction::global([
            Term::new(g(1), q(-1, 1), q(1, 1)),
            Term::new(g(-2), q(-1, 1), q(0, 1)),
            Term::constant(g(1)),
        ]);
        assert!(f.is_zero());
    }

    #[test]
    fn partial_fractions() {
        // 1/(uv) = ½(1/u + 1/v)
        let lhs = Germ::new(Endpoint::Plus, [Term::new(g(1), q(-1, 1), q(-1, 1))]);
        let rhs = Germ::new(
            Endpoint::Plus,
            [
                Term::new(GaussianRational::real(q(1, 2)), q(-1, 1), q(0, 1)),
                Term::new(GaussianRational::real(q(1, 2)), q(0, 1), q(-1, 1)),
            ],
        );
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.terms().len(), 2);
    }

    #[test]
    fn product_and_exponent_addition() {
        let a = q(1, 3);
        let f = TermFunction::global([Term::u(-&a)]);
        let h = TermFunction::global([Term::u(&a + &q(1, 1))]);
        assert_eq!(&f * &h, TermFunction::global([Term::u(q(1, 1))]));
        let f2 = TermFunction::global([Term::u(q(1, 1))]);
        let h2 = TermFunction::global([Term::v(q(1, 1))]);
        let prod = &f2 * &h2;
        assert_eq!(prod, TermFunction::global([Term::new(g(1), q(1, 1), q(1, 1))]));
        assert!((&prod - &prod).is_zero());
    }

    #[test]
    fn derivatives() {
        let f = TermFunction::global([Term::u(q(2, 1))]);
        assert_eq!(f.differentiate(1), TermFunction::global([Term::new(g(-2), q(1, 1), q(0, 1))]));
        let s = TermFunction::global([Term::u(q(-1, 2))]);
        assert_eq!(
            s.differentiate(1),
            TermFunction::global([Term::new(GaussianRational::real(q(1, 2)), q(-3, 2), q(0, 1))])
        );
        let uv = TermFunction::global([Term::new(g(1), q(1, 1), q(1, 1))]);
        assert_eq!(uv.differentiate(2), TermFunction::constant(g(-2)));
    }

    #[test]
    fn weight_division() {
        let p = Params::ratio((1, 3), (2, 5));
        let w = TermFunction::global([Term::new(g(1), q(1, 3), q(2, 5))]);
        assert_eq!(w.divide_by_weight(&p), TermFunction::one());
        assert!(TermFunction::zero().divide_by_weight(&p).is_zero());
        let a1 = TermFunction::global([p.a_k(1)]);
        assert_eq!(
            a1.divide_by_weight(&p),
            TermFunction::global([Term::new(g(1), q(1, 1), q(1, 1))])
        );
    }

    #[test]
    fn limits() {
        let beta = q(2, 5);
        let germ = Germ::new(Endpoint::Plus, [Term::v(&beta + &q(1, 1))]);
        assert_eq!(germ.limit(), LimitClass::Finite(AlgebraicValue::pow2(&q(7, 5))));
        let sing = Germ::new(Endpoint::Plus, [Term::u(q(-1, 2))]);
        assert_eq!(sing.limit(), LimitClass::Infinite);
        let vanish = Germ::new(Endpoint::Plus, [Term::new(g(3), q(1, 2), q(0, 1))]);
        assert_eq!(vanish.limit(), LimitClass::Zero);
        // at −1 the roles swap: (1−x)^{1/2} → 2^{1/2}
        let m = Germ::new(Endpoint::Minus, [Term::u(q(1, 2))]);
        assert_eq!(m.limit(), LimitClass::Finite(AlgebraicValue::pow2(&q(1, 2))));
    }

    #[test]
    fn l2_thresholds() {
        let p = Params::ratio((1, 2), (0, 1));
        assert!(TermFunction::global([Term::u(q(-1, 2))]).is_l2(&p));
        assert!(!TermFunction::global([Term::u(q(-1, 1))]).is_l2(&p));
        assert!(TermFunction::one().is_l2(&p));
        // boundary case 2a + α = −1 is not integrable
        assert!(!TermFunction::global([Term::u(q(-3, 4))]).is_l2(&p));
        let leg = Params::legendre();
        assert!(!TermFunction::global([Term::v(q(-1, 2))]).is_l2(&leg));
    }

    #[test]
    fn leading_exponent_sees_through_cancellation() {
        // 1 − 2/v = −u/v vanishes to first order at +1
        let gm = Germ::new(Endpoint::Plus, [Term::constant(g(1)), Term::new(g(-2), q(0, 1), q(-1, 1))]);
        let (e, c) = gm.leading().unwrap();
        assert_eq!(e, q(1, 1));
        assert_eq!(c, AlgebraicValue::from_rational(q(-1, 2)));
    }

    #[test]
    fn params_are_validated() {
        assert!(Params::new(q(1, 1), q(0, 1)).is_err());
        assert!(Params::new(q(-1, 3), q(0, 1)).is_err());
        let p: Params = serde_json::from_str(r#"{"alpha":"1/2","beta":"2/5"}"#).unwrap();
        assert_eq!(p, Params::ratio((1, 2), (2, 5)));
        assert!(serde_json::from_str::<Params>(r#"{"alpha":"3/2","beta":"0"}"#).is_err());
    }

    #[test]
    fn serde_shape() {
        let f = TermFunction::supported_at(Endpoint::Plus, [Term::u(q(-1, 2))]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"germ_minus":[],"germ_plus":[{"coeff":"1/1","a":"-1/2","b":"0/1"}],"global":null}"#
        );
        let back: TermFunction = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }
}
