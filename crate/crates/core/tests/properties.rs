use proptest::prelude::*;

use jacobi_gkn::catalog::{jacobi_coefficients, jacobi_poly, phi, psi};
use jacobi_gkn::domains::JacobiPower;
use jacobi_gkn::exact::{AlgebraicValue, GaussianRational, Rational};
use jacobi_gkn::gkn::{BoundaryConditionSet, ExtensionMatrix};
use jacobi_gkn::operator::apply_ln_composed;
use jacobi_gkn::sesqui::SesquilinearForm;
use jacobi_gkn::{Endpoint, Germ, LimitClass, Params, Term, TermFunction};

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational()).prop_map(|(a, b)| GaussianRational::new(a, b))
}

fn algebraic() -> impl Strategy<Value = AlgebraicValue> {
    let exps = prop::sample::select(vec![
        Rational::zero(),
        Rational::new(1, 2),
        Rational::new(1, 3),
        Rational::new(2, 5),
        Rational::new(-7, 6),
    ]);
    prop::collection::vec((gaussian(), exps), 1..4).prop_map(|parts| {
        parts
            .into_iter()
            .fold(AlgebraicValue::zero(), |acc, (c, e)| &acc + &AlgebraicValue::monomial(c, &e))
    })
}

fn params() -> impl Strategy<Value = Params> {
    (2i64..=7, 2i64..=7)
        .prop_flat_map(|(da, db)| (1..da, Just(da), 1..db, Just(db)))
        .prop_map(|(a, da, b, db)| Params::ratio((a, da), (b, db)))
}

fn term() -> impl Strategy<Value = Term> {
    let exp = (-6i64..=12, prop::sample::select(vec![1i64, 2, 3, 5])).prop_map(|(n, d)| Rational::new(n, d));
    (gaussian(), exp.clone(), exp).prop_map(|(c, a, b)| Term::new(c, a, b))
}

fn global_function() -> impl Strategy<Value = TermFunction> {
    prop::collection::vec(term(), 1..4).prop_map(TermFunction::global)
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn gaussian_field_axioms(a in gaussian(), b in gaussian(), c in gaussian()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn algebraic_field_axioms(a in algebraic(), b in algebraic(), c in algebraic()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), AlgebraicValue::one());
        }
        for v in [&a * &b, &a + &c] {
            for (_, e) in v.terms() {
                prop_assert!(!e.is_negative() && e < Rational::one());
            }
        }
    }

    #[test]
    fn zero_embeds_to_zero(a in algebraic(), bits in prop::sample::select(vec![53usize, 128, 256, 512])) {
        prop_assert!((&a - &a).embed_real(bits).is_zero());
    }

    #[test]
    fn leibniz(f in global_function(), g in global_function()) {
        let lhs = (&f * &g).differentiate(1);
        let rhs = &(&f.differentiate(1) * &g) + &(&f * &g.differentiate(1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn closure_under_operations(f in global_function(), p in params()) {
        // results are term functions carrying both germs and a global form
        for h in [f.differentiate(2), &f * &f, f.divide_by_weight(&p)] {
            prop_assert!(h.has_global());
            prop_assert_eq!(h.germ_minus(), &h.germ_plus().rebased(Endpoint::Minus));
        }
    }

    #[test]
    fn steep_germs_differentiate_to_zero(a in (7i64..=40).prop_map(|n| Rational::new(n, 6)), c in gaussian()) {
        prop_assume!(!c.is_zero());
        // a > 1 at +1, so one derivative still vanishes there
        let g = Germ::new(Endpoint::Plus, [Term::new(c, a, Rational::new(1, 3))]);
        prop_assert_eq!(g.differentiate().limit(), LimitClass::Zero);
    }

    #[test]
    fn second_kind_powers_are_l2(p in params(), j in 0u32..6) {
        let f = TermFunction::global([Term::u(&Rational::from(j as i64) - p.alpha())]);
        prop_assert!(f.is_l2(&p));
    }
}

proptest! {
    #![proptest_config(config(12))]

    #[test]
    fn eigenvalue_identity(p in params(), m in 0u32..7, n in 1u32..3) {
        let pm = jacobi_poly(m, &p);
        let m_r = Rational::from(m as i64);
        let lambda = &m_r * &(&(&m_r + p.alpha()) + &(p.beta() + &Rational::one()));
        let scaled = pm.scale(&GaussianRational::real(lambda.pow(n as i32)));
        prop_assert!((&apply_ln_composed(&pm, n, &p) - &scaled).is_zero());
    }

    #[test]
    fn second_kind_worst_exponent(p in params(), j in 0u32..4, n in 1u32..3) {
        let f = TermFunction::global([Term::u(&Rational::from(j as i64) - p.alpha())]);
        let out = apply_ln_composed(&f, n, &p);
        let worst = -p.alpha().clone();
        for t in out.germ_plus().terms() {
            prop_assert!(t.a >= worst, "{:?}", t);
        }
    }

    #[test]
    fn reexpansion_consistency(p in params(), m in 0u32..7) {
        let pm = jacobi_poly(m, &p);
        // value at −1 from the +1 expansion: Σ a_j 2^j
        let coeffs = jacobi_coefficients(m, &p);
        let direct: Rational = coeffs
            .iter()
            .enumerate()
            .fold(Rational::zero(), |s, (j, a)| &s + &(a * &Rational::from(1i64 << j)));
        prop_assert_eq!(pm.limit(Endpoint::Minus), LimitClass::finite(AlgebraicValue::from(direct)));
        prop_assert!(!coeffs[0].is_zero());
        for t in pm.germ_plus().terms() {
            prop_assert!(t.b.is_zero() && t.a.is_integer() && !t.a.is_negative() && t.a <= Rational::from(m as i64));
        }
    }

    #[test]
    fn sesqui_skew_hermitian_and_linear(p in params(), n in 1u32..3, c in gaussian(), i in 0usize..6, j in 0usize..6, k in 0usize..6) {
        let cat = catalog(n, &p);
        let form = SesquilinearForm::new(n, &p).unwrap();
        let (f, g, h) = (&cat[i], &cat[j], &cat[k]);
        let fg = form.full(f, g).unwrap();
        prop_assert_eq!(form.full(g, f).unwrap(), -fg.conj());
        let combo = &g.scale(&c) + h;
        let lhs = form.full(f, &combo).unwrap();
        let rhs = &AlgebraicValue::from(c.conj()) * &fg + form.full(f, h).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

/// φ_j, ψ_j at both ends for `j ≤ n`, and `P_0..P_3`.
fn catalog(n: u32, p: &Params) -> Vec<TermFunction> {
    let mut out = Vec::new();
    for e in Endpoint::BOTH {
        for j in 0..=n {
            out.push(phi(j, e));
            out.push(psi(j, e, p).unwrap());
        }
    }
    out.extend((0..4).map(|m| jacobi_poly(m, p)));
    out
}

#[test]
fn minimal_domain_annihilates_catalog() {
    for p in [Params::ratio((1, 3), (1, 5)), Params::ratio((1, 2), (3, 4))] {
        for n in 1..=3 {
            let ctx = JacobiPower::new(n, &p).unwrap();
            let cat = catalog(n + 2, &p);
            let minimal: Vec<&TermFunction> = cat.iter().filter(|f| ctx.in_minimal(f).unwrap()).collect();
            assert!(!minimal.is_empty());
            for f in &minimal {
                for g in cat.iter().filter(|g| ctx.in_maximal(g)) {
                    assert!(ctx.form().full(f, g).unwrap().is_zero(), "n={n}");
                }
            }
            for e in Endpoint::BOTH {
                for s in n..n + 3 {
                    for f in cat.iter().filter(|f| ctx.in_maximal(f)) {
                        assert!(ctx.form().full(f, &phi(s, e)).unwrap().is_zero());
                    }
                    assert!(ctx.in_minimal(&psi(s, e, &p).unwrap()).unwrap());
                }
                for y in 0..n {
                    let v = ctx.form().full(&phi(y, e), &psi(n - 1 - y, e, &p).unwrap()).unwrap();
                    assert!(!v.is_zero());
                }
            }
        }
    }
}

#[test]
fn stacking() {
    let p = Params::ratio((2, 5), (1, 3));
    for n in 1..=3 {
        let form = SesquilinearForm::new(n, &p).unwrap();
        let cat = catalog(n + 1, &p);
        for f in &cat {
            for e in Endpoint::BOTH {
                for m in 0..=n + 1 {
                    let all_zero = (0..=m).all(|j| form.limit_at(f, &jacobi_poly(j, &p), e).is_zero());
                    if all_zero {
                        assert!(form.limit_at(f, &phi(m, e), e).is_zero(), "n={n} m={m}");
                    }
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// GKN

fn unit(a: i64, b: i64) -> AlgebraicValue {
    // ((a² − b²) + 2abi)/(a² + b²)
    let d = a * a + b * b;
    AlgebraicValue::from(GaussianRational::new(Rational::new(a * a - b * b, d), Rational::new(2 * a * b, d)))
}

fn matmul(x: &[Vec<AlgebraicValue>], y: &[Vec<AlgebraicValue>]) -> Vec<Vec<AlgebraicValue>> {
    let n = x.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(AlgebraicValue::zero(), |s, k| &s + &(&x[i][k] * &y[k][j])))
                .collect()
        })
        .collect()
}

/// Exact unitary: diagonal phases, a Hadamard block on rows `h, h+1`, a
/// permutation.
fn unitary(size: usize, phases: &[(i64, i64)], h: usize, perm: &[usize]) -> Vec<Vec<AlgebraicValue>> {
    let zero = AlgebraicValue::zero;
    let mut d = vec![vec![zero(); size]; size];
    for (i, row) in d.iter_mut().enumerate() {
        let (a, b) = phases[i % phases.len()];
        row[i] = unit(a, b);
    }
    let s = AlgebraicValue::pow2(&Rational::new(-1, 2));
    let mut had: Vec<Vec<AlgebraicValue>> = (0..size)
        .map(|i| (0..size).map(|j| if i == j { AlgebraicValue::one() } else { zero() }).collect())
        .collect();
    let h = h % (size - 1);
    had[h][h] = s.clone();
    had[h][h + 1] = s.clone();
    had[h + 1][h] = s.clone();
    had[h + 1][h + 1] = -s;
    let pm: Vec<Vec<AlgebraicValue>> = (0..size)
        .map(|i| (0..size).map(|j| if perm[i] == j { AlgebraicValue::one() } else { zero() }).collect())
        .collect();
    matmul(&matmul(&d, &had), &pm)
}

proptest! {
    #![proptest_config(config(8))]

    #[test]
    fn extensions_satisfy_glazman(
        n in 1u32..3,
        phases in prop::collection::vec((1i64..5, 0i64..5), 4),
        h in 0usize..4,
        perm in Just((0..4usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let p = Params::ratio((1, 3), (2, 5));
        let ctx = JacobiPower::new(n, &p).unwrap();
        let size = 2 * n as usize;
        let perm: Vec<usize> = perm.into_iter().filter(|&i| i < size).collect();
        let u = ExtensionMatrix::new(n, unitary(size, &phases, h, &perm)).unwrap();
        let w = ctx.extension_from_unitary(&u).unwrap();
        prop_assert!(ctx.glazman_symmetry_check(&w).unwrap());
        prop_assert!(ctx.lin_indep_mod_minimal(&w).unwrap());
        prop_assert!(ctx.domain_equal(&w, &w).unwrap());
    }
}

#[test]
fn domain_equal_is_an_equivalence() {
    let p = Params::ratio((1, 2), (1, 5));
    let n = 2;
    let ctx = JacobiPower::new(n, &p).unwrap();
    let mut sets = vec![
        BoundaryConditionSet::jacobi(&ctx, &[0, 1]),
        BoundaryConditionSet::jacobi(&ctx, &[2, 5]),
        BoundaryConditionSet::jacobi(&ctx, &[3, 8]),
        ctx.extension_from_unitary(&ExtensionMatrix::identity(n)).unwrap(),
    ];
    for phases in [[(1, 1), (2, 1), (1, 0), (1, 0)], [(1, 0), (1, 0), (3, 1), (1, 2)]] {
        let u = ExtensionMatrix::new(n, unitary(4, &phases, 0, &[0, 1, 2, 3])).unwrap();
        sets.push(ctx.extension_from_unitary(&u).unwrap());
    }
    let eq: Vec<Vec<bool>> = sets
        .iter()
        .map(|a| sets.iter().map(|b| ctx.domain_equal(a, b).unwrap()).collect())
        .collect();
    for i in 0..sets.len() {
        assert!(eq[i][i]);
        for j in 0..sets.len() {
            assert_eq!(eq[i][j], eq[j][i]);
            for k in 0..sets.len() {
                if eq[i][j] && eq[j][k] {
                    assert!(eq[i][k]);
                }
            }
        }
    }
    // the polynomial sets and the φ-span agree; the phase-twisted extensions differ
    assert!(eq[0][1] && eq[0][2] && eq[0][3]);
    assert!(!eq[0][4] && !eq[0][5]);
}
