use jacobi_gkn::catalog::{jacobi_poly, phi, psi};
use jacobi_gkn::exact::{GaussianRational, Rational};
use jacobi_gkn::numerics::verify::{default_probe_ks, green_identity_check, leftdef_inner, limit_probe};
use jacobi_gkn::numerics::QuadratureSpec;
use jacobi_gkn::sesqui::SesquilinearForm;
use jacobi_gkn::{Endpoint, Params, Term, TermFunction};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

#[test]
fn probes_agree_with_exact_limits_on_catalog_pairs() {
    let ks = default_probe_ks();
    for p in [Params::ratio((1, 3), (2, 5)), Params::ratio((1, 2), (3, 4))] {
        for n in 1..=3 {
            let form = SesquilinearForm::new(n, &p).unwrap();
            let mut cat = Vec::new();
            for e in Endpoint::BOTH {
                for j in 0..n {
                    cat.push(phi(j, e));
                    cat.push(psi(j, e, &p).unwrap());
                }
            }
            cat.push(jacobi_poly(2, &p));
            // a divergent pairing: a too-singular germ against ψ_0
            cat.push(TermFunction::supported_at(Endpoint::Plus, [Term::u(q(-3, 2))]));
            let mut infinite = 0;
            for f in &cat {
                for g in &cat {
                    let expr = form.expression(f, g);
                    for e in Endpoint::BOTH {
                        let r = limit_probe(&expr, e, &ks, 256, 1e-10);
                        assert!(r.passed, "n={n} {e}: {}", serde_json::to_string(&r).unwrap());
                        infinite += usize::from(r.symbolic["tag"] == "Infinite");
                    }
                }
            }
            assert!(infinite > 0);
        }
    }
}

#[test]
fn green_discrepancy_shrinks_with_refinement() {
    let p = Params::ratio((1, 3), (1, 5));
    let f = jacobi_poly(3, &p);
    let g = TermFunction::global([Term::new(GaussianRational::i(), q(2, 3), q(1, 1))]);
    let base = QuadratureSpec::new(q(-9, 10), q(9, 10)).unwrap();
    let errs: Vec<f64> = [(128usize, 1e-8), (256, 1e-16), (512, 1e-30)]
        .into_iter()
        .map(|(bits, target)| {
            let s = base.clone().with_precision(bits).with_target(target);
            green_identity_check(&f, &g, 2, &s, &p, 1e-9).unwrap().rel_err
        })
        .collect();
    assert!(errs[0] < 1e-7 && errs[1] < errs[0] && errs[2] <= errs[1], "{errs:?}");
    assert!(errs[2] < 1e-25, "{errs:?}");
}

#[test]
fn leftdef_inner_is_nonnegative() {
    let p = Params::ratio((2, 5), (1, 3));
    let s = QuadratureSpec::symmetric_truncation(20).with_target(1e-12);
    let second = TermFunction::global([Term::u(q(1, 1) - p.alpha().clone()), Term::v(q(2, 1))]);
    for n in 1..=2 {
        for f in (0..4).map(|m| jacobi_poly(m, &p)).chain([second.clone()]) {
            let v = leftdef_inner(&f, &f, n, &s, &p).unwrap();
            assert!(v.value.re.to_f64() >= -1e-12, "n={n}: {:?}", v.value.to_f64());
        }
    }
}
