//! Function-spec mini-grammar.
//!
//! ```text
//! phi+:j  phi-:j       (1∓x)^j near ±1
//! psi+:j  psi-:j       (1∓x)^{j−α} / (1+x)^{j−β} near ±1
//! P:m                  Jacobi polynomial
//! const:c              constant, c Gaussian rational (e.g. 1/2, 2-3i)
//! terms:[c,a,b;...]    Σ c·(1−x)^a·(1+x)^b, global
//! ```

use jacobi_gkn::catalog::{jacobi_poly, phi, psi};
use jacobi_gkn::exact::{GaussianRational, Rational};
use jacobi_gkn::{Endpoint, Error, Germ, ParseError, Params, Result, Term, TermFunction};

fn bad(s: &str) -> Error {
    ParseError::FunctionSpec(s.to_string()).into()
}

fn index(s: &str, full: &str) -> Result<u32> {
    s.trim().parse().map_err(|_| bad(full))
}

pub fn parse_function(spec: &str, p: &Params) -> Result<TermFunction> {
    let s = spec.trim();
    let (head, body) = s.split_once(':').ok_or_else(|| bad(spec))?;
    match head {
        "phi+" => Ok(phi(index(body, spec)?, Endpoint::Plus)),
        "phi-" => Ok(phi(index(body, spec)?, Endpoint::Minus)),
        "psi+" => psi(index(body, spec)?, Endpoint::Plus, p),
        "psi-" => psi(index(body, spec)?, Endpoint::Minus, p),
        "P" => Ok(jacobi_poly(index(body, spec)?, p)),
        "const" => Ok(TermFunction::constant(body.parse::<GaussianRational>()?)),
        "terms" => {
            let inner = body
                .trim()
                .strip_prefix('[')
                .and_then(|b| b.strip_suffix(']'))
                .ok_or_else(|| bad(spec))?;
            let mut terms = Vec::new();
            for item in inner.split(';').map(str::trim).filter(|t| !t.is_empty()) {
                let parts: Vec<&str> = item.split(',').map(str::trim).collect();
                let [c, a, b] = parts.as_slice() else {
                    return Err(bad(spec));
                };
                terms.push(Term::new(
                    c.parse()?,
                    a.parse::<Rational>().map_err(|_| ParseError::Exponent(a.to_string()))?,
                    b.parse::<Rational>().map_err(|_| ParseError::Exponent(b.to_string()))?,
                ));
            }
            Ok(TermFunction::global(terms))
        }
        _ => Err(bad(spec)),
    }
}

fn render_germ(g: &Germ) -> String {
    if g.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = g
        .terms()
        .iter()
        .map(|t| {
            let mut s = format!("({})", t.coeff);
            if !t.a.is_zero() {
                s.push_str(&format!("·(1−x)^({})", t.a));
            }
            if !t.b.is_zero() {
                s.push_str(&format!("·(1+x)^({})", t.b));
            }
            s
        })
        .collect();
    parts.join(" + ")
}

/// Human-readable form, used by the text output mode.
pub fn render(f: &TermFunction) -> String {
    if f.has_global() {
        return render_germ(f.germ_plus());
    }
    format!(
        "near −1: {}; near +1: {}",
        render_germ(f.germ_minus()),
        render_germ(f.germ_plus())
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        let p = Params::ratio((1, 3), (2, 5));
        assert_eq!(parse_function("phi+:2", &p).unwrap(), phi(2, Endpoint::Plus));
        assert_eq!(parse_function("psi-:0", &p).unwrap(), psi(0, Endpoint::Minus, &p).unwrap());
        assert_eq!(parse_function("P:3", &p).unwrap(), jacobi_poly(3, &p));
        assert_eq!(parse_function("const:1", &p).unwrap(), TermFunction::one());
        let t = parse_function("terms:[1, 1, 0; -1, 0, 0]", &p).unwrap();
        // (1−x) − 1 = −x, which is also −(1+x) + 1
        let alt = TermFunction::global([
            Term::new(GaussianRational::from_integer(-1), Rational::zero(), Rational::one()),
            Term::constant(GaussianRational::one()),
        ]);
        assert_eq!(t, alt);
        for s in ["phi:1", "P:x", "terms:[1,2]", "nonsense", "const:"] {
            assert!(matches!(parse_function(s, &p), Err(Error::Parse(_))), "{s}");
        }
        assert!(matches!(
            parse_function("psi+:0", &Params::legendre()),
            Err(Error::DegenerateParameter(_))
        ));
    }
}
