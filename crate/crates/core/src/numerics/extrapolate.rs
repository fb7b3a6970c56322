//! Wynn's epsilon algorithm.
//!
//! Probe sequences sampled at `t = 2^{-k}` are sums of geometric sequences in
//! `k`, which the epsilon table removes one pair of columns at a time.

use super::real::{Complex, Real};

/// Best even-column estimate and its error estimate.
pub fn wynn_epsilon(seq: &[Complex]) -> (Complex, f64) {
    assert!(!seq.is_empty(), "empty sequence");
    let prec = seq[0].re.precision();
    let tiny = Real::pow2i(-(prec as i64) + 24, prec);
    let last = seq.last().unwrap().clone();
    if seq.len() < 3 {
        let err = if seq.len() == 2 {
            (&seq[1] - &seq[0]).abs().to_f64()
        } else {
            f64::INFINITY
        };
        return (last, err);
    }
    let mut best = last.clone();
    let mut best_err = (&seq[seq.len() - 1] - &seq[seq.len() - 2]).abs().to_f64();
    let mut prev: Vec<Complex> = vec![Complex::zero(prec); seq.len() + 1];
    let mut cur: Vec<Complex> = seq.to_vec();
    let mut column = 0;
    while cur.len() > 1 {
        let mut next = Vec::with_capacity(cur.len() - 1);
        for j in 0..cur.len() - 1 {
            let diff = &cur[j + 1] - &cur[j];
            let scale = cur[j + 1].abs().max(&Real::from_i64(1, prec));
            if diff.abs() <= &tiny * &scale {
                // converged to working precision
                return (cur[j + 1].clone(), 0.0);
            }
            let one = Complex::real(Real::from_i64(1, prec));
            next.push(&prev[j + 1] + &(&one / &diff));
        }
        column += 1;
        prev = cur;
        cur = next;
        if column % 2 == 0 && cur.len() >= 2 {
            let n = cur.len();
            let err = (&cur[n - 1] - &cur[n - 2]).abs().to_f64();
            if err < best_err {
                best_err = err;
                best = cur[n - 1].clone();
            }
        }
    }
    (best, best_err)
}
