//! Exact dense linear algebra over the scalar fields of this crate.

use std::fmt::Debug;

/// Minimal field interface needed by exact elimination.
pub trait FieldElement: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    /// Multiplicative inverse; `None` exactly when `self` is zero.
    fn inverse(&self) -> Option<Self>;
}

/// Reduces `m` in place to reduced row echelon form and returns the pivot
/// columns. Pivots are the first nonzero entry in each column; with exact
/// arithmetic no pivoting strategy is needed for correctness.
pub fn row_reduce<F: FieldElement>(m: &mut [Vec<F>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inverse().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = x.times(&inv);
        }
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let factor = m[i][c].clone();
            for j in c..cols {
                let delta = factor.times(&m[r][j]);
                m[i][j] = m[i][j].minus(&delta);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Exact rank of a (possibly non-square) matrix given as rows.
pub fn rank<F: FieldElement>(rows: &[Vec<F>]) -> usize {
    let mut m = rows.to_vec();
    row_reduce(&mut m).len()
}

/// Outcome of solving a possibly overdetermined system.
#[derive(Debug, Clone, PartialEq)]
pub enum Solution<F> {
    Unique(Vec<F>),
    Underdetermined { rank: usize },
    Inconsistent,
}

/// Solves `A x = b` with `A` given as rows and `b` as the right-hand side.
pub fn solve<F: FieldElement>(a: &[Vec<F>], b: &[F]) -> Solution<F> {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    let unknowns = a.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.last() == Some(&unknowns) {
        return Solution::Inconsistent;
    }
    if pivots.len() < unknowns {
        return Solution::Underdetermined { rank: pivots.len() };
    }
    Solution::Unique(aug[..unknowns].iter().map(|r| r[unknowns].clone()).collect())
}
