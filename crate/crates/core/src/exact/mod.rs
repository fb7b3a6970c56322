//! Exact scalars: rationals, Gaussian rationals and the fields ℚ(i)(2^{1/D}).

mod algebraic;
mod gaussian;
pub mod linalg;
mod rational;

pub use algebraic::AlgebraicValue;
pub use gaussian::GaussianRational;
pub use linalg::FieldElement;
pub use rational::{factorial, Rational};
