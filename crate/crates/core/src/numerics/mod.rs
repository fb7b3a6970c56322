//! High-precision floating verification of the exact engine.

pub mod eval;
pub mod extrapolate;
pub mod quadrature;
pub mod real;
pub mod verify;

pub use quadrature::{integrate, Method, QuadratureResult, QuadratureSpec};
pub use real::{Complex, Real};
pub use verify::{green_identity_check, leftdef_inner, limit_probe, probe, weighted_integral, LimitProbe, Report};
