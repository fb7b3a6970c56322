//! Exact and numeric toolkit for self-adjoint extensions of powers of the
//! Jacobi differential operator.

pub mod catalog;
pub mod domains;
pub mod endpoint;
pub mod error;
pub mod exact;
pub mod gkn;
pub mod numerics;
pub mod operator;
pub mod sesqui;

pub use error::{Error, ParseError, Result};
pub use endpoint::{Endpoint, Germ, LimitClass, Params, Term, TermFunction};
