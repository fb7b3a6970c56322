use thiserror::Error;

/// Failures while parsing exact scalars and function specs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid rational `{0}`")]
    Rational(String),
    #[error("invalid scalar `{0}`")]
    Scalar(String),
    #[error("invalid exponent `{0}`")]
    Exponent(String),
    #[error("invalid function spec `{0}`")]
    FunctionSpec(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),
    #[error("indeterminate limit at {0}: the boundary expression diverges")]
    IndeterminateLimit(&'static str),
    #[error("singular linear system: {0}")]
    SingularSystem(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("matrix is not unitary")]
    NotUnitary,
    #[error("function has no global form on the requested interval")]
    NoGlobalForm,
    #[error("quadrature tolerance not met: estimated error {estimate:e} > {target:e}")]
    ToleranceNotMet { estimate: f64, target: f64 },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;
