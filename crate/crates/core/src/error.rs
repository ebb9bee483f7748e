use thiserror::Error;

/// Errors raised by the engine. Every variant carries enough context to be
/// reported verbatim by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("chart mismatch: `{left}` vs `{right}`")]
    ChartMismatch { left: String, right: String },

    #[error("duplicate variable `{0}` in chart")]
    DuplicateVariable(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("parity mismatch: {0}")]
    ParityMismatch(String),

    #[error("weight mismatch: {0}")]
    WeightMismatch(String),

    #[error("expression is not parity-homogeneous: {0}")]
    MixedParity(String),

    #[error("incomplete substitution: no image for `{0}`")]
    IncompleteSubstitution(String),

    #[error("chart `{chart}` is not {expected}")]
    NotALift {
        chart: String,
        expected: &'static str,
    },

    #[error("invalid structure constants: {0}")]
    InvalidConstants(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("not an algebroid field: {0}")]
    NotAlgebroid(String),

    #[error("field is not quadratic: {0}")]
    NotQuadratic(String),

    #[error("structure check failed: {0}")]
    CheckFailed(String),

    #[error("no consistent sign assignment: {0}")]
    SignResolution(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
