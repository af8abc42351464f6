use thiserror::Error;

/// Errors raised across the engine.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid substitution system: {0}")]
    InvalidSystem(String),

    #[error("no substitution rule for prototile {0}")]
    MissingRule(usize),

    #[error("degenerate geometry: {0}")]
    Degenerate(String),

    #[error("power iteration did not converge after {0} iterations")]
    NoConvergence(usize),

    #[error("unsupported rotation order {0}: cos/sin of pi/{0} are outside Q(sqrt2, sqrt3)")]
    UnsupportedOrder(u32),

    #[error("window needs {required} ancestor choices but only {available} were given")]
    InsufficientChoices { required: usize, available: usize },

    #[error("invalid window: {0}")]
    InvalidWindow(String),

    #[error("unknown system `{0}`")]
    UnknownSystem(String),

    #[error("format `{format}` cannot encode a {dimension}-dimensional system")]
    FormatMismatch { format: String, dimension: usize },

    #[error("degenerate data: {0}")]
    DegenerateData(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
