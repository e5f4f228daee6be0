use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("truncation tolerance must lie in (0, 1), got {0}")]
    InvalidTolerance(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Numerical result outside what the closed form allows. Indicates a bug.
    #[error("internal consistency violated: {0}")]
    InternalConsistency(String),

    #[error(
        "truncation too small: {leakage:.3e} probability on the {cutoff} = {value} layer \
         (increase {cutoff})"
    )]
    TruncationTooSmall {
        cutoff: &'static str,
        value: usize,
        leakage: f64,
    },

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
