use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("ring mismatch at byte {pos}: {msg}")]
    RingMismatch { pos: usize, msg: String },

    #[error("invalid equation document: {0}")]
    Document(String),

    #[error("out-of-scope: delegated case: {0}")]
    OutOfScope(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("gcd of two zero elements is undefined")]
    GcdOfZeros,

    #[error("gcd-ambiguous: the common divisor is not a trigonometric polynomial")]
    GcdAmbiguous,

    #[error("not invariant: {0}")]
    NotInvariant(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("threshold not applicable in case {0}")]
    ThresholdNotApplicable(String),

    #[error("trajectory blew up at t = {t:.6} (|x| > {limit:e})")]
    BlowUp { t: f64, limit: f64 },

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. }
            | Error::RingMismatch { .. }
            | Error::Document(_)
            | Error::Json(_) => 2,
            Error::OutOfScope(_) => 3,
            Error::Inconsistency(_) => 4,
            _ => 1,
        }
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    pub(crate) fn inconsistency(msg: impl Into<String>) -> Self {
        Error::Inconsistency(msg.into())
    }
}
