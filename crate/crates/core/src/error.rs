use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: expected total degree {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: String },

    #[error("class is not homogeneous (total degrees {0:?})")]
    Inhomogeneous(Vec<u32>),

    #[error("profile mismatch: class belongs to `{found}`, expected `{expected}`")]
    ProfileMismatch { expected: String, found: String },

    #[error("{what} out of range: {value}")]
    OutOfRange { what: &'static str, value: String },

    #[error("malformed profile: {0}")]
    MalformedProfile(String),

    #[error("malformed class: {0}")]
    MalformedClass(String),

    #[error("not a conic class: {0:?}")]
    NotConic(Vec<i64>),

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown symbol `{symbol}` for profile `{profile}`")]
    UnknownSymbol { symbol: String, profile: String },

    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),

    #[error("identity violated: {0}")]
    IdentityViolated(String),

    #[error("unknown profile `{0}`")]
    UnknownProfile(String),
}

impl Error {
    pub(crate) fn out_of_range(what: &'static str, value: impl ToString) -> Self {
        Error::OutOfRange {
            what,
            value: value.to_string(),
        }
    }
}
