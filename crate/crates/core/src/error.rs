use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The base of a Gaussian coefficient makes some denominator vanish.
    #[error("invalid base b = {0}: b must be nonzero and different from -1")]
    InvalidBase(String),

    #[error("invalid scheme: {0}")]
    InvalidScheme(String),

    #[error("{what} = {value} is out of range 0..={max}")]
    OutOfRange { what: &'static str, value: i64, max: i64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A computed weight distribution is not a vector of nonnegative integers.
    #[error("distribution is not realizable: {0}")]
    Unrealizable(String),

    /// Two independent computations of the same quantity disagree.
    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),

    #[error("unsupported by the brute-force oracle: {0}")]
    Unsupported(String),

    #[error("enumeration of {size} elements exceeds the limit of {limit}")]
    SizeGuard { size: String, limit: u64 },

    #[error("bilinear form is degenerate on {0}")]
    DegenerateForm(String),

    #[error("invalid scheme element: {0}")]
    InvalidElement(String),
}
