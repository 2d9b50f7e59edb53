use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The simple random walk is recurrent for d <= 2, so return and hitting
    /// quantities that rely on a finite Green function are undefined.
    #[error("dimension d = {d} is recurrent; transience requires d >= 3")]
    Transience { d: usize },

    #[error("quadrature did not reach the requested accuracy: estimated error {estimate:e} > tolerance {tolerance:e}")]
    Accuracy { estimate: f64, tolerance: f64 },

    #[error("L(a, b) = {l_value} is not positive; the weighted upper bound requires L(a, b) > 0")]
    ConditionViolated { l_value: f64 },

    #[error("lambda = {lambda} does not exceed the threshold 1/(2d L(a, b)) = {threshold}; no strictly positive null vector exists")]
    HypothesisViolated { lambda: f64, threshold: f64 },

    #[error("numeric range: {0}")]
    NumericRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
