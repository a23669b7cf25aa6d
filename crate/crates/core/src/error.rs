use thiserror::Error;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the requested function.
    #[error("domain error: {0}")]
    Domain(String),

    /// The series does not converge for the given parameters and argument.
    #[error("divergent series: {0}")]
    Divergent(String),

    /// A term left the range of double precision.
    #[error("term overflow at index {k}")]
    Overflow { k: usize },

    /// The requested accuracy was not reached; the best estimate is attached.
    #[error("accuracy not reached: estimate {estimate:e}, error bound {bound:e}")]
    Accuracy { estimate: f64, bound: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
