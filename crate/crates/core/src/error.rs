use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on the arguments was violated.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// The request is well formed but exceeds a configured tractability cap.
    #[error("intractable request: {what} is {got}, cap is {cap}")]
    Intractable {
        what: &'static str,
        got: usize,
        cap: usize,
    },
    /// A theorem's hypothesis does not hold for the given input.
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("graph6 parse error: {0}")]
    Graph6(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn arg<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Argument(msg.into()))
}
