use thiserror::Error;

/// Failure modes shared by every operation in the crate.
///
/// Resource errors are never silent approximations: a solver that hits a cap
/// reports it instead of returning a possibly wrong value.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("format error at byte {offset}: {message}")]
    Format { offset: usize, message: String },
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("witness error: {0}")]
    Witness(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub(crate) fn witness(msg: impl Into<String>) -> Self {
        Error::Witness(msg.into())
    }

    pub(crate) fn format(offset: usize, msg: impl Into<String>) -> Self {
        Error::Format {
            offset,
            message: msg.into(),
        }
    }
}
