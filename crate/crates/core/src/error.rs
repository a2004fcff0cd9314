use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    Construction(String),

    #[error("capacity exceeded: {what} is {got}, limit is {limit}")]
    Capacity {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("invalid family spec: {0}")]
    Spec(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error("parse error at {token:?}: {detail}")]
    Parse { token: String, detail: String },

    #[error("audit failed at copy {copy}: {detail}")]
    Audit { copy: usize, detail: String },

    #[error("half-bound budget exceeded: {size} > {budget} on a component of order {order}")]
    BudgetExceeded {
        size: usize,
        budget: usize,
        order: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(token: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            detail: detail.into(),
        }
    }
}
