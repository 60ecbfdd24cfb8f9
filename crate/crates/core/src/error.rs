use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// The CLI maps `Argument` and `Range` to exit code 2 and `Capacity` to exit
/// code 3, so new variants should pick a side deliberately.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A query fell outside the range a precomputed structure covers.
    #[error("{what} {value} is outside the supported range [{lo}, {hi}]")]
    Range { what: &'static str, value: u64, lo: u64, hi: u64 },

    /// The request would exceed a memory or enumeration budget.
    #[error("capacity exceeded: {what} needs {requested}, budget is {budget}")]
    Capacity { what: &'static str, requested: String, budget: String },
}

impl Error {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn capacity(what: &'static str, requested: impl ToString, budget: impl ToString) -> Self {
        Error::Capacity { what, requested: requested.to_string(), budget: budget.to_string() }
    }

    /// True for errors caused by budgets rather than malformed input.
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
