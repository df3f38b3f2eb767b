use thiserror::Error;

use crate::set::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("resource limit exceeded: {what} (limit {limit})")]
    Resource { what: String, limit: usize },

    /// L* computation aborted; `partial` holds the members decided so far.
    #[error("resource limit exceeded while deciding L* at vertex {vertex} (limit {limit} maximal independent sets)")]
    LstarBudget {
        vertex: usize,
        limit: usize,
        partial: VertexSet,
    },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }

    pub(crate) fn domain(message: impl Into<String>) -> Self {
        Error::Domain(message.into())
    }

    pub(crate) fn resource(what: impl Into<String>, limit: usize) -> Self {
        Error::Resource {
            what: what.into(),
            limit,
        }
    }

    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Domain(_) => 2,
            Error::Resource { .. } | Error::LstarBudget { .. } => 3,
            Error::Inconsistent(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
