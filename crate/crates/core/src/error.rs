use std::fmt;
use std::path::PathBuf;

use serde::Serialize;
use thiserror::Error;

/// A law that a piece of finite data is expected to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    CompositionTotal,
    CompositionEndpoints,
    LeftIdentity,
    RightIdentity,
    Associativity,
    FunctorEndpoints,
    FunctorIdentity,
    FunctorComposition,
    ComponentEndpoints,
    Naturality,
    MonadAssociativity,
    MonadLeftUnit,
    MonadRightUnit,
    ComonadCoassociativity,
    ComonadLeftCounit,
    ComonadRightCounit,
    TriangleLeft,
    TriangleRight,
    AlgebraAssociativity,
    AlgebraUnit,
    ModuleUnit,
    ModuleMultiplicative,
    RightModuleUnit,
    RightModuleMultiplicative,
    ActionsCommute,
    Intertwining,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).ok();
        match s.as_ref().and_then(|v| v.as_str()) {
            Some(name) => f.write_str(name),
            None => write!(f, "{self:?}"),
        }
    }
}

/// A failed law together with the names of the items that witness the failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: Law,
    pub witness: Vec<String>,
}

impl Violation {
    pub fn new<I, S>(law: Law, witness: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Violation {
            law,
            witness: witness.into_iter().map(Into::into).collect(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at ({})", self.law, self.witness.join(", "))
    }
}

#[derive(Debug, Error)]
pub enum Error {
    /// Structurally malformed input: dangling ids, wrong lengths, incompatible shapes.
    #[error("malformed input: {0}")]
    Shape(String),
    /// Well-formed input that breaks one or more laws.
    #[error("{} law violation(s), first: {}", .0.len(), .0.first().map(|v| v.to_string()).unwrap_or_default())]
    Invalid(Vec<Violation>),
    #[error("budget exceeded: {what} needs {needed}, budget is {budget}")]
    Budget {
        what: String,
        needed: usize,
        budget: usize,
    },
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("refused: {0}")]
    Refused(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl Error {
    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub fn dimension(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    /// True for errors caused by the input itself rather than by a law failure.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Shape(_) | Error::Json(_) | Error::Io { .. } | Error::NotPrime(_) | Error::Dimension(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Turns a list of violations into `Ok(())` or `Err(Error::Invalid)`.
pub fn check(violations: Vec<Violation>) -> Result<()> {
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Error::Invalid(violations))
    }
}
