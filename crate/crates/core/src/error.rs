use thiserror::Error;

use crate::numerics::{format_rational, Rational};
use crate::sequences::{BuildMethod, SequenceKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{kind} cannot be built with method {method}")]
    UnsupportedPair {
        kind: SequenceKind,
        method: BuildMethod,
    },
    #[error("tridiagonal parameters a, b, c must all be nonzero")]
    ZeroParameter,
    #[error("pole at x = {}", format_rational(.0))]
    PoleAt(Rational),
    #[error("{what} limited to n <= {max}, got {n}")]
    SizeLimit { what: &'static str, n: usize, max: usize },
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Parse(#[from] crate::text::ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;
