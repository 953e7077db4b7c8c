use thiserror::Error;

use crate::ordinal::Ordinal;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ambient rings differ: {left} vs {right} variables")]
    AmbientMismatch { left: usize, right: usize },

    #[error("{count} variables exceeds the configured maximum of {max}")]
    TooManyVariables { count: usize, max: usize },

    #[error("not a subquotient: the lower ideal is not contained in the upper ideal")]
    NotNested,

    #[error("submodule ideal must lie between the lower and upper ideal")]
    InclusionViolation,

    #[error("the zero module has no {0}")]
    ZeroModule(&'static str),

    #[error("cycle has negative coefficients")]
    NotEffective,

    #[error("requested length {requested} is not weaker than the module length {length}")]
    NotWeaker { requested: Ordinal, length: Ordinal },

    #[error("no monomial submodule of length {0} was found")]
    SubmoduleSearchFailed(Ordinal),

    #[error("module must be a cyclic quotient R/I")]
    NotCyclic,

    #[error("no e-open power found up to the cap of {cap}")]
    CapExceeded { cap: u32 },

    #[error("module is not of finite length")]
    NotArtinian,

    #[error("unknown local multiplicity backend `{0}`")]
    UnknownBackend(String),
}
