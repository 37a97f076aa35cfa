use thiserror::Error;

use crate::finset::FactorisationSystem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid function: {0}")]
    InvalidFunction(String),

    #[error("codomain mismatch: {left} vs {right}")]
    CodomainMismatch { left: usize, right: usize },

    #[error("domain mismatch: {left} vs {right}")]
    DomainMismatch { left: usize, right: usize },

    #[error("cannot compose: {left} does not match {right}")]
    FootMismatch { left: usize, right: usize },

    #[error("factorisation systems differ: {left:?} vs {right:?}")]
    SystemMismatch {
        left: FactorisationSystem,
        right: FactorisationSystem,
    },

    #[error("no functor from {from:?} corelations to {to:?} corelations")]
    IncomparableSystems {
        from: FactorisationSystem,
        to: FactorisationSystem,
    },

    #[error("decoration `{contract}` does not support the {system:?} system")]
    UnsupportedSystem {
        contract: String,
        system: FactorisationSystem,
    },

    #[error("cannot pull decoration back: {0}")]
    PullUndefined(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid decoration: {0}")]
    InvalidDecoration(String),

    #[error("isomorphism search too large: {0}")]
    IsoSearchTooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
