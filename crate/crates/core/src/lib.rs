//! Cospans, corelations and decorated corelations over finite sets.
//!
//! The building blocks are [`finset`] (functions, pushouts, factorisation
//! systems), [`cospan`] and [`factorisation`] (cospans and their E-parts),
//! and [`decorate`] (decoration contracts and the decorated categories they
//! generate). Concrete decorations live in [`circuits`], [`rigmat`] and
//! [`linrel`]; [`lawcheck`] verifies hypergraph-category laws for any of
//! them.

pub mod base;
pub mod circuits;
pub mod cli;
pub mod cospan;
pub mod decorate;
pub mod error;
pub mod factorisation;
pub mod finset;
pub mod lawcheck;
pub mod linalg;
pub mod linrel;
pub mod rational;
pub mod rigmat;

pub use base::{Base, FinSet, FinSetOp};
pub use cospan::{Cospan, Frobenius};
pub use error::{Error, Result};
pub use factorisation::Corelation;
pub use finset::{FactorisationSystem, FinFn};
