//! Monomial ideals and their Stanley-Reisner complexes.
//!
//! The crate provides exact representations of monomial ideals and
//! simplicial complexes (Alexander duality, links, deletions, colon ideals,
//! polarization), graded Betti numbers through Hochster's formula, and
//! certified decision procedures for vertex splittability, vertex
//! decomposability, shellability, (weak) polymatroidality, linear quotients,
//! linear resolutions, componentwise linearity and the Cohen-Macaulay
//! properties.

pub mod classify;
pub mod complex;
pub mod error;
pub mod field;
pub mod homology;
pub mod ideal;
pub mod monomial;
pub mod vars;

pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use field::FieldSpec;
pub use homology::{BettiTable, HomologyProfile};
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
pub use vars::{VarSubset, VariableSet};
