//! Finite monoids given by multiplication tables, and the combinatorics of
//! their (relative) Green's relations.

pub mod builtin;
pub mod centric;
pub mod green;
pub mod inverse;
pub mod io;
pub mod monoid;
pub mod random;
pub mod submonoid;

pub use green::{
    green_relative, local_group, local_monoid, mackey_decompose, principal_series, sandwich_matrix,
    GreenClass, GreenData, LocalMonoid, MackeyCell, SandwichMatrix,
};
pub use inverse::involution;
pub use monoid::{idempotents, monoid_from_partial_transformations, monoid_from_table, FiniteMonoid, PartialMap};
pub use submonoid::Submonoid;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("table is not square or has out-of-range entries")]
    Shape,
    #[error("element {0} is not a two-sided identity")]
    Identity(usize),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("not a submonoid: {0}")]
    NotSubmonoid(String),
    #[error("submonoid is not centric: m={0}")]
    NotCentric(usize),
    #[error("quotient is not well defined")]
    IllDefinedQuotient,
    #[error("not a group")]
    NotGroup,
    #[error("parse error: {0}")]
    Parse(String),
}
