//! Representations of finite monoids over cyclotomic fields.

pub mod catalog;
pub mod cmp;
pub mod duality;
pub mod hom;
pub mod io;
pub mod representation;
pub mod schutz;
pub mod subspace;

pub use catalog::{sort_catalog, IrrProvider};
pub use cmp::{cmp_irreducibles, is_semisimple, CmpIrreducible, SemisimpleCertificate};
pub use hom::{find_isomorphism, hom_space, is_isomorphic, isotypic_quotient, multiplicity};
pub use representation::{Representation, Side};
pub use schutz::{coinduce, induce, phi_map, radical_subspace, schutzenberger, SchutzRep};
pub use subspace::Subspace;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("representations live over different monoids")]
    MonoidMismatch,
    #[error("representations act on different sides")]
    SideMismatch,
    #[error("not a representation: {0}")]
    NotHomomorphism(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("no irreducible catalog provider for a group of order {0}")]
    MissingProvider(usize),
    #[error("catalog fails the dimension sum check: {0}")]
    IncompleteCatalog(String),
    #[error("representation is not irreducible")]
    Reducible,
    #[error("monoid is not an inverse monoid")]
    NotInverse,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}
