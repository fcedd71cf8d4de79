//! Centric submonoids and Clifford theory for monoid algebras: multipliers and the
//! extensions M^α, the semisimplicity test through M/N, stability submonoids of an
//! irreducible of N, intertwiner systems with their cocycle, and the normal-subring test.

pub mod cocycle;
pub mod induced;
pub mod multiplier;
pub mod normal;
pub mod roots;
pub mod stability;
pub mod theta4;

pub use cocycle::{intertwiner_cocycle, IntertwinerSystem, ProjectiveFactors};
pub use induced::{balanced_tensor, induced_functor_check, induced_functions, BalancedTensor, InducedFunctorReport};
pub use multiplier::{monoid_extension, validate_multiplier, Extension, Multiplier, Target};
pub use normal::{centric_submonoids, normal_subring_check, NormalSubringReport};
pub use stability::{example2_check, stability_of_v, stability_submonoids, Example2Report, StabilityMonoids, VStability};
pub use theta4::{quotient_structure_check, theorem_theta4_check, StructureReport, Theta4Report};

use monoidrep_core::MonoidError;
use monoidrep_rep::RepError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("cocycle identity fails at ({0}, {1}, {2})")]
    CocycleViolation(usize, usize, usize),
    #[error("multiplier is not normalized at ({0}, {1})")]
    NotNormalized(usize, usize),
    #[error("malformed multiplier: {0}")]
    Malformed(String),
    #[error("submonoid is not centric: m={0}")]
    NotCentric(usize),
    #[error("not semisimple: {0}")]
    NotSemisimple(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("normalization impossible: {0}")]
    NormalizationImpossible(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, CliffordError>;
