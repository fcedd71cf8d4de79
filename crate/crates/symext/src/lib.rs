//! The symmetric extension G^⊙n: closure inside the degree-n symmetric tensor algebra of ℂ[G],
//! its representations on V^{⊗n}, S^n(V), Λ^n(V), functoriality and the theta check.

pub mod element;
pub mod extension;
pub mod finiteness;
pub mod tensor;
pub mod theta1;

pub use element::{sym_product, SymTensorElement};
pub use extension::{enumerate_closure, functorial_extension, is_surjective, symmetric_extension, symmetric_extension_ordered, SymExtension, DEFAULT_BUDGET};
pub use finiteness::{infinitude_witness, InfinitudeWitness};
pub use tensor::{rep_alt, rep_on_tensor_power, rep_sym, slot_permutations, sn_character};
pub use theta1::{commutant_certificate, theorem_theta1_check, theta1_on, CommutantCertificate, Theta1Report};

use monoidrep_core::MonoidError;
use monoidrep_rep::RepError;
use monoidrep_theta::ThetaError;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum SymExtError {
    #[error("closure budget of {cap} elements exceeded ({reached} found, {pending} still unexpanded)")]
    BudgetExceeded { cap: usize, reached: usize, pending: usize },
    #[error("the closure is infinite: {0}")]
    Infinite(Box<InfinitudeWitness>),
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("closure inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Theta(#[from] ThetaError),
}

pub type Result<T> = std::result::Result<T, SymExtError>;

/// C[G^⊙n] is semisimple; checked on the abstract table.
pub fn semisimplicity_symext(g: &std::sync::Arc<monoidrep_core::FiniteMonoid>, n: usize, cap: usize) -> Result<bool> {
    let ext = symmetric_extension(g, n, cap)?;
    Ok(monoidrep_rep::is_semisimple(&ext.monoid).semisimple)
}
