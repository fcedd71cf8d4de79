//! Bimodules over M₁×M₂, big and small thetas, the commutant battery and the
//! transfer through the graph Γ of an isomorphism M₁/N₁ ≅ M₂/N₂.

pub mod battery;
pub mod bimodule;
pub mod gamma;

pub use battery::{proposition_theta_battery, random_bimodule, random_semisimple_monoid, PropositionRecord};
pub use bimodule::{
    big_theta, external_tensor, is_theta, is_theta_on, left_class_bimodule, product_monoid, regular_bimodule, waldspurger_factor,
    BigTheta, BimoduleRep, Factor, ThetaEntry, ThetaReport,
};
pub use gamma::{
    desk_group_case, desk_inverse_case, gamma_transfer, graph_submonoid, single_apex_representations, GammaData, GammaReport,
};

use monoidrep_clifford::CliffordError;
use monoidrep_core::MonoidError;
use monoidrep_rep::RepError;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum ThetaError {
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error("not a bimodule: {0}")]
    NotBimodule(String),
    #[error("monoid is not semisimple: {0}")]
    NotSemisimple(String),
    #[error("assumption violated: {}", .0.join("; "))]
    Assumption(Vec<String>),
    #[error("invariant failed: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, ThetaError>;
