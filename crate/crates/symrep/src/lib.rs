//! Irreducible representations of the group layer: S_n via Specht modules, wreath products
//! G≀S_n, twisted C2≀S_n actions and Bruhat lengths.

pub mod bruhat;
pub mod partition;
pub mod provider;
pub mod specht;
pub mod twisted;
pub mod wreath;

pub use bruhat::{bruhat_le, bruhat_length, parse_cycles, w0, w_cycle, w_half};
pub use partition::{partitions, Partition};
pub use provider::{symmetric_catalog, SymProvider};
pub use specht::{specht, young_pairing};
pub use twisted::twisted_action;
pub use wreath::{irr_wreath_all, wreath_group, wreath_irr, WreathElement, WreathGroup};

use monoidrep_rep::RepError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("not a partition: {0:?}")]
    BadPartition(Vec<usize>),
    #[error("input representation is reducible")]
    Reducible,
    #[error("monoid is not a group")]
    NotGroup,
    #[error("twisted action variant {0} is outside 1..=8")]
    VariantOutOfRange(u8),
    #[error("twisted actions need n ≥ 2")]
    TooSmall,
    #[error("catalog fails the dimension sum check: {0}")]
    IncompleteCatalog(String),
    #[error("permutation parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Rep(#[from] RepError),
}
