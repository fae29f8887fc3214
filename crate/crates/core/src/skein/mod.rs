//! Skein-relation invariants: the two-variable HOMFLY polynomial, the
//! regular-isotopy form W, the Jones specialization and their parameters.

mod engine;
mod invariants;
pub mod params;
pub mod reference;
pub mod result;
pub mod tree;
pub mod verify;

pub use engine::{HomflyRing, SeriesRing, SkeinEngine, SkeinRing};
pub use invariants::{homfly, jones, jones_u, w_invariant, w_series};
pub use params::{make_params, Mode, Normalization, ParamValues, SkeinParams};
pub use tree::{skein_tree, SkeinTreeNode};
pub use verify::{perturbative_check, verify_skein, PerturbativeReport, SkeinCheck};

use crate::arith::ArithError;
use crate::diagram::DiagramError;

/// Largest diagram `homfly` accepts.
pub const MAX_HOMFLY_CROSSINGS: usize = 14;
/// Largest diagram whose full skein tree is produced.
pub const MAX_TREE_CROSSINGS: usize = 10;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SkeinError {
    #[error("diagram has {found} crossings, more than the ceiling of {max}")]
    CeilingExceeded { found: usize, max: usize },
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error("operation needs q-exact parameters; paper-literal values are series")]
    NeedsExact,
    #[error("operation needs paper-literal parameters")]
    NeedsSeries,
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}
