//! Core fitness-landscape abstraction.
//!
//! A landscape is a set of fixed-length bit strings together with a
//! deterministic fitness function; the neighborhood of a solution is the set
//! of solutions reachable by flipping exactly one bit. On top of that this
//! crate defines the neutrality vocabulary (neutral neighbors, neutral
//! degree) and evolvability (here: the best fitness reachable in one flip),
//! plus two synthetic landscapes with closed-form neutrality structure that
//! serve as oracles in tests.

mod bitstring;
mod landscape;
mod ops;
mod synthetic;

pub use bitstring::BitString;
pub use landscape::{FullScanCursor, Landscape, NeighborhoodCursor};
pub use ops::{evolvability, neighbors, neutral_degree, neutral_neighbors, EvolvabilityKind};
pub use synthetic::{ConstantLandscape, PopcountLandscape};

/// Errors from landscape operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LandscapeError {
    #[error("solution has {actual} bits but the landscape has dimension {expected}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("bit index {bit} out of range for dimension {dimension}")]
    BitOutOfRange { bit: usize, dimension: usize },
}
