//! Monodromy groups of branched covers of the 2-sphere, Riemann–Hurwitz
//! invariants of their normalizations, and exact simplicial homology for the
//! surfaces, cones and suspensions built from them.

pub mod cover;
pub mod group;
pub mod perm;
pub mod simplicial;

pub use cover::{BranchData, CoverError, CoverInvariants};
pub use group::{PermGroup, DEFAULT_GROUP_BOUND};
pub use perm::Permutation;
