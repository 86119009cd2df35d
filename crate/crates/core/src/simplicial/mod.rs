//! Finite simplicial complexes, exact integral homology and the surface
//! constructions built on them.

mod complex;
mod delta;
mod homology;
mod normalization;
mod obstruction;
pub mod snf;
mod surface;

use thiserror::Error;

use crate::cover::CoverError;

pub use complex::{
    check_closed_surface, cone, link_is_cycle, suspension, vertex_link, ComplexJson, Cone, Simplex,
    SimplicialComplex, SubcomplexPair, SurfaceDefect, Suspension,
};
pub use homology::{
    boundary_decompositions, boundary_matrix, homology, relative_coboundary_matrix, relative_cohomology,
    HomologyGroup, HomologyProfile,
};
pub use normalization::{normalization_surface, NORMALIZATION_GROUP_LIMIT};
pub use obstruction::{
    domain_cover_obstruction, suspension_manifold_verdict, wilder_obstruction, CoverSplitReport,
    CoverSplitVerdict, ManifoldReport, ManifoldVerdict,
};
pub use snf::{smith_normal_form, SmithDecomposition, SnfError, SparseMatrix};
pub use surface::{surface, triangulated_surface, SurfaceBuild, MAX_SURFACE_GENUS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplicialError {
    #[error("a simplex needs at least one vertex")]
    EmptySimplex,
    #[error("a simplex lists a vertex twice")]
    RepeatedVertex,
    #[error("dimension {0} exceeds 3")]
    DimensionTooLarge(usize),
    #[error("vertex {0} is not in the complex")]
    VertexAbsent(usize),
    #[error("not a subcomplex of the ambient complex")]
    NotASubcomplex,
    #[error("cell structure is not simplicial: {0}")]
    NotSimplicial(&'static str),
    #[error("genus {0} is outside 0..=4")]
    GenusOutOfRange(usize),
    #[error("not a closed orientable surface: {0}")]
    NotASurface(SurfaceDefect),
    #[error("monodromy group of order {order} exceeds the gluing limit {limit}")]
    GroupTooLarge { order: usize, limit: usize },
    #[error("the two pieces do not cover the complex")]
    CoverConditionViolated,
    #[error("consistency check failed: {0}")]
    CheckFailed(&'static str),
    #[error(transparent)]
    Snf(#[from] SnfError),
    #[error(transparent)]
    Cover(#[from] CoverError),
}
