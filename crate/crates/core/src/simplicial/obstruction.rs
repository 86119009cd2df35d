//! Homological obstructions for suspended surfaces and split complexes.

use serde::{Deserialize, Serialize};

use super::complex::{check_closed_surface, cone, SimplicialComplex};
use super::homology::{homology, relative_cohomology};
use super::SimplicialError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ManifoldVerdict {
    Manifold,
    NotManifold,
}

/// Whether the suspension of a surface is a manifold, decided by `H_1` of
/// the surface, which is the link of either cone point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifoldReport {
    pub verdict: ManifoldVerdict,
    pub h1_rank: usize,
}

fn require_surface(f: &SimplicialComplex) -> Result<(), SimplicialError> {
    check_closed_surface(f).map_err(SimplicialError::NotASurface)
}

/// The suspension of a closed orientable surface is a manifold exactly when
/// the surface is a sphere, that is when its first homology vanishes.
pub fn suspension_manifold_verdict(f: &SimplicialComplex) -> Result<ManifoldReport, SimplicialError> {
    require_surface(f)?;
    let h1_rank = homology(f)?.group(1).rank;
    let verdict = if h1_rank == 0 {
        ManifoldVerdict::Manifold
    } else {
        ManifoldVerdict::NotManifold
    };
    Ok(ManifoldReport { verdict, h1_rank })
}

/// Local Betti number `ρ²` at a cone point of the suspension: the rank of
/// `H²(CF, F)`. Non-zero means the suspension is not a Wilder manifold.
pub fn wilder_obstruction(f: &SimplicialComplex) -> Result<usize, SimplicialError> {
    require_surface(f)?;
    let c = cone(f)?;
    Ok(relative_cohomology(&c.pair, 2)?.rank)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverSplitVerdict {
    H1Nontrivial,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSplitReport {
    pub verdict: CoverSplitVerdict,
    pub u_components: usize,
    pub v_components: usize,
    pub intersection_components: usize,
    pub h1_rank: usize,
}

/// For `W = U ∪ V` with `U`, `V` connected and `U ∩ V` disconnected,
/// `H_1(W)` is non-trivial. The rank is computed in every case and checked
/// when the hypotheses hold.
pub fn domain_cover_obstruction(
    w: &SimplicialComplex,
    u: &SimplicialComplex,
    v: &SimplicialComplex,
) -> Result<CoverSplitReport, SimplicialError> {
    if !u.is_subcomplex_of(w) || !v.is_subcomplex_of(w) {
        return Err(SimplicialError::NotASubcomplex);
    }
    if &u.union(v) != w {
        return Err(SimplicialError::CoverConditionViolated);
    }
    let u_components = u.components().len();
    let v_components = v.components().len();
    let intersection_components = u.intersection(v).components().len();
    let h1_rank = homology(w)?.group(1).rank;
    let applies = u_components == 1 && v_components == 1 && intersection_components >= 2;
    if applies && h1_rank == 0 {
        return Err(SimplicialError::CheckFailed("disconnected overlap with trivial H_1"));
    }
    Ok(CoverSplitReport {
        verdict: if applies {
            CoverSplitVerdict::H1Nontrivial
        } else {
            CoverSplitVerdict::Inconclusive
        },
        u_components,
        v_components,
        intersection_components,
        h1_rank,
    })
}
