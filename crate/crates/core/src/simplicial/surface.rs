//! Triangulated closed orientable surfaces of small genus.

use super::complex::{check_closed_surface, Simplex, SimplicialComplex};
use super::delta::{DeltaComplex, DeltaTriangle};
use super::SimplicialError;

pub const MAX_SURFACE_GENUS: usize = 4;

/// A surface triangulation with, for every triangle, the polygon triangle it
/// was subdivided from.
///
/// For genus `g >= 1` the polygon has `4g` corners, all one vertex, and side
/// `s` runs from corner `s` to corner `s + 1`, reading `a_1 b_1 a_1⁻¹ b_1⁻¹ …`.
/// Polygon triangle `2s` is `(center, corner s, midpoint of side s)` and
/// `2s + 1` is `(center, midpoint of side s, corner s + 1)`.
#[derive(Debug, Clone)]
pub struct SurfaceBuild {
    pub complex: SimplicialComplex,
    pub origins: Vec<(Simplex, usize)>,
}

impl SurfaceBuild {
    /// Closure of all triangles whose origin satisfies `keep`.
    pub fn region(&self, keep: impl Fn(usize) -> bool) -> SimplicialComplex {
        SimplicialComplex::from_simplices(
            self.origins
                .iter()
                .filter(|(_, o)| keep(*o))
                .map(|&(s, _)| s),
        )
    }
}

fn tetrahedron_boundary() -> SurfaceBuild {
    let tris = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    let origins: Vec<(Simplex, usize)> = tris
        .iter()
        .enumerate()
        .map(|(i, t)| (Simplex::new(t).expect("distinct vertices"), i))
        .collect();
    SurfaceBuild {
        complex: SimplicialComplex::from_simplices(origins.iter().map(|&(s, _)| s)),
        origins,
    }
}

/// The `4g`-gon with its sides identified, subdivided at the center and
/// side midpoints (the first barycentric subdivision of the polygon).
fn polygon_delta(genus: usize) -> DeltaComplex {
    let sides = 4 * genus;
    const CORNER: usize = 0;
    const CENTER: usize = 1;
    let midpoint = |letter: usize| 2 + letter;
    // spokes to corners: 0..sides, spokes to midpoints: sides..2*sides,
    // half sides: 2*sides + 2*letter + {0: start half, 1: end half}
    let corner_spoke = |s: usize| s;
    let mid_spoke = |s: usize| sides + s;
    let half = |letter: usize, end: bool| 2 * sides + 2 * letter + usize::from(end);

    let side_letter = |s: usize| -> (usize, bool) {
        let block = s / 4;
        match s % 4 {
            0 => (2 * block, true),
            1 => (2 * block + 1, true),
            2 => (2 * block, false),
            _ => (2 * block + 1, false),
        }
    };

    let mut edges = vec![[0, 0]; 2 * sides + 4 * genus];
    for s in 0..sides {
        edges[corner_spoke(s)] = [CENTER, CORNER];
        let (letter, _) = side_letter(s);
        edges[mid_spoke(s)] = [CENTER, midpoint(letter)];
    }
    for letter in 0..2 * genus {
        edges[half(letter, false)] = [CORNER, midpoint(letter)];
        edges[half(letter, true)] = [midpoint(letter), CORNER];
    }

    let mut triangles = Vec::with_capacity(2 * sides);
    for s in 0..sides {
        let (letter, forward) = side_letter(s);
        let m = midpoint(letter);
        // traversing a reversed side visits the letter's end half first
        let first_half = half(letter, !forward);
        let second_half = half(letter, forward);
        let next = (s + 1) % sides;
        triangles.push(DeltaTriangle {
            verts: [CENTER, CORNER, m],
            edges: [corner_spoke(s), first_half, mid_spoke(s)],
            origin: 2 * s,
        });
        triangles.push(DeltaTriangle {
            verts: [CENTER, m, CORNER],
            edges: [mid_spoke(s), second_half, corner_spoke(next)],
            origin: 2 * s + 1,
        });
    }
    DeltaComplex {
        vertex_count: 2 + 2 * genus,
        edges,
        triangles,
    }
}

/// Closed orientable surface of the given genus with its polygon provenance.
/// Genus 0 is the boundary of the 3-simplex.
pub fn triangulated_surface(genus: usize) -> Result<SurfaceBuild, SimplicialError> {
    if genus > MAX_SURFACE_GENUS {
        return Err(SimplicialError::GenusOutOfRange(genus));
    }
    let build = if genus == 0 {
        tetrahedron_boundary()
    } else {
        let (complex, origins) = polygon_delta(genus).barycentric_subdivision()?.to_simplicial()?;
        SurfaceBuild { complex, origins }
    };
    check_closed_surface(&build.complex).map_err(SimplicialError::NotASurface)?;
    Ok(build)
}

pub fn surface(genus: usize) -> Result<SimplicialComplex, SimplicialError> {
    Ok(triangulated_surface(genus)?.complex)
}
