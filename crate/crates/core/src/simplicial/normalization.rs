//! The normalization surface glued from sheets indexed by the monodromy group.
//!
//! The sphere is cut along arcs from a base point `b` to each branch value
//! `y_i`, giving a `2k`-gon with corners `b_1, y_1, b_2, y_2, …, b_k, y_k`.
//! Side `2i` runs `b_i → y_i` (left bank of arc `i`), side `2i + 1` runs
//! `y_i → b_{i+1}` (right bank). The polygon is coned from its center.
//!
//! One sheet per group element `g`. Crossing arc `i` from the right bank of
//! sheet `g` lands on the left bank of sheet `g σ_i⁻¹`.

use petgraph::unionfind::UnionFind;

use super::complex::{check_closed_surface, SimplicialComplex};
use super::delta::{DeltaComplex, DeltaTriangle};
use super::SimplicialError;
use crate::cover::{monodromy_group, validate, BranchData};

/// Largest monodromy group the gluing accepts.
pub const NORMALIZATION_GROUP_LIMIT: usize = 48;

fn glue(b: &BranchData, bound: usize) -> Result<DeltaComplex, SimplicialError> {
    validate(b)?;
    let group = monodromy_group(b, bound)?;
    let order = group.order();
    if order > NORMALIZATION_GROUP_LIMIT {
        return Err(SimplicialError::GroupTooLarge {
            order,
            limit: NORMALIZATION_GROUP_LIMIT,
        });
    }
    let k = b.branch_count();
    let corners = 2 * k;
    let inverses: Vec<_> = b.sigma().iter().map(|s| s.inverse()).collect();
    // neighbour[g][i]: the sheet entered when crossing arc i from sheet g's right bank
    let neighbour: Vec<Vec<usize>> = group
        .elements()
        .iter()
        .map(|g| {
            inverses
                .iter()
                .map(|s| group.position(&g.then_unchecked(s)).expect("group is closed"))
                .collect()
        })
        .collect();

    let corner = |g: usize, c: usize| g * corners + c % corners;
    let mut classes = UnionFind::<usize>::new(order * corners);
    for (g, row) in neighbour.iter().enumerate() {
        for (i, &h) in row.iter().enumerate() {
            classes.union(corner(g, 2 * i + 1), corner(h, 2 * i + 1));
            classes.union(corner(g, 2 * i + 2), corner(h, 2 * i));
        }
    }
    let mut class_id = vec![usize::MAX; order * corners];
    let mut vertex_count = order;
    let mut corner_vertex = vec![0; order * corners];
    for (slot, vertex) in corner_vertex.iter_mut().enumerate() {
        let root = classes.find(slot);
        if class_id[root] == usize::MAX {
            class_id[root] = vertex_count;
            vertex_count += 1;
        }
        *vertex = class_id[root];
    }

    // edges: spokes g * corners + c, then one per arc bank pair, indexed
    // by the sheet owning the left bank
    let spoke = |g: usize, c: usize| g * corners + c % corners;
    let arc_edge = |h: usize, i: usize| order * corners + h * k + i;
    let mut edges = vec![[0, 0]; order * corners + order * k];
    for g in 0..order {
        for c in 0..corners {
            edges[spoke(g, c)] = [g, corner_vertex[corner(g, c)]];
        }
        for i in 0..k {
            edges[arc_edge(g, i)] = [corner_vertex[corner(g, 2 * i)], corner_vertex[corner(g, 2 * i + 1)]];
        }
    }
    let side = |g: usize, c: usize| -> usize {
        if c.is_multiple_of(2) {
            arc_edge(g, c / 2)
        } else {
            arc_edge(neighbour[g][c / 2], c / 2)
        }
    };

    let mut triangles = Vec::with_capacity(order * corners);
    for g in 0..order {
        for c in 0..corners {
            triangles.push(DeltaTriangle {
                verts: [g, corner_vertex[corner(g, c)], corner_vertex[corner(g, c + 1)]],
                edges: [spoke(g, c), side(g, c), spoke(g, c + 1)],
                origin: g,
            });
        }
    }
    Ok(DeltaComplex {
        vertex_count,
        edges,
        triangles,
    })
}

/// Triangulated normalization surface of `b`, made simplicial by one
/// barycentric subdivision of the glued sheets and checked to be a closed
/// orientable surface.
pub fn normalization_surface(b: &BranchData, bound: usize) -> Result<SimplicialComplex, SimplicialError> {
    let (complex, _) = glue(b, bound)?.barycentric_subdivision()?.to_simplicial()?;
    check_closed_surface(&complex).map_err(SimplicialError::NotASurface)?;
    Ok(complex)
}
