//! Two-dimensional Δ-complexes: triangles glued along identified edges,
//! possibly with several edges between the same pair of vertices.
//!
//! One barycentric subdivision of a Δ-complex whose triangles have three
//! distinct vertices and three distinct edges, and whose edges are not
//! loops, is a simplicial complex.

use rustc_hash::FxHashMap as HashMap;

use super::complex::{Simplex, SimplicialComplex};
use super::SimplicialError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct DeltaTriangle {
    pub verts: [usize; 3],
    /// `edges[i]` joins `verts[i]` and `verts[(i + 1) % 3]`.
    pub edges: [usize; 3],
    /// Caller-defined tag carried through subdivision.
    pub origin: usize,
}

#[derive(Debug, Clone, Default)]
pub(crate) struct DeltaComplex {
    pub vertex_count: usize,
    pub edges: Vec<[usize; 2]>,
    pub triangles: Vec<DeltaTriangle>,
}

impl DeltaComplex {
    #[cfg(test)]
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64 + self.triangles.len() as i64
    }

    fn check_regular(&self) -> Result<(), SimplicialError> {
        for e in &self.edges {
            if e[0] == e[1] {
                return Err(SimplicialError::NotSimplicial("loop edge"));
            }
        }
        for t in &self.triangles {
            let [a, b, c] = t.verts;
            let [x, y, z] = t.edges;
            if a == b || b == c || a == c || x == y || y == z || x == z {
                return Err(SimplicialError::NotSimplicial("degenerate triangle"));
            }
            for i in 0..3 {
                let mut want = [t.verts[i], t.verts[(i + 1) % 3]];
                let mut got = self.edges[t.edges[i]];
                want.sort_unstable();
                got.sort_unstable();
                if want != got {
                    return Err(SimplicialError::NotSimplicial("edge endpoints disagree with triangle"));
                }
            }
        }
        Ok(())
    }

    /// Vertices of the subdivision: old vertices keep their ids, then one per
    /// edge, then one per triangle.
    pub fn barycentric_subdivision(&self) -> Result<DeltaComplex, SimplicialError> {
        self.check_regular()?;
        let edge_point = |e: usize| self.vertex_count + e;
        let face_point = |t: usize| self.vertex_count + self.edges.len() + t;
        let mut out = DeltaComplex {
            vertex_count: self.vertex_count + self.edges.len() + self.triangles.len(),
            ..Default::default()
        };
        let mut edge_ids: HashMap<[usize; 2], usize> = HashMap::default();
        let mut edge = |a: usize, b: usize, out: &mut DeltaComplex| -> usize {
            let key = if a < b { [a, b] } else { [b, a] };
            *edge_ids.entry(key).or_insert_with(|| {
                out.edges.push(key);
                out.edges.len() - 1
            })
        };
        for (t, tri) in self.triangles.iter().enumerate() {
            let f = face_point(t);
            for k in 0..3 {
                let v = tri.verts[k];
                for e in [tri.edges[k], tri.edges[(k + 2) % 3]] {
                    let m = edge_point(e);
                    let edges = [edge(v, m, &mut out), edge(m, f, &mut out), edge(f, v, &mut out)];
                    out.triangles.push(DeltaTriangle {
                        verts: [v, m, f],
                        edges,
                        origin: tri.origin,
                    });
                }
            }
        }
        Ok(out)
    }

    /// The abstract complex spanned by the triangles, with each triangle's
    /// origin tag. Fails if two cells would collapse onto one simplex.
    pub fn to_simplicial(&self) -> Result<(SimplicialComplex, Vec<(Simplex, usize)>), SimplicialError> {
        self.check_regular()?;
        let mut seen_edges: HashMap<[usize; 2], usize> = HashMap::default();
        for (i, e) in self.edges.iter().enumerate() {
            let mut key = *e;
            key.sort_unstable();
            if seen_edges.insert(key, i).is_some() {
                return Err(SimplicialError::NotSimplicial("parallel edges"));
            }
        }
        let mut tagged = Vec::with_capacity(self.triangles.len());
        let mut seen = HashMap::default();
        for t in &self.triangles {
            let s = Simplex::new(&t.verts)?;
            if seen.insert(s, t.origin).is_some() {
                return Err(SimplicialError::NotSimplicial("parallel triangles"));
            }
            tagged.push((s, t.origin));
        }
        let mut simplices: Vec<Simplex> = tagged.iter().map(|&(s, _)| s).collect();
        simplices.extend((0..self.vertex_count).map(Simplex::vertex));
        Ok((SimplicialComplex::from_simplices(simplices), tagged))
    }
}
