use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use super::SimplicialError;

/// Largest number of vertices in a simplex (dimension 3).
pub const MAX_SIMPLEX_VERTICES: usize = 4;

/// An oriented simplex: up to four distinct vertices in increasing order.
///
/// Ordering is by dimension first, then lexicographic in the vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    len: u8,
    verts: [usize; MAX_SIMPLEX_VERTICES],
}

impl Simplex {
    pub fn new(vertices: &[usize]) -> Result<Self, SimplicialError> {
        if vertices.is_empty() {
            return Err(SimplicialError::EmptySimplex);
        }
        if vertices.len() > MAX_SIMPLEX_VERTICES {
            return Err(SimplicialError::DimensionTooLarge(vertices.len() - 1));
        }
        let mut verts = [0; MAX_SIMPLEX_VERTICES];
        verts[..vertices.len()].copy_from_slice(vertices);
        verts[..vertices.len()].sort_unstable();
        if verts[..vertices.len()].windows(2).any(|w| w[0] == w[1]) {
            return Err(SimplicialError::RepeatedVertex);
        }
        Ok(Simplex {
            len: vertices.len() as u8,
            verts,
        })
    }

    pub fn vertex(v: usize) -> Self {
        Simplex {
            len: 1,
            verts: [v, 0, 0, 0],
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.verts[..self.len as usize]
    }

    pub fn dim(&self) -> usize {
        self.len as usize - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices().contains(&v)
    }

    /// Codimension-one faces; face `i` omits the `i`-th vertex.
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.len as usize;
        (0..if n > 1 { n } else { 0 }).map(move |skip| {
            let mut verts = [0; MAX_SIMPLEX_VERTICES];
            let mut k = 0;
            for (i, &v) in self.vertices().iter().enumerate() {
                if i != skip {
                    verts[k] = v;
                    k += 1;
                }
            }
            Simplex {
                len: (n - 1) as u8,
                verts,
            }
        })
    }

    /// Every non-empty face, the simplex itself included.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.len as usize;
        (1u32..(1 << n)).map(move |mask| {
            let mut verts = [0; MAX_SIMPLEX_VERTICES];
            let mut k = 0;
            for (i, &v) in self.vertices().iter().enumerate() {
                if mask & (1 << i) != 0 {
                    verts[k] = v;
                    k += 1;
                }
            }
            Simplex { len: k as u8, verts }
        })
    }

    /// Join with one extra vertex.
    pub fn join(&self, v: usize) -> Result<Simplex, SimplicialError> {
        let mut vs = self.vertices().to_vec();
        vs.push(v);
        Simplex::new(&vs)
    }

    pub fn without(&self, v: usize) -> Option<Simplex> {
        let vs: Vec<usize> = self.vertices().iter().copied().filter(|&x| x != v).collect();
        Simplex::new(&vs).ok()
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.vertices()).finish()
    }
}

/// A finite abstract simplicial complex of dimension at most 3, stored as
/// sorted per-dimension simplex lists.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SimplicialComplex {
    levels: Vec<Vec<Simplex>>,
}

/// Exchange format listing maximal simplices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub simplices: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Downward closure of the given simplices.
    pub fn from_simplices<I: IntoIterator<Item = Simplex>>(simplices: I) -> Self {
        let mut levels: Vec<Vec<Simplex>> = Vec::new();
        for s in simplices {
            if levels.len() <= s.dim() {
                levels.resize(s.dim() + 1, Vec::new());
            }
            levels[s.dim()].push(s);
        }
        // close one dimension at a time, from the top down
        for d in (0..levels.len()).rev() {
            levels[d].sort_unstable();
            levels[d].dedup();
            if d > 0 {
                let (lower, upper) = levels.split_at_mut(d);
                lower[d - 1].extend(upper[0].iter().flat_map(|s| s.facets()));
            }
        }
        SimplicialComplex { levels }
    }

    /// From a downward-closed collection, duplicates allowed.
    fn from_closed_set(mut all: Vec<Simplex>) -> Self {
        all.sort_unstable();
        all.dedup();
        let mut levels: Vec<Vec<Simplex>> = Vec::new();
        for s in all {
            if levels.len() <= s.dim() {
                levels.resize(s.dim() + 1, Vec::new());
            }
            levels[s.dim()].push(s);
        }
        SimplicialComplex { levels }
    }

    /// Downward closure of simplices given as vertex lists.
    pub fn from_vertex_lists<S: AsRef<[usize]>>(lists: &[S]) -> Result<Self, SimplicialError> {
        let simplices = lists
            .iter()
            .map(|s| Simplex::new(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_simplices(simplices))
    }

    pub fn from_json(json: &ComplexJson) -> Result<Self, SimplicialError> {
        Self::from_vertex_lists(&json.simplices)
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            simplices: self
                .maximal_simplices()
                .iter()
                .map(|s| s.vertices().to_vec())
                .collect(),
        }
    }

    /// `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.levels.len().checked_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Simplices of dimension `d`, sorted.
    pub fn simplices(&self, d: usize) -> &[Simplex] {
        self.levels.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.levels.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.simplices(0).iter().map(|s| s.vertices()[0])
    }

    pub fn max_vertex(&self) -> Option<usize> {
        self.vertices().max()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices(s.dim()).binary_search(s).is_ok()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.contains(&Simplex::vertex(v))
    }

    /// Index of `s` within its dimension.
    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.simplices(s.dim()).binary_search(s).ok()
    }

    /// Number of simplices in each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// Alternating count of simplices.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut covered: Vec<Simplex> = self.levels.iter().skip(1).flatten().flat_map(|s| s.facets().collect::<Vec<_>>()).collect();
        covered.sort_unstable();
        covered.dedup();
        self.iter().filter(|s| covered.binary_search(s).is_err()).copied().collect()
    }

    /// Every simplex of `self` lies in `other`.
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.iter().all(|s| other.contains(s))
    }

    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        Self::from_closed_set(self.iter().chain(other.iter()).copied().collect())
    }

    /// Simplices common to both; again a complex.
    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        Self::from_closed_set(self.iter().filter(|s| other.contains(s)).copied().collect())
    }

    /// Connected components, as vertex sets sorted by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let verts: Vec<usize> = self.vertices().collect();
        let pos = |v: usize| verts.binary_search(&v).expect("edge endpoints are vertices");
        let mut uf = UnionFind::<usize>::new(verts.len());
        for e in self.simplices(1) {
            uf.union(pos(e.vertices()[0]), pos(e.vertices()[1]));
        }
        // vertices are sorted, so components come out ordered by least vertex
        let mut slot = vec![usize::MAX; verts.len()];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for (i, &v) in verts.iter().enumerate() {
            let root = uf.find(i);
            if slot[root] == usize::MAX {
                slot[root] = out.len();
                out.push(Vec::new());
            }
            out[slot[root]].push(v);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// `{ s : v ∉ s, s ∪ {v} ∈ self }`.
    pub fn vertex_link(&self, v: usize) -> Result<SimplicialComplex, SimplicialError> {
        if !self.contains_vertex(v) {
            return Err(SimplicialError::VertexAbsent(v));
        }
        let link: Vec<Simplex> = self
            .iter()
            .filter(|s| s.dim() > 0 && s.contains(v))
            .filter_map(|s| s.without(v))
            .collect();
        Ok(Self::from_closed_set(link))
    }

    /// Relabels vertices through `map`, which must be injective on this complex.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Result<SimplicialComplex, SimplicialError> {
        let simplices = self
            .iter()
            .map(|s| {
                let vs: Vec<usize> = s.vertices().iter().map(|&v| map(v)).collect();
                Simplex::new(&vs)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_closed_set(simplices))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(f={:?})", self.f_vector())
    }
}

/// A complex together with a subcomplex of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubcomplexPair {
    ambient: SimplicialComplex,
    sub: SimplicialComplex,
}

impl SubcomplexPair {
    pub fn new(ambient: SimplicialComplex, sub: SimplicialComplex) -> Result<Self, SimplicialError> {
        if !sub.is_subcomplex_of(&ambient) {
            return Err(SimplicialError::NotASubcomplex);
        }
        Ok(SubcomplexPair { ambient, sub })
    }

    pub fn ambient(&self) -> &SimplicialComplex {
        &self.ambient
    }

    pub fn sub(&self) -> &SimplicialComplex {
        &self.sub
    }
}

/// Suspension of a complex together with its two cone points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Suspension {
    pub complex: SimplicialComplex,
    pub north: usize,
    pub south: usize,
}

/// Cone pair `(CF, F)` and its apex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    pub pair: SubcomplexPair,
    pub apex: usize,
}

fn fresh_vertex(c: &SimplicialComplex) -> usize {
    c.max_vertex().map_or(0, |m| m + 1)
}

fn check_coneable(c: &SimplicialComplex) -> Result<(), SimplicialError> {
    match c.dim() {
        Some(d) if d > 2 => Err(SimplicialError::DimensionTooLarge(d + 1)),
        _ => Ok(()),
    }
}

/// Two fresh apexes; every simplex `s` yields `s`, `s ∪ {north}`, `s ∪ {south}`.
pub fn suspension(c: &SimplicialComplex) -> Result<Suspension, SimplicialError> {
    check_coneable(c)?;
    let north = fresh_vertex(c);
    let south = north + 1;
    let mut all = Vec::with_capacity(3 * c.len() + 2);
    all.push(Simplex::vertex(north));
    all.push(Simplex::vertex(south));
    for s in c.iter() {
        all.push(*s);
        all.push(s.join(north)?);
        all.push(s.join(south)?);
    }
    Ok(Suspension {
        complex: SimplicialComplex::from_closed_set(all),
        north,
        south,
    })
}

/// The pair `(CF, F)` with one fresh apex.
pub fn cone(c: &SimplicialComplex) -> Result<Cone, SimplicialError> {
    check_coneable(c)?;
    let apex = fresh_vertex(c);
    let mut all = Vec::with_capacity(2 * c.len() + 1);
    all.push(Simplex::vertex(apex));
    for s in c.iter() {
        all.push(*s);
        all.push(s.join(apex)?);
    }
    let ambient = SimplicialComplex::from_closed_set(all);
    Ok(Cone {
        pair: SubcomplexPair {
            ambient,
            sub: c.clone(),
        },
        apex,
    })
}

pub fn vertex_link(c: &SimplicialComplex, v: usize) -> Result<SimplicialComplex, SimplicialError> {
    c.vertex_link(v)
}

/// Why a complex fails to be a closed orientable connected surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurfaceDefect {
    Empty,
    NotPure,
    BadLink { vertex: usize },
    Disconnected,
    NonOrientable,
}

impl fmt::Display for SurfaceDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceDefect::Empty => write!(f, "empty complex"),
            SurfaceDefect::NotPure => write!(f, "not a pure 2-complex"),
            SurfaceDefect::BadLink { vertex } => write!(f, "link of vertex {vertex} is not a cycle"),
            SurfaceDefect::Disconnected => write!(f, "disconnected"),
            SurfaceDefect::NonOrientable => write!(f, "non-orientable"),
        }
    }
}

/// Link of `v` is one cycle: non-empty, 1-dimensional, every vertex of
/// degree two, connected.
pub fn link_is_cycle(link: &SimplicialComplex) -> bool {
    if link.dim() != Some(1) {
        return false;
    }
    let edges: Vec<[usize; 2]> = link
        .simplices(1)
        .iter()
        .map(|e| [e.vertices()[0], e.vertices()[1]])
        .collect();
    // a cycle on n vertices has n edges; isolated vertices would break the count
    edges.len() == link.simplices(0).len() && edges_form_cycle(&edges)
}

/// Checks pure dimension 2, cyclic vertex links, connectedness and a
/// coherent orientation of the triangles.
pub fn check_closed_surface(c: &SimplicialComplex) -> Result<(), SurfaceDefect> {
    if c.is_empty() {
        return Err(SurfaceDefect::Empty);
    }
    if c.dim() != Some(2) {
        return Err(SurfaceDefect::NotPure);
    }
    // links read off the triangles; an edge or vertex outside every
    // triangle makes the complex impure
    let verts = c.simplices(0);
    let index = |v: usize| verts.binary_search(&Simplex::vertex(v)).expect("vertex of the complex");
    let mut corners: Vec<(usize, [usize; 2])> = Vec::with_capacity(3 * c.simplices(2).len());
    let mut edge_used = vec![false; c.simplices(1).len()];
    for t in c.simplices(2) {
        let [a, b, d] = [t.vertices()[0], t.vertices()[1], t.vertices()[2]];
        corners.push((index(a), [b, d]));
        corners.push((index(b), [a, d]));
        corners.push((index(d), [a, b]));
        for e in t.facets() {
            edge_used[c.index_of(&e).expect("complex is downward closed")] = true;
        }
    }
    corners.sort_unstable();
    if edge_used.contains(&false) {
        return Err(SurfaceDefect::NotPure);
    }
    let mut rest = corners.as_slice();
    for (i, v) in verts.iter().enumerate() {
        let count = rest.iter().take_while(|(w, _)| *w == i).count();
        if count == 0 {
            return Err(SurfaceDefect::NotPure);
        }
        let link: Vec<[usize; 2]> = rest[..count].iter().map(|&(_, e)| e).collect();
        if !edges_form_cycle(&link) {
            return Err(SurfaceDefect::BadLink { vertex: v.vertices()[0] });
        }
        rest = &rest[count..];
    }
    if !c.is_connected() {
        return Err(SurfaceDefect::Disconnected);
    }
    if !is_orientable(c) {
        return Err(SurfaceDefect::NonOrientable);
    }
    Ok(())
}

/// Distinct edges forming one cycle through all their endpoints.
fn edges_form_cycle(edges: &[[usize; 2]]) -> bool {
    if edges.len() < 3 {
        return false;
    }
    let neighbours = |v: usize| edges.iter().filter_map(move |&[a, b]| match v {
        _ if v == a => Some(b),
        _ if v == b => Some(a),
        _ => None,
    });
    if edges.iter().flatten().any(|&v| neighbours(v).count() != 2) {
        return false;
    }
    // walk the cycle from one edge and count its length
    let [first, mut current] = edges[0];
    let mut previous = first;
    let mut length = 1;
    while current != first {
        let next = neighbours(current).find(|&w| w != previous).expect("degree two");
        previous = current;
        current = next;
        length += 1;
    }
    length == edges.len()
}

/// Propagates an orientation across edges; assumes every edge has at most
/// two triangles.
fn is_orientable(c: &SimplicialComplex) -> bool {
    let triangles = c.simplices(2);
    let mut by_edge: Vec<Vec<usize>> = vec![Vec::new(); c.simplices(1).len()];
    for (t, tri) in triangles.iter().enumerate() {
        for e in tri.facets() {
            by_edge[c.index_of(&e).expect("complex is downward closed")].push(t);
        }
    }
    // sign[t] = +1 keeps the sorted vertex order, -1 reverses it.
    let mut sign: Vec<i8> = vec![0; triangles.len()];
    // Induced sign of facet i of a sorted triangle is (-1)^i.
    let edge_sign = |tri: &Simplex, e: &Simplex| -> i8 {
        let missing = tri.vertices().iter().position(|v| !e.contains(*v)).unwrap();
        if missing % 2 == 0 { 1 } else { -1 }
    };
    for start in 0..triangles.len() {
        if sign[start] != 0 {
            continue;
        }
        sign[start] = 1;
        let mut stack = vec![start];
        while let Some(t) = stack.pop() {
            for e in triangles[t].facets() {
                for &u in &by_edge[c.index_of(&e).expect("complex is downward closed")] {
                    if u == t {
                        continue;
                    }
                    // Coherent orientations induce opposite signs on a shared edge.
                    let want = -sign[t] * edge_sign(&triangles[t], &e) * edge_sign(&triangles[u], &e);
                    if sign[u] == 0 {
                        sign[u] = want;
                        stack.push(u);
                    } else if sign[u] != want {
                        return false;
                    }
                }
            }
        }
    }
    true
}
