//! Integral homology and relative cohomology from boundary matrices.

use serde::{Deserialize, Serialize};

use super::complex::{SimplicialComplex, SubcomplexPair};
use super::snf::{smith_normal_form, SmithDecomposition, SnfError, SparseMatrix};

/// One (co)homology group: free rank plus torsion coefficients, each dividing the next.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<i64>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// Integral homology in every degree up to the dimension of the complex.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<i64>>,
}

impl HomologyProfile {
    /// The group in `degree`; trivial above the dimension.
    pub fn group(&self, degree: usize) -> HomologyGroup {
        HomologyGroup {
            rank: self.betti.get(degree).copied().unwrap_or(0),
            torsion: self.torsion.get(degree).cloned().unwrap_or_default(),
        }
    }

    /// Reduced homology: one less rank in degree 0 for a non-empty space.
    pub fn reduced_group(&self, degree: usize) -> HomologyGroup {
        let mut g = self.group(degree);
        if degree == 0 {
            g.rank = g.rank.saturating_sub(1);
        }
        g
    }

    /// Alternating sum of Betti numbers.
    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// `∂_q` with rows indexed by `(q-1)`-simplices and columns by `q`-simplices,
/// both in sorted order. Sign of facet `i` is `(-1)^i`.
pub fn boundary_matrix(c: &SimplicialComplex, q: usize) -> SparseMatrix {
    let cols = c.simplices(q);
    if q == 0 {
        return SparseMatrix::zeros(0, cols.len());
    }
    let rows = c.simplices(q - 1);
    let mut m = SparseMatrix::zeros(rows.len(), cols.len());
    for (j, s) in cols.iter().enumerate() {
        for (i, f) in s.facets().enumerate() {
            let row = c.index_of(&f).expect("complex is downward closed");
            m.set(row, j, if i % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

/// Coboundary `δ^q : C^q(K, L) → C^{q+1}(K, L)` on cochains vanishing on `L`.
pub fn relative_coboundary_matrix(p: &SubcomplexPair, q: usize) -> SparseMatrix {
    let k = p.ambient();
    let free = |d: usize| -> Vec<usize> {
        k.simplices(d)
            .iter()
            .enumerate()
            .filter(|(_, s)| !p.sub().contains(s))
            .map(|(i, _)| i)
            .collect()
    };
    let lower = free(q);
    let upper = free(q + 1);
    let mut lower_pos = vec![usize::MAX; k.simplices(q).len()];
    for (t, &i) in lower.iter().enumerate() {
        lower_pos[i] = t;
    }
    let mut m = SparseMatrix::zeros(upper.len(), lower.len());
    for (row, &j) in upper.iter().enumerate() {
        let s = k.simplices(q + 1)[j];
        for (i, f) in s.facets().enumerate() {
            let idx = k.index_of(&f).expect("complex is downward closed");
            if lower_pos[idx] != usize::MAX {
                m.set(row, lower_pos[idx], if i % 2 == 0 { 1 } else { -1 });
            }
        }
    }
    m
}

fn verified_snf(m: &SparseMatrix) -> Result<SmithDecomposition, SnfError> {
    let d = smith_normal_form(m)?;
    d.verify()?;
    Ok(d)
}

/// Boundary matrices of every degree with their verified Smith forms.
pub fn boundary_decompositions(c: &SimplicialComplex) -> Result<Vec<SmithDecomposition>, SnfError> {
    let top = match c.dim() {
        Some(d) => d,
        None => return Ok(Vec::new()),
    };
    (1..=top).map(|q| verified_snf(&boundary_matrix(c, q))).collect()
}

pub fn homology(c: &SimplicialComplex) -> Result<HomologyProfile, SnfError> {
    let Some(top) = c.dim() else {
        return Ok(HomologyProfile::default());
    };
    let decs = boundary_decompositions(c)?;
    // rank of ∂_q, q = 0..=top+1, with ∂_0 = ∂_{top+1} = 0
    let rank = |q: usize| -> usize {
        if q == 0 || q > top {
            0
        } else {
            decs[q - 1].rank()
        }
    };
    let mut profile = HomologyProfile::default();
    for q in 0..=top {
        profile.betti.push(c.simplices(q).len() - rank(q) - rank(q + 1));
        profile
            .torsion
            .push(decs.get(q).map(|d| d.torsion()).unwrap_or_default());
    }
    Ok(profile)
}

/// `H^q(K, L)` from simplicial cochains on `K` vanishing on `L`.
pub fn relative_cohomology(p: &SubcomplexPair, degree: usize) -> Result<HomologyGroup, SnfError> {
    let n_q = p
        .ambient()
        .simplices(degree)
        .iter()
        .filter(|s| !p.sub().contains(s))
        .count();
    let out = verified_snf(&relative_coboundary_matrix(p, degree))?;
    let (in_rank, torsion) = match degree.checked_sub(1) {
        Some(prev) => {
            let d = verified_snf(&relative_coboundary_matrix(p, prev))?;
            (d.rank(), d.torsion())
        }
        None => (0, Vec::new()),
    };
    Ok(HomologyGroup {
        rank: n_q - out.rank() - in_rank,
        torsion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::complex::{cone, suspension};

    fn complex(lists: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_vertex_lists(lists).unwrap()
    }

    fn tetra_boundary() -> SimplicialComplex {
        complex(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]])
    }

    fn circle() -> SimplicialComplex {
        complex(&[&[0, 1], &[1, 2], &[0, 2]])
    }

    #[test]
    fn sphere_and_circle() {
        let h = homology(&tetra_boundary()).unwrap();
        assert_eq!(h.betti, vec![1, 0, 1]);
        assert!(h.torsion.iter().all(Vec::is_empty));
        assert_eq!(homology(&circle()).unwrap().betti, vec![1, 1]);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let s = suspension(&tetra_boundary()).unwrap().complex;
        for q in 1..3 {
            let dd = boundary_matrix(&s, q).mul(&boundary_matrix(&s, q + 1)).unwrap();
            assert_eq!(dd.nnz(), 0);
        }
    }

    #[test]
    fn suspensions() {
        let s3 = homology(&suspension(&tetra_boundary()).unwrap().complex).unwrap();
        assert_eq!(s3.betti, vec![1, 0, 0, 1]);
        let two_points = complex(&[&[0], &[1]]);
        assert_eq!(homology(&two_points).unwrap().betti, vec![2]);
        let s1 = homology(&suspension(&two_points).unwrap().complex).unwrap();
        assert_eq!(s1.betti, vec![1, 1]);
    }

    #[test]
    fn cone_is_acyclic() {
        let c = cone(&circle()).unwrap();
        assert_eq!(homology(c.pair.ambient()).unwrap().betti, vec![1, 0, 0]);
    }

    #[test]
    fn relative_cohomology_of_cone_on_sphere() {
        let c = cone(&tetra_boundary()).unwrap();
        assert!(relative_cohomology(&c.pair, 2).unwrap().is_trivial());
        // H^3(CS^2, S^2) = H~^2(S^2) = Z
        assert_eq!(relative_cohomology(&c.pair, 3).unwrap().rank, 1);
        assert!(relative_cohomology(&c.pair, 0).unwrap().is_trivial());
    }

    #[test]
    fn relative_cohomology_of_cone_on_circle() {
        let c = cone(&circle()).unwrap();
        assert_eq!(relative_cohomology(&c.pair, 2).unwrap().rank, 1);
        assert_eq!(relative_cohomology(&c.pair, 1).unwrap().rank, 0);
    }

    #[test]
    fn torsion_shows_up() {
        // 6-vertex projective plane, H_1 = Z/2
        let rp2 = complex(&[
            &[0, 1, 2], &[0, 2, 3], &[0, 3, 4], &[0, 4, 5], &[0, 5, 1],
            &[1, 2, 4], &[2, 3, 5], &[3, 4, 1], &[4, 5, 2], &[5, 1, 3],
        ]);
        let h = homology(&rp2).unwrap();
        assert_eq!(h.betti, vec![1, 0, 0]);
        assert_eq!(h.torsion, vec![vec![], vec![2], vec![]]);
        let sigma = homology(&suspension(&rp2).unwrap().complex).unwrap();
        assert_eq!(sigma.torsion[2], vec![2]);
    }
}
