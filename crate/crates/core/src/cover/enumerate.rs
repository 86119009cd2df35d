//! Exhaustive enumeration of branch data at small degree.
//!
//! For a shape `(n, k)` the first `k - 1` permutations range over the
//! non-identity elements of `S_n` in lexicographic order of image sequences,
//! the first permutation most significant; the last one is forced to be the
//! inverse of their product. Tuples failing [`validate`] are skipped.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::{invariants, validate, BranchData, CoverError};
use crate::perm::Permutation;

pub const MAX_ENUMERATION_DEGREE: usize = 6;
pub const MAX_ENUMERATION_BRANCH_COUNT: usize = 6;

fn non_identity_perms(n: usize) -> Vec<Permutation> {
    (0..n)
        .permutations(n)
        .map(|images| Permutation::from_images(images).expect("itertools yields bijections"))
        .filter(|p| !p.is_identity())
        .collect()
}

/// Valid branch data of one shape `(degree, branch_count)`.
#[derive(Debug, Clone)]
pub struct ShapeIter {
    degree: usize,
    branch_count: usize,
    perms: Vec<Permutation>,
    next_index: u64,
    end: u64,
}

impl ShapeIter {
    /// Number of free tuples, valid or not.
    pub fn tuple_count(&self) -> u64 {
        (self.perms.len() as u64).pow(self.branch_count.saturating_sub(1) as u32)
    }

    /// Restricts to the free-tuple index range `start..end`, for splitting
    /// the shape across workers.
    pub fn with_range(mut self, start: u64, end: u64) -> Self {
        self.end = end.min(self.tuple_count());
        self.next_index = start.min(self.end);
        self
    }

    /// The datum for free-tuple `index`, if it is valid.
    pub fn datum_at(&self, index: u64) -> Option<BranchData> {
        let n = self.degree;
        let free = self.branch_count.checked_sub(1)?;
        let m = self.perms.len() as u64;
        let mut digits = vec![0usize; free];
        let mut rest = index;
        for slot in digits.iter_mut().rev() {
            *slot = (rest % m) as usize;
            rest /= m;
        }
        let mut sigma: Vec<Permutation> = digits.iter().map(|&d| self.perms[d].clone()).collect();
        let product = sigma
            .iter()
            .fold(Permutation::identity(n), |acc, s| acc.then_unchecked(s));
        sigma.push(product.inverse());
        let b = BranchData::new(n, sigma);
        validate(&b).ok().map(|_| b)
    }
}

impl Iterator for ShapeIter {
    type Item = BranchData;

    fn next(&mut self) -> Option<BranchData> {
        while self.next_index < self.end {
            let i = self.next_index;
            self.next_index += 1;
            if let Some(b) = self.datum_at(i) {
                return Some(b);
            }
        }
        None
    }
}

/// All valid data of degree `degree` with exactly `branch_count` branch values.
pub fn enumerate_shape(degree: usize, branch_count: usize) -> ShapeIter {
    let perms = if degree >= 1 { non_identity_perms(degree) } else { Vec::new() };
    let mut it = ShapeIter {
        degree,
        branch_count,
        perms,
        next_index: 0,
        end: 0,
    };
    it.end = if branch_count == 0 { 0 } else { it.tuple_count() };
    it
}

/// Stream over degrees `2..=n_max` (outer) and branch counts `1..=k_max` (inner).
#[derive(Debug, Clone)]
pub struct BranchDataIter {
    shapes: std::vec::IntoIter<(usize, usize)>,
    current: Option<ShapeIter>,
}

impl Iterator for BranchDataIter {
    type Item = BranchData;

    fn next(&mut self) -> Option<BranchData> {
        loop {
            if let Some(b) = self.current.as_mut().and_then(Iterator::next) {
                return Some(b);
            }
            let (n, k) = self.shapes.next()?;
            self.current = Some(enumerate_shape(n, k));
        }
    }
}

/// Every valid datum with `2 <= degree <= n_max` and at most `k_max`
/// branch values. Bounds are clamped to the desk-scale caps.
pub fn enumerate_branch_data(n_max: usize, k_max: usize) -> BranchDataIter {
    let n_max = n_max.min(MAX_ENUMERATION_DEGREE);
    let k_max = k_max.min(MAX_ENUMERATION_BRANCH_COUNT);
    let shapes: Vec<(usize, usize)> = (2..=n_max)
        .flat_map(|n| (1..=k_max).map(move |k| (n, k)))
        .collect();
    BranchDataIter {
        shapes: shapes.into_iter(),
        current: None,
    }
}

/// Conditions on a boundary map of the torus tower; the domain is always a torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TowerProfile {
    pub want_degree3: bool,
    pub want_normal: bool,
}

/// First datum in enumeration order (degree, then branch count, then
/// lexicographic) with a torus domain and the requested profile.
///
/// Tuples whose total ramification cannot reach `2n` are pruned, which skips
/// only data with a non-torus domain and so preserves the order.
pub fn search_tower_piece(
    n_max: usize,
    profile: TowerProfile,
    bound: usize,
) -> Result<Option<BranchData>, CoverError> {
    for n in 2..=n_max.min(MAX_ENUMERATION_DEGREE) {
        let perms = non_identity_perms(n);
        let ramification: Vec<usize> = perms.iter().map(|p| n - p.cycles().len()).collect();
        for k in 1..=MAX_ENUMERATION_BRANCH_COUNT {
            let mut search = TowerSearch {
                n,
                k,
                perms: &perms,
                ramification: &ramification,
                profile,
                bound,
                chosen: Vec::with_capacity(k),
            };
            if let Some(b) = search.descend(&Permutation::identity(n), 0)? {
                return Ok(Some(b));
            }
        }
    }
    Ok(None)
}

struct TowerSearch<'a> {
    n: usize,
    k: usize,
    perms: &'a [Permutation],
    ramification: &'a [usize],
    profile: TowerProfile,
    bound: usize,
    chosen: Vec<usize>,
}

impl TowerSearch<'_> {
    fn descend(&mut self, product: &Permutation, used: usize) -> Result<Option<BranchData>, CoverError> {
        let target = 2 * self.n;
        let depth = self.chosen.len();
        if depth + 1 == self.k {
            let last = product.inverse();
            if last.is_identity() || used + self.n - last.cycles().len() != target {
                return Ok(None);
            }
            let mut sigma: Vec<Permutation> = self.chosen.iter().map(|&i| self.perms[i].clone()).collect();
            sigma.push(last);
            let b = BranchData::new(self.n, sigma);
            if validate(&b).is_err() {
                return Ok(None);
            }
            let inv = invariants(&b, self.bound)?;
            let has3 = inv.local_degree_multiset.contains(&3);
            let hit = inv.chi_domain == 0
                && inv.is_normal == self.profile.want_normal
                && has3 == self.profile.want_degree3;
            return Ok(hit.then_some(b));
        }
        // Slots after this one each contribute between 1 and n - 1.
        let after = self.k - depth - 1;
        for (i, p) in self.perms.iter().enumerate() {
            let r = used + self.ramification[i];
            if r + after > target || r + after * (self.n - 1) < target {
                continue;
            }
            self.chosen.push(i);
            let found = self.descend(&product.then_unchecked(p), r)?;
            self.chosen.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_GROUP_BOUND;

    fn data(n: usize, branch: &[&str]) -> BranchData {
        BranchData::from_cycles(n, branch).unwrap()
    }

    #[test]
    fn degree_two_up_to_two_values() {
        let all: Vec<_> = enumerate_branch_data(2, 2).collect();
        assert_eq!(all, vec![data(2, &["(0 1)", "(0 1)"])]);
    }

    #[test]
    fn four_transpositions_are_enumerated() {
        let four = data(2, &["(0 1)", "(0 1)", "(0 1)", "(0 1)"]);
        assert!(enumerate_branch_data(2, 4).any(|b| b == four));
    }

    #[test]
    fn emitted_data_validate() {
        for b in enumerate_branch_data(3, 4) {
            assert_eq!(validate(&b), Ok(()));
        }
    }

    #[test]
    fn shape_order_is_lexicographic() {
        let images = |b: &BranchData| -> Vec<Vec<usize>> {
            b.sigma().iter().map(|s| s.images().to_vec()).collect()
        };
        let shape: Vec<_> = enumerate_shape(3, 4).map(|b| images(&b)).collect();
        assert!(shape.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn ranges_partition_a_shape() {
        let whole: Vec<_> = enumerate_shape(3, 4).collect();
        let total = enumerate_shape(3, 4).tuple_count();
        assert_eq!(total, 125);
        let mut parts = Vec::new();
        for start in (0..total).step_by(40) {
            parts.extend(enumerate_shape(3, 4).with_range(start, start + 40));
        }
        assert_eq!(parts, whole);
    }

    // Brute-force count of valid 3-tuples in S_3 with product identity.
    #[test]
    fn degree_three_triple_count_matches_brute_force() {
        let perms = non_identity_perms(3);
        let mut expected = 0;
        for a in &perms {
            for b in &perms {
                for c in &perms {
                    let prod = a.then_unchecked(b).then_unchecked(c);
                    if prod.is_identity() && crate::group::is_transitive(&[a.clone(), b.clone(), c.clone()]) {
                        expected += 1;
                    }
                }
            }
        }
        assert_eq!(enumerate_shape(3, 3).count(), expected);
    }

    fn naive_search(n_max: usize, profile: TowerProfile) -> Option<BranchData> {
        enumerate_branch_data(n_max, MAX_ENUMERATION_BRANCH_COUNT).find(|b| {
            let inv = invariants(b, DEFAULT_GROUP_BOUND).unwrap();
            inv.chi_domain == 0
                && inv.is_normal == profile.want_normal
                && inv.local_degree_multiset.contains(&3) == profile.want_degree3
        })
    }

    #[test]
    fn tower_search_profiles() {
        let normal_plain = TowerProfile { want_degree3: false, want_normal: true };
        assert_eq!(
            search_tower_piece(6, normal_plain, DEFAULT_GROUP_BOUND).unwrap(),
            Some(data(2, &["(0 1)", "(0 1)", "(0 1)", "(0 1)"]))
        );

        let skew3 = TowerProfile { want_degree3: true, want_normal: false };
        let found = search_tower_piece(6, skew3, DEFAULT_GROUP_BOUND).unwrap().unwrap();
        assert_eq!(found.degree(), 3);
        let inv = invariants(&found, DEFAULT_GROUP_BOUND).unwrap();
        assert_eq!(inv.chi_domain, 0);
        assert!(!inv.is_normal);
        assert!(inv.local_degree_multiset.contains(&3));
        // first in lexicographic order, ahead of [(0 1 2), (0 2 1), (0 1), (0 1)]
        assert_eq!(found, data(3, &["(1 2)", "(1 2)", "(0 1 2)", "(0 2 1)"]));

        let normal3 = TowerProfile { want_degree3: true, want_normal: true };
        assert_eq!(search_tower_piece(2, normal3, DEFAULT_GROUP_BOUND).unwrap(), None);
    }

    #[test]
    fn pruned_search_agrees_with_stream_filter() {
        for want_degree3 in [false, true] {
            for want_normal in [false, true] {
                let profile = TowerProfile { want_degree3, want_normal };
                assert_eq!(
                    search_tower_piece(3, profile, DEFAULT_GROUP_BOUND).unwrap(),
                    naive_search(3, profile),
                    "{profile:?}"
                );
            }
        }
    }
}
