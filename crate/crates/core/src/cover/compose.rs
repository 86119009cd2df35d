use super::{BranchData, CoverError};
use crate::perm::Permutation;

/// Branch data of `outer ∘ inner` for two winding maps in generic position.
///
/// Sheets are pairs `(outer sheet j, inner sheet i)` stored at index
/// `j * inner + i`. Branch values are ordered: first outer branch value, the
/// images of the two inner branch values, second outer branch value. The
/// last permutation is the inverse of the product of the first three.
///
/// Lifts of the outer basepoint path are label-preserving, so a loop around
/// an outer branch value shifts blocks `j -> j + 1` without touching inner
/// labels. Both inner branch values sit over outer sheet 0.
pub fn compose_winding_covers(inner: usize, outer: usize) -> Result<BranchData, CoverError> {
    compose_winding_covers_in_blocks(inner, outer, 0)
}

/// As [`compose_winding_covers`], but with the second inner branch value
/// lying over outer sheet `second_block` instead of sheet 0.
pub fn compose_winding_covers_in_blocks(
    inner: usize,
    outer: usize,
    second_block: usize,
) -> Result<BranchData, CoverError> {
    if inner < 2 || outer < 2 || second_block >= outer {
        return Err(CoverError::InvalidWindingDegrees { inner, outer });
    }
    let n = inner * outer;
    let sheet = |j: usize, i: usize| j * inner + i;

    let mut shift = vec![0; n];
    for j in 0..outer {
        for i in 0..inner {
            shift[sheet(j, i)] = sheet((j + 1) % outer, i);
        }
    }
    let block_cycle = |block: usize, step: usize| {
        let mut images: Vec<usize> = (0..n).collect();
        for i in 0..inner {
            images[sheet(block, i)] = sheet(block, (i + step) % inner);
        }
        images
    };

    let s1 = Permutation::from_images(shift)?;
    let s2 = Permutation::from_images(block_cycle(0, 1))?;
    let s3 = Permutation::from_images(block_cycle(second_block, inner - 1))?;
    let s4 = s1.then(&s2)?.then(&s3)?.inverse();
    Ok(BranchData::new(n, vec![s1, s2, s3, s4]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{invariants, validate};
    use crate::group::DEFAULT_GROUP_BOUND;

    #[test]
    fn two_by_two() {
        let b = compose_winding_covers(2, 2).unwrap();
        assert_eq!(b.degree(), 4);
        assert_eq!(b.branch_count(), 4);
        assert_eq!(validate(&b), Ok(()));
        let inv = invariants(&b, DEFAULT_GROUP_BOUND).unwrap();
        assert_eq!(inv.monodromy_order, 8);
        assert_eq!(inv.chi_normalization, 0);
        assert_eq!(inv.genus_normalization, 1);
        assert!(!inv.is_normal);
        // The composite of two spheres is a sphere.
        assert_eq!(inv.chi_domain, 2);
    }

    #[test]
    fn rejects_small_degrees() {
        assert!(compose_winding_covers(1, 2).is_err());
        assert!(compose_winding_covers(2, 1).is_err());
        assert!(compose_winding_covers_in_blocks(2, 2, 2).is_err());
    }

    #[test]
    fn block_placement_does_not_change_invariants() {
        for inner in 2..=3 {
            for outer in 2..=3 {
                let base = invariants(&compose_winding_covers(inner, outer).unwrap(), DEFAULT_GROUP_BOUND)
                    .unwrap();
                for block in 1..outer {
                    let b = compose_winding_covers_in_blocks(inner, outer, block).unwrap();
                    let mut inv = invariants(&b, DEFAULT_GROUP_BOUND).unwrap();
                    inv.local_degree_multiset.sort_unstable();
                    assert_eq!(inv, base, "inner {inner} outer {outer} block {block}");
                }
            }
        }
    }
}
