//! Riemann–Hurwitz for the normalization checked against the Euler
//! characteristic of the glued surface, over exhaustive enumeration.

use monodromy_core::cover::{enumerate_branch_data, invariants, monodromy_group, BranchData};
use monodromy_core::group::DEFAULT_GROUP_BOUND;
use monodromy_core::simplicial::{homology, normalization_surface, NORMALIZATION_GROUP_LIMIT};

fn data(n: usize, branch: &[&str]) -> BranchData {
    BranchData::from_cycles(n, branch).unwrap()
}

/// Formula and glued surface agree on every datum in range whose group is
/// small enough to glue; returns how many were compared.
fn compare_range(n_max: usize, k_max: usize) -> usize {
    let mut compared = 0;
    for b in enumerate_branch_data(n_max, k_max) {
        let order = monodromy_group(&b, DEFAULT_GROUP_BOUND).unwrap().order();
        if order > NORMALIZATION_GROUP_LIMIT {
            continue;
        }
        let inv = invariants(&b, DEFAULT_GROUP_BOUND).unwrap();
        let x = normalization_surface(&b, DEFAULT_GROUP_BOUND).unwrap();
        let f = x.f_vector();
        let vef = f[0] as i64 - f[1] as i64 + f[2] as i64;
        assert_eq!(vef, inv.chi_normalization, "{:?}", b.sigma());
        compared += 1;
    }
    compared
}

#[test]
fn worked_examples_by_homology() {
    for (b, chi) in [
        (data(2, &["(0 1)", "(0 1)"]), 2),
        (data(2, &["(0 1)", "(0 1)", "(0 1)", "(0 1)"]), 0),
        (data(3, &["(0 1)", "(1 2)", "(0 1 2)"]), 2),
    ] {
        let x = normalization_surface(&b, DEFAULT_GROUP_BOUND).unwrap();
        let h = homology(&x).unwrap();
        assert_eq!(h.euler_characteristic(), chi);
        assert_eq!(h.betti[1] as i64, 2 - chi);
    }
}

#[test]
fn formula_matches_gluing_up_to_degree_three() {
    // every shape of degree 2 and 3 with up to five branch values
    assert_eq!(compare_range(3, 5), count_small_groups(3, 5));
}

#[test]
fn formula_matches_gluing_at_degree_four_with_three_values() {
    assert!(compare_range(4, 3) > compare_range(3, 3));
}

fn count_small_groups(n_max: usize, k_max: usize) -> usize {
    enumerate_branch_data(n_max, k_max)
        .filter(|b| monodromy_group(b, DEFAULT_GROUP_BOUND).unwrap().order() <= NORMALIZATION_GROUP_LIMIT)
        .count()
}
