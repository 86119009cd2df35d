//! Branch data of branched covers of the 2-sphere and the invariants of
//! their normalizations.
//!
//! A cover of degree `n` branched over `k` anonymous points is recorded as
//! `k` permutations of the fiber whose left-to-right product is the identity.

mod compose;
mod enumerate;

pub use compose::{compose_winding_covers, compose_winding_covers_in_blocks};
pub use enumerate::{
    enumerate_branch_data, enumerate_shape, search_tower_piece, BranchDataIter, ShapeIter,
    TowerProfile, MAX_ENUMERATION_DEGREE, MAX_ENUMERATION_BRANCH_COUNT,
};

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{self, GroupError, PermGroup};
use crate::perm::{PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("branch permutation {index} has degree {found}, expected {expected}")]
    DegreeMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("branch permutation {index} is the identity")]
    IdentityBranch { index: usize },
    #[error("product of branch permutations is {product}, not the identity")]
    ProductNotIdentity { product: String },
    #[error("monodromy is not transitive: orbit of 0 has {orbit} of {degree} points")]
    NotTransitive { orbit: usize, degree: usize },
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("winding degrees must be at least 2, got inner {inner} and outer {outer}")]
    InvalidWindingDegrees { inner: usize, outer: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Parse(#[from] PermError),
    #[error("Euler characteristic {numerator}/{denominator} is not an integer")]
    NonIntegralEuler { numerator: i64, denominator: i64 },
    #[error("Euler characteristic {0} of a closed orientable surface must be even and at most 2")]
    ImpossibleEuler(i64),
}

impl CoverError {
    /// Errors that can only arise from a bug, never from bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            CoverError::NonIntegralEuler { .. } | CoverError::ImpossibleEuler(_)
        )
    }
}

/// Degree plus one permutation per branch value, in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BranchData {
    degree: usize,
    sigma: Vec<Permutation>,
}

/// JSON form: `{"degree": n, "branch": ["(0 1)", "(0 1)"]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchDataJson {
    pub degree: usize,
    pub branch: Vec<String>,
}

impl BranchData {
    /// Unvalidated constructor; call [`validate`] before relying on invariants.
    pub fn new(degree: usize, sigma: Vec<Permutation>) -> Self {
        BranchData { degree, sigma }
    }

    /// Parses cycle strings of a common degree.
    pub fn from_cycles(degree: usize, branch: &[&str]) -> Result<Self, PermError> {
        let sigma = branch
            .iter()
            .map(|s| Permutation::parse(s, degree))
            .collect::<Result<_, _>>()?;
        Ok(BranchData { degree, sigma })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn sigma(&self) -> &[Permutation] {
        &self.sigma
    }

    pub fn branch_count(&self) -> usize {
        self.sigma.len()
    }

    pub fn to_json(&self) -> BranchDataJson {
        BranchDataJson {
            degree: self.degree,
            branch: self.sigma.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn from_json(json: &BranchDataJson) -> Result<Self, PermError> {
        let branch: Vec<&str> = json.branch.iter().map(String::as_str).collect();
        Self::from_cycles(json.degree, &branch)
    }
}

/// Checks degrees, non-trivial branch permutations, the sphere relation and
/// transitivity, in that order.
pub fn validate(b: &BranchData) -> Result<(), CoverError> {
    let n = b.degree;
    if n == 0 {
        return Err(CoverError::ZeroDegree);
    }
    for (index, s) in b.sigma.iter().enumerate() {
        if s.degree() != n {
            return Err(CoverError::DegreeMismatch {
                index,
                expected: n,
                found: s.degree(),
            });
        }
    }
    if let Some(index) = b.sigma.iter().position(Permutation::is_identity) {
        return Err(CoverError::IdentityBranch { index });
    }
    let product = b
        .sigma
        .iter()
        .fold(Permutation::identity(n), |acc, s| acc.then_unchecked(s));
    if !product.is_identity() {
        return Err(CoverError::ProductNotIdentity {
            product: product.to_string(),
        });
    }
    let orbit = group::orbit(n, &b.sigma, 0).len();
    if orbit != n {
        return Err(CoverError::NotTransitive { orbit, degree: n });
    }
    Ok(())
}

/// The monodromy group; it is the deck group of the normalization.
pub fn monodromy_group(b: &BranchData, bound: usize) -> Result<PermGroup, CoverError> {
    Ok(group::generate_group_of_degree(b.degree, &b.sigma, bound)?)
}

/// Normality of the cover: the point stabilizer is normal in the monodromy group.
pub fn is_normal_cover(b: &BranchData, bound: usize) -> Result<bool, CoverError> {
    let g = monodromy_group(b, bound)?;
    is_normal_in(&g)
}

fn is_normal_in(g: &PermGroup) -> Result<bool, CoverError> {
    let h = group::point_stabilizer(g, 0)?;
    Ok(group::is_normal_subgroup(&h, g)?)
}

/// Order of each branch permutation: the common local index of the
/// normalization over that branch value.
pub fn local_orders(b: &BranchData) -> Vec<usize> {
    b.sigma.iter().map(Permutation::order).collect()
}

/// Riemann–Hurwitz for the normalization with `|G|` sheets and local index
/// `n(y)` over every point of the fiber of `y`:
/// `chi = |G| * (2 - sum_y (n(y) - 1) / n(y))`, evaluated over the common
/// denominator `lcm n(y)`.
pub fn normalization_euler_from_orders(group_order: usize, orders: &[usize]) -> Result<i64, CoverError> {
    let denominator = orders.iter().fold(1usize, |acc, &m| acc.lcm(&m)) as i64;
    let deficit: i64 = orders
        .iter()
        .map(|&m| (m as i64 - 1) * (denominator / m as i64))
        .sum();
    let numerator = group_order as i64 * (2 * denominator - deficit);
    if numerator % denominator != 0 {
        return Err(CoverError::NonIntegralEuler {
            numerator,
            denominator,
        });
    }
    let chi = numerator / denominator;
    check_surface_euler(chi)?;
    Ok(chi)
}

fn check_surface_euler(chi: i64) -> Result<(), CoverError> {
    if chi > 2 || chi % 2 != 0 {
        return Err(CoverError::ImpossibleEuler(chi));
    }
    Ok(())
}

pub fn euler_characteristic_normalization(b: &BranchData, bound: usize) -> Result<i64, CoverError> {
    let g = monodromy_group(b, bound)?;
    normalization_euler_from_orders(g.order(), &local_orders(b))
}

pub fn genus_normalization(b: &BranchData, bound: usize) -> Result<i64, CoverError> {
    Ok((2 - euler_characteristic_normalization(b, bound)?) / 2)
}

/// Riemann–Hurwitz for the cover itself: local indices are cycle lengths.
pub fn chi_domain(b: &BranchData) -> Result<i64, CoverError> {
    let ramification: usize = b
        .sigma
        .iter()
        .flat_map(|s| s.cycle_type())
        .map(|c| c - 1)
        .sum();
    let chi = 2 * b.degree as i64 - ramification as i64;
    check_surface_euler(chi)?;
    Ok(chi)
}

/// Summary of a validated cover. Serializes with the report field names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverInvariants {
    pub degree: usize,
    pub branch_count: usize,
    pub monodromy_order: usize,
    pub local_orders: Vec<usize>,
    pub chi_normalization: i64,
    pub genus_normalization: i64,
    pub is_normal: bool,
    pub chi_domain: i64,
    /// All cycle lengths over all branch values, sorted ascending.
    #[serde(rename = "local_degrees")]
    pub local_degree_multiset: Vec<usize>,
}

impl CoverInvariants {
    pub fn genus_domain(&self) -> i64 {
        (2 - self.chi_domain) / 2
    }
}

/// Validates `b` and computes every invariant from a single group materialization.
pub fn invariants(b: &BranchData, bound: usize) -> Result<CoverInvariants, CoverError> {
    validate(b)?;
    let g = monodromy_group(b, bound)?;
    let orders = local_orders(b);
    let chi = normalization_euler_from_orders(g.order(), &orders)?;
    let mut local_degrees: Vec<usize> = b.sigma.iter().flat_map(|s| s.cycle_type()).collect();
    local_degrees.sort_unstable();
    Ok(CoverInvariants {
        degree: b.degree,
        branch_count: b.branch_count(),
        monodromy_order: g.order(),
        local_orders: orders,
        chi_normalization: chi,
        genus_normalization: (2 - chi) / 2,
        is_normal: is_normal_in(&g)?,
        chi_domain: chi_domain(b)?,
        local_degree_multiset: local_degrees,
    })
}
