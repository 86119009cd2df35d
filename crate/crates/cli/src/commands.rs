use std::collections::BTreeMap;

use serde_json::{json, Value};

use monodromy_core::cover::{
    compose_winding_covers, enumerate_branch_data, invariants, search_tower_piece, BranchData,
    BranchDataJson, CoverInvariants, TowerProfile, MAX_ENUMERATION_BRANCH_COUNT, MAX_ENUMERATION_DEGREE,
};
use monodromy_core::simplicial::{
    homology, normalization_surface, surface, suspension, suspension_manifold_verdict,
    wilder_obstruction, ComplexJson, HomologyProfile, ManifoldVerdict, SimplicialComplex,
    MAX_SURFACE_GENUS, NORMALIZATION_GROUP_LIMIT,
};

use crate::{CliError, Report, Verdict};

/// Largest sweep degree run without an explicit override.
pub const SWEEP_DEGREE_BUDGET: usize = 5;

/// How many violating data a refuted sweep claim lists.
const WITNESS_LIMIT: usize = 5;

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("plain data serializes")
}

fn parse_branch_data(input: &str) -> Result<(Value, BranchData), CliError> {
    let raw: Value = serde_json::from_str(input)?;
    let json: BranchDataJson = serde_json::from_value(raw.clone())?;
    let b = BranchData::from_json(&json).map_err(|e| CliError::Parse(e.to_string()))?;
    Ok((raw, b))
}

fn parse_complex(input: &str) -> Result<(Value, SimplicialComplex), CliError> {
    let raw: Value = serde_json::from_str(input)?;
    let json: ComplexJson = serde_json::from_value(raw.clone())?;
    Ok((raw, SimplicialComplex::from_json(&json)?))
}

pub fn cmd_invariants(input: &str, bound: usize) -> Result<Report, CliError> {
    let (raw, b) = parse_branch_data(input)?;
    let inv = invariants(&b, bound)?;
    let verdicts = vec![Verdict::new(
        "chi_normalization even and at most 2",
        inv.chi_normalization % 2 == 0 && inv.chi_normalization <= 2,
        json!({ "chi_normalization": inv.chi_normalization }),
    )];
    Ok(Report {
        command: "invariants".into(),
        input: raw,
        results: to_value(&inv),
        verdicts,
    })
}

fn profile_json(h: &HomologyProfile) -> Value {
    to_value(h)
}

pub fn cmd_theorem1(inner: usize, outer: usize, bound: usize) -> Result<Report, CliError> {
    let b = compose_winding_covers(inner, outer)?;
    let inv = invariants(&b, bound)?;

    let mut verdicts = vec![
        Verdict::new(
            "branch_count = 4",
            inv.branch_count == 4,
            json!({ "branch_count": inv.branch_count }),
        ),
        Verdict::new(
            "genus >= 1",
            inv.genus_normalization >= 1,
            json!({
                "genus_normalization": inv.genus_normalization,
                "chi_normalization": inv.chi_normalization,
            }),
        ),
    ];

    // glue the normalization when its group is small enough, otherwise use
    // the standard surface of the same genus
    let (x, source) = if inv.monodromy_order <= NORMALIZATION_GROUP_LIMIT {
        (normalization_surface(&b, bound)?, "glued_sheets")
    } else {
        let genus = inv.genus_normalization as usize;
        if genus > MAX_SURFACE_GENUS {
            return Err(CliError::Invalid(format!(
                "group of order {} and genus {genus} exceed the surface limits",
                inv.monodromy_order
            )));
        }
        (surface(genus)?, "genus_model")
    };
    let chi_built = x.euler_characteristic();
    if source == "glued_sheets" {
        verdicts.push(Verdict::new(
            "glued surface Euler characteristic equals formula",
            chi_built == inv.chi_normalization,
            json!({ "formula": inv.chi_normalization, "glued": chi_built }),
        ));
    }
    let h = homology(&x)?;
    let manifold = suspension_manifold_verdict(&x)?;
    let rho2 = wilder_obstruction(&x)?;
    verdicts.push(Verdict::new(
        "suspension not_manifold",
        manifold.verdict == ManifoldVerdict::NotManifold,
        json!({ "verdict": manifold.verdict, "h1_rank": manifold.h1_rank }),
    ));
    verdicts.push(Verdict::new("rho2 > 0", rho2 > 0, json!({ "rho2": rho2 })));

    Ok(Report {
        command: "theorem1".into(),
        input: json!({ "inner_degree": inner, "outer_degree": outer }),
        results: json!({
            "branch_data": to_value(&b.to_json()),
            "invariants": to_value(&inv),
            "surface": {
                "source": source,
                "f_vector": x.f_vector(),
                "euler_characteristic": chi_built,
                "homology": profile_json(&h),
            },
            "suspension_verdict": manifold.verdict,
            "rho2": rho2,
        }),
        verdicts,
    })
}

#[derive(Default)]
struct ClaimTally {
    checked: usize,
    violations: usize,
    examples: Vec<Value>,
}

impl ClaimTally {
    fn record(&mut self, holds: bool, b: &BranchData) {
        self.checked += 1;
        if !holds {
            self.violations += 1;
            if self.examples.len() < WITNESS_LIMIT {
                self.examples.push(to_value(&b.to_json()));
            }
        }
    }

    fn verdict(self, claim: &str) -> Verdict {
        let holds = self.violations == 0;
        Verdict::new(
            claim,
            holds,
            json!({
                "checked": self.checked,
                "violations": self.violations,
                "examples": self.examples,
            }),
        )
    }
}

/// Exhaustive check of the normality and Euler characteristic claims.
pub fn cmd_sweep(n_max: usize, k_max: usize, override_budget: bool, bound: usize) -> Result<Report, CliError> {
    if n_max > MAX_ENUMERATION_DEGREE || k_max > MAX_ENUMERATION_BRANCH_COUNT {
        return Err(CliError::Invalid(format!(
            "sweep bounds are capped at degree {MAX_ENUMERATION_DEGREE} and {MAX_ENUMERATION_BRANCH_COUNT} branch values"
        )));
    }
    if n_max > SWEEP_DEGREE_BUDGET && !override_budget {
        return Err(CliError::Invalid(format!(
            "n_max {n_max} exceeds the default budget of {SWEEP_DEGREE_BUDGET}; pass --override-budget"
        )));
    }
    let mut buckets: BTreeMap<(usize, usize, i64), usize> = BTreeMap::new();
    let mut normal = ClaimTally::default();
    let mut nonpositive = ClaimTally::default();
    let mut surface_chi = ClaimTally::default();
    let mut total = 0usize;
    for b in enumerate_branch_data(n_max, k_max) {
        total += 1;
        let inv: CoverInvariants = match invariants(&b, bound) {
            Ok(inv) => inv,
            Err(e) if e.is_internal() => {
                surface_chi.record(false, &b);
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        surface_chi.record(inv.chi_normalization % 2 == 0 && inv.chi_normalization <= 2, &b);
        if inv.branch_count <= 2 {
            normal.record(inv.is_normal, &b);
        }
        if inv.branch_count >= 4 {
            nonpositive.record(inv.chi_normalization <= 0, &b);
        }
        *buckets
            .entry((inv.degree, inv.branch_count, inv.genus_normalization))
            .or_default() += 1;
    }
    let bucket_list: Vec<Value> = buckets
        .iter()
        .map(|(&(degree, branch_count, genus), &count)| {
            json!({ "degree": degree, "branch_count": branch_count, "genus": genus, "count": count })
        })
        .collect();
    Ok(Report {
        command: "sweep".into(),
        input: json!({ "n_max": n_max, "k_max": k_max }),
        results: json!({ "data_checked": total, "buckets": bucket_list }),
        verdicts: vec![
            normal.verdict("branch_count <= 2 implies normal"),
            nonpositive.verdict("branch_count >= 4 implies chi_normalization <= 0"),
            surface_chi.verdict("chi_normalization even and at most 2"),
        ],
    })
}

pub fn cmd_tower_search(n_max: usize, bound: usize) -> Result<Report, CliError> {
    if n_max > MAX_ENUMERATION_DEGREE {
        return Err(CliError::Invalid(format!(
            "tower search is capped at degree {MAX_ENUMERATION_DEGREE}"
        )));
    }
    let profiles = [
        (
            "normal, no local degree 3, torus domain",
            TowerProfile { want_degree3: false, want_normal: true },
        ),
        (
            "non-normal, local degree 3, torus domain",
            TowerProfile { want_degree3: true, want_normal: false },
        ),
    ];
    let mut results = Vec::new();
    let mut verdicts = Vec::new();
    for (claim, profile) in profiles {
        let found = search_tower_piece(n_max, profile, bound)?;
        match found {
            Some(b) => {
                let inv = invariants(&b, bound)?;
                let witness = json!({
                    "branch_data": to_value(&b.to_json()),
                    "monodromy_order": inv.monodromy_order,
                    "chi_domain": inv.chi_domain,
                    "is_normal": inv.is_normal,
                    "local_degrees": inv.local_degree_multiset,
                });
                results.push(json!({ "profile": to_value(&profile), "found": witness.clone() }));
                verdicts.push(Verdict::new(claim, true, witness));
            }
            None => {
                results.push(json!({ "profile": to_value(&profile), "found": Value::Null }));
                verdicts.push(Verdict::inconclusive(claim, json!({ "searched_up_to_degree": n_max })));
            }
        }
    }
    Ok(Report {
        command: "tower-search".into(),
        input: json!({ "n_max": n_max }),
        results: Value::Array(results),
        verdicts,
    })
}

pub fn cmd_homology(input: &str) -> Result<Report, CliError> {
    let (raw, c) = parse_complex(input)?;
    let h = homology(&c)?;
    let verdicts = vec![Verdict::new(
        "face count Euler characteristic equals alternating Betti sum",
        h.euler_characteristic() == c.euler_characteristic(),
        json!({ "faces": c.euler_characteristic(), "betti": h.euler_characteristic() }),
    )];
    Ok(Report {
        command: "homology".into(),
        input: raw,
        results: json!({
            "f_vector": c.f_vector(),
            "euler_characteristic": c.euler_characteristic(),
            "homology": profile_json(&h),
        }),
        verdicts,
    })
}

pub fn cmd_suspend(input: &str) -> Result<Report, CliError> {
    let (raw, c) = parse_complex(input)?;
    let s = suspension(&c)?;
    let hc = homology(&c)?;
    let hs = homology(&s.complex)?;
    let top = c.dim().unwrap_or(0);
    let shifted = (0..=top).all(|i| hs.reduced_group(i + 1) == hc.reduced_group(i))
        && hs.reduced_group(0).is_trivial();
    let links_match = s.complex.vertex_link(s.north)? == c && s.complex.vertex_link(s.south)? == c;
    let verdicts = vec![
        Verdict::new(
            "reduced homology shifts up by one degree",
            shifted,
            json!({ "input": profile_json(&hc), "suspension": profile_json(&hs) }),
        ),
        Verdict::new(
            "apex links equal the input complex",
            links_match,
            json!({ "north": s.north, "south": s.south }),
        ),
    ];
    Ok(Report {
        command: "suspend".into(),
        input: raw,
        results: json!({
            "suspension": to_value(&s.complex.to_json()),
            "cone_points": [s.north, s.south],
            "homology": profile_json(&hs),
        }),
        verdicts,
    })
}
