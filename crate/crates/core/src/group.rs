//! Finite permutation groups, fully materialized.

use std::collections::{HashMap, HashSet, VecDeque};

use thiserror::Error;

use crate::perm::{PermError, Permutation};

/// Default cap on the number of materialized group elements.
pub const DEFAULT_GROUP_BOUND: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("group closure exceeds the bound of {bound} elements")]
    BoundExceeded { bound: usize },
    #[error("subgroup is not contained in the ambient group")]
    NotASubgroup,
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
}

/// A permutation group together with its full element list.
///
/// Elements are kept in breadth-first discovery order starting from the
/// identity, so the element list is deterministic for a given generator list.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl PermGroup {
    fn from_elements(degree: usize, generators: Vec<Permutation>, elements: Vec<Permutation>) -> Self {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        PermGroup {
            degree,
            generators,
            elements,
            index,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    /// Position of `p` in [`Self::elements`].
    pub fn position(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        orbit(self.degree, &self.generators, point)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }

    /// Closure under composition and inverse holds for the materialized set.
    pub fn is_closed(&self) -> bool {
        self.contains(&Permutation::identity(self.degree))
            && self.elements.iter().all(|a| {
                self.contains(&a.inverse())
                    && self
                        .elements
                        .iter()
                        .all(|b| self.contains(&a.then_unchecked(b)))
            })
    }
}

fn check_degrees(gens: &[Permutation]) -> Result<Option<usize>, GroupError> {
    let Some(first) = gens.first() else {
        return Ok(None);
    };
    for g in gens {
        if g.degree() != first.degree() {
            return Err(PermError::DegreeMismatch(first.degree(), g.degree()).into());
        }
    }
    Ok(Some(first.degree()))
}

/// Materializes the group generated by `gens` over points `0..degree`.
///
/// Fails instead of truncating when the closure would exceed `bound`.
pub fn generate_group_of_degree(
    degree: usize,
    gens: &[Permutation],
    bound: usize,
) -> Result<PermGroup, GroupError> {
    if let Some(d) = check_degrees(gens)? {
        if d != degree {
            return Err(PermError::DegreeMismatch(degree, d).into());
        }
    }
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut elements = vec![id.clone()];
    seen.insert(id);
    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    // In a finite group right multiplication by generators reaches every element,
    // inverses included.
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let next = elements[i].then_unchecked(g);
            if seen.insert(next.clone()) {
                if elements.len() >= bound {
                    return Err(GroupError::BoundExceeded { bound });
                }
                elements.push(next);
                queue.push_back(elements.len() - 1);
            }
        }
    }
    Ok(PermGroup::from_elements(degree, gens.to_vec(), elements))
}

/// Materializes the group generated by a non-empty generator list.
pub fn generate_group(gens: &[Permutation], bound: usize) -> Result<PermGroup, GroupError> {
    let degree = check_degrees(gens)?.ok_or(GroupError::NotASubgroup)?;
    generate_group_of_degree(degree, gens, bound)
}

pub(crate) fn orbit(degree: usize, gens: &[Permutation], point: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    let mut out = vec![point];
    seen[point] = true;
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        for g in gens {
            let y = g.image(x);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

/// True iff the orbit of point 0 under `gens` is all of `0..n`.
pub fn is_transitive(gens: &[Permutation]) -> bool {
    match check_degrees(gens) {
        Ok(Some(n)) => orbit(n, gens, 0).len() == n,
        _ => false,
    }
}

/// Subgroup of elements fixing `point`.
pub fn point_stabilizer(g: &PermGroup, point: usize) -> Result<PermGroup, GroupError> {
    if point >= g.degree {
        return Err(GroupError::PointOutOfRange {
            point,
            degree: g.degree,
        });
    }
    let elements: Vec<Permutation> = g
        .elements
        .iter()
        .filter(|e| e.image(point) == point)
        .cloned()
        .collect();
    // The stabilizer generates itself; keep the non-identity elements as generators.
    let generators = elements.iter().filter(|e| !e.is_identity()).cloned().collect();
    Ok(PermGroup::from_elements(g.degree, generators, elements))
}

/// True iff `x^-1 h x = h` as sets for every `x` in `g`.
///
/// For finite groups `x^-1 h x ⊆ h` already forces equality.
pub fn is_normal_subgroup(h: &PermGroup, g: &PermGroup) -> Result<bool, GroupError> {
    if h.degree != g.degree || !h.elements.iter().all(|e| g.contains(e)) {
        return Err(GroupError::NotASubgroup);
    }
    // Conjugating by generators suffices; subgroups built by filtering
    // carry every element as a generator.
    let conjugators = if g.generators.is_empty() { &g.elements } else { &g.generators };
    Ok(conjugators.iter().all(|x| {
        let x_inv = x.inverse();
        h.elements
            .iter()
            .all(|e| h.contains(&x_inv.then_unchecked(e).then_unchecked(x)))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    fn set(g: &PermGroup) -> HashSet<Permutation> {
        g.elements().iter().cloned().collect()
    }

    #[test]
    fn closure_orders() {
        let g = generate_group(&[p("(0 1)", 2)], DEFAULT_GROUP_BOUND).unwrap();
        assert_eq!(g.order(), 2);
        let s3 = generate_group(&[p("(0 1)", 3), p("(1 2)", 3)], DEFAULT_GROUP_BOUND).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(s3.is_closed());
        let v4 = generate_group(&[p("(0 1)(2 3)", 4), p("(0 2)(1 3)", 4)], DEFAULT_GROUP_BOUND)
            .unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.is_closed());
    }

    #[test]
    fn bound_is_an_error_not_a_truncation() {
        let gens = [p("(0 1)", 4), p("(0 1 2 3)", 4)];
        assert_eq!(
            generate_group(&gens, 23).unwrap_err(),
            GroupError::BoundExceeded { bound: 23 }
        );
        assert_eq!(generate_group(&gens, 24).unwrap().order(), 24);
    }

    #[test]
    fn generator_degree_mismatch() {
        assert!(matches!(
            generate_group(&[p("(0 1)", 2), p("(0 1)", 3)], 100),
            Err(GroupError::Perm(PermError::DegreeMismatch(2, 3)))
        ));
    }

    #[test]
    fn transitivity() {
        assert!(is_transitive(&[p("(0 1)", 2)]));
        assert!(!is_transitive(&[p("(0 1)", 3)]));
        assert!(is_transitive(&[p("(0 1 2 3)", 4)]));
    }

    #[test]
    fn stabilizers() {
        let s3 = generate_group(&[p("(0 1)", 3), p("(1 2)", 3)], 100).unwrap();
        let h = point_stabilizer(&s3, 0).unwrap();
        let expected: HashSet<_> = [Permutation::identity(3), p("(1 2)", 3)].into();
        assert_eq!(set(&h), expected);

        let v4 = generate_group(&[p("(0 1)(2 3)", 4), p("(0 2)(1 3)", 4)], 100).unwrap();
        assert_eq!(point_stabilizer(&v4, 0).unwrap().order(), 1);

        let c5 = generate_group(&[p("(0 1 2 3 4)", 5)], 100).unwrap();
        for pt in 0..5 {
            assert_eq!(point_stabilizer(&c5, pt).unwrap().order(), 1);
        }
        assert!(point_stabilizer(&c5, 5).is_err());
    }

    #[test]
    fn normality() {
        let s3 = generate_group(&[p("(0 1)", 3), p("(1 2)", 3)], 100).unwrap();
        let h = point_stabilizer(&s3, 0).unwrap();
        assert!(!is_normal_subgroup(&h, &s3).unwrap());
        let a3 = generate_group(&[p("(0 1 2)", 3)], 100).unwrap();
        assert!(is_normal_subgroup(&a3, &s3).unwrap());
        let trivial = generate_group_of_degree(3, &[], 100).unwrap();
        assert!(is_normal_subgroup(&trivial, &s3).unwrap());
        assert_eq!(
            is_normal_subgroup(&s3, &a3).unwrap_err(),
            GroupError::NotASubgroup
        );
    }
}
