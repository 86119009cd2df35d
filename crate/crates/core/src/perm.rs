//! Permutations of `{0, .., n-1}`.
//!
//! Composition is left-to-right throughout the crate: `a.then(&b)` applies
//! `a` first and `b` second, matching left-to-right concatenation of loops.

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("images do not form a bijection of 0..{0}")]
    NotBijective(usize),
    #[error("point {point} repeated in cycle notation")]
    RepeatedPoint { point: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("malformed cycle notation: {0}")]
    Malformed(String),
}

/// A bijection of `{0, .., n-1}` stored as its image sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image sequence, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(PermError::NotBijective(n));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(PermError::PointOutOfRange { point: p, degree });
                }
                if used[p] {
                    return Err(PermError::RepeatedPoint { point: p });
                }
                used[p] = true;
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses disjoint-cycle notation such as `"(0 1)(2 3)"`; `"()"` is the identity.
    pub fn parse(s: &str, degree: usize) -> Result<Self, PermError> {
        let s = s.trim();
        if s == "()" {
            return Ok(Self::identity(degree));
        }
        if s.is_empty() {
            return Err(PermError::Malformed(s.to_string()));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let inner_start = rest
                .strip_prefix('(')
                .ok_or_else(|| PermError::Malformed(s.to_string()))?;
            let close = inner_start
                .find(')')
                .ok_or_else(|| PermError::Malformed(s.to_string()))?;
            let body = &inner_start[..close];
            let cycle = body
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| PermError::Malformed(s.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if cycle.is_empty() {
                return Err(PermError::Malformed(s.to_string()));
            }
            cycles.push(cycle);
            rest = inner_start[close + 1..].trim_start();
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Self::from_cycles(degree, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.then_unchecked(other))
    }

    pub(crate) fn then_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn pow(&self, k: usize) -> Permutation {
        let mut acc = Self::identity(self.degree());
        for _ in 0..k {
            acc = acc.then_unchecked(self);
        }
        acc
    }

    /// Disjoint cycles, each starting at its least point, ordered by that point.
    /// Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths including fixed points, sorted descending. Sums to the degree.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// Least `k >= 1` with `self^k = id`.
    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| acc.lcm(&c.len()))
    }
}

/// Left-to-right composition: apply `a`, then `b`.
pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation, PermError> {
    a.then(b)
}

pub fn element_order(a: &Permutation) -> usize {
    a.order()
}

pub fn cycle_type(a: &Permutation) -> Vec<usize> {
    a.cycle_type()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}[n={}]", self.degree())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn composition_is_left_to_right() {
        let c = compose(&p("(0 1)", 3), &p("(1 2)", 3)).unwrap();
        assert_eq!(c.images(), &[2, 0, 1]);
        assert_eq!(c.to_string(), "(0 2 1)");
    }

    #[test]
    fn identity_and_inverse() {
        let s = p("(0 3 1)(2 4)", 5);
        assert_eq!(compose(&Permutation::identity(5), &s).unwrap(), s);
        assert!(compose(&s, &s.inverse()).unwrap().is_identity());
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        assert_eq!(
            compose(&p("(0 1)", 2), &p("(0 1)", 3)),
            Err(PermError::DegreeMismatch(2, 3))
        );
    }

    #[test]
    fn orders() {
        assert_eq!(element_order(&Permutation::identity(4)), 1);
        assert_eq!(element_order(&p("(0 1)", 2)), 2);
        // brute force powering for (012)(34)
        let s = p("(0 1 2)(3 4)", 5);
        let k = (1..).find(|&k| s.pow(k).is_identity()).unwrap();
        assert_eq!(k, 6);
        assert_eq!(element_order(&s), 6);
    }

    #[test]
    fn cycle_types() {
        assert_eq!(cycle_type(&Permutation::identity(3)), vec![1, 1, 1]);
        assert_eq!(cycle_type(&p("(0 1)", 3)), vec![2, 1]);
        assert_eq!(cycle_type(&p("(0 1 2)", 3)), vec![3]);
    }

    #[test]
    fn text_format() {
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert_eq!(p("(2 3)(0 1)", 4).to_string(), "(0 1)(2 3)");
        assert_eq!(p("  (1 2 0) ", 3).to_string(), "(0 1 2)");
        assert_eq!(
            Permutation::parse("(0 1)(1 2)", 3),
            Err(PermError::RepeatedPoint { point: 1 })
        );
        assert_eq!(
            Permutation::parse("(0 0)", 3),
            Err(PermError::RepeatedPoint { point: 0 })
        );
        assert!(matches!(
            Permutation::parse("(0 5)", 3),
            Err(PermError::PointOutOfRange { .. })
        ));
        for bad in ["", "(0 1", "0 1", "(a b)", "()(0 1)", "(0 1))"] {
            assert!(Permutation::parse(bad, 3).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_images(vec![2, 0, 1]).is_ok());
    }
}
