//! Sparse integer matrices and Smith normal form with tracked transforms.
//!
//! [`smith_normal_form`] returns `D = U·A·V` together with `U⁻¹` and `V⁻¹`,
//! all built from elementary integer operations. [`SmithDecomposition::verify`]
//! re-multiplies the factors; `U·U⁻¹ = I` over the integers certifies that
//! `det U = ±1`, and likewise for `V`.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SnfError {
    #[error("integer overflow during exact elimination")]
    Overflow,
    #[error("dimension mismatch: {0}x{1} times {2}x{3}")]
    Shape(usize, usize, usize, usize),
    #[error("Smith normal form verification failed: {0}")]
    VerificationFailed(&'static str),
}

fn mul_add(acc: i64, q: i64, v: i64) -> Result<i64, SnfError> {
    q.checked_mul(v)
        .and_then(|x| acc.checked_add(x))
        .ok_or(SnfError::Overflow)
}

/// Row-major sparse integer matrix with a column occupancy index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<BTreeMap<usize, i64>>,
    cols: Vec<BTreeSet<usize>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            ncols,
            rows: vec![BTreeMap::new(); nrows],
            cols: vec![BTreeSet::new(); ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), ncols);
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.ncols]; self.nrows];
        for (i, row) in self.rows.iter().enumerate() {
            for (&j, &x) in row {
                out[i][j] = x;
            }
        }
        out
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i].get(&j).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, j: usize, x: i64) {
        if x == 0 {
            self.rows[i].remove(&j);
            self.cols[j].remove(&i);
        } else {
            self.rows[i].insert(j, x);
            self.cols[j].insert(i);
        }
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.rows[i].iter().map(|(&j, &x)| (j, x))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.ncols, self.nrows);
        for (i, row) in self.rows.iter().enumerate() {
            for (&j, &x) in row {
                t.set(j, i, x);
            }
        }
        t
    }

    /// `row[target] += q * row[source]`.
    pub fn add_row(&mut self, target: usize, source: usize, q: i64) -> Result<(), SnfError> {
        if q == 0 {
            return Ok(());
        }
        let src: Vec<(usize, i64)> = self.row(source).collect();
        for (j, x) in src {
            let updated = mul_add(self.get(target, j), q, x)?;
            self.set(target, j, updated);
        }
        Ok(())
    }

    /// `col[target] += q * col[source]`.
    pub fn add_col(&mut self, target: usize, source: usize, q: i64) -> Result<(), SnfError> {
        if q == 0 {
            return Ok(());
        }
        let src: Vec<usize> = self.cols[source].iter().copied().collect();
        for i in src {
            let updated = mul_add(self.get(i, target), q, self.get(i, source))?;
            self.set(i, target, updated);
        }
        Ok(())
    }

    pub fn negate_row(&mut self, i: usize) {
        for x in self.rows[i].values_mut() {
            *x = -*x;
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        let rows: Vec<usize> = self.cols[j].iter().copied().collect();
        for i in rows {
            if let Some(x) = self.rows[i].get_mut(&j) {
                *x = -*x;
            }
        }
    }

    /// New row `t` is old row `order[t]`.
    pub fn permute_rows(&self, order: &[usize]) -> Self {
        let mut out = Self::zeros(self.nrows, self.ncols);
        for (t, &old) in order.iter().enumerate() {
            for (j, x) in self.row(old) {
                out.set(t, j, x);
            }
        }
        out
    }

    /// New column `t` is old column `order[t]`.
    pub fn permute_cols(&self, order: &[usize]) -> Self {
        let mut position = vec![0; self.ncols];
        for (t, &old) in order.iter().enumerate() {
            position[old] = t;
        }
        let mut out = Self::zeros(self.nrows, self.ncols);
        for (i, row) in self.rows.iter().enumerate() {
            for (&j, &x) in row {
                out.set(i, position[j], x);
            }
        }
        out
    }

    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix, SnfError> {
        if self.ncols != other.nrows {
            return Err(SnfError::Shape(self.nrows, self.ncols, other.nrows, other.ncols));
        }
        let mut out = Self::zeros(self.nrows, other.ncols);
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for (&k, &a) in row {
                for (&j, &b) in &other.rows[k] {
                    let e = acc.entry(j).or_insert(0);
                    *e = mul_add(*e, a, b)?;
                }
            }
            for (j, x) in acc {
                out.set(i, j, x);
            }
        }
        Ok(out)
    }

    fn is_identity(&self) -> bool {
        self.nrows == self.ncols
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(i, row)| row.len() == 1 && row.get(&i) == Some(&1))
    }
}

/// `diagonal = U·A·V` with unimodular `U`, `V`; the diagonal entries are
/// positive and each divides the next.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    pub a: SparseMatrix,
    pub d: SparseMatrix,
    pub u: SparseMatrix,
    pub u_inv: SparseMatrix,
    pub v: SparseMatrix,
    pub v_inv: SparseMatrix,
    /// Non-zero diagonal entries of `d`, in order.
    pub invariant_factors: Vec<i64>,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<i64> {
        self.invariant_factors.iter().copied().filter(|&x| x > 1).collect()
    }

    /// Re-multiplies every factor exactly.
    pub fn verify(&self) -> Result<(), SnfError> {
        let r = self.invariant_factors.len();
        for (i, row) in self.d.rows.iter().enumerate() {
            let ok = match row.len() {
                0 => i >= r,
                1 => i < r && row.get(&i) == Some(&self.invariant_factors[i]),
                _ => false,
            };
            if !ok {
                return Err(SnfError::VerificationFailed("D is not the recorded diagonal"));
            }
        }
        if self.invariant_factors.iter().any(|&x| x <= 0)
            || self.invariant_factors.windows(2).any(|w| w[1] % w[0] != 0)
        {
            return Err(SnfError::VerificationFailed("diagonal does not form a divisibility chain"));
        }
        if self.u.mul(&self.a)?.mul(&self.v)? != self.d {
            return Err(SnfError::VerificationFailed("U·A·V differs from D"));
        }
        if !self.u.mul(&self.u_inv)?.is_identity() {
            return Err(SnfError::VerificationFailed("U is not unimodular"));
        }
        if !self.v.mul(&self.v_inv)?.is_identity() {
            return Err(SnfError::VerificationFailed("V is not unimodular"));
        }
        Ok(())
    }
}

struct Reduction {
    work: SparseMatrix,
    u: SparseMatrix,
    u_inv: SparseMatrix,
    v: SparseMatrix,
    v_inv: SparseMatrix,
}

impl Reduction {
    fn row_op(&mut self, target: usize, source: usize, q: i64) -> Result<(), SnfError> {
        self.work.add_row(target, source, q)?;
        self.u.add_row(target, source, q)?;
        self.u_inv.add_col(source, target, -q)
    }

    fn col_op(&mut self, target: usize, source: usize, q: i64) -> Result<(), SnfError> {
        self.work.add_col(target, source, q)?;
        self.v.add_col(target, source, q)?;
        self.v_inv.add_row(source, target, -q)
    }

    fn negate_row(&mut self, i: usize) {
        self.work.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    fn swap_rows(&mut self, i: usize, j: usize) -> Result<(), SnfError> {
        self.row_op(i, j, 1)?;
        self.row_op(j, i, -1)?;
        self.row_op(i, j, 1)?;
        self.negate_row(j);
        Ok(())
    }

    /// Active entry of least absolute value, ties broken by fill-in estimate.
    fn choose_pivot(&self, row_active: &[bool]) -> Option<(usize, usize)> {
        let mut best: Option<((u64, usize), (usize, usize))> = None;
        for (i, row) in self.work.rows.iter().enumerate() {
            if !row_active[i] {
                continue;
            }
            for (&j, &x) in row {
                let fill = (row.len() - 1) * (self.work.cols[j].len() - 1);
                let key = (x.unsigned_abs(), fill);
                if best.is_none_or(|(b, _)| key < b) {
                    best = Some((key, (i, j)));
                    if key == (1, 0) {
                        return Some((i, j));
                    }
                }
            }
        }
        best.map(|(_, p)| p)
    }

    /// Clears row and column of the pivot, moving the pivot whenever a
    /// smaller remainder appears. Returns the final pivot position.
    fn eliminate(&mut self, mut r: usize, mut c: usize) -> Result<(usize, usize), SnfError> {
        loop {
            let p = self.work.get(r, c);
            let others: Vec<usize> = self.work.cols[c].iter().copied().filter(|&i| i != r).collect();
            let mut smaller: Option<(u64, usize)> = None;
            for i in others {
                let q = self.work.get(i, c) / p;
                self.row_op(i, r, -q)?;
                let rem = self.work.get(i, c);
                if rem != 0 && smaller.is_none_or(|(m, _)| rem.unsigned_abs() < m) {
                    smaller = Some((rem.unsigned_abs(), i));
                }
            }
            if let Some((_, i)) = smaller {
                r = i;
                continue;
            }
            let others: Vec<usize> = self.work.rows[r].keys().copied().filter(|&j| j != c).collect();
            let mut smaller: Option<(u64, usize)> = None;
            for j in others {
                let q = self.work.get(r, j) / p;
                self.col_op(j, c, -q)?;
                let rem = self.work.get(r, j);
                if rem != 0 && smaller.is_none_or(|(m, _)| rem.unsigned_abs() < m) {
                    smaller = Some((rem.unsigned_abs(), j));
                }
            }
            if let Some((_, j)) = smaller {
                c = j;
                continue;
            }
            return Ok((r, c));
        }
    }

    /// Replaces diagonal entries `(i, i)`, `(j, j)` by their gcd and lcm.
    fn gcd_lcm(&mut self, i: usize, j: usize) -> Result<(), SnfError> {
        self.col_op(i, j, 1)?;
        loop {
            let b = self.work.get(j, i);
            if b == 0 {
                break;
            }
            self.row_op(i, j, -(self.work.get(i, i) / b))?;
            let a = self.work.get(i, i);
            if a == 0 {
                self.swap_rows(i, j)?;
                break;
            }
            self.row_op(j, i, -(self.work.get(j, i) / a))?;
        }
        let g = self.work.get(i, i);
        self.col_op(j, i, -(self.work.get(i, j) / g))?;
        for k in [i, j] {
            if self.work.get(k, k) < 0 {
                self.negate_row(k);
            }
        }
        Ok(())
    }
}

pub fn smith_normal_form(a: &SparseMatrix) -> Result<SmithDecomposition, SnfError> {
    let (m, n) = (a.nrows, a.ncols);
    let mut red = Reduction {
        work: a.clone(),
        u: SparseMatrix::identity(m),
        u_inv: SparseMatrix::identity(m),
        v: SparseMatrix::identity(n),
        v_inv: SparseMatrix::identity(n),
    };
    let mut row_active = vec![true; m];
    let mut col_active = vec![true; n];
    let mut pivots = Vec::new();
    // Rows of finished pivots hold nothing but the pivot, so scanning active
    // rows visits exactly the active submatrix.
    while let Some((r0, c0)) = red.choose_pivot(&row_active) {
        let (r, c) = red.eliminate(r0, c0)?;
        if red.work.get(r, c) < 0 {
            red.negate_row(r);
        }
        row_active[r] = false;
        col_active[c] = false;
        pivots.push((r, c));
    }

    let row_order: Vec<usize> = pivots
        .iter()
        .map(|&(r, _)| r)
        .chain((0..m).filter(|&i| row_active[i]))
        .collect();
    let col_order: Vec<usize> = pivots
        .iter()
        .map(|&(_, c)| c)
        .chain((0..n).filter(|&j| col_active[j]))
        .collect();
    red.work = red.work.permute_rows(&row_order).permute_cols(&col_order);
    red.u = red.u.permute_rows(&row_order);
    red.u_inv = red.u_inv.permute_cols(&row_order);
    red.v = red.v.permute_cols(&col_order);
    red.v_inv = red.v_inv.permute_rows(&col_order);

    let rank = pivots.len();
    for i in 0..rank {
        for j in i + 1..rank {
            if red.work.get(j, j) % red.work.get(i, i) != 0 {
                red.gcd_lcm(i, j)?;
            }
        }
    }
    let invariant_factors = (0..rank).map(|i| red.work.get(i, i)).collect();
    Ok(SmithDecomposition {
        a: a.clone(),
        d: red.work,
        u: red.u,
        u_inv: red.u_inv,
        v: red.v,
        v_inv: red.v_inv,
        invariant_factors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn snf(rows: &[Vec<i64>]) -> SmithDecomposition {
        let d = smith_normal_form(&SparseMatrix::from_dense(rows)).unwrap();
        d.verify().unwrap();
        d
    }

    #[test]
    fn textbook_example() {
        let d = snf(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(d.invariant_factors, vec![2, 6, 12]);
    }

    #[test]
    fn coprime_diagonal_is_reordered_into_a_chain() {
        let d = snf(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(d.invariant_factors, vec![1, 6]);
        let d = snf(&[vec![4, 0, 0], vec![0, 6, 0], vec![0, 0, 10]]);
        assert_eq!(d.invariant_factors, vec![2, 2, 60]);
    }

    #[test]
    fn zero_and_empty() {
        assert_eq!(snf(&[vec![0, 0], vec![0, 0]]).rank(), 0);
        let empty = smith_normal_form(&SparseMatrix::zeros(0, 3)).unwrap();
        empty.verify().unwrap();
        assert_eq!(empty.rank(), 0);
    }

    #[test]
    fn boundary_of_a_triangle() {
        // d1 of the 3-cycle graph: rank 2, no torsion
        let d = snf(&[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]);
        assert_eq!(d.invariant_factors, vec![1, 1]);
    }

    #[test]
    fn verification_catches_a_tampered_factor() {
        let mut d = smith_normal_form(&SparseMatrix::from_dense(&[vec![2, 0], vec![0, 4]])).unwrap();
        d.u.set(0, 1, 5);
        assert!(d.verify().is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let big = i64::MAX / 2 + 1;
        let a = SparseMatrix::from_dense(&[vec![big, 3], vec![big, 2]]);
        let mut m = a.clone();
        assert_eq!(m.add_row(0, 1, 2), Err(SnfError::Overflow));
    }

    fn det(m: &[Vec<i64>]) -> i64 {
        // Laplace expansion; only used on tiny matrices.
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum()
    }

    proptest! {
        #[test]
        fn random_matrices_decompose(rows in 1usize..5, cols in 1usize..5, seed in prop::collection::vec(-6i64..7, 16)) {
            let dense: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 4 + j]).collect()).collect();
            let d = smith_normal_form(&SparseMatrix::from_dense(&dense)).unwrap();
            d.verify().unwrap();
            prop_assert_eq!(det(&d.u.to_dense()).abs(), 1);
            prop_assert_eq!(det(&d.v.to_dense()).abs(), 1);
            if rows == cols {
                let product: i64 = d.invariant_factors.iter().product();
                let expected = if d.rank() == rows { det(&dense).abs() } else { 0 };
                let got = if d.rank() == rows { product } else { 0 };
                prop_assert_eq!(got, expected);
            }
        }
    }
}
