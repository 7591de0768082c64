//! Dense exact matrices over [`Rational`] and the elimination routines the
//! rest of the crate relies on.
//!
//! Rank and determinant use fraction-free (Bareiss) elimination on an
//! integer-scaled copy; solving and inversion use rational Gauss-Jordan
//! reduction. The two routes are independent, which the tests exploit.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Solution set of `A x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSolution {
    /// Solution with every free variable set to zero; `None` when inconsistent.
    pub particular: Option<Vec<Rational>>,
    /// Basis of the kernel of `A`.
    pub nullspace: Vec<Vec<Rational>>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let nrows = rows.len();
        Matrix { rows: nrows, cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        Matrix::from_rows(
            rows.iter().map(|r| r.as_ref().iter().map(|&x| Rational::from(x)).collect()).collect(),
        )
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Rational> {
        self.data
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "vector length differs from column count");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Matrix::from_vec(self.rows, self.cols, self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Matrix::from_vec(self.rows, self.cols, self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix::from_vec(self.rows, self.cols, self.data.iter().map(|a| a * s).collect())
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_vec(self.rows, self.cols, self.data.iter().map(|a| -a).collect())
    }

    /// Rows `row_sel` and columns `col_sel`, in the given order.
    pub fn select(&self, row_sel: &[usize], col_sel: &[usize]) -> Matrix {
        Matrix::from_fn(row_sel.len(), col_sel.len(), |r, c| self[(row_sel[r], col_sel[c])].clone())
    }

    /// `[self | rhs]`.
    pub fn hconcat(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows, "row counts differ");
        Matrix::from_fn(self.rows, self.cols + rhs.cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                rhs[(r, c - self.cols)].clone()
            }
        })
    }

    /// Stack `rhs` below `self`.
    pub fn vconcat(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.cols, "column counts differ");
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Matrix::from_vec(self.rows + rhs.rows, self.cols, data)
    }

    /// Integer rows obtained by clearing each row's denominators.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
            })
            .collect()
    }

    /// Rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.integer_rows();
        let (rows, cols) = (self.rows, self.cols);
        let mut prev = BigInt::one();
        let mut rank = 0;
        for c in 0..cols {
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            for r in rank + 1..rows {
                for k in c + 1..cols {
                    let v = &m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k];
                    m[r][k] = v / &prev;
                }
                m[r][c] = BigInt::zero();
            }
            prev = m[rank][c].clone();
            rank += 1;
        }
        rank
    }

    /// Determinant by fraction-free elimination.
    pub fn determinant(&self) -> Rational {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Rational::one();
        }
        let mut scale = BigInt::one();
        for r in 0..n {
            let lcm = self.row(r).iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= lcm;
        }
        let mut m = self.integer_rows();
        let mut prev = BigInt::one();
        let mut negate = false;
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                m.swap(c, p);
                negate = !negate;
            }
            for r in c + 1..n {
                for k in c + 1..n {
                    let v = &m[c][c] * &m[r][k] - &m[r][c] * &m[c][k];
                    m[r][k] = v / &prev;
                }
                m[r][c] = BigInt::zero();
            }
            prev = m[c][c].clone();
        }
        let det = Rational::from_big(m[n - 1][n - 1].clone(), scale);
        if negate {
            -det
        } else {
            det
        }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for c in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, c)].recip().expect("pivot is nonzero");
            for k in c..m.cols {
                let v = &m[(row, k)] * &inv;
                m[(row, k)] = v;
            }
            for r in 0..m.rows {
                if r == row || m[(r, c)].is_zero() {
                    continue;
                }
                let factor = m[(r, c)].clone();
                for k in c..m.cols {
                    if m[(row, k)].is_zero() {
                        continue;
                    }
                    let v = &m[(r, k)] - &(&factor * &m[(row, k)]);
                    m[(r, k)] = v;
                }
            }
            pivots.push(c);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Kernel basis read off the reduced echelon form, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots, self.cols)
    }

    /// Solve `self · x = b` exactly.
    pub fn solve(&self, b: &[Rational]) -> LinearSolution {
        assert_eq!(self.rows, b.len(), "right-hand side length differs from row count");
        let aug = self.hconcat(&Matrix::from_vec(b.len(), 1, b.to_vec()));
        let (r, pivots) = aug.rref();
        let consistent = pivots.last() != Some(&self.cols);
        let pivots: Vec<usize> = pivots.into_iter().filter(|&p| p < self.cols).collect();
        let particular = consistent.then(|| {
            let mut x = vec![Rational::zero(); self.cols];
            for (row, &p) in pivots.iter().enumerate() {
                x[p] = r[(row, self.cols)].clone();
            }
            x
        });
        let nullspace = kernel_from_rref(&r, &pivots, self.cols);
        LinearSolution { particular, nullspace, rank: pivots.len() }
    }

    /// Exact inverse, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let (r, pivots) = self.hconcat(&Matrix::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// Least common denominator of all entries.
    pub fn common_denominator(&self) -> BigInt {
        self.data.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }
}

fn kernel_from_rref(r: &Matrix, pivots: &[usize], cols: usize) -> Vec<Vec<Rational>> {
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&r[(row, f)];
            }
            v
        })
        .collect()
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

/// Whitespace-aligned grid of fraction strings, one row per line.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for r in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|c| format!("{:>width$}", cells[r * self.cols + c]))
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A subspace of `Q^n` kept as reduced echelon rows.
#[derive(Debug, Clone)]
pub struct Subspace {
    dim: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(ambient_dim: usize) -> Self {
        Subspace { dim: ambient_dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &(&factor * y);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.dim, "vector has the wrong length");
        self.reduce(v).iter().all(Rational::is_zero)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.dim, "vector has the wrong length");
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip().expect("nonzero");
        for x in r.iter_mut() {
            *x = &*x * &inv;
        }
        for (row, _) in self.rows.iter_mut().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &(&factor * y);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, r);
        self.pivots.insert(at, p);
        true
    }

    /// Component of `v` orthogonal to this subspace (standard dot product).
    pub fn orthogonal_residual(&self, v: &[Rational]) -> Vec<Rational> {
        if self.rows.is_empty() {
            return v.to_vec();
        }
        let dot = |a: &[Rational], b: &[Rational]| -> Rational {
            a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).map(|(x, y)| x * y).sum()
        };
        let k = self.rows.len();
        let gram = Matrix::from_fn(k, k, |i, j| dot(&self.rows[i], &self.rows[j]));
        let rhs: Vec<Rational> = self.rows.iter().map(|w| dot(w, v)).collect();
        let coeffs = gram.solve(&rhs).particular.expect("Gram matrix of a basis is invertible");
        let mut out = v.to_vec();
        for (c, w) in coeffs.iter().zip(&self.rows) {
            for (x, y) in out.iter_mut().zip(w) {
                *x -= &(c * y);
            }
        }
        out
    }
}

/// Rescales a nonzero vector to coprime integers with a positive leading entry.
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<Rational> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return v.to_vec();
    }
    let lead_negative = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x < &BigInt::zero());
    ints.into_iter()
        .map(|x| {
            let y = x / &gcd;
            Rational::from(if lead_negative { -y } else { y })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn inverse_of_sign_matrix_has_quarter_factor() {
        let f = Matrix::from_ints(&[[1, -1, -1, -1], [1, -1, 1, 1], [1, 1, -1, 1], [1, 1, 1, -1]]);
        let inv = f.inverse().unwrap();
        let expected = Matrix::from_ints(&[[1, 1, 1, 1], [-1, -1, 1, 1], [-1, 1, -1, 1], [-1, 1, 1, -1]])
            .scale(&q(1, 4));
        assert_eq!(inv, expected);
        assert_eq!(f.mul(&inv), Matrix::identity(4));
        assert_eq!(f.determinant(), q(16, 1));
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let m = Matrix::from_ints(&[[1, 2], [2, 4]]);
        assert!(m.inverse().is_none());
        assert_eq!(m.rank(), 1);
        assert!(m.determinant().is_zero());
    }

    #[test]
    fn rank_handles_fractions_and_zero_columns() {
        let m = Matrix::from_rows(vec![
            vec![q(0, 1), q(1, 2), q(1, 3)],
            vec![q(0, 1), q(1, 4), q(1, 6)],
            vec![q(0, 1), q(0, 1), q(5, 7)],
        ]);
        assert_eq!(m.rank(), 2);
        assert_eq!(Matrix::zeros(3, 4).rank(), 0);
    }

    #[test]
    fn solve_reports_particular_and_kernel() {
        let a = Matrix::from_ints(&[[1, 1, 0], [0, 0, 1]]);
        let sol = a.solve(&[q(2, 1), q(3, 1)]);
        assert_eq!(sol.rank, 2);
        assert_eq!(sol.particular.unwrap(), vec![q(2, 1), q(0, 1), q(3, 1)]);
        assert_eq!(sol.nullspace, vec![vec![q(-1, 1), q(1, 1), q(0, 1)]]);

        let inconsistent = Matrix::from_ints(&[[1, 1], [1, 1]]).solve(&[q(1, 1), q(2, 1)]);
        assert!(inconsistent.particular.is_none());
    }

    #[test]
    fn subspace_insert_and_residual() {
        let mut s = Subspace::new(3);
        assert!(s.insert(&[q(1, 1), q(1, 1), q(0, 1)]));
        assert!(!s.insert(&[q(2, 1), q(2, 1), q(0, 1)]));
        assert!(s.contains(&[q(-3, 1), q(-3, 1), q(0, 1)]));
        let r = s.orthogonal_residual(&[q(1, 1), q(0, 1), q(0, 1)]);
        assert_eq!(r, vec![q(1, 2), q(-1, 2), q(0, 1)]);
        assert_eq!(primitive_integer_vector(&r), vec![q(1, 1), q(-1, 1), q(0, 1)]);
    }
}
