//! Dense row-major matrices with exact entries.
//!
//! `Matrix<T>` is deliberately plain: Krawtchouk and Hadamard matrices are
//! dense by nature, so there is no sparse storage, and every operation is
//! carried out in the exact coefficient ring (`BigInt` or `BigRational`).
//! Values are immutable once built and safe to share across threads.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense row-major matrix over an exact coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

/// Matrix of arbitrary-precision signed integers.
pub type ExactMatrix = Matrix<BigInt>;

/// Matrix of exact rationals.
pub type RationalMatrix = Matrix<BigRational>;

impl<T> Matrix<T> {
    /// Builds a matrix from a row-major entry vector. Panics if the entry
    /// count does not equal `rows * cols`.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<T>) -> Self {
        assert_eq!(
            entries.len(),
            rows * cols,
            "entry count {} does not match {}x{}",
            entries.len(),
            rows,
            cols
        );
        Matrix { rows, cols, entries }
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

    pub fn entry(&self, row: usize, col: usize) -> &T {
        debug_assert!(row < self.rows && col < self.cols);
        &self.entries[row * self.cols + col]
    }

    pub fn entry_mut(&mut self, row: usize, col: usize) -> &mut T {
        debug_assert!(row < self.rows && col < self.cols);
        &mut self.entries[row * self.cols + col]
    }

    /// Row-major view of all entries.
    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn row(&self, row: usize) -> &[T] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }
}

impl<T: Clone> Matrix<T> {
    /// Builds a matrix from a list of equally long rows.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged rows");
            entries.extend(row);
        }
        Matrix { rows: nrows, cols: ncols, entries }
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.entry(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, entries }
    }

    pub fn col(&self, col: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.entry(i, col).clone()).collect()
    }
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn set(&mut self, row: usize, col: usize, value: T) {
        self.entries[row * self.cols + col] = value;
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn diagonal(diag: Vec<T>) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in diag.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + Add<Output = T> + Mul<Output = T>,
{
    /// Exact matrix product. Panics on incompatible dimensions.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + self.entry(i, k).clone() * other.entry(k, j).clone();
                }
                entries.push(acc);
            }
        }
        Matrix {
            rows: self.rows,
            cols: other.cols,
            entries,
        }
    }

    /// Matrix-vector product. Panics when the length does not match.
    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (k, x) in v.iter().enumerate() {
                    acc = acc + self.entry(i, k).clone() * x.clone();
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, factor: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|e| e.clone() * factor.clone())
                .collect(),
        }
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<T: PartialEq> Matrix<T> {
    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..i {
                if self.entry(i, j) != self.entry(j, i) {
                    return false;
                }
            }
        }
        true
    }
}

impl ExactMatrix {
    /// Convenience constructor for tests and fixtures.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn to_rational(&self) -> RationalMatrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|e| BigRational::from_integer(e.clone()))
                .collect(),
        }
    }

    /// Largest absolute entry; zero for an empty matrix.
    pub fn max_abs(&self) -> BigInt {
        self.entries
            .iter()
            .map(|e| e.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl RationalMatrix {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| BigRational::from_integer(BigInt::from(x)))
                        .collect()
                })
                .collect(),
        )
    }

    /// Exact inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<RationalMatrix> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut work = self.clone();
        let mut inv = RationalMatrix::identity(n);
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !work.entry(r, col).is_zero())?;
            if pivot_row != col {
                for j in 0..n {
                    let tmp = work.entry(pivot_row, j).clone();
                    let cur = work.entry(col, j).clone();
                    work.set(pivot_row, j, cur);
                    work.set(col, j, tmp);
                    let tmp = inv.entry(pivot_row, j).clone();
                    let cur = inv.entry(col, j).clone();
                    inv.set(pivot_row, j, cur);
                    inv.set(col, j, tmp);
                }
            }
            let pivot = work.entry(col, col).clone();
            for j in 0..n {
                let w = work.entry(col, j).clone() / pivot.clone();
                work.set(col, j, w);
                let v = inv.entry(col, j).clone() / pivot.clone();
                inv.set(col, j, v);
            }
            for r in 0..n {
                if r == col || work.entry(r, col).is_zero() {
                    continue;
                }
                let factor = work.entry(r, col).clone();
                for j in 0..n {
                    let w = work.entry(r, j).clone() - factor.clone() * work.entry(col, j).clone();
                    work.set(r, j, w);
                    let v = inv.entry(r, j).clone() - factor.clone() * inv.entry(col, j).clone();
                    inv.set(r, j, v);
                }
            }
        }
        Some(inv)
    }
}

impl<T> Neg for Matrix<T>
where
    T: Clone + Neg<Output = T>,
{
    type Output = Matrix<T>;

    fn neg(self) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.into_iter().map(|e| -e).collect(),
        }
    }
}
