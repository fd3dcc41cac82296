//! Krawtchouk matrix constructors.
//!
//! The order-`N` Krawtchouk matrix `K` is the `(N+1) x (N+1)` integer matrix
//! whose column `j` holds the coefficients of `(1+v)^(N-j) (1-v)^j` expanded
//! in powers of `v`. Three independent construction routes are provided:
//! per-entry evaluation of the alternating binomial sum, exact polynomial
//! expansion of the column generating functions, and a fill procedure driven
//! by the square identity `K[i][j] = K[i-1][j] + K[i-1][j+1] + K[i][j+1]`.
//! All arithmetic is arbitrary-precision: binomial coefficients outgrow 64
//! bits near `N = 67`, and identity checks square the entries.
//!
//! Indices run from 0 to `N` throughout.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

/// Binomial coefficient `C(n, k)` in exact arithmetic.
///
/// Returns 0 when `k < 0` or `k > n`, so sums over shifted indices need no
/// range bookkeeping at the call site.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// Single entry `K[i][j]` of the order-`order` Krawtchouk matrix, computed
/// from the closed-form sum over `k` of `(-1)^k C(j,k) C(order-j, i-k)`.
pub fn kraw_entry(order: u32, row: u32, col: u32) -> Result<BigInt> {
    if row > order || col > order {
        return Err(Error::IndexOutOfRange { order, row, col });
    }
    let mut acc = BigInt::zero();
    for k in 0..=row.min(col) {
        let term = binomial(col as u64, k as i64)
            * binomial((order - col) as u64, (row - k) as i64);
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// Coefficients of `(1+v)^(order-col) (1-v)^col`, by exact convolution.
fn column_polynomial(order: u32, col: u32) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::one()];
    for _ in 0..(order - col) {
        coeffs = convolve_linear(&coeffs, false);
    }
    for _ in 0..col {
        coeffs = convolve_linear(&coeffs, true);
    }
    coeffs
}

/// Multiplies a coefficient vector by `(1+v)` or, when `minus`, by `(1-v)`.
fn convolve_linear(coeffs: &[BigInt], minus: bool) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); coeffs.len() + 1];
    for (i, c) in coeffs.iter().enumerate() {
        out[i] += c;
        if minus {
            out[i + 1] -= c;
        } else {
            out[i + 1] += c;
        }
    }
    out
}

/// Order-`order` Krawtchouk matrix via column generating polynomials.
pub fn kraw_matrix(order: u32) -> ExactMatrix {
    let n = order as usize + 1;
    let mut m = ExactMatrix::zeros(n, n);
    for j in 0..n {
        let coeffs = column_polynomial(order, j as u32);
        for (i, c) in coeffs.into_iter().enumerate() {
            m.set(i, j, c);
        }
    }
    m
}

/// Order-`order` Krawtchouk matrix rebuilt from the square identity alone,
/// seeded by the all-ones top row and the sign-alternating binomial
/// rightmost column.
pub fn kraw_matrix_square_fill(order: u32) -> ExactMatrix {
    let n = order as usize + 1;
    let mut m = ExactMatrix::zeros(n, n);
    for j in 0..n {
        m.set(0, j, BigInt::one());
    }
    for i in 0..n {
        let b = binomial(order as u64, i as i64);
        m.set(i, n - 1, if i % 2 == 0 { b } else { -b });
    }
    for i in 1..n {
        for j in (0..n - 1).rev() {
            let v = m.entry(i - 1, j).clone()
                + m.entry(i - 1, j + 1).clone()
                + m.entry(i, j + 1).clone();
            m.set(i, j, v);
        }
    }
    m
}

/// Diagonal matrix of binomial coefficients `C(order, i)`.
pub fn binomial_diagonal(order: u32) -> ExactMatrix {
    ExactMatrix::diagonal(
        (0..=order)
            .map(|i| binomial(order as u64, i as i64))
            .collect(),
    )
}

/// Symmetric Krawtchouk matrix: the exact product of the Krawtchouk matrix
/// and the binomial diagonal. The result is symmetric.
pub fn sym_kraw_matrix(order: u32) -> ExactMatrix {
    kraw_matrix(order).mul(&binomial_diagonal(order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_and_boundary() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(5, 5), BigInt::from(1));
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::from(1));
    }

    #[test]
    fn binomial_beyond_machine_width() {
        // Pascal-triangle accumulation as an independent route.
        let n = 66usize;
        let mut row = vec![BigInt::one()];
        for _ in 0..n {
            let mut next = vec![BigInt::one(); row.len() + 1];
            for i in 1..row.len() {
                next[i] = &row[i - 1] + &row[i];
            }
            row = next;
        }
        assert_eq!(row[33], BigInt::from(7219428434016265740u64));
        assert_eq!(binomial(66, 33), row[33]);
    }

    #[test]
    fn entry_formula_matches_displayed_values() {
        assert_eq!(kraw_entry(4, 1, 1).unwrap(), BigInt::from(2));
        assert_eq!(kraw_entry(6, 3, 2).unwrap(), BigInt::from(-4));
        for j in 0..=9 {
            assert_eq!(kraw_entry(9, 0, j).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn entry_rejects_out_of_range_indices() {
        assert!(matches!(
            kraw_entry(3, 4, 0),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            kraw_entry(3, 0, 4),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn matrices_of_low_order() {
        assert_eq!(kraw_matrix(0), ExactMatrix::from_i64_rows(&[&[1]]));
        assert_eq!(
            kraw_matrix(2),
            ExactMatrix::from_i64_rows(&[&[1, 1, 1], &[2, 0, -2], &[1, -1, 1]])
        );
        assert_eq!(
            kraw_matrix(3),
            ExactMatrix::from_i64_rows(&[
                &[1, 1, 1, 1],
                &[3, 1, -1, -3],
                &[3, -1, -1, 3],
                &[1, -1, 1, -1],
            ])
        );
    }

    #[test]
    fn square_fill_reproduces_low_orders() {
        assert_eq!(
            kraw_matrix_square_fill(1),
            ExactMatrix::from_i64_rows(&[&[1, 1], &[1, -1]])
        );
        assert_eq!(kraw_matrix_square_fill(3), kraw_matrix(3));
        assert_eq!(kraw_matrix_square_fill(5), kraw_matrix(5));
    }

    #[test]
    fn binomial_diagonal_rows() {
        assert_eq!(binomial_diagonal(0), ExactMatrix::from_i64_rows(&[&[1]]));
        assert_eq!(
            binomial_diagonal(3),
            ExactMatrix::diagonal(vec![
                BigInt::from(1),
                BigInt::from(3),
                BigInt::from(3),
                BigInt::from(1)
            ])
        );
        let d6 = binomial_diagonal(6);
        let expected = [1i64, 6, 15, 20, 15, 6, 1];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(*d6.entry(i, i), BigInt::from(e));
        }
    }

    #[test]
    fn symmetric_kraw_examples() {
        assert_eq!(sym_kraw_matrix(0), ExactMatrix::from_i64_rows(&[&[1]]));
        assert_eq!(
            sym_kraw_matrix(3),
            ExactMatrix::from_i64_rows(&[
                &[1, 3, 3, 1],
                &[3, 3, -3, -3],
                &[3, -3, -3, 3],
                &[1, -3, 3, -1],
            ])
        );
        assert_eq!(
            sym_kraw_matrix(4),
            ExactMatrix::from_i64_rows(&[
                &[1, 4, 6, 4, 1],
                &[4, 8, 0, -8, -4],
                &[6, 0, -12, 0, 6],
                &[4, -8, 0, 8, -4],
                &[1, -4, 6, -4, 1],
            ])
        );
        assert!(sym_kraw_matrix(7).is_symmetric());
    }
}
