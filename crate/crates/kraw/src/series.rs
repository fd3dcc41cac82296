//! Univariate polynomials and truncated power series over exact rationals.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Polynomial in one variable with `BigRational` coefficients, lowest degree
/// first. The zero polynomial has an empty coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        RatPoly { coeffs: vec![c] }.trimmed()
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        RatPoly { coeffs }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + other.coeff(k)).collect();
        RatPoly { coeffs }.trimmed()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) - other.coeff(k)).collect();
        RatPoly { coeffs }.trimmed()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly { coeffs }.trimmed()
    }

    /// Exact quotient; `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(RatPoly::zero());
        }
        let mut rem = self.coeffs.clone();
        let dd = divisor.coeffs.len() - 1;
        let lead = divisor.coeffs.last().unwrap();
        if rem.len() - 1 < dd {
            return None;
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] / lead;
            if !q.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    let delta = &q * d;
                    rem[k + i] -= delta;
                }
            }
            quot[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(RatPoly { coeffs: quot }.trimmed())
        } else {
            None
        }
    }

    pub fn neg(&self) -> Self {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Truncated power series with exact rational coefficients.
///
/// A series of truncation order `M` stores the `M+1` coefficients
/// `c_0 ... c_M`; all arithmetic stays closed at that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
}

impl RationalSeries {
    /// Series with the given coefficients `c_0 ... c_M`.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least c_0");
        RationalSeries { coeffs }
    }

    /// Truncates (or zero-pads) a polynomial to a series of order `order`.
    pub fn from_poly(p: &RatPoly, order: usize) -> Self {
        RationalSeries {
            coeffs: (0..=order).map(|k| p.coeff(k)).collect(),
        }
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.truncation_order().min(other.truncation_order());
        RationalSeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.truncation_order().min(other.truncation_order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        RationalSeries { coeffs }
    }

    /// Multiplicative inverse as a series, requiring `c_0 != 0`.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let order = self.truncation_order();
        let mut out = vec![BigRational::zero(); order + 1];
        out[0] = c0.recip();
        for n in 1..=order {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &out[n - k];
            }
            out[n] = -acc / c0;
        }
        Ok(RationalSeries { coeffs: out })
    }
}

/// Rounds an exact rational to `f64`, robust against numerators or
/// denominators far beyond the `f64` range.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let negative = r.numer().sign() == Sign::Minus;
    let numer = r.numer().magnitude();
    let denom = r.denom().magnitude();
    // Scale the quotient to ~64 significant bits before converting.
    let shift = 64i64 - (numer.bits() as i64 - denom.bits() as i64);
    let q = if shift >= 0 {
        (numer << shift as u64) / denom
    } else {
        numer / (denom << (-shift) as u64)
    };
    let magnitude = q.to_f64().unwrap_or(f64::INFINITY) * 2f64.powi(-shift as i32);
    if negative {
        -magnitude
    } else {
        magnitude
    }
}

/// Exact rational from an `f64` (every finite float is a rational).
pub fn rational_from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite float")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn int_poly(coeffs: &[i64]) -> RatPoly {
        RatPoly::from_coeffs(coeffs.iter().map(|&c| rat(c, 1)).collect())
    }

    #[test]
    fn poly_product_and_exact_division() {
        let a = int_poly(&[1, 2, 1]); // (1+t)^2
        let b = int_poly(&[1, -1]); // 1-t
        let p = a.mul(&b);
        assert_eq!(p, int_poly(&[1, 1, -1, -1]));
        assert_eq!(p.div_exact(&b), Some(a.clone()));
        assert_eq!(p.div_exact(&a), Some(b));
        assert_eq!(p.div_exact(&int_poly(&[1, 1, 1])), None);
    }

    #[test]
    fn poly_zero_handling() {
        let z = RatPoly::zero();
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(int_poly(&[3]).sub(&int_poly(&[3])), z);
    }

    #[test]
    fn series_reciprocal_of_geometric() {
        // 1/(1-t) = sum t^k
        let s = RationalSeries::from_poly(&int_poly(&[1, -1]), 6);
        let r = s.reciprocal().unwrap();
        for k in 0..=6 {
            assert_eq!(r.coeff(k), &rat(1, 1));
        }
        // closed at the truncation order
        assert_eq!(s.mul(&r).coeffs()[1..], vec![rat(0, 1); 6]);
    }

    #[test]
    fn series_reciprocal_needs_constant_term() {
        let s = RationalSeries::from_poly(&int_poly(&[0, 1]), 3);
        assert!(matches!(s.reciprocal(), Err(Error::ZeroConstantTerm)));
    }

    #[test]
    fn rational_to_f64_handles_huge_terms() {
        let big = BigInt::from(3) << 400u32;
        let r = BigRational::new(big.clone() * 7, big);
        assert!((rational_to_f64(&r) - 7.0).abs() < 1e-12);
        let tiny = BigRational::new(BigInt::from(1), BigInt::from(1) << 100u32);
        let expect = 2f64.powi(-100);
        assert!((rational_to_f64(&tiny) - expect).abs() < expect * 1e-12);
        assert_eq!(rational_to_f64(&BigRational::zero()), 0.0);
        assert!((rational_to_f64(&rat(-22, 7)) + 22.0 / 7.0).abs() < 1e-15);
    }

    #[test]
    fn float_to_rational_is_exact() {
        let x = 0.1f64;
        let r = rational_from_f64(x);
        assert_eq!(rational_to_f64(&r), x);
    }
}
