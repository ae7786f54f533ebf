use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result, DEGREE_CAP};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Dense univariate polynomial with complex coefficients, lowest degree first.
///
/// Trailing exact zeros are trimmed, so the zero polynomial has no
/// coefficients and every other polynomial has a nonzero leading term.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ComplexPoly {
    coeffs: Vec<Complex64>,
}

impl ComplexPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    pub fn constant(c: Complex64) -> Self {
        Self::from_coeffs_unchecked(vec![c])
    }

    /// `c * t^n`.
    pub fn monomial(c: Complex64, n: usize) -> Result<Self> {
        check_degree(n)?;
        let mut coeffs = vec![ZERO; n + 1];
        coeffs[n] = c;
        Ok(Self::from_coeffs_unchecked(coeffs))
    }

    /// `c0 + c1 t`.
    pub fn linear(c0: Complex64, c1: Complex64) -> Self {
        Self::from_coeffs_unchecked(vec![c0, c1])
    }

    pub fn from_coeffs(coeffs: Vec<Complex64>) -> Result<Self> {
        let p = Self::from_coeffs_unchecked(coeffs);
        if let Some(d) = p.degree() {
            check_degree(d)?;
        }
        Ok(p)
    }

    fn from_coeffs_unchecked(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.last() == Some(&ZERO) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `t^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, t: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * t + c)
    }

    pub fn eval_real(&self, t: f64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * t + c)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        if s == ZERO {
            return Self::zero();
        }
        Self::from_coeffs_unchecked(self.coeffs.iter().map(|&c| c * s).collect())
    }

    /// Coefficient-wise complex conjugate; on real arguments this is `t ↦ conj(p(t))`.
    pub fn conj(&self) -> Self {
        Self::from_coeffs_unchecked(self.coeffs.iter().map(|c| c.conj()).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs_unchecked(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    /// Multiplication by `t^k`.
    pub fn shift_up(&self, k: usize) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let mut coeffs = vec![ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self::from_coeffs(coeffs)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let degree = self.coeffs.len() + other.coeffs.len() - 2;
        check_degree(degree)?;
        let mut out = vec![ZERO; degree + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self::from_coeffs_unchecked(out))
    }

    /// `p(s0 + s1 t)` for an affine inner argument, by Horner's scheme.
    pub fn compose_affine(&self, s0: Complex64, s1: Complex64) -> Self {
        let inner = Self::linear(s0, s1);
        let mut acc = Self::zero();
        for &c in self.coeffs.iter().rev() {
            // degree never grows past the outer degree, so the cap holds
            acc = &acc.try_mul(&inner).expect("degree bounded by outer") + &Self::constant(c);
        }
        acc
    }

    /// Largest coefficient modulus, zero for the zero polynomial.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Coefficient-wise sup distance between two polynomials.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|k| (self.coeff(k) - other.coeff(k)).norm())
            .fold(0.0, f64::max)
    }
}

fn check_degree(degree: usize) -> Result<()> {
    if degree > DEGREE_CAP {
        Err(Error::DegreeOverflow { degree, cap: DEGREE_CAP })
    } else {
        Ok(())
    }
}

impl Add for &ComplexPoly {
    type Output = ComplexPoly;

    fn add(self, rhs: &ComplexPoly) -> ComplexPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ComplexPoly::from_coeffs_unchecked((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &ComplexPoly {
    type Output = ComplexPoly;

    fn sub(self, rhs: &ComplexPoly) -> ComplexPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ComplexPoly::from_coeffs_unchecked((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &ComplexPoly {
    type Output = ComplexPoly;

    fn neg(self) -> ComplexPoly {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Mul<Complex64> for &ComplexPoly {
    type Output = ComplexPoly;

    fn mul(self, rhs: Complex64) -> ComplexPoly {
        self.scale(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = ComplexPoly::from_coeffs(vec![c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(p.degree(), Some(0));
        assert!(ComplexPoly::from_coeffs(vec![c(0.0, 0.0)]).unwrap().is_zero());
    }

    #[test]
    fn derivative_of_square() {
        let p = ComplexPoly::monomial(c(1.0, 0.0), 2).unwrap();
        assert_eq!(p.derivative(), ComplexPoly::monomial(c(2.0, 0.0), 1).unwrap());
    }

    #[test]
    fn degree_cap_is_enforced() {
        let p = ComplexPoly::monomial(c(1.0, 0.0), 40).unwrap();
        assert!(matches!(
            p.try_mul(&p),
            Err(Error::DegreeOverflow { degree: 80, .. })
        ));
        assert!(ComplexPoly::monomial(c(1.0, 0.0), 65).is_err());
    }

    #[test]
    fn affine_composition_matches_evaluation() {
        let p = ComplexPoly::from_coeffs(vec![c(1.0, 2.0), c(-0.5, 0.0), c(0.0, 3.0)]).unwrap();
        let (s0, s1) = (c(0.3, -0.1), c(2.0, 0.5));
        let q = p.compose_affine(s0, s1);
        let t = c(-0.7, 0.4);
        assert!((q.eval(t) - p.eval(s0 + s1 * t)).norm() < 1e-14);
    }
}
