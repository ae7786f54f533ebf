use num_complex::Complex64;

use super::poly::ComplexPoly;
use crate::error::{Error, Result};

/// Entire function `z ↦ poly(z) · exp(c2 z² + c1 z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HoloGauss {
    poly: ComplexPoly,
    c2: Complex64,
    c1: Complex64,
}

/// A real quadratic weight `Φ(z) = a|z|² + Re(b z²)` with `a > |b|`,
/// defining the space of entire `U` with `∫|U|² e^{-2Φ/h} < ∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticWeight {
    pub a: f64,
    pub b: Complex64,
    pub h: f64,
}

impl QuadraticWeight {
    /// The classic Bargmann weight `|z|²/4`.
    pub fn classic(h: f64) -> Self {
        Self { a: 0.25, b: Complex64::new(0.0, 0.0), h }
    }

    pub fn eval(&self, z: Complex64) -> f64 {
        self.a * z.norm_sqr() + (self.b * z * z).re
    }
}

impl HoloGauss {
    pub fn new(poly: ComplexPoly, c2: Complex64, c1: Complex64) -> Self {
        Self { poly, c2, c1 }
    }

    pub fn polynomial(poly: ComplexPoly) -> Self {
        Self::new(poly, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0))
    }

    /// `exp(c2 z² + c1 z)`.
    pub fn exponential(c2: Complex64, c1: Complex64) -> Self {
        Self::new(ComplexPoly::one(), c2, c1)
    }

    pub fn zero() -> Self {
        Self::polynomial(ComplexPoly::zero())
    }

    pub fn poly(&self) -> &ComplexPoly {
        &self.poly
    }

    pub fn c2(&self) -> Complex64 {
        self.c2
    }

    pub fn c1(&self) -> Complex64 {
        self.c1
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Exponent `c2 z² + c1 z` at `z`.
    pub fn exponent_at(&self, z: Complex64) -> Complex64 {
        (self.c2 * z + self.c1) * z
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.poly.eval(z) * self.exponent_at(z).exp()
    }

    pub fn with_poly(&self, poly: ComplexPoly) -> Self {
        Self { poly, c2: self.c2, c1: self.c1 }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        self.with_poly(self.poly.scale(s))
    }

    /// `∂_z`.
    pub fn differentiate(&self) -> Result<Self> {
        let slope = ComplexPoly::linear(self.c1, 2.0 * self.c2);
        let poly = &self.poly.derivative() + &self.poly.try_mul(&slope)?;
        Ok(self.with_poly(poly))
    }

    /// `z · U`.
    pub fn multiply_by_z(&self) -> Result<Self> {
        Ok(self.with_poly(self.poly.shift_up(1)?))
    }

    /// `exp(d2 z² + d1 z) · U`.
    pub fn multiply_exp(&self, d2: Complex64, d1: Complex64) -> Self {
        Self { poly: self.poly.clone(), c2: self.c2 + d2, c1: self.c1 + d1 }
    }

    /// `(∂_z + c z) U`.
    pub fn shifted_derivative(&self, c: Complex64) -> Result<Self> {
        self.differentiate()?.try_add(&self.multiply_by_z()?.scale(c))
    }

    pub fn same_exponent(&self, other: &Self) -> bool {
        self.c2 == other.c2 && self.c1 == other.c1
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if !self.same_exponent(other) {
            return Err(Error::ExponentMismatch);
        }
        Ok(self.with_poly(&self.poly + &other.poly))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    /// Whether `|U|² e^{-2Φ/h}` is integrable: the quadratic part of
    /// `2 Re(c2 z²) - 2Φ(z)/h` must be negative definite, i.e.
    /// `|c2 - b/h| < a/h`. For the classic weight this is `|c2| < 1/(4h)`.
    pub fn is_member(&self, weight: &QuadraticWeight) -> bool {
        self.is_zero() || (self.c2 - weight.b / weight.h).norm() < weight.a / weight.h
    }

    pub fn ensure_member(self, weight: &QuadraticWeight) -> Result<Self> {
        if self.is_member(weight) {
            Ok(self)
        } else {
            Err(Error::Membership(format!(
                "exp({} z²) grows too fast for the weight {}|z|² + Re({} z²) at h = {}",
                self.c2, weight.a, weight.b, weight.h
            )))
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.is_zero() && other.is_zero() {
            return 0.0;
        }
        if !self.same_exponent(other) && !(self.is_zero() || other.is_zero()) {
            return f64::INFINITY;
        }
        self.poly.max_abs_diff(&other.poly)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn derivative_of_square() {
        let f = HoloGauss::polynomial(ComplexPoly::monomial(c(1.0, 0.0), 2).unwrap());
        let df = f.differentiate().unwrap();
        assert_eq!(df.poly(), &ComplexPoly::monomial(c(2.0, 0.0), 1).unwrap());
    }

    #[test]
    fn shifted_derivative_annihilates_gaussian() {
        let k = c(0.3, 0.1);
        let f = HoloGauss::exponential(-k / 2.0, c(0.0, 0.0));
        assert!(f.shifted_derivative(k).unwrap().is_zero() || f.shifted_derivative(k).unwrap().poly().max_abs() < 1e-16);
    }

    #[test]
    fn classic_membership() {
        let w = QuadraticWeight::classic(1.0);
        assert!(HoloGauss::exponential(c(0.2, 0.1), c(0.0, 0.0)).is_member(&w));
        assert!(!HoloGauss::exponential(c(0.3, 0.0), c(0.0, 0.0)).is_member(&w));
        assert!(HoloGauss::exponential(c(0.3, 0.0), c(0.0, 0.0)).ensure_member(&w).is_err());
    }
}
