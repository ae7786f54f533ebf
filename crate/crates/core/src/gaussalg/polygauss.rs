use num_complex::Complex64;

use super::integral::gaussian_rule_integral;
use super::poly::ComplexPoly;
use crate::error::{Error, Result};

/// `x ↦ poly(x) · exp(gamma2 x² + gamma1 x)` on the real line.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyGauss {
    poly: ComplexPoly,
    gamma2: Complex64,
    gamma1: Complex64,
}

impl PolyGauss {
    /// Fails unless `Re(gamma2) < 0`.
    pub fn new(poly: ComplexPoly, gamma2: Complex64, gamma1: Complex64) -> Result<Self> {
        if !(gamma2.re < 0.0) || !gamma2.is_finite() || !gamma1.is_finite() {
            return Err(Error::NotIntegrable(format!(
                "PolyGauss exponent {gamma2} x² + {gamma1} x is not square integrable"
            )));
        }
        Ok(Self { poly, gamma2, gamma1 })
    }

    /// The zero function, carried with an arbitrary admissible exponent.
    pub fn zero(gamma2: Complex64) -> Result<Self> {
        Self::new(ComplexPoly::zero(), gamma2, Complex64::new(0.0, 0.0))
    }

    /// `c · exp(gamma2 x²)`.
    pub fn gaussian(c: Complex64, gamma2: Complex64) -> Result<Self> {
        Self::new(ComplexPoly::constant(c), gamma2, Complex64::new(0.0, 0.0))
    }

    pub fn poly(&self) -> &ComplexPoly {
        &self.poly
    }

    pub fn gamma2(&self) -> Complex64 {
        self.gamma2
    }

    pub fn gamma1(&self) -> Complex64 {
        self.gamma1
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        self.poly.eval_real(x) * (self.gamma2 * x * x + self.gamma1 * x).exp()
    }

    pub fn with_poly(&self, poly: ComplexPoly) -> Self {
        Self { poly, gamma2: self.gamma2, gamma1: self.gamma1 }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        self.with_poly(self.poly.scale(s))
    }

    /// Pointwise complex conjugate on the real line.
    pub fn conj(&self) -> Self {
        Self {
            poly: self.poly.conj(),
            gamma2: self.gamma2.conj(),
            gamma1: self.gamma1.conj(),
        }
    }

    /// Multiplies by `exp(d2 x² + d1 x)`.
    pub fn mul_exp(&self, d2: Complex64, d1: Complex64) -> Result<Self> {
        Self::new(self.poly.clone(), self.gamma2 + d2, self.gamma1 + d1)
    }

    /// `x · f`.
    pub fn mul_x(&self) -> Result<Self> {
        Ok(self.with_poly(self.poly.shift_up(1)?))
    }

    /// `d/dx f`, which keeps the exponent.
    pub fn d_dx(&self) -> Result<Self> {
        let slope = ComplexPoly::linear(self.gamma1, 2.0 * self.gamma2);
        let poly = &self.poly.derivative() + &self.poly.try_mul(&slope)?;
        Ok(self.with_poly(poly))
    }

    pub fn same_exponent(&self, other: &Self) -> bool {
        self.gamma2 == other.gamma2 && self.gamma1 == other.gamma1
    }

    /// Sum of two functions sharing an exponent; a zero summand adopts the
    /// other's exponent.
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
}

/// `∫ f · conj(g) dx`, exactly, by a Gauss–Hermite rule fitted to the
/// combined exponent.
pub fn inner_product_line(f: &PolyGauss, g: &PolyGauss) -> Result<Complex64> {
    if f.is_zero() || g.is_zero() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let gc = g.conj();
    let degree = f.poly.degree().unwrap_or(0) + gc.poly.degree().unwrap_or(0);
    gaussian_rule_integral(
        |x| f.poly.eval(x) * gc.poly.eval(x),
        degree,
        f.gamma2 + gc.gamma2,
        f.gamma1 + gc.gamma1,
    )
}

/// `‖f‖_{L²}` from the exact inner product.
pub fn norm_line(f: &PolyGauss) -> Result<f64> {
    Ok(inner_product_line(f, f)?.re.max(0.0).sqrt())
}

/// `‖f - g‖` for two functions sharing an exponent.
pub fn distance_line(f: &PolyGauss, g: &PolyGauss) -> Result<f64> {
    norm_line(&f.try_sub(g)?)
}
