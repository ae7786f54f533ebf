//! Closed-form Gaussian integrals over the real line.
//!
//! Everything reduces to the rotated Gaussian `∫ exp(-ρ² e^{2iθ} t²) dt` by
//! completing the square; the contour shift is legal because the integrands
//! are entire and decay in the strip between the real axis and the shifted one.

use std::f64::consts::{FRAC_PI_4, PI};
use std::sync::OnceLock;

use num_complex::Complex64;

use super::poly::ComplexPoly;
use crate::error::{Error, Result, DEGREE_CAP};
use crate::quad::{gauss_hermite, GaussHermiteRule};

/// `∫_ℝ exp(-ρ² e^{2iθ} t²) dt = √π / (ρ e^{iθ})` for `ρ > 0`, `|θ| < π/4`.
pub fn gauss_integral(rho: f64, theta: f64) -> Result<Complex64> {
    if !(rho > 0.0) || !rho.is_finite() {
        return Err(Error::Domain(format!("rho must be positive, got {rho}")));
    }
    if !(theta.abs() < FRAC_PI_4) {
        return Err(Error::Domain(format!("|2 theta| must be below pi/2, got theta = {theta}")));
    }
    Ok(PI.sqrt() / rho * Complex64::from_polar(1.0, -theta))
}

/// Central moments `∫ t^j exp(γ₂ t²) dt` for `j = 0..=max_j` (odd ones vanish).
///
/// `M_{2m} = Γ(m + ½) (-γ₂)^{-m-½}`, with the principal branch of the square
/// root, which is continuous on `Re(-γ₂) > 0`.
pub fn central_moments(gamma2: Complex64, max_j: usize) -> Result<Vec<Complex64>> {
    ensure_decay(gamma2)?;
    let neg = -gamma2;
    let mut out = vec![Complex64::new(0.0, 0.0); max_j + 1];
    out[0] = PI.sqrt() / neg.sqrt();
    let mut m = 1;
    while 2 * m <= max_j {
        out[2 * m] = out[2 * m - 2] * (m as f64 - 0.5) / neg;
        m += 1;
    }
    Ok(out)
}

/// `∫_ℝ x^k exp(γ₂ x² + γ₁ x) dx`.
pub fn gaussian_moment(gamma2: Complex64, gamma1: Complex64, k: usize) -> Result<Complex64> {
    let p = ComplexPoly::monomial(Complex64::new(1.0, 0.0), k)?;
    poly_gaussian_integral(&p, gamma2, gamma1)
}

/// `∫_ℝ p(x) exp(γ₂ x² + γ₁ x) dx` in closed form.
pub fn poly_gaussian_integral(
    p: &ComplexPoly,
    gamma2: Complex64,
    gamma1: Complex64,
) -> Result<Complex64> {
    let out = partial_gaussian_integral(
        p,
        gamma2,
        gamma1,
        Complex64::new(0.0, 0.0),
    )?;
    Ok(out.poly.coeff(0) * out.c0.exp())
}

/// Result of integrating `x` out of `p(x) exp(γ₂x² + (u + v z)x)`:
/// the function `poly(z) exp(c2 z² + c1 z + c0)`.
#[derive(Debug, Clone)]
pub struct ZGaussian {
    pub poly: ComplexPoly,
    pub c2: Complex64,
    pub c1: Complex64,
    pub c0: Complex64,
}

/// Integrates `x` out of `p(x) exp(γ₂ x² + (u + v z) x)`, leaving a
/// polynomial-times-Gaussian in the parameter `z`.
///
/// With `s(z) = -(u + v z)/(2γ₂)` the shift `x = t + s(z)` gives
/// `Σ_j M_j p^{(j)}(s(z))/j!` times `exp(-(u + v z)²/(4γ₂))`.
pub fn partial_gaussian_integral(
    p: &ComplexPoly,
    gamma2: Complex64,
    u: Complex64,
    v: Complex64,
) -> Result<ZGaussian> {
    ensure_decay(gamma2)?;
    let zero = Complex64::new(0.0, 0.0);
    let quarter = 0.25 / gamma2;
    let c2 = -v * v * quarter;
    let c1 = -2.0 * u * v * quarter;
    let c0 = -u * u * quarter;
    let Some(deg) = p.degree() else {
        return Ok(ZGaussian { poly: ComplexPoly::zero(), c2, c1, c0 });
    };
    let moments = central_moments(gamma2, deg)?;
    let s0 = -u / (2.0 * gamma2);
    let s1 = -v / (2.0 * gamma2);

    let mut acc = ComplexPoly::zero();
    let mut deriv = p.clone();
    let mut factorial = 1.0;
    for (j, &m) in moments.iter().enumerate() {
        if j > 0 {
            deriv = deriv.derivative();
            factorial *= j as f64;
        }
        if j % 2 == 1 || m == zero {
            continue;
        }
        let term = deriv.compose_affine(s0, s1).scale(m / factorial);
        acc = &acc + &term;
    }
    Ok(ZGaussian { poly: acc, c2, c1, c0 })
}

/// `∫_ℝ f(x) exp(γ₂ x² + γ₁ x) dx` for a polynomial `f` of degree at most
/// `degree`, evaluated at complex points.
///
/// Completing the square and rotating the contour onto the steepest-descent
/// line turns the integral into `w e^{c₀} ∫ f(s + w t) e^{-t²} dt` with
/// `w = (-γ₂)^{-1/2}`, which a Gauss–Hermite rule with more than `degree/2`
/// nodes evaluates exactly. Unlike a sum over monomial moments this involves
/// only positive weights, so it does not cancel catastrophically for high
/// degrees.
pub fn gaussian_rule_integral<F>(f: F, degree: usize, gamma2: Complex64, gamma1: Complex64) -> Result<Complex64>
where
    F: Fn(Complex64) -> Complex64,
{
    ensure_decay(gamma2)?;
    let nodes = degree / 2 + 2;
    if nodes >= RULES.len() {
        return Err(Error::DegreeOverflow { degree, cap: 2 * (RULES.len() - 3) });
    }
    let rule = RULES[nodes].get_or_init(|| gauss_hermite(nodes));
    let w = 1.0 / (-gamma2).sqrt();
    let shift = -gamma1 / (2.0 * gamma2);
    let c0 = -gamma1 * gamma1 / (4.0 * gamma2);
    let sum: Complex64 = rule
        .nodes
        .iter()
        .zip(&rule.weights)
        .map(|(&t, &wt)| f(shift + w * t) * wt)
        .sum();
    Ok(sum * w * c0.exp())
}

static RULES: [OnceLock<GaussHermiteRule>; 2 * DEGREE_CAP + 4] = [const { OnceLock::new() }; 2 * DEGREE_CAP + 4];

fn ensure_decay(gamma2: Complex64) -> Result<()> {
    if gamma2.re < 0.0 && gamma2.is_finite() {
        Ok(())
    } else {
        Err(Error::NotIntegrable(format!(
            "quadratic exponent coefficient {gamma2} must have negative real part"
        )))
    }
}
