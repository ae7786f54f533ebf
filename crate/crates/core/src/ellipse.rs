//! A family attached to the elliptic disks `|αx - i(βx + ξ)| ≤ ρ` in the
//! phase plane (`z = x - iξ`), with `h = 1` throughout.
//!
//! On the Bargmann side `ψ_0 = e^{-az²/4}` and `ψ_n = (Λ*)^n ψ_0`; on the
//! line the images `Ψ_n` are eigenfunctions of a modified oscillator.

use std::f64::consts::{FRAC_PI_4, PI};
use std::io::Write;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gaussalg::{norm_line, DiffOp, HoloGauss, PolyGauss};
use crate::phasecore::PhaseParams;

/// Whether `(α, β)` describes a genuine ellipse or the round disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EllipseKind {
    Elliptic(EllipseParams),
    /// `(α, β) = (1, 0)`: handled by the classic transform and Hermite functions.
    Circular,
}

impl EllipseKind {
    pub fn classify(alpha: f64, beta: f64) -> Result<Self> {
        match EllipseParams::new(alpha, beta) {
            Ok(p) => Ok(EllipseKind::Elliptic(p)),
            Err(Error::Degenerate) => Ok(EllipseKind::Circular),
            Err(e) => Err(e),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            EllipseKind::Elliptic(_) => "elliptic",
            EllipseKind::Circular => "circular",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EllipseParams {
    pub alpha: f64,
    pub beta: f64,
    pub a: Complex64,
    pub lambda: Complex64,
    pub c_ab: Complex64,
    pub a_ab: Complex64,
}

/// Operators of the family; `Λ`, `Λ*` act on entire functions, the others on the line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ladder {
    Lambda,
    LambdaStar,
    P,
    PStar,
    H,
}

/// Argument or result of [`EllipseParams::apply_ladder`].
#[derive(Debug, Clone, PartialEq)]
pub enum Operand {
    Holo(HoloGauss),
    Line(PolyGauss),
}

impl EllipseParams {
    /// With `s = α² + β² + 1`, `d = α² + β² - 1`:
    /// `a = (d + 2iβ)/s`, `λ = 2α²/(s(d - 2iβ))`, `C = (1 - ā)/(2ā)`,
    /// `A = π^{1/4} (s/(1 - iβ))^{1/2}` on the principal branch.
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() || !beta.is_finite() {
            return Err(Error::Domain(format!("need alpha > 0 and finite beta, got ({alpha}, {beta})")));
        }
        if alpha == 1.0 && beta == 0.0 {
            return Err(Error::Degenerate);
        }
        let r2 = alpha * alpha + beta * beta;
        let (s, d) = (r2 + 1.0, r2 - 1.0);
        let a = Complex64::new(d, 2.0 * beta) / s;
        let lambda = 2.0 * alpha * alpha / (s * Complex64::new(d, -2.0 * beta));
        let c_ab = (1.0 - a.conj()) / (2.0 * a.conj());
        let a_ab = PI.powf(0.25) * (s / Complex64::new(1.0, -beta)).sqrt();
        debug_assert!(a_ab.arg().abs() < FRAC_PI_4);
        Ok(Self { alpha, beta, a, lambda, c_ab, a_ab })
    }

    /// `λ/a`, real and positive.
    pub fn ratio(&self) -> f64 {
        (self.lambda / self.a).re
    }

    /// `α²/(1 + β²)`.
    pub fn omega(&self) -> f64 {
        self.alpha * self.alpha / (1.0 + self.beta * self.beta)
    }

    /// `(α² + iβ(α² + β² + 1))/(1 + β²)`, the coefficient of `x` in `P`.
    pub fn line_coeff(&self) -> Complex64 {
        let s = self.alpha * self.alpha + self.beta * self.beta + 1.0;
        Complex64::new(self.alpha * self.alpha, s * self.beta) / (1.0 + self.beta * self.beta)
    }

    /// `‖ψ_0‖² = (α² + β² + 1)π/α`.
    pub fn psi0_norm_sq(&self) -> f64 {
        (self.alpha * self.alpha + self.beta * self.beta + 1.0) * PI / self.alpha
    }

    /// `‖ψ_n‖² = n! (λ/a)^n ‖ψ_0‖²`.
    pub fn psi_norm_sq(&self, n: usize) -> f64 {
        crate::hermite::factorial(n) * self.ratio().powi(n as i32) * self.psi0_norm_sq()
    }

    /// `ψ_n = {e^{-λz²/2} ∂^n e^{λz²/2}} ψ_0`.
    pub fn psi_n(&self, n: usize) -> Result<HoloGauss> {
        let mut g = HoloGauss::exponential(self.lambda / 2.0, Complex64::new(0.0, 0.0));
        for _ in 0..n {
            g = g.differentiate()?;
        }
        Ok(HoloGauss::new(g.poly().clone(), -self.a / 4.0, Complex64::new(0.0, 0.0)))
    }

    /// `ψ_n = (Λ*)^n ψ_0`, one creation step at a time.
    pub fn psi_n_ladder(&self, n: usize) -> Result<HoloGauss> {
        let mut f = HoloGauss::exponential(-self.a / 4.0, Complex64::new(0.0, 0.0));
        for _ in 0..n {
            f = self.lambda_star(&f)?;
        }
        Ok(f)
    }

    /// `Λ = (1/a)∂ + z/2`.
    pub fn lambda_op(&self, f: &HoloGauss) -> Result<HoloGauss> {
        Ok(f.shifted_derivative(self.a / 2.0)?.scale(1.0 / self.a))
    }

    /// `Λ* = ∂ + (a + 2λ)z/2`.
    pub fn lambda_star(&self, f: &HoloGauss) -> Result<HoloGauss> {
        f.shifted_derivative((self.a + 2.0 * self.lambda) / 2.0)
    }

    /// `P = d/dx + c x`, `P* = -d/dx + c̄ x`, `H = P* P + α²/(1 + β²)`.
    pub fn line_ops(&self) -> Result<(DiffOp, DiffOp, DiffOp)> {
        let c = self.line_coeff();
        let d = DiffOp::d_dx(1.0);
        let x = DiffOp::x(1.0);
        let p = d.try_add(&x.scale(c))?;
        let pstar = x.scale(c.conj()).try_sub(&d)?;
        let ham = pstar.compose(&p)?.plus_const(Complex64::new(self.omega(), 0.0));
        Ok((p, pstar, ham))
    }

    pub fn apply_ladder(&self, which: Ladder, f: &Operand) -> Result<Operand> {
        match (which, f) {
            (Ladder::Lambda, Operand::Holo(g)) => Ok(Operand::Holo(self.lambda_op(g)?)),
            (Ladder::LambdaStar, Operand::Holo(g)) => Ok(Operand::Holo(self.lambda_star(g)?)),
            (Ladder::P | Ladder::PStar | Ladder::H, Operand::Line(g)) => {
                let (p, pstar, ham) = self.line_ops()?;
                let op = match which {
                    Ladder::P => p,
                    Ladder::PStar => pstar,
                    _ => ham,
                };
                Ok(Operand::Line(op.apply(g)?))
            }
            (w, _) => Err(Error::Domain(format!("{w:?} does not act on this kind of function"))),
        }
    }

    /// `Ψ_n = A (-C)^n e^{-isβx²/2(1+β²)} e^{α²x²/2(1+β²)} (d/dx)^n e^{-α²x²/(1+β²)}`.
    pub fn big_psi_n(&self, n: usize) -> Result<PolyGauss> {
        let q = 1.0 + self.beta * self.beta;
        let s = self.alpha * self.alpha + self.beta * self.beta + 1.0;
        let mut g = PolyGauss::gaussian(Complex64::new(1.0, 0.0), Complex64::new(-self.alpha * self.alpha / q, 0.0))?;
        for _ in 0..n {
            g = g.d_dx()?;
        }
        let lead = self.a_ab * (-self.c_ab).powu(n as u32);
        g.scale(lead).mul_exp(
            Complex64::new(self.alpha * self.alpha, -s * self.beta) / (2.0 * q),
            Complex64::new(0.0, 0.0),
        )
    }

    /// `α²(2n + 1)/(1 + β²)`.
    pub fn eigenvalue(&self, n: usize) -> f64 {
        self.omega() * (2 * n + 1) as f64
    }

    /// `‖HΨ_n - μ_n Ψ_n‖/‖Ψ_n‖`.
    pub fn eigen_residual(&self, n: usize) -> Result<f64> {
        let (_, _, ham) = self.line_ops()?;
        let f = self.big_psi_n(n)?;
        let diff = ham.apply(&f)?.try_sub(&f.scale(Complex64::new(self.eigenvalue(n), 0.0)))?;
        Ok(norm_line(&diff)? / norm_line(&f)?)
    }

    /// Phase data whose generalized Hermite functions are collinear with `Ψ_n`:
    /// `A = i(1 + β²)/(2α²)`, `B = -i`, `C = ((α² + β² + 1)β + iα²)/(1 + β²)`, `h = 1`.
    pub fn bridge_params(&self) -> Result<PhaseParams> {
        let q = 1.0 + self.beta * self.beta;
        let s = self.alpha * self.alpha + self.beta * self.beta + 1.0;
        PhaseParams::new(
            Complex64::new(0.0, q / (2.0 * self.alpha * self.alpha)),
            Complex64::new(0.0, -1.0),
            Complex64::new(s * self.beta, self.alpha * self.alpha) / q,
            1.0,
        )
    }

    /// `ζ = αx - i(βx + ξ)` for `z = x - iξ`.
    pub fn zeta_map(&self, z: Complex64) -> Complex64 {
        let (x, xi) = (z.re, -z.im);
        Complex64::new(self.alpha * x, -(self.beta * x + xi))
    }

    /// `z = ((α + 1 + iβ)/2α) ζ - ((α - 1 - iβ)/2α) ζ̄`.
    pub fn zeta_inverse(&self, zeta: Complex64) -> Complex64 {
        let two_a = 2.0 * self.alpha;
        Complex64::new(self.alpha + 1.0, self.beta) / two_a * zeta
            - Complex64::new(self.alpha - 1.0, -self.beta) / two_a * zeta.conj()
    }

    /// `samples` points `(x, ξ)` on the boundary `|ζ| = ρ`.
    pub fn boundary_trace(&self, rho: f64, samples: usize) -> Vec<(f64, f64)> {
        (0..samples)
            .map(|k| {
                let theta = 2.0 * PI * k as f64 / samples as f64;
                let z = self.zeta_inverse(Complex64::from_polar(rho, theta));
                (z.re, -z.im)
            })
            .collect()
    }

    /// Boundary trace as CSV with columns `x,xi`.
    pub fn write_trace_csv<W: Write>(&self, rho: f64, samples: usize, out: W) -> std::io::Result<()> {
        let mut wtr = csv::Writer::from_writer(out);
        wtr.write_record(["x", "xi"])?;
        for row in self.boundary_trace(rho, samples) {
            wtr.serialize(row)?;
        }
        wtr.flush()
    }
}

/// Free-function form of [`EllipseParams::new`].
pub fn derived_constants(alpha: f64, beta: f64) -> Result<EllipseParams> {
    EllipseParams::new(alpha, beta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn constants_for_two_zero() {
        let p = EllipseParams::new(2.0, 0.0).unwrap();
        assert!((p.a - c(0.6, 0.0)).norm() < 1e-15);
        assert!((p.lambda - c(8.0 / 15.0, 0.0)).norm() < 1e-15);
        assert!((p.ratio() - 8.0 / 9.0).abs() < 1e-15);
        assert!((p.c_ab - c(1.0 / 3.0, 0.0)).norm() < 1e-15);
        assert!((p.a_ab - c(PI.powf(0.25) * 5f64.sqrt(), 0.0)).norm() < 1e-14);
    }

    #[test]
    fn constants_for_one_one() {
        let p = EllipseParams::new(1.0, 1.0).unwrap();
        assert!((p.a - c(1.0, 2.0) / 3.0).norm() < 1e-15);
        assert!((p.a.norm() - 5f64.sqrt() / 3.0).abs() < 1e-15);
    }

    #[test]
    fn round_disk_is_tagged() {
        assert_eq!(EllipseParams::new(1.0, 0.0), Err(Error::Degenerate));
        assert_eq!(EllipseKind::classify(1.0, 0.0).unwrap().tag(), "circular");
        assert_eq!(EllipseKind::classify(2.0, 0.0).unwrap().tag(), "elliptic");
        assert!(EllipseKind::classify(-1.0, 0.0).is_err());
    }

    #[test]
    fn low_psi() {
        let p = EllipseParams::new(2.0, 1.0).unwrap();
        let psi0 = p.psi_n(0).unwrap();
        assert_eq!(psi0, HoloGauss::exponential(-p.a / 4.0, c(0.0, 0.0)));
        let psi1 = p.psi_n(1).unwrap();
        assert!((psi1.poly().coeff(1) - p.lambda).norm() < 1e-15);
        assert_eq!(psi1.poly().degree(), Some(1));
    }

    #[test]
    fn annihilates_ground_state() {
        let p = EllipseParams::new(2.0, 1.0).unwrap();
        let out = p.lambda_op(&p.psi_n(0).unwrap()).unwrap();
        assert!(out.poly().max_abs() < 1e-15);
    }

    #[test]
    fn big_psi_zero() {
        let p = EllipseParams::new(2.0, 0.0).unwrap();
        let g = p.big_psi_n(0).unwrap();
        assert!((g.gamma2() - c(-2.0, 0.0)).norm() < 1e-15);
        assert!((g.poly().coeff(0) - p.a_ab).norm() < 1e-15);
    }

    #[test]
    fn oscillator_for_two_zero() {
        let p = EllipseParams::new(2.0, 0.0).unwrap();
        let (_, _, ham) = p.line_ops().unwrap();
        let expect = DiffOp::weyl_quadratic(c(1.0, 0.0), c(16.0, 0.0), c(0.0, 0.0), 1.0);
        assert!(ham.max_abs_diff(&expect) < 1e-14);
    }

    #[test]
    fn bridge_examples() {
        let p = EllipseParams::new(2.0, 0.0).unwrap().bridge_params().unwrap();
        assert!((p.c() - c(0.0, 4.0)).norm() < 1e-15);
        let p = EllipseParams::new(1.0, 1.0).unwrap().bridge_params().unwrap();
        assert!((p.c() - c(1.5, 0.5)).norm() < 1e-15);
        assert!(p.is_canonical(1e-15));
    }

    #[test]
    fn zeta_examples() {
        let p = EllipseParams::new(2.0, 0.0).unwrap();
        assert!((p.zeta_map(c(1.0, 0.0)) - c(2.0, 0.0)).norm() < 1e-15);
        assert_eq!(p.zeta_map(c(0.0, 0.0)), c(0.0, 0.0));
    }

    #[test]
    fn ladder_type_mismatch() {
        let p = EllipseParams::new(2.0, 0.0).unwrap();
        let f = Operand::Line(p.big_psi_n(0).unwrap());
        assert!(p.apply_ladder(Ladder::Lambda, &f).is_err());
        assert!(p.apply_ladder(Ladder::H, &f).is_ok());
    }
}
