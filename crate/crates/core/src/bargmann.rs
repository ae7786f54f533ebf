//! The transform `T_h`, its adjoint, the orthogonal projector onto the
//! weighted holomorphic space, and inner products there.
//!
//! `T_h` is evaluated in closed form on the polynomial-Gaussian class. The
//! adjoint, the projector and the weighted inner product are 2D quadratures
//! whose grids follow the real Gaussian envelope of each integrand.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gaussalg::{partial_gaussian_integral, HoloGauss, PolyGauss};
use crate::phasecore::PhaseParams;
use crate::quad::{GaussEnvelope, GridFunction, QuadGrid, TAIL_TOL};

/// Default number of Gauss–Hermite nodes per axis for 2D rules.
pub const DEFAULT_2D_NODES: usize = 120;

/// `T_h f(z) = C_φ h^{-3/4} ∫ e^{iφ(z,x)/h} f(x) dx`, in closed form.
pub fn transform(p: &PhaseParams, f: &PolyGauss) -> Result<HoloGauss> {
    let h = p.h();
    let i = Complex64::new(0.0, 1.0);
    let g2 = i * p.c() / (2.0 * h) + f.gamma2();
    if !(g2.re < 0.0) {
        return Err(Error::NotIntegrable(format!(
            "transform integrand has quadratic coefficient {g2}"
        )));
    }
    let out = partial_gaussian_integral(f.poly(), g2, f.gamma1(), i * p.b() / h)?;
    let scale = out.c0.exp() * (p.c_phi() * h.powf(-0.75));
    Ok(HoloGauss::new(out.poly.scale(scale), out.c2 + i * p.a() / (2.0 * h), out.c1))
}

/// Log of the adjoint integrand's weight part at `z`:
/// `-i conj(φ(z,x))/h - 2Φ(z)/h`.
fn adjoint_exponent(p: &PhaseParams, z: Complex64, x: f64) -> Complex64 {
    let phase = p.phase(z, Complex64::new(x, 0.0)).conj();
    Complex64::new(0.0, -1.0) * phase / p.h() - 2.0 * p.weight_phi(z) / p.h()
}

/// Tensor grid adapted to the integrand of [`adjoint_quad`].
pub fn adjoint_grid(p: &PhaseParams, u: &HoloGauss, x: f64, n: usize) -> Result<QuadGrid> {
    let h = p.h();
    let w = p.weight();
    let i = Complex64::new(0.0, 1.0);
    let env = GaussEnvelope::from_wirtinger(
        u.c2() - w.b / h,
        Complex64::new(-2.0 * w.a / h, 0.0),
        -i * p.a().conj() / (2.0 * h) - w.b.conj() / h,
        u.c1(),
        -i * p.b().conj() * x / h,
    )?;
    Ok(QuadGrid::tensor_gauss_hermite_2d(&env, n))
}

/// `T_h* U(x) = C_φ h^{-3/4} ∫ e^{-i conj(φ(z,x))/h} U(z) e^{-2Φ(z)/h} L(dz)`.
pub fn adjoint_quad(p: &PhaseParams, u: &HoloGauss, x: f64, grid: &QuadGrid) -> Result<Complex64> {
    u.clone().ensure_member(&p.weight())?;
    if u.is_zero() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let est = grid.integrate(|z| u.poly().eval(z) * (u.exponent_at(z) + adjoint_exponent(p, z, x)).exp());
    Ok(est.checked(TAIL_TOL)? * (p.c_phi() * p.h().powf(-0.75)))
}

/// [`adjoint_quad`] on its default adapted grid.
pub fn adjoint(p: &PhaseParams, u: &HoloGauss, x: f64) -> Result<Complex64> {
    if u.is_zero() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let grid = adjoint_grid(p, u, x, DEFAULT_2D_NODES)?;
    adjoint_quad(p, u, x, &grid)
}

/// Grid for functions of size up to `e^{Φ/h}`: the envelope is `e^{-Φ/h}`.
pub fn weight_grid(p: &PhaseParams, n: usize) -> QuadGrid {
    let w = p.weight();
    let k = 1.0 / p.h();
    let s = [
        [k * (w.a + w.b.re), -k * w.b.im],
        [-k * w.b.im, k * (w.a - w.b.re)],
    ];
    let env = GaussEnvelope { s, center: Complex64::new(0.0, 0.0) };
    QuadGrid::tensor_gauss_hermite_2d(&env, n)
}

/// `(C_Φ/h) ∫ e^{2Ψ(z, conj ζ)/h} U(ζ) e^{-2Φ(ζ)/h} L(dζ)` for `U` sampled
/// on its grid.
pub fn projector_apply(p: &PhaseParams, u: &GridFunction, z: Complex64) -> Result<Complex64> {
    let h = p.h();
    let grid = u.grid();
    let vals: Vec<Complex64> = grid
        .nodes()
        .iter()
        .zip(u.values())
        .map(|(&zeta, &v)| {
            v * ((2.0 * p.kernel_psi(z, zeta.conj()) - 2.0 * p.weight_phi(zeta)) / h).exp()
        })
        .collect();
    let est = grid.integrate_values(&vals);
    Ok(est.checked(TAIL_TOL)? * (p.c_big_phi() / h))
}

/// Tensor grid adapted to `U conj(V) e^{-2Φ/h}`.
pub fn hphi_grid(p: &PhaseParams, u: &HoloGauss, v: &HoloGauss, n: usize) -> Result<QuadGrid> {
    let h = p.h();
    let w = p.weight();
    let env = GaussEnvelope::from_wirtinger(
        u.c2() - w.b / h,
        Complex64::new(-2.0 * w.a / h, 0.0),
        v.c2().conj() - w.b.conj() / h,
        u.c1(),
        v.c1().conj(),
    )?;
    Ok(QuadGrid::tensor_gauss_hermite_2d(&env, n))
}

/// `(U, V)_Φ = ∫ U conj(V) e^{-2Φ/h} L(dz)` on the given grid.
pub fn inner_product_hphi_on(
    p: &PhaseParams,
    u: &HoloGauss,
    v: &HoloGauss,
    grid: &QuadGrid,
) -> Result<Complex64> {
    let weight = p.weight();
    let u = u.clone().ensure_member(&weight)?;
    let v = v.clone().ensure_member(&weight)?;
    if u.is_zero() || v.is_zero() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let h = p.h();
    let est = grid.integrate(|z| {
        let e = u.exponent_at(z) + v.exponent_at(z).conj() - 2.0 * weight.eval(z) / h;
        u.poly().eval(z) * v.poly().eval(z).conj() * e.exp()
    });
    est.checked(TAIL_TOL)
}

/// `(U, V)_Φ` on the default adapted grid.
pub fn inner_product_hphi(p: &PhaseParams, u: &HoloGauss, v: &HoloGauss) -> Result<Complex64> {
    if u.is_zero() || v.is_zero() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let grid = hphi_grid(p, u, v, DEFAULT_2D_NODES)?;
    inner_product_hphi_on(p, u, v, &grid)
}
