//! Generalized Hermite functions, the matching monomial system on the
//! weighted holomorphic space, ladder operators and the modified oscillator.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::RwLock;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result, DEGREE_CAP};
use crate::gaussalg::{dd, dd_re, inner_product_line, norm_line, ComplexPoly, DiffOp, ExtPolyGauss, HoloGauss, PolyGauss};
use crate::phasecore::{canonical_a, PhaseParams};
use crate::quad::QuadGrid;

/// How Gram matrices are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GramMethod {
    /// Closed-form Gaussian moments.
    Exact,
    /// Gauss–Hermite quadrature on the line.
    Quadrature,
}

/// One row of an eigen-residual report.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EigenRecord {
    pub n: usize,
    pub eigenvalue: f64,
    pub residual: f64,
}

#[derive(Debug)]
pub struct HermiteSystem {
    params: PhaseParams,
    original_a: Complex64,
    phi: RwLock<HashMap<usize, PolyGauss>>,
}

impl Clone for HermiteSystem {
    fn clone(&self) -> Self {
        let cache = self.phi.read().map(|c| c.clone()).unwrap_or_default();
        Self { params: self.params, original_a: self.original_a, phi: RwLock::new(cache) }
    }
}

impl HermiteSystem {
    /// Normalizes `A` to its canonical value; the given one is kept in
    /// [`original_a`](Self::original_a).
    pub fn new(params: PhaseParams) -> Result<Self> {
        let a = canonical_a(params.b(), params.c())?;
        Ok(Self {
            params: params.with_a(a)?,
            original_a: params.a(),
            phi: RwLock::new(HashMap::new()),
        })
    }

    pub fn from_bc(b: Complex64, c: Complex64, h: f64) -> Result<Self> {
        Self::new(PhaseParams::canonical(b, c, h)?)
    }

    pub fn params(&self) -> &PhaseParams {
        &self.params
    }

    pub fn original_a(&self) -> Complex64 {
        self.original_a
    }

    fn im_c(&self) -> f64 {
        self.params.c().im
    }

    /// `μ_n = (h Im C/|B|²)(2n + 1)`.
    pub fn eigenvalue(&self, n: usize) -> f64 {
        self.params.h() * self.im_c() / self.params.b().norm_sqr() * (2 * n + 1) as f64
    }

    /// Exponent coefficient `-i conj(C)/(2h)` shared by every `φ_n`.
    pub fn gamma2(&self) -> Complex64 {
        Complex64::new(0.0, -1.0) * self.params.c().conj() / (2.0 * self.params.h())
    }

    /// `|B|/√(2πh Im C) · (Bz/√(2h Im C))^n / √n!`.
    pub fn monomial_basis(&self, n: usize) -> Result<HoloGauss> {
        let (h, b, im_c) = (self.params.h(), self.params.b(), self.im_c());
        let lead = b.norm() / (2.0 * PI * h * im_c).sqrt();
        let ratio = b / (2.0 * h * im_c).sqrt();
        let coef = ratio.powu(n as u32) * (lead / factorial(n).sqrt());
        Ok(HoloGauss::polynomial(ComplexPoly::monomial(coef, n)?))
    }

    /// `φ_0 = (Im C/πh)^{1/4} e^{-i conj(C) x²/2h}`.
    pub fn ground_state(&self) -> PolyGauss {
        let norm = (self.im_c() / (PI * self.params.h())).powf(0.25);
        PolyGauss::gaussian(Complex64::new(norm, 0.0), self.gamma2()).expect("Im C > 0")
    }

    /// `φ_n` from the Rodrigues formula
    /// `(Im C/πh)^{1/4} (1/√n!) (-1/√(2h Im C))^n e^{(Im C - i Re C)x²/2h} (hD)^n e^{-Im C x²/h}`.
    pub fn hermite_phi(&self, n: usize) -> Result<PolyGauss> {
        if n > DEGREE_CAP {
            return Err(Error::DegreeOverflow { degree: n, cap: DEGREE_CAP });
        }
        if let Some(f) = self.phi.read().ok().and_then(|c| c.get(&n).cloned()) {
            return Ok(f);
        }
        let (h, im_c) = (self.params.h(), self.im_c());
        let hd = DiffOp::hd(h);
        let mut g = PolyGauss::gaussian(Complex64::new(1.0, 0.0), Complex64::new(-im_c / h, 0.0))?;
        for _ in 0..n {
            g = hd.apply(&g)?;
        }
        let norm = (im_c / (PI * h)).powf(0.25) / factorial(n).sqrt()
            * (-1.0 / (2.0 * h * im_c).sqrt()).powi(n as i32);
        let phi = PolyGauss::new(g.poly().scale(Complex64::new(norm, 0.0)), self.gamma2(), g.gamma1())?;
        if let Ok(mut cache) = self.phi.write() {
            cache.insert(n, phi.clone());
        }
        Ok(phi)
    }

    /// `φ_n = (1/√n!) (B/√(2h Im C))^n (P*)^n φ_0`, built one step at a time.
    pub fn hermite_phi_ladder(&self, n: usize) -> Result<PolyGauss> {
        if n > DEGREE_CAP {
            return Err(Error::DegreeOverflow { degree: n, cap: DEGREE_CAP });
        }
        let (_, pstar, _) = self.ladder_ops();
        let step = self.params.b() / (2.0 * self.params.h() * self.im_c()).sqrt();
        let mut f = self.ground_state();
        for k in 0..n {
            f = pstar.apply(&f)?.scale(step / ((k + 1) as f64).sqrt());
        }
        Ok(f)
    }

    /// `P = -(hD + conj(C) x)/conj(B)`, `P* = -(hD + Cx)/B`, and
    /// `H = |B|^{-2} Op^W(ξ² + |C|²x² + (C + conj C) xξ)`.
    pub fn ladder_ops(&self) -> (DiffOp, DiffOp, DiffOp) {
        let (b, c, h) = (self.params.b(), self.params.c(), self.params.h());
        let minus_one = Complex64::new(-1.0, 0.0);
        let p = DiffOp::hd(h)
            .try_add(&DiffOp::x(h).scale(c.conj()))
            .expect("same h")
            .scale(minus_one / b.conj());
        let pstar = DiffOp::hd(h)
            .try_add(&DiffOp::x(h).scale(c))
            .expect("same h")
            .scale(minus_one / b);
        let one = Complex64::new(1.0, 0.0);
        let ham = DiffOp::weyl_quadratic(one, Complex64::new(c.norm_sqr(), 0.0), c + c.conj(), h)
            .scale(Complex64::new(1.0 / b.norm_sqr(), 0.0));
        (p, pstar, ham)
    }

    /// `‖Hφ_n - μ_n φ_n‖ / ‖φ_n‖` with closed-form norms. The Rodrigues
    /// polynomial and the action of `H` are carried in double-double, since
    /// the monomial coefficients of `Hφ_n` and `μ_n φ_n` agree to many digits.
    pub fn eigen_residual(&self, n: usize) -> Result<f64> {
        if n > DEGREE_CAP {
            return Err(Error::DegreeOverflow { degree: n, cap: DEGREE_CAP });
        }
        let (b, c, h) = (self.params.b(), self.params.c(), self.params.h());
        let (h_dd, im_c) = (dd_re(h), dd_re(c.im));
        let hd = DiffOp::hd(h);
        let mut g = ExtPolyGauss::gaussian(-im_c / h_dd);
        for _ in 0..n {
            g = hd.apply_extended(&g);
        }
        let gamma2 = dd(Complex64::new(0.0, -1.0)) * dd(c.conj()) / (dd_re(2.0) * h_dd);
        let phi = g.with_gamma2(gamma2);
        let b_sq = dd_re(b.re) * dd_re(b.re) + dd_re(b.im) * dd_re(b.im);
        let mu = h_dd * im_c * dd_re((2 * n + 1) as f64) / b_sq;
        let (_, _, ham) = self.ladder_ops();
        let diff = ham.apply_extended(&phi).add(&phi.scale(-mu));
        Ok(norm_line(&diff.to_polygauss()?)? / norm_line(&phi.to_polygauss()?)?)
    }

    pub fn eigen_report(&self, count: usize) -> Result<Vec<EigenRecord>> {
        (0..count)
            .map(|n| {
                Ok(EigenRecord { n, eigenvalue: self.eigenvalue(n), residual: self.eigen_residual(n)? })
            })
            .collect()
    }

    /// Gram matrix of `φ_0, …, φ_{N-1}`.
    pub fn gram_matrix(&self, count: usize, method: GramMethod) -> Result<DMatrix<Complex64>> {
        if count > DEGREE_CAP {
            return Err(Error::DegreeOverflow { degree: count, cap: DEGREE_CAP });
        }
        let phis = (0..count).map(|n| self.hermite_phi(n)).collect::<Result<Vec<_>>>()?;
        match method {
            GramMethod::Exact => {
                let mut g = DMatrix::zeros(count, count);
                for i in 0..count {
                    for j in 0..count {
                        g[(i, j)] = inner_product_line(&phis[i], &phis[j])?;
                    }
                }
                Ok(g)
            }
            GramMethod::Quadrature => {
                // |φ_i conj φ_j| decays like e^{-Im C x²/h}
                let scale = (self.params.h() / self.im_c()).sqrt();
                let grid = QuadGrid::gauss_hermite_1d(count.max(60) + 40, 0.0, scale);
                let samples: Vec<Vec<Complex64>> =
                    phis.iter().map(|f| grid.nodes().iter().map(|z| f.eval(z.re)).collect()).collect();
                let mut g = DMatrix::zeros(count, count);
                for i in 0..count {
                    for j in 0..count {
                        let vals: Vec<Complex64> =
                            samples[i].iter().zip(&samples[j]).map(|(a, b)| a * b.conj()).collect();
                        g[(i, j)] = grid.integrate_values(&vals).value;
                    }
                }
                Ok(g)
            }
        }
    }
}

/// Largest entry of `G - I`.
pub fn identity_defect(g: &DMatrix<Complex64>) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..g.nrows() {
        for j in 0..g.ncols() {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((g[(i, j)] - Complex64::new(target, 0.0)).norm());
        }
    }
    worst
}

pub(crate) fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn classic() -> HermiteSystem {
        HermiteSystem::new(PhaseParams::classic(1.0).unwrap()).unwrap()
    }

    #[test]
    fn classic_ground_state() {
        let phi0 = classic().hermite_phi(0).unwrap();
        assert!((phi0.poly().coeff(0) - c(PI.powf(-0.25), 0.0)).norm() < 1e-15);
        assert!((phi0.gamma2() - c(-0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn classic_ladder_forms() {
        // P = h d/dx + x, P* = -h d/dx + x
        let (p, pstar, ham) = classic().ladder_ops();
        let d = DiffOp::d_dx(1.0);
        let x = DiffOp::x(1.0);
        assert!(p.max_abs_diff(&d.try_add(&x).unwrap()) < 1e-15);
        assert!(pstar.max_abs_diff(&x.try_sub(&d).unwrap()) < 1e-15);
        let expect = DiffOp::weyl_quadratic(c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), 1.0);
        assert!(ham.max_abs_diff(&expect) < 1e-15);
    }

    #[test]
    fn classic_monomial_normalization() {
        let v0 = classic().monomial_basis(0).unwrap();
        assert!((v0.poly().coeff(0).norm() - 1.0 / (2.0 * PI).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn records_original_a() {
        let p = PhaseParams::new(c(5.0, 1.0), c(3.0, 0.0), c(1.0, 2.0), 1.0).unwrap();
        let sys = HermiteSystem::new(p).unwrap();
        assert_eq!(sys.original_a(), c(5.0, 1.0));
        assert!(sys.params().is_canonical(1e-14));
        assert!((sys.eigenvalue(0) - 2.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn ground_state_is_annihilated() {
        let sys = HermiteSystem::from_bc(c(3.0, 0.0), c(1.0, 2.0), 0.5).unwrap();
        let (p, _, _) = sys.ladder_ops();
        assert!(p.apply(&sys.ground_state()).unwrap().poly().max_abs() < 1e-15);
    }

    #[test]
    fn degree_cap_is_enforced() {
        assert!(matches!(classic().hermite_phi(DEGREE_CAP + 1), Err(Error::DegreeOverflow { .. })));
    }

    #[test]
    fn one_by_one_gram() {
        let g = classic().gram_matrix(1, GramMethod::Exact).unwrap();
        assert!((g[(0, 0)] - c(1.0, 0.0)).norm() < 1e-15);
    }
}
