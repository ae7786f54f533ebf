//! Quadrature rules on the line and the plane.
//!
//! Grids store physical nodes (complex numbers, with zero imaginary part in
//! 1D) and positive weights that already include any change of variables, so
//! an integral is always `Σ w_k f(node_k)`. Sums run in fixed-size chunks in
//! parallel and are combined pairwise, which makes the result independent of
//! the number of worker threads.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;
use std::io::Write;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};

const CHUNK: usize = 2048;
/// Fraction of the outermost 1D nodes forming the edge layer of a grid.
const EDGE_FRACTION: f64 = 0.1;
/// Default bound on the edge-layer contribution, relative to `max(1, |I|)`.
pub const TAIL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridKind {
    GaussHermite1d,
    Tensor2d,
    TrapezoidTruncated,
}

impl GridKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            GridKind::GaussHermite1d => "gauss-hermite-1d",
            GridKind::Tensor2d => "tensor-2d",
            GridKind::TrapezoidTruncated => "trapezoid-truncated",
        }
    }
}

/// Nodes and positive weights on ℝ or ℂ ≅ ℝ².
#[derive(Debug, Clone)]
pub struct QuadGrid {
    nodes: Vec<Complex64>,
    weights: Vec<f64>,
    edge: Vec<bool>,
    kind: GridKind,
}

/// A quadrature sum together with the magnitude of its edge-layer share,
/// used as the truncation estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadEstimate {
    pub value: Complex64,
    pub tail: f64,
}

impl QuadEstimate {
    /// Fails when the edge layer carries more than `tol · max(1, |value|)`.
    pub fn checked(self, tol: f64) -> Result<Complex64> {
        let bound = tol * self.value.norm().max(1.0);
        if self.tail > bound || !self.value.is_finite() {
            Err(Error::Truncation { bound: self.tail, tolerance: bound })
        } else {
            Ok(self.value)
        }
    }
}

/// Real positive definite quadratic envelope `exp(-(s-c)ᵀ S (s-c))` on ℝ²,
/// with `s = (Re z, Im z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussEnvelope {
    pub s: [[f64; 2]; 2],
    pub center: Complex64,
}

impl GaussEnvelope {
    pub fn isotropic(rate: f64, center: Complex64) -> Self {
        Self { s: [[rate, 0.0], [0.0, rate]], center }
    }

    /// Envelope of `exp(E)` for the exponent
    /// `E = zz·z² + zzb·|z|² + zbzb·z̄² + lz·z + lzb·z̄` (constants ignored).
    pub fn from_wirtinger(
        zz: Complex64,
        zzb: Complex64,
        zbzb: Complex64,
        lz: Complex64,
        lzb: Complex64,
    ) -> Result<Self> {
        let suu = -(zz + zzb + zbzb).re;
        let svv = -(-zz + zzb - zbzb).re;
        let suv = (zz - zbzb).im;
        let bu = (lz + lzb).re;
        let bv = -(lz - lzb).im;
        let det = suu * svv - suv * suv;
        if !(suu > 0.0 && det > 0.0) {
            return Err(Error::NotIntegrable(format!(
                "integrand envelope [[{suu}, {suv}], [{suv}, {svv}]] is not positive definite"
            )));
        }
        // center solves 2 S c = b
        let cu = (svv * bu - suv * bv) / (2.0 * det);
        let cv = (suu * bv - suv * bu) / (2.0 * det);
        Ok(Self { s: [[suu, suv], [suv, svv]], center: Complex64::new(cu, cv) })
    }

    /// Eigenvalues (ascending) and the unit eigenvector of the first one.
    fn eigen(&self) -> ([f64; 2], [f64; 2]) {
        let [[a, b], [_, d]] = self.s;
        let mean = 0.5 * (a + d);
        let rad = (0.25 * (a - d) * (a - d) + b * b).sqrt();
        let (l0, l1) = (mean - rad, mean + rad);
        let v = if b.abs() > 1e-300 {
            let (x, y) = (b, l0 - a);
            let n = x.hypot(y);
            [x / n, y / n]
        } else if a <= d {
            [1.0, 0.0]
        } else {
            [0.0, 1.0]
        };
        ([l0, l1], v)
    }
}

impl QuadGrid {
    pub fn nodes(&self) -> &[Complex64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn kind(&self) -> GridKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `∫_ℝ f(x) dx ≈ Σ W_k f(center + scale t_k)` on Gauss–Hermite nodes.
    pub fn gauss_hermite_1d(n: usize, center: f64, scale: f64) -> Self {
        let rule = gauss_hermite(n);
        let edge = edge_mask_1d(n);
        Self {
            nodes: rule.nodes.iter().map(|&t| Complex64::new(center + scale * t, 0.0)).collect(),
            weights: rule.total_weights.iter().map(|&w| w * scale).collect(),
            edge,
            kind: GridKind::GaussHermite1d,
        }
    }

    /// Tensor Gauss–Hermite rule adapted to a Gaussian envelope: nodes are laid
    /// along the principal axes of the envelope and scaled by its decay rates.
    pub fn tensor_gauss_hermite_2d(env: &GaussEnvelope, n: usize) -> Self {
        let rule = gauss_hermite(n);
        let edge1 = edge_mask_1d(n);
        let ([l0, l1], v) = env.eigen();
        let (s0, s1) = (1.0 / l0.sqrt(), 1.0 / l1.sqrt());
        let e0 = Complex64::new(v[0], v[1]) * s0;
        let e1 = Complex64::new(-v[1], v[0]) * s1;
        let jac = s0 * s1;
        let mut nodes = Vec::with_capacity(n * n);
        let mut weights = Vec::with_capacity(n * n);
        let mut edge = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                nodes.push(env.center + e0 * rule.nodes[i] + e1 * rule.nodes[j]);
                weights.push(rule.total_weights[i] * rule.total_weights[j] * jac);
                edge.push(edge1[i] || edge1[j]);
            }
        }
        Self { nodes, weights, edge, kind: GridKind::Tensor2d }
    }

    /// Trapezoid rule on the square `center + [-L, L]²` with the given spacing.
    pub fn trapezoid_2d(center: Complex64, half_width: f64, spacing: f64) -> Self {
        let m = (half_width / spacing).ceil() as i64;
        let step = half_width / m as f64;
        let side = (2 * m + 1) as usize;
        let edge1: Vec<bool> = edge_mask_1d(side);
        let mut nodes = Vec::with_capacity(side * side);
        let mut weights = Vec::with_capacity(side * side);
        let mut edge = Vec::with_capacity(side * side);
        for (i, a) in (-m..=m).enumerate() {
            for (j, b) in (-m..=m).enumerate() {
                let wi = if a.abs() == m { 0.5 } else { 1.0 };
                let wj = if b.abs() == m { 0.5 } else { 1.0 };
                nodes.push(center + Complex64::new(a as f64 * step, b as f64 * step));
                weights.push(wi * wj * step * step);
                edge.push(edge1[i] || edge1[j]);
            }
        }
        Self { nodes, weights, edge, kind: GridKind::TrapezoidTruncated }
    }

    /// Polar tensor rule around the origin: Gauss–Legendre in the radius on
    /// each interval between consecutive `breaks` (the last one is the
    /// truncation radius) times the periodic trapezoid rule in the angle.
    pub fn polar_2d(breaks: &[f64], n_radial: usize, n_angle: usize) -> Self {
        let gl = gauss_legendre(n_radial);
        let mut radii = Vec::new();
        let mut rw = Vec::new();
        let mut redge = Vec::new();
        let mut lo = 0.0;
        let last = breaks.len().saturating_sub(1);
        for (seg, &hi) in breaks.iter().enumerate() {
            let half = 0.5 * (hi - lo);
            let mid = 0.5 * (hi + lo);
            for (k, (&t, &w)) in gl.0.iter().zip(&gl.1).enumerate() {
                let r = mid + half * t;
                radii.push(r);
                rw.push(w * half * r);
                redge.push(seg == last && k as f64 >= (1.0 - EDGE_FRACTION) * n_radial as f64);
            }
            lo = hi;
        }
        let dtheta = 2.0 * PI / n_angle as f64;
        let mut nodes = Vec::with_capacity(radii.len() * n_angle);
        let mut weights = Vec::with_capacity(radii.len() * n_angle);
        let mut edge = Vec::with_capacity(radii.len() * n_angle);
        for ((&r, &w), &e) in radii.iter().zip(&rw).zip(&redge) {
            for k in 0..n_angle {
                nodes.push(Complex64::from_polar(r, k as f64 * dtheta));
                weights.push(w * dtheta);
                edge.push(e);
            }
        }
        Self { nodes, weights, edge, kind: GridKind::Tensor2d }
    }

    /// `Σ w_k f(node_k)` with its edge-layer magnitude.
    pub fn integrate<F>(&self, f: F) -> QuadEstimate
    where
        F: Fn(Complex64) -> Complex64 + Sync,
    {
        let partials: Vec<(Complex64, f64)> = self
            .nodes
            .par_chunks(CHUNK)
            .zip(self.weights.par_chunks(CHUNK))
            .zip(self.edge.par_chunks(CHUNK))
            .map(|((nodes, weights), edge)| {
                let mut sum = Complex64::new(0.0, 0.0);
                let mut tail = 0.0;
                for ((&z, &w), &e) in nodes.iter().zip(weights).zip(edge) {
                    let term = f(z) * w;
                    sum += term;
                    if e {
                        tail += term.norm();
                    }
                }
                (sum, tail)
            })
            .collect();
        let (value, tail) = pairwise_sum(&partials);
        QuadEstimate { value, tail }
    }

    /// Same as [`integrate`](Self::integrate) over precomputed node values.
    pub fn integrate_values(&self, values: &[Complex64]) -> QuadEstimate {
        assert_eq!(values.len(), self.len(), "values must match the grid");
        let partials: Vec<(Complex64, f64)> = values
            .par_chunks(CHUNK)
            .zip(self.weights.par_chunks(CHUNK))
            .zip(self.edge.par_chunks(CHUNK))
            .map(|((vals, weights), edge)| {
                let mut sum = Complex64::new(0.0, 0.0);
                let mut tail = 0.0;
                for ((&v, &w), &e) in vals.iter().zip(weights).zip(edge) {
                    let term = v * w;
                    sum += term;
                    if e {
                        tail += term.norm();
                    }
                }
                (sum, tail)
            })
            .collect();
        let (value, tail) = pairwise_sum(&partials);
        QuadEstimate { value, tail }
    }

    /// Samples `f` at every node, in node order.
    pub fn sample<F>(&self, f: F) -> Vec<Complex64>
    where
        F: Fn(Complex64) -> Complex64 + Sync,
    {
        self.nodes.par_iter().map(|&z| f(z)).collect()
    }
}

fn pairwise_sum(parts: &[(Complex64, f64)]) -> (Complex64, f64) {
    match parts.len() {
        0 => (Complex64::new(0.0, 0.0), 0.0),
        1 => parts[0],
        n => {
            let (a, b) = parts.split_at(n / 2);
            let (x, y) = (pairwise_sum(a), pairwise_sum(b));
            (x.0 + y.0, x.1 + y.1)
        }
    }
}

fn edge_mask_1d(n: usize) -> Vec<bool> {
    let k = ((n as f64 * EDGE_FRACTION / 2.0).ceil() as usize).max(1);
    (0..n).map(|i| i < k || i + k >= n).collect()
}

/// A function sampled on the nodes of a grid.
#[derive(Debug, Clone)]
pub struct GridFunction {
    grid: QuadGrid,
    values: Vec<Complex64>,
}

impl GridFunction {
    pub fn new(grid: QuadGrid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::Domain(format!(
                "{} values for a grid of {} nodes",
                values.len(),
                grid.len()
            )));
        }
        Ok(Self { grid, values })
    }

    pub fn sample<F>(grid: QuadGrid, f: F) -> Self
    where
        F: Fn(Complex64) -> Complex64 + Sync,
    {
        let values = grid.sample(f);
        Self { grid, values }
    }

    pub fn grid(&self) -> &QuadGrid {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Writes `re(node),im(node),weight,re(value),im(value)` rows with a header.
    pub fn write_csv<W: Write>(&self, out: W) -> std::io::Result<()> {
        let mut wtr = csv::Writer::from_writer(out);
        wtr.write_record(["re_node", "im_node", "weight", "re_value", "im_value"])?;
        for ((z, w), v) in self.grid.nodes.iter().zip(&self.grid.weights).zip(&self.values) {
            wtr.serialize((z.re, z.im, w, v.re, v.im))?;
        }
        wtr.flush()
    }
}

/// Gauss–Hermite rule for the weight `e^{-t²}`, nodes ascending.
#[derive(Debug, Clone)]
pub struct GaussHermiteRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    /// `w_k e^{t_k²}`, the weights for integrating against plain Lebesgue measure.
    pub total_weights: Vec<f64>,
}

/// Nodes start from the eigenvalues of the Jacobi matrix and are polished by
/// Newton steps on the orthonormal Hermite recurrence. The recurrence runs on
/// `e^{-t²/2}`-scaled values, so neither large nodes nor tiny weights
/// overflow or lose relative accuracy.
pub fn gauss_hermite(n: usize) -> GaussHermiteRule {
    assert!(n >= 1, "Gauss-Hermite rule needs at least one node");
    let jacobi = DMatrix::from_fn(n, n, |i, j| {
        if i + 1 == j || j + 1 == i {
            (0.5 * i.max(j) as f64).sqrt()
        } else {
            0.0
        }
    });
    let mut guesses: Vec<f64> = jacobi.symmetric_eigenvalues().iter().copied().collect();
    guesses.sort_by(f64::total_cmp);
    let nf = n as f64;
    let mut nodes = Vec::with_capacity(n);
    let mut total_weights = Vec::with_capacity(n);
    for (k, &g) in guesses.iter().enumerate() {
        // symmetric pairs share one Newton solve
        if k >= n / 2 {
            let mirror = n - 1 - k;
            if mirror < nodes.len() {
                let z: f64 = nodes[mirror];
                nodes.push(-z);
                total_weights.push(total_weights[mirror]);
                continue;
            }
        }
        let mut z = g;
        for _ in 0..20 {
            let (p1, p2) = scaled_hermite(n, z);
            let dz = p1 / ((2.0 * nf).sqrt() * p2);
            z -= dz;
            if dz.abs() <= 1e-15 * z.abs().max(1.0) {
                break;
            }
        }
        if n % 2 == 1 && k == n / 2 {
            z = 0.0;
        }
        let (_, p2) = scaled_hermite(n, z);
        let pp = (2.0 * nf).sqrt() * p2;
        nodes.push(z);
        total_weights.push(2.0 / (pp * pp));
    }
    let weights = nodes.iter().zip(&total_weights).map(|(&t, &w)| w * (-t * t).exp()).collect();
    GaussHermiteRule { nodes, weights, total_weights }
}

/// `(h_n(z), h_{n-1}(z))` for orthonormal Hermite functions times `e^{-z²/2}`.
fn scaled_hermite(n: usize, z: f64) -> (f64, f64) {
    let mut p1 = PI.powf(-0.25) * (-0.5 * z * z).exp();
    let mut p2 = 0.0;
    for j in 0..n {
        let p3 = p2;
        p2 = p1;
        let jf = j as f64;
        p1 = z * (2.0 / (jf + 1.0)).sqrt() * p2 - (jf / (jf + 1.0)).sqrt() * p3;
    }
    (p1, p2)
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (mut p1, mut p2) = (1.0, 0.0);
            for j in 0..n {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = ((2.0 * jf + 1.0) * z * p2 - jf * p3) / (jf + 1.0);
            }
            dp = nf * (z * p1 - p2) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-15 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

// Gauss–Kronrod 7/15 abscissae and weights on [-1, 1] (positive half).
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn kronrod<T, F>(f: &F, a: f64, b: f64) -> (T, f64)
where
    T: Copy + std::ops::Add<Output = T> + std::ops::Sub<Output = T> + std::ops::Mul<f64, Output = T> + Norm,
    F: Fn(f64) -> T,
{
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = h * XGK[j];
        let s = f(c - dx) + f(c + dx);
        kron = kron + s * WGK[j];
        if j % 2 == 1 {
            gauss = gauss + s * WG[j / 2];
        }
    }
    let err = (kron - gauss).norm() * h;
    (kron * h, err)
}

/// Magnitude used by the adaptive integrator's error control.
pub trait Norm {
    fn norm(&self) -> f64;
}

impl Norm for f64 {
    fn norm(&self) -> f64 {
        self.abs()
    }
}

impl Norm for Complex64 {
    fn norm(&self) -> f64 {
        Complex64::norm(*self)
    }
}

struct Interval<T> {
    a: f64,
    b: f64,
    value: T,
    err: f64,
}

impl<T> PartialEq for Interval<T> {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl<T> Eq for Interval<T> {}
impl<T> PartialOrd for Interval<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T> Ord for Interval<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Adaptive Gauss–Kronrod (7/15) integration of `f` over `[a, b]`, bisecting
/// the interval with the largest error estimate until the total estimate is
/// below `abs_tol`. Returns the value and the final error estimate.
pub fn adaptive_integrate<T, F>(f: F, a: f64, b: f64, abs_tol: f64, max_intervals: usize) -> Result<(T, f64)>
where
    T: Copy
        + std::ops::Add<Output = T>
        + std::ops::Sub<Output = T>
        + std::ops::Mul<f64, Output = T>
        + Norm,
    F: Fn(f64) -> T,
{
    let (value, err) = kronrod(&f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Interval { a, b, value, err });
    let mut total_err = err;
    while total_err > abs_tol {
        if heap.len() >= max_intervals {
            return Err(Error::NoConvergence { estimate: total_err });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        let (v1, e1) = kronrod(&f, worst.a, mid);
        let (v2, e2) = kronrod(&f, mid, worst.b);
        total_err += e1 + e2 - worst.err;
        heap.push(Interval { a: worst.a, b: mid, value: v1, err: e1 });
        heap.push(Interval { a: mid, b: worst.b, value: v2, err: e2 });
    }
    // sum in position order so the result does not depend on heap layout
    let mut parts: Vec<Interval<T>> = heap.into_vec();
    parts.sort_by(|x, y| x.a.total_cmp(&y.a));
    let mut iter = parts.into_iter();
    let first = iter.next().expect("at least one interval");
    let mut value = first.value;
    let mut err = first.err;
    for iv in iter {
        value = value + iv.value;
        err += iv.err;
    }
    Ok((value, err))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermite_rule_integrates_even_powers() {
        for n in [1, 2, 5, 20, 120, 200] {
            let rule = gauss_hermite(n);
            let s0: f64 = rule.weights.iter().sum();
            assert!((s0 - PI.sqrt()).abs() < 1e-13, "n = {n}: {s0}");
            if n >= 2 {
                let s2: f64 = rule.nodes.iter().zip(&rule.weights).map(|(t, w)| w * t * t).sum();
                assert!((s2 - PI.sqrt() / 2.0).abs() < 1e-13);
            }
            assert!(rule.nodes.windows(2).all(|p| p[0] < p[1]));
        }
    }

    #[test]
    fn hermite_total_weights_integrate_plain_gaussians() {
        // ∫ e^{-x²/4} dx = 2√π, with the rule built for e^{-t²}
        let g = QuadGrid::gauss_hermite_1d(60, 0.0, 1.0);
        let v = g.integrate(|z| (-z * z / 4.0).exp());
        assert!((v.value.re - 2.0 * PI.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn legendre_rule_integrates_polynomials() {
        let (x, w) = gauss_legendre(7);
        let s: f64 = x.iter().zip(&w).map(|(t, w)| w * t.powi(12)).sum();
        assert!((s - 2.0 / 13.0).abs() < 1e-14);
    }

    #[test]
    fn tensor_grid_follows_anisotropic_envelope() {
        let env = GaussEnvelope {
            s: [[0.01, 0.004], [0.004, 2.0]],
            center: Complex64::new(0.5, -0.2),
        };
        let grid = QuadGrid::tensor_gauss_hermite_2d(&env, 40);
        let est = grid.integrate(|z| {
            let (u, v) = (z.re - 0.5, z.im + 0.2);
            Complex64::new(-(0.01 * u * u + 0.008 * u * v + 2.0 * v * v), 0.0).exp()
        });
        let det: f64 = 0.01 * 2.0 - 0.004 * 0.004;
        assert!((est.value.re - PI / det.sqrt()).abs() < 1e-10);
        assert!(est.tail < 1e-20);
    }

    #[test]
    fn envelope_from_wirtinger_classic_weight() {
        // e^{-|z - 1|²/2} = e^{-|z|²/2 + (z + z̄)/2 - 1/2}
        let half = Complex64::new(0.5, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let env = GaussEnvelope::from_wirtinger(zero, -half, zero, half, half).unwrap();
        assert!((env.s[0][0] - 0.5).abs() < 1e-15 && (env.s[1][1] - 0.5).abs() < 1e-15);
        assert!((env.center - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!(GaussEnvelope::from_wirtinger(zero, half, zero, zero, zero).is_err());
    }

    #[test]
    fn polar_grid_area_of_disk() {
        let g = QuadGrid::polar_2d(&[1.0, 3.0], 20, 16);
        let est = g.integrate(|z| if z.norm() <= 1.0 { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) });
        assert!((est.value.re - PI).abs() < 1e-13);
    }

    #[test]
    fn adaptive_kronrod_handles_peaks() {
        let (v, err): (f64, f64) =
            adaptive_integrate(|x: f64| 1.0 / (1e-4 + x * x), -1.0, 1.0, 1e-10, 10_000).unwrap();
        let exact = 2.0 * (1.0f64 / 1e-2).atan() / 1e-2;
        assert!((v - exact).abs() < 1e-8, "{v} vs {exact}, err {err}");
    }

    #[test]
    fn sums_do_not_depend_on_thread_count() {
        let g = QuadGrid::trapezoid_2d(Complex64::new(0.0, 0.0), 6.0, 0.05);
        let f = |z: Complex64| (-z.norm_sqr()).exp() * Complex64::new(z.re.sin(), z.im);
        let a = g.integrate(f);
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let b = pool.install(|| g.integrate(f));
        assert_eq!(a.value, b.value);
    }
}
