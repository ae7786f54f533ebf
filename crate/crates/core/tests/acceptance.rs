//! End-to-end acceptance checks. Each test prints one PASS/FAIL line with the
//! worst measured deviation and the tolerance it is held to.

use std::f64::consts::PI;

use bargmann_lab::bargmann::{inner_product_hphi, projector_apply, transform, weight_grid};
use bargmann_lab::ellipse::EllipseParams;
use bargmann_lab::gaussalg::{gauss_integral, inner_product_line, norm_line};
use bargmann_lab::hermite::{identity_defect, GramMethod, HermiteSystem};
use bargmann_lab::ncho::{eigenfunction_vec, inner_product_vec, spectrum_check, NchoParams, Sign};
use bargmann_lab::quad::{adaptive_integrate, GridFunction};
use bargmann_lab::toeplitz::{
    disk_eigenvalue, radial_eigenvalue, radius_from_groundstate, toeplitz_grid, toeplitz_matrix_quad,
    RadialSymbol,
};
use bargmann_lab::{Complex64, ComplexPoly, PhaseParams, PolyGauss};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn report(id: u32, name: &str, measured: f64, tolerance: f64) {
    let pass = measured <= tolerance;
    println!(
        "criterion {id} [{name}]: {} (measured {measured:.3e}, tolerance {tolerance:.0e})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {id} [{name}] measured {measured:e} > {tolerance:e}");
}

/// `(B, C, h)` triples used throughout.
fn parameter_sets() -> Vec<(Complex64, Complex64, f64)> {
    vec![
        (c(0.0, -1.0), c(0.0, 1.0), 1.0),
        (c(3.0, 0.0), c(1.0, 2.0), 0.5),
        (c(1.0, 0.0), c(0.0, 1.0), 1.0),
        (c(2.0, -1.0), c(0.5, 1.5), 0.7),
        (c(0.5, 0.5), c(-1.0, 0.8), 2.0),
    ]
}

fn systems() -> Vec<HermiteSystem> {
    parameter_sets().into_iter().map(|(b, cc, h)| HermiteSystem::from_bc(b, cc, h).unwrap()).collect()
}

fn random_polygauss(rng: &mut ChaCha8Rng) -> PolyGauss {
    let deg = rng.gen_range(0..=3);
    let coeffs = (0..=deg).map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
    PolyGauss::new(
        ComplexPoly::from_coeffs(coeffs).unwrap(),
        c(-rng.gen_range(0.3..1.5), rng.gen_range(-1.0..1.0)),
        c(rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5)),
    )
    .unwrap()
}

#[test]
fn criterion_1_hermite_orthonormality() {
    let mut exact: f64 = 0.0;
    let mut quad: f64 = 0.0;
    for sys in systems() {
        exact = exact.max(identity_defect(&sys.gram_matrix(16, GramMethod::Exact).unwrap()));
        quad = quad.max(identity_defect(&sys.gram_matrix(16, GramMethod::Quadrature).unwrap()));
    }
    println!("criterion 1 detail: exact {exact:.3e}, quadrature {quad:.3e}");
    report(1, "hermite gram, exact", exact, 1e-10);
    report(1, "hermite gram, quadrature", quad, 1e-6);
}

#[test]
fn criterion_2_oscillator_spectrum() {
    let mut worst: f64 = 0.0;
    for sys in systems() {
        for n in 0..=20 {
            worst = worst.max(sys.eigen_residual(n).unwrap());
        }
    }
    report(2, "modified oscillator residual", worst, 1e-10);
    let classic = HermiteSystem::new(PhaseParams::classic(1.0).unwrap()).unwrap();
    let eig = (0..=20).map(|n| (classic.eigenvalue(n) - (2 * n + 1) as f64).abs()).fold(0.0, f64::max);
    report(2, "classic eigenvalues (2n+1)h", eig, 1e-10);
}

#[test]
fn criterion_3_unitarity_and_reproducing_kernel() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut unitary: f64 = 0.0;
    let mut reproducing: f64 = 0.0;
    for sys in systems() {
        let p = *sys.params();
        for _ in 0..20 {
            let (f, g) = (random_polygauss(&mut rng), random_polygauss(&mut rng));
            let lhs = inner_product_hphi(&p, &transform(&p, &f).unwrap(), &transform(&p, &g).unwrap()).unwrap();
            let rhs = inner_product_line(&f, &g).unwrap();
            unitary = unitary.max((lhs - rhs).norm());
        }
        let grid = weight_grid(&p, 120);
        for n in 0..=6 {
            let u = sys.monomial_basis(n).unwrap();
            let sampled = GridFunction::sample(grid.clone(), |z| u.eval(z));
            for _ in 0..10 {
                let z = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                let got = projector_apply(&p, &sampled, z).unwrap();
                reproducing = reproducing.max((got - u.eval(z)).norm());
            }
        }
    }
    report(3, "transform unitarity", unitary, 1e-6);
    report(3, "reproducing kernel", reproducing, 1e-6);
}

#[test]
fn criterion_4_ncho_spectrum() {
    let mut residual: f64 = 0.0;
    let mut gram: f64 = 0.0;
    for alpha in [1.5, 2.0, 5.0] {
        for h in [1.0, 0.5] {
            let p = NchoParams::new(alpha, h).unwrap();
            let rep = spectrum_check(&p, 11).unwrap();
            residual = rep.entries.iter().map(|e| e.residual).fold(residual, f64::max);
            let fs: Vec<_> = (0..=8)
                .flat_map(|n| [Sign::Plus, Sign::Minus].map(|s| eigenfunction_vec(&p, s, n).unwrap()))
                .collect();
            for (i, f) in fs.iter().enumerate() {
                for (j, g) in fs.iter().enumerate() {
                    let target = if i == j { 1.0 } else { 0.0 };
                    gram = gram.max((inner_product_vec(f, g).unwrap() - c(target, 0.0)).norm());
                }
            }
        }
    }
    report(4, "Q eigen-residual", residual, 1e-10);
    report(4, "combined gram", gram, 1e-10);
}

#[test]
fn criterion_5_ellipse_norms() {
    let classic = PhaseParams::classic(1.0).unwrap();
    let mut worst: f64 = 0.0;
    for (alpha, beta) in [(2.0, 0.0), (2.0, 1.0), (0.5, 3.0)] {
        let p = EllipseParams::new(alpha, beta).unwrap();
        let psis: Vec<_> = (0..=6).map(|n| p.psi_n(n).unwrap()).collect();
        let n0 = inner_product_hphi(&classic, &psis[0], &psis[0]).unwrap();
        worst = worst.max((n0.re - p.psi0_norm_sq()).abs() / p.psi0_norm_sq());
        for m in 0..=6 {
            for n in 0..=6 {
                let got = inner_product_hphi(&classic, &psis[m], &psis[n]).unwrap();
                let scale = p.psi_norm_sq(m).sqrt() * p.psi_norm_sq(n).sqrt();
                let want = if m == n { p.psi_norm_sq(n) } else { 0.0 };
                worst = worst.max((got - c(want, 0.0)).norm() / scale);
            }
        }
    }
    report(5, "psi_n gram by 2D quadrature (relative)", worst, 1e-4);
}

#[test]
fn criterion_6_ellipse_oscillator() {
    let mut worst: f64 = 0.0;
    for (alpha, beta) in [(2.0, 0.0), (2.0, 1.0), (0.5, 3.0)] {
        let p = EllipseParams::new(alpha, beta).unwrap();
        let (_, _, ham) = p.line_ops().unwrap();
        for n in 0..=10 {
            let f = p.big_psi_n(n).unwrap();
            let mu = p.omega() * (2 * n + 1) as f64;
            let diff = ham.apply(&f).unwrap().try_sub(&f.scale(c(mu, 0.0))).unwrap();
            worst = worst.max(norm_line(&diff).unwrap() / norm_line(&f).unwrap());
        }
    }
    report(6, "H_ab eigen-residual", worst, 1e-10);
    let p = EllipseParams::new(2.0, 0.0).unwrap();
    let (_, _, ham) = p.line_ops().unwrap();
    let expect = bargmann_lab::DiffOp::weyl_quadratic(c(1.0, 0.0), c(16.0, 0.0), c(0.0, 0.0), 1.0);
    let eig = (0..=10).map(|n| (p.omega() * (2 * n + 1) as f64 - 4.0 * (2 * n + 1) as f64).abs()).fold(0.0, f64::max);
    report(6, "(2,0) operator is -d2/dx2 + 16x2", ham.max_abs_diff(&expect).max(eig), 1e-12);
}

#[test]
fn criterion_7_rotated_gaussian() {
    let mut worst: f64 = 0.0;
    for rho in [0.5, 1.0, 2.0] {
        for theta in [-0.7, 0.0, 0.7] {
            let closed = gauss_integral(rho, theta).unwrap();
            let rate = Complex64::from_polar(rho * rho, 2.0 * theta);
            // |tail| ≤ e^{-a T²}/(2aT) with a = Re(rate)
            let a = rate.re;
            let mut t_max = 1.0;
            while (-a * t_max * t_max).exp() / (2.0 * a * t_max) > 1e-16 {
                t_max *= 1.2;
            }
            let (half, _): (Complex64, f64) =
                adaptive_integrate(|t: f64| (-rate * t * t).exp(), 0.0, t_max, 1e-14, 100_000).unwrap();
            worst = worst.max((2.0 * half - closed).norm() / closed.norm());
        }
    }
    report(7, "rotated gaussian vs adaptive quadrature", worst, 1e-8);
}

#[test]
fn criterion_8_localization() {
    let mut series: f64 = 0.0;
    for r in [0.5, 1.0, 3.0] {
        let sym = RadialSymbol::indicator(r).unwrap();
        for n in 0..=10 {
            series = series.max((disk_eigenvalue(r, n).unwrap() - radial_eigenvalue(&sym, n).unwrap()).abs());
        }
    }
    report(8, "disk series vs radial integral", series, 1e-10);

    let mut off: f64 = 0.0;
    let mut diag: f64 = 0.0;
    for sym in [RadialSymbol::indicator(1.0).unwrap(), RadialSymbol::exp_decay(0.25).unwrap()] {
        let grid = toeplitz_grid(&sym, 6);
        for m in 0..=6 {
            for n in 0..=6 {
                let v = toeplitz_matrix_quad(&sym, m, n, &grid).unwrap();
                if m == n {
                    diag = diag.max((v.re - radial_eigenvalue(&sym, n).unwrap()).abs().max(v.im.abs()));
                } else {
                    off = off.max(v.norm());
                }
            }
        }
    }
    report(8, "toeplitz off-diagonal", off, 1e-6);
    report(8, "toeplitz diagonal", diag, 1e-5);

    let mut round: f64 = 0.0;
    for r in [0.1, 0.5, 1.0, 2.5, 5.0] {
        let l0 = disk_eigenvalue(r, 0).unwrap();
        round = round.max((radius_from_groundstate(l0).unwrap() - r).abs());
    }
    report(8, "radius round trip", round, 1e-12);
}

#[test]
fn criterion_9_bridge_collinearity() {
    let mut worst: f64 = 0.0;
    for (alpha, beta) in [(2.0, 0.0), (2.0, 1.0), (0.5, 3.0), (1.0, 1.0)] {
        let p = EllipseParams::new(alpha, beta).unwrap();
        let sys = HermiteSystem::new(p.bridge_params().unwrap()).unwrap();
        for n in 0..=10 {
            let big = p.big_psi_n(n).unwrap();
            let phi = sys.hermite_phi(n).unwrap();
            let ip = inner_product_line(&big, &phi).unwrap().norm_sqr();
            let norms = inner_product_line(&big, &big).unwrap().re * inner_product_line(&phi, &phi).unwrap().re;
            worst = worst.max((ip - norms).abs() / norms);
        }
    }
    report(9, "ellipse/hermite collinearity", worst, 1e-10);
}

#[test]
fn classic_psi_norm_value() {
    // ‖ψ_0‖² for (α, β) = (2, 0) is 5π/2
    let p = EllipseParams::new(2.0, 0.0).unwrap();
    assert!((p.psi0_norm_sq() - 2.5 * PI).abs() < 1e-14);
}
