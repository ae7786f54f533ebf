use bargmann_lab::bargmann::{hphi_grid, inner_product_hphi_on, transform};
use bargmann_lab::hermite::GramMethod;
use bargmann_lab::quad::gauss_hermite;
use bargmann_lab::toeplitz::{disk_eigenvalue, radial_eigenvalue, RadialSymbol};
use bargmann_lab::Complex64;
use bargmann_lab_bench::{sample_points, skewed_system};
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn algebra(c: &mut Criterion) {
    let sys = skewed_system();
    c.bench_function("rodrigues_phi_20", |b| b.iter(|| black_box(skewed_system().hermite_phi(20).unwrap())));
    c.bench_function("ladder_phi_20", |b| b.iter(|| black_box(sys.hermite_phi_ladder(20).unwrap())));
    c.bench_function("eigen_residual_20", |b| b.iter(|| black_box(sys.eigen_residual(20).unwrap())));
    c.bench_function("gram_exact_16", |b| b.iter(|| black_box(sys.gram_matrix(16, GramMethod::Exact).unwrap())));
}

fn quadrature(c: &mut Criterion) {
    c.bench_function("gauss_hermite_200", |b| b.iter(|| black_box(gauss_hermite(200))));
    let sys = skewed_system();
    let p = *sys.params();
    let u = transform(&p, &sys.hermite_phi(3).unwrap()).unwrap();
    let grid = hphi_grid(&p, &u, &u, 120).unwrap();
    c.bench_function("hphi_inner_120x120", |b| b.iter(|| black_box(inner_product_hphi_on(&p, &u, &u, &grid).unwrap())));
    let f = sys.hermite_phi(5).unwrap();
    let zs = sample_points(16, Complex64::new(-1.0, -1.0), Complex64::new(1.0, 1.0));
    c.bench_function("transform_eval_16", |b| {
        b.iter(|| {
            let t = transform(&p, &f).unwrap();
            black_box(zs.iter().map(|&z| t.eval(z)).sum::<Complex64>())
        })
    });
}

fn localization(c: &mut Criterion) {
    let sym = RadialSymbol::indicator(3.0).unwrap();
    c.bench_function("radial_eigenvalue_10", |b| b.iter(|| black_box(radial_eigenvalue(&sym, 10).unwrap())));
    c.bench_function("disk_eigenvalue_10", |b| b.iter(|| black_box(disk_eigenvalue(3.0, 10).unwrap())));
}

criterion_group!(benches, algebra, quadrature, localization);
criterion_main!(benches);
