//! Benchmarks for the hot paths: quaternion arithmetic, kernel evaluation,
//! pointwise transforms, and the two quadrature-backed norms.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use num_complex::Complex64;

use qsb_core::{
    bargmann_coeff, bargmann_quadrature, fock_norm_quadrature, inverse_coeff, kernel_a,
    FockElement, GaussHermite, HermiteExpansion, ImaginaryUnit, Quaternion, SliceQuadrature,
};

fn degree16_coeffs() -> Vec<Quaternion> {
    (0..=16)
        .map(|n| {
            let t = n as f64 * 0.37;
            Quaternion::new(t.sin(), t.cos() * 0.5, (0.2 * t).sin(), 1.0 / (1.0 + t))
        })
        .collect()
}

fn quaternion_ops(c: &mut Criterion) {
    let p = Quaternion::new(0.3, -1.1, 0.7, 0.25);
    let q = Quaternion::new(-0.8, 0.4, 1.3, -0.6);
    c.bench_function("hamilton product", |b| {
        b.iter(|| black_box(black_box(p) * black_box(q)))
    });
    c.bench_function("quaternion exp", |b| b.iter(|| black_box(p).exp()));
}

fn kernel_eval(c: &mut Criterion) {
    let q = ImaginaryUnit::new(1.0, 1.0, 1.0)
        .unwrap()
        .embed(Complex64::new(0.6, 0.9));
    c.bench_function("transform kernel A(q; x)", |b| {
        b.iter(|| kernel_a(black_box(q), black_box(0.7), 1.0).unwrap())
    });
}

fn forward_point(c: &mut Criterion) {
    let psi = HermiteExpansion::new(1.0, degree16_coeffs()).unwrap().to_sampled();
    let rule = GaussHermite::new(128).unwrap();
    let q = Quaternion::new(0.4, 0.5, -0.3, 0.8);
    c.bench_function("forward transform at a point, 128 nodes", |b| {
        b.iter(|| bargmann_quadrature(black_box(&psi), black_box(q), 1.0, &rule).unwrap())
    });
}

fn slice_norm(c: &mut Criterion) {
    let f = FockElement::from_coeffs(1.0, degree16_coeffs()).unwrap();
    let rule = SliceQuadrature::new(1.0, 96, 256).unwrap();
    let unit = ImaginaryUnit::new(1.0, 0.0, 1.0).unwrap();
    c.bench_function("slice-quadrature norm, degree 16", |b| {
        b.iter(|| fock_norm_quadrature(black_box(&f), unit, &rule).unwrap())
    });
}

fn coefficient_roundtrip(c: &mut Criterion) {
    let psi = HermiteExpansion::new(1.0, degree16_coeffs()).unwrap();
    c.bench_function("coefficient roundtrip, degree 16", |b| {
        b.iter(|| inverse_coeff(&bargmann_coeff(black_box(&psi))))
    });
}

criterion_group!(
    benches,
    quaternion_ops,
    kernel_eval,
    forward_point,
    slice_norm,
    coefficient_roundtrip
);
criterion_main!(benches);
