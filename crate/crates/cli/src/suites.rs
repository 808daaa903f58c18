//! The verification suites behind `qsb verify`. Each suite checks one
//! identity or property of the library against an independent computation
//! (closed form, alternate path, or frozen external reference) and returns
//! the worst residual it saw. The registry pins a default tolerance per
//! suite; the runner compares, times, and assembles the report.
//!
//! Determinism contract: suites run in registry order, drawing from one
//! seeded ChaCha8 stream, and never branch on timing, so every numeric field
//! of the report is reproducible from the config alone.

use std::f64::consts::PI;
use std::time::Instant;

use anyhow::bail;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use qsb_core::{
    bargmann_coeff, bargmann_quadrature, check_diag, check_intertwine, extend, fock_inner,
    fock_inner_quadrature, fock_norm_quadrature, generating_partial_sum, hermite_h,
    hermite_norm_sq, inverse_coeff, inverse_quadrature, kernel_a, kernel_norm_sq, kernel_section,
    point_eval_bound, qft_expansion, reproduce, reproducing_kernel, split, FockElement,
    GaussHermite, HermiteExpansion, ImaginaryUnit, PowerSeries, Quaternion, SliceQuadrature,
};

use crate::config::RunConfig;
use crate::report::{Entry, Report, Summary, ERROR_RESIDUAL, STATUS_FAIL, STATUS_PASS};

type SuiteResult = qsb_core::Result<f64>;

pub struct Suite {
    pub name: &'static str,
    pub anchor: &'static str,
    pub tolerance: f64,
    pub run: fn(&RunConfig, &mut ChaCha8Rng) -> SuiteResult,
}

pub const SUITES: &[Suite] = &[
    Suite {
        name: "quat-modulus-multiplicative",
        anchor: "|p q| = |p| |q|",
        tolerance: 1e-12,
        run: quat_modulus,
    },
    Suite {
        name: "quat-conj-antihomomorphism",
        anchor: "conj(p q) = conj(q) conj(p)",
        tolerance: 1e-12,
        run: quat_conj,
    },
    Suite {
        name: "quat-unit-square",
        anchor: "u^2 = -1 for unit pure u",
        tolerance: 1e-12,
        run: quat_unit_square,
    },
    Suite {
        name: "quat-power-binary",
        anchor: "q^n by squaring = q^n by repeated product",
        tolerance: 1e-10,
        run: quat_power,
    },
    Suite {
        name: "quat-exp-slice",
        anchor: "exp(x + y I) = e^x (cos y + I sin y)",
        tolerance: 1e-13,
        run: quat_exp_slice,
    },
    Suite {
        name: "hermite-recurrence-reference",
        anchor: "h_n recurrence = Rodrigues-form reference, n <= 6",
        tolerance: 1e-11,
        run: hermite_reference,
    },
    Suite {
        name: "hermite-orthogonality",
        anchor: "int h_m h_n dx = 0 for m != n",
        tolerance: 1e-8,
        run: hermite_orthogonality,
    },
    Suite {
        name: "hermite-norms",
        anchor: "int h_n^2 dx = 2^n nu^n n! sqrt(pi/nu)",
        tolerance: 1e-9,
        run: hermite_norms,
    },
    Suite {
        name: "hermite-parseval",
        anchor: "sum_n |c_n|^2 = int |psi|^2 dx",
        tolerance: 1e-8,
        run: hermite_parseval,
    },
    Suite {
        name: "monomial-norms",
        anchor: "<e_m, e_n> = pi m! / nu^(m+1) delta_mn",
        tolerance: 1e-9,
        run: monomial_norms,
    },
    Suite {
        name: "split-roundtrip",
        anchor: "f(x + y I) = F(x + iy) + G(x + iy) J",
        tolerance: 1e-12,
        run: split_roundtrip,
    },
    Suite {
        name: "split-norm-identity",
        anchor: "|f_I|^2 = |F|^2 + |G|^2",
        tolerance: 1e-10,
        run: split_norm_identity,
    },
    Suite {
        name: "representation-formula",
        anchor: "2 f(x + y J) = (1 - J I) f(x + y I) + (1 + J I) f(x - y I)",
        tolerance: 1e-10,
        run: representation_formula,
    },
    Suite {
        name: "extension-roundtrip",
        anchor: "extension of f restricted to C_I = f",
        tolerance: 1e-10,
        run: extension_roundtrip,
    },
    Suite {
        name: "slice-holomorphy",
        anchor: "dbar_I of f restricted to C_I = 0",
        tolerance: 1e-6,
        run: slice_holomorphy,
    },
    Suite {
        name: "fock-slice-independence",
        anchor: "norm_I(f) = norm_J(f), and within factor 2",
        tolerance: 1e-8,
        run: fock_slice_independence,
    },
    Suite {
        name: "fock-reproducing",
        anchor: "f(q) = <f, K_q>",
        tolerance: 1e-7,
        run: fock_reproducing,
    },
    Suite {
        name: "kernel-hermitian",
        anchor: "conj(K(p, q)) = K(q, p)",
        tolerance: 1e-12,
        run: kernel_hermitian,
    },
    Suite {
        name: "kernel-inner-consistency",
        anchor: "<K_q, K_p> = K(p, q)",
        tolerance: 1e-7,
        run: kernel_inner_consistency,
    },
    Suite {
        name: "kernel-norm-three-ways",
        anchor: "norm(A_q)^2 = K(q, q) = (nu/pi) e^(nu |q|^2)",
        tolerance: 1e-8,
        run: kernel_norm_three_ways,
    },
    Suite {
        name: "point-eval-bound",
        anchor: "|f(q)| <= (nu/pi)^(1/2) e^(nu |q|^2 / 2) norm(f)",
        tolerance: 1e-12,
        run: point_eval_bound_suite,
    },
    Suite {
        name: "action-lemma",
        anchor: "B h_n = (nu/pi)^(1/4) 2^(n/2) nu^n q^n",
        tolerance: 1e-8,
        run: action_lemma,
    },
    Suite {
        name: "isometry-coefficient",
        anchor: "norm(B psi) = norm(psi), coefficient path",
        tolerance: 1e-12,
        run: isometry_coefficient,
    },
    Suite {
        name: "isometry-quadrature",
        anchor: "norm(B psi) = norm(psi), quadrature paths",
        tolerance: 1e-7,
        run: isometry_quadrature,
    },
    Suite {
        name: "basis-orthogonality",
        anchor: "<B psi_m, B psi_n> = delta_mn",
        tolerance: 1e-12,
        run: basis_orthogonality,
    },
    Suite {
        name: "kernel-section-identity",
        anchor: "B(psi)(q) = <psi, conj(A_q)>",
        tolerance: 1e-8,
        run: kernel_section_identity,
    },
    Suite {
        name: "generating-series",
        anchor: "A(q; x) = sum_n s_n psi_n(x) q^n",
        tolerance: 1e-10,
        run: generating_series,
    },
    Suite {
        name: "inverse-paths",
        anchor: "inverse by slice integral = inverse by coefficients",
        tolerance: 1e-7,
        run: inverse_paths,
    },
    Suite {
        name: "transform-roundtrip",
        anchor: "Binv B = id and B Binv = id",
        tolerance: 1e-12,
        run: transform_roundtrip,
    },
    Suite {
        name: "qft-eigenrelation",
        anchor: "F_I h_n = sqrt(2 pi) I^n h_n (nu = 1)",
        tolerance: 1e-6,
        run: qft_eigenrelation,
    },
    Suite {
        name: "qft-constants",
        anchor: "c int e^(Ixy) psi dy = c F_I(psi); F_I(psi c) = F_I(psi) c",
        tolerance: 1e-12,
        run: qft_constants,
    },
    Suite {
        name: "qft-intertwine",
        anchor: "B(psi)(I x / (sqrt2 nu)) = (nu/pi)^(3/4) e^(x^2/(4 nu)) F_I(e^(-nu y^2/2) psi)(x)",
        tolerance: 1e-6,
        run: qft_intertwine,
    },
    Suite {
        name: "qft-diagonalization",
        anchor: "B F_I Binv (f)(x) = sqrt(2 pi) f(I x) (nu = 1)",
        tolerance: 1e-6,
        run: qft_diagonalization,
    },
];

pub fn run_suites(config: &RunConfig) -> anyhow::Result<Report> {
    config.validate()?;
    for name in config.tolerance_overrides.keys() {
        if !SUITES.iter().any(|s| s.name == name) {
            bail!("--tol names unknown suite {name:?}");
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut entries = Vec::with_capacity(SUITES.len());
    let mut passed = 0;
    let mut failed = 0;
    for suite in SUITES {
        let tolerance = *config
            .tolerance_overrides
            .get(suite.name)
            .unwrap_or(&suite.tolerance);
        let start = Instant::now();
        let outcome = (suite.run)(config, &mut rng);
        let runtime_ms = start.elapsed().as_secs_f64() * 1e3;
        let (residual, detail) = match outcome {
            Ok(r) => (r, None),
            Err(e) => (ERROR_RESIDUAL, Some(e.to_string())),
        };
        let status = if residual <= tolerance {
            passed += 1;
            STATUS_PASS
        } else {
            failed += 1;
            STATUS_FAIL
        };
        entries.push(Entry {
            name: suite.name.to_string(),
            anchor: suite.anchor.to_string(),
            residual,
            tolerance,
            status,
            runtime_ms,
            detail,
        });
    }
    Ok(Report {
        config: config.clone(),
        entries,
        summary: Summary { passed, failed },
    })
}

// ---- shared helpers ----

const NU_SWEEP: [f64; 3] = [0.5, 1.0, 2.0];

fn fixed_units() -> [ImaginaryUnit; 3] {
    [
        ImaginaryUnit::I,
        ImaginaryUnit::new(1.0, 1.0, 1.0).expect("unit direction"),
        ImaginaryUnit::new(1.0, 0.0, 1.0).expect("unit direction"),
    ]
}

fn rand_quat(rng: &mut ChaCha8Rng, scale: f64) -> Quaternion {
    Quaternion::new(
        rng.random_range(-scale..scale),
        rng.random_range(-scale..scale),
        rng.random_range(-scale..scale),
        rng.random_range(-scale..scale),
    )
}

fn rand_unit(rng: &mut ChaCha8Rng) -> ImaginaryUnit {
    loop {
        let x: f64 = rng.sample(StandardNormal);
        let y: f64 = rng.sample(StandardNormal);
        let z: f64 = rng.sample(StandardNormal);
        if (x * x + y * y + z * z).sqrt() > 0.2 {
            return ImaginaryUnit::new(x, y, z).expect("nonzero direction");
        }
    }
}

fn rand_coeffs(rng: &mut ChaCha8Rng, degree: usize, scale: f64) -> Vec<Quaternion> {
    (0..=degree).map(|_| rand_quat(rng, scale)).collect()
}

fn rel(lhs: f64, rhs: f64) -> f64 {
    (lhs - rhs).abs() / rhs.abs().max(1e-300)
}

fn scaled(diff: Quaternion, reference: Quaternion) -> f64 {
    diff.modulus() / (1.0 + reference.modulus())
}

fn grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let step = (hi - lo) / (count.max(2) - 1) as f64;
    (0..count).map(|k| lo + step * k as f64).collect()
}

// ---- quaternion algebra ----

fn quat_modulus(_cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let p = rand_quat(rng, 2.0);
        let q = rand_quat(rng, 2.0);
        worst = worst.max(rel((p * q).modulus(), p.modulus() * q.modulus()));
    }
    Ok(worst)
}

fn quat_conj(_cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let p = rand_quat(rng, 2.0);
        let q = rand_quat(rng, 2.0);
        let diff = (p * q).conj() - q.conj() * p.conj();
        let comp = diff
            .w
            .abs()
            .max(diff.x.abs())
            .max(diff.y.abs())
            .max(diff.z.abs());
        worst = worst.max(comp / (1.0 + p.modulus() * q.modulus()));
    }
    Ok(worst)
}

fn quat_unit_square(_cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let u = rand_unit(rng).as_quaternion();
        worst = worst.max((u * u + Quaternion::ONE).modulus());
    }
    Ok(worst)
}

fn quat_power(_cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut worst = 0.0f64;
    for _ in 0..2_000 {
        let q = rand_quat(rng, 1.0);
        let n = rng.random_range(0..=64u32);
        let fast = q.powu(n);
        let mut slow = Quaternion::ONE;
        for _ in 0..n {
            slow = slow * q;
        }
        worst = worst.max((fast - slow).modulus() / slow.modulus().max(1e-300));
    }
    Ok(worst)
}

fn quat_exp_slice(_cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let z = Complex64::new(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
        let u = rand_unit(rng);
        let general = u.embed(z).exp();
        let through_c = u.embed(z.exp());
        worst = worst.max((general - through_c).modulus() / through_c.modulus());
    }
    Ok(worst)
}

// ---- weighted Hermite basis ----

// Rodrigues-form values computed externally at 50-digit precision:
// (n, x, nu, h_n(x))
const HERMITE_REFERENCE: [(usize, f64, f64, f64); 35] = [
    (0, 0.3, 0.5, 0.9777512371933363639286),
    (0, -0.7, 1.0, 0.7827045382418681677109),
    (0, 1.1, 2.0, 0.2981972794298873779316),
    (0, 0.25, 1.0, 0.9692332344763440818481),
    (0, -1.3, 0.5, 0.6554062543268405127577),
    (1, 0.3, 0.5, 0.2933253711580009091786),
    (1, -0.7, 1.0, -1.095786353538615434795),
    (1, 1.1, 2.0, 1.312068029491504462899),
    (1, 0.25, 1.0, 0.4846166172381720409241),
    (1, -1.3, 0.5, -0.8520281306248926665850),
    (2, 0.3, 0.5, -0.8897536258459360911750),
    (2, -0.7, 1.0, -0.03130818152967472670843),
    (2, 1.1, 2.0, 4.580310212043070125029),
    (2, 0.25, 1.0, -1.696158160333602143234),
    (2, -1.3, 0.5, 0.4522303154855199538028),
    (3, 0.3, 0.5, -0.8535768300697826457097),
    (3, -0.7, 1.0, 4.426976868296006356573),
    (3, 1.1, 2.0, 9.656820697057472846937),
    (3, 0.25, 1.0, -2.786545549119489235313),
    (3, -1.3, 0.5, 1.116156851118609393226),
    (4, 0.3, 0.5, 2.413187828516873479812),
    (4, -0.7, 1.0, -6.009918526436360538951),
    (4, 1.1, 2.0, -12.47371147746396097383),
    (4, 0.25, 1.0, 8.783676187441868241749),
    (4, -1.3, 0.5, -2.807694852910752072603),
    (5, 0.3, 0.5, 4.138263668834192626782),
    (5, -0.7, 1.0, -27.00192900935714609805),
    (5, 1.1, 2.0, -209.3934616537609938358),
    (5, 0.25, 1.0, 26.68420248667684800338),
    (5, -1.3, 0.5, -0.8146240956904598785219),
    (6, 0.3, 0.5, -10.82446004193410961103),
    (6, -0.7, 1.0, 97.90188587746360992678),
    (6, 1.1, 2.0, -671.8570017272691534011),
    (6, 0.25, 1.0, -74.49466063108025841580),
    (6, -1.3, 0.5, 15.09748558895135820509),
];

fn hermite_reference(_cfg: &RunConfig, _rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut worst = 0.0f64;
    for (n, x, nu, want) in HERMITE_REFERENCE {
        let got = hermite_h(n, x, nu)?;
        worst = worst.max((got - want).abs() / want.abs().max(1.0));
    }
    Ok(worst)
}

fn hermite_orthogonality(cfg: &RunConfig, _rng: &mut ChaCha8Rng) -> SuiteResult {
    let nu = cfg.nu;
    let rule = GaussHermite::new(cfg.gh_nodes)?;
    let max_n = 20usize;
    let norms: Vec<f64> = (0..=max_n)
        .map(|n| hermite_norm_sq(n, nu).map(f64::sqrt))
        .collect::<qsb_core::Result<_>>()?;
    let mut worst = 0.0f64;
    for m in 0..max_n {
        for n in (m + 1)..=max_n {
            let integral = rule.integrate_gaussian(nu, |x| {
                Quaternion::from_real(
                    hermite_h(m, x, nu).expect("validated weight")
                        * hermite_h(n, x, nu).expect("validated weight"),
                )
            })?;
            worst = worst.max(integral.w.abs() / (norms[m] * norms[n]));
        }
    }
    Ok(worst)
}

fn hermite_norms(cfg: &RunConfig, _rng: &mut ChaCha8Rng) -> SuiteResult {
    let rule = GaussHermite::new(cfg.gh_nodes)?;
    let mut worst = 0.0f64;
    for nu in NU_SWEEP {
        for n in 0..=20usize {
            let got = rule
                .integrate_gaussian(nu, |x| {
                    let h = hermite_h(n, x, nu).expect("validated weight");
                    Quaternion::from_real(h * h)
                })?
                .w;
            worst = worst.max(rel(got, hermite_norm_sq(n, nu)?));
        }
    }
    Ok(worst)
}

fn hermite_parseval(cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let nu = cfg.nu;
    let rule = GaussHermite::new(cfg.gh_nodes)?;
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let psi = HermiteExpansion::new(nu, rand_coeffs(rng, 16, 1.0))?;
        let quadrature = rule
            .integrate_gaussian(nu, |x| Quaternion::from_real(psi.eval(x).norm_sqr()))?
            .w;
        worst = worst.max(rel(psi.norm_sq(), quadrature));
    }
    Ok(worst)
}

// ---- Fock space ----

fn monomial_norms(cfg: &RunConfig, _rng: &mut ChaCha8Rng) -> SuiteResult {
    let units = fixed_units();
    let mut worst = 0.0f64;
    for (k, nu) in NU_SWEEP.into_iter().enumerate() {
        let rule = SliceQuadrature::new(nu, cfg.radial_nodes, cfg.angular_count)?;
        let unit = units[k % units.len()];
        for n in 0..=20usize {
            let got = fock_norm_quadrature(&FockElement::monomial(nu, n)?, unit, &rule)?;
            worst = worst.max(rel(got, monomial_inner_diag(n, nu)?));
        }
        for m in 0..=6usize {
            for n in 0..=6usize {
                if m == n {
                    continue;
                }
                let ip = fock_inner_quadrature(
                    &FockElement::monomial(nu, m)?,
                    &FockElement::monomial(nu, n)?,
                    unit,
                    &rule,
                )?;
                let scale = (monomial_inner_diag(m, nu)? * monomial_inner_diag(n, nu)?).sqrt();
                worst = worst.max(ip.modulus() / scale);
            }
        }
    }
    Ok(worst)
}

fn monomial_inner_diag(n: usize, nu: f64) -> qsb_core::Result<f64> {
    qsb_core::monomial_inner(n, n, nu)
}

fn fock_slice_independence(cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let rules: Vec<SliceQuadrature> = NU_SWEEP
        .iter()
        .map(|&nu| SliceQuadrature::new(nu, cfg.radial_nodes, cfg.angular_count))
        .collect::<qsb_core::Result<_>>()?;
    let mut worst = 0.0f64;
    for idx in 0..200 {
        let nu = NU_SWEEP[idx % 3];
        let rule = &rules[idx % 3];
        let degree = rng.random_range(1..=16usize);
        let f = FockElement::from_coeffs(nu, rand_coeffs(rng, degree, 1.0))?;
        let reference = fock_inner(&f, &f)?.w;
        let mut quad_norms = Vec::with_capacity(5);
        for _ in 0..5 {
            let unit = rand_unit(rng);
            let norm = fock_norm_quadrature(&f, unit, rule)?;
            worst = worst.max(rel(norm, reference));
            quad_norms.push(norm);
        }
        for pair in quad_norms.windows(2) {
            // the factor-2 sandwich is far weaker than the equality above,
            // but it is the stated bound, so enforce it on its own
            if !(0.5 * pair[0] <= pair[1] && pair[1] <= 2.0 * pair[0]) {
                worst = worst.max(1.0);
            }
        }
    }
    Ok(worst)
}

fn fock_reproducing(cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let nu = cfg.nu;
    let rule = SliceQuadrature::new(nu, cfg.radial_nodes, cfg.angular_count)?;
    let units = fixed_units();
    let integration_unit = units[0];
    let mut worst = 0.0f64;
    for point_slice in [units[1], units[2]] {
        let f = FockElement::from_coeffs(nu, rand_coeffs(rng, 12, 1.0))?;
        for r in [0.3, 0.75, 1.05, 1.35, 1.5] {
            for theta in [0.4, 1.7, 2.9, 4.2, 5.5] {
                let q = point_slice.embed(Complex64::from_polar(r, theta));
                let direct = f.eval(q);
                let reproduced = reproduce(&f, q, integration_unit, &rule)?;
                worst = worst.max(scaled(reproduced - direct, direct));
            }
        }
    }
    Ok(worst)
}

fn kernel_hermitian(_cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut worst = 0.0f64;
    for idx in 0..1_000 {
        let nu = NU_SWEEP[idx % 3];
        let p = rand_quat(rng, 1.2);
        let q = rand_quat(rng, 1.2);
        let k_pq = reproducing_kernel(p, q, nu)?;
        let k_qp = reproducing_kernel(q, p, nu)?;
        worst = worst.max((k_pq.conj() - k_qp).modulus() / k_pq.modulus().max(1.0));
    }
    Ok(worst)
}

fn kernel_inner_consistency(cfg: &RunConfig, _rng: &mut ChaCha8Rng) -> SuiteResult {
    let nu = cfg.nu;
    let rule = SliceQuadrature::new(nu, cfg.radial_nodes, cfg.angular_count)?;
    let units = fixed_units();
    let qs: Vec<Quaternion> = [(0.5, 0.7), (1.0, 2.4), (1.5, 4.9)]
        .iter()
        .map(|&(r, th)| units[1].embed(Complex64::from_polar(r, th)))
        .collect();
    let ps: Vec<Quaternion> = [(0.4, 1.1), (0.9, 3.6), (1.5, 5.8)]
        .iter()
        .map(|&(r, th)| units[2].embed(Complex64::from_polar(r, th)))
        .collect();
    let mut worst = 0.0f64;
    for &q in &qs {
        for &p in &ps {
            let kq = kernel_section(q, nu)?;
            let kp = kernel_section(p, nu)?;
            let want = reproducing_kernel(p, q, nu)?;
            let exact = fock_inner(&kq, &kp)?;
            let quad = fock_inner_quadrature(&kq, &kp, units[0], &rule)?;
            let scale = 1.0 + want.modulus();
            worst = worst.max((exact - want).modulus() / scale);
            worst = worst.max((quad - want).modulus() / scale);
        }
    }
    Ok(worst)
}

fn kernel_norm_three_ways(cfg: &RunConfig, _rng: &mut ChaCha8Rng) -> SuiteResult {
    let nu = cfg.nu;
    let srule = SliceQuadrature::new(nu, cfg.radial_nodes, cfg.angular_count)?;
    let grule = GaussHermite::new(cfg.gh_nodes)?;
    let units = fixed_units();
    let mut points = vec![Quaternion::ZERO];
    for r in [0.5, 1.0, 1.5] {
        points.push(units[1].embed(Complex64::from_polar(r, 0.9)));
        points.push(units[2].embed(Complex64::from_polar(r, 4.1)));
    }
    let mut worst = 0.0f64;
    for &q in &points {
        let closed = kernel_norm_sq(q, nu)?;
        let diag = reproducing_kernel(q, q, nu)?.w;
        let through_slice = fock_norm_quadrature(&kernel_section(q, nu)?, units[0], &srule)?;
        let through_l2 = grule
            .integrate_gaussian(nu, |x| {
                Quaternion::from_real(kernel_a(q, x, nu).expect("validated weight").norm_sqr())
            })?
            .w;
        worst = worst
            .max(rel(diag, closed))
            .max(rel(through_slice, closed))
            .max(rel(through_l2, closed));
    }
    Ok(worst)
}

fn point_eval_bound_suite(cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let nu = cfg.nu;
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let psi = HermiteExpansion::new(nu, rand_coeffs(rng, 8, 1.0))?;
        let f = bargmann_coeff(&psi);
        let norm = fock_inner(&f, &f)?.w.sqrt();
        let q = rand_quat(rng, 1.3);
        let bound = point_eval_bound(q, nu, norm);
        worst = worst.max((f.eval(q).modulus() / bound - 1.0).max(0.0));

        // Cauchy-Schwarz shape of the same bound on the kernel itself
        let p = rand_quat(rng, 1.3);
        let k = reproducing_kernel(p, q, nu)?.modulus();
        let cs = (kernel_norm_sq(p, nu)? * kernel_norm_sq(q, nu)?).sqrt();
        worst = worst.max((k / cs - 1.0).max(0.0));
    }
    Ok(worst)
}

// ---- Segal-Bargmann transform ----

fn action_lemma(cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let nu = cfg.nu;
    let rule = GaussHermite::new(cfg.gh_nodes)?;
    let mut worst = 0.0f64;
    for n in 0..=12usize {
        let norm_h = hermite_norm_sq(n, nu)?.sqrt();
        let mut coeffs = vec![Quaternion::ZERO; n + 1];
        coeffs[n] = Quaternion::from_real(norm_h);
        let h_n = HermiteExpansion::new(nu, coeffs)?.to_sampled();
        let prefactor = (nu / PI).powf(0.25) * 2f64.powf(n as f64 / 2.0) * nu.powi(n as i32);
        // sup-norm relative error over the sample points; the pointwise
        // ratio near q = 0 divides by a value exponentially below the
        // integrand's mass and measures only f64 cancellation
        let mut sup_diff = 0.0f64;
        let mut sup_want = 0.0f64;
        for _ in 0..25 {
            let q = rand_quat(rng, 0.65);
            let got = bargmann_quadrature(&h_n, q, nu, &rule)?;
            let want = q.powu(n as u32) * prefactor;
            sup_diff = sup_diff.max((got - want).modulus());
            sup_want = sup_want.max(want.modulus());
        }
        worst = worst.max(sup_diff / sup_want);
    }
    Ok(worst)
}

fn isometry_coefficient(cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let nu = cfg.nu;
    let mut worst = 0.0f64;
    for _ in 0..500 {
        let mut coeffs = rand_coeffs(rng, cfg.truncation, 1.0);
        let scale = 1.0
            / coeffs
                .iter()
                .map(|c| c.norm_sqr())
                .sum::<f64>()
                .sqrt()
                .max(1e-300);
        for c in &mut coeffs {
            *c = *c * scale;
        }
        let psi = HermiteExpansion::new(nu, coeffs)?;
        let f = bargmann_coeff(&psi);
        let norm = fock_inner(&f, &f)?;
        worst = worst.max((norm.w - 1.0).abs()).max(norm.im_norm());
    }
    Ok(worst)
}

fn isometry_quadrature(cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let nu = cfg.nu;
    let srule = SliceQuadrature::new(nu, cfg.radial_nodes, cfg.angular_count)?;
    let grule = GaussHermite::new(cfg.gh_nodes)?;
    let units = fixed_units();
    let mut worst = 0.0f64;
    for idx in 0..500 {
        let degree = rng.random_range(1..=12usize);
        let psi = HermiteExpansion::new(nu, rand_coeffs(rng, degree, 1.0))?;
        let fock_side = fock_norm_quadrature(&bargmann_coeff(&psi), units[idx % 3], &srule)?;
        let l2_side = grule
            .integrate_gaussian(nu, |x| Quaternion::from_real(psi.eval(x).norm_sqr()))?
            .w;
        worst = worst.max(rel(fock_side, l2_side));
    }
    Ok(worst)
}

fn basis_orthogonality(cfg: &RunConfig, _rng: &mut ChaCha8Rng) -> SuiteResult {
    let nu = cfg.nu;
    let images: Vec<FockElement> = (0..=12usize)
        .map(|n| HermiteExpansion::basis_state(nu, n).map(|psi| bargmann_coeff(&psi)))
        .collect::<qsb_core::Result<_>>()?;
    let mut worst = 0.0f64;
    for (m, fm) in images.iter().enumerate() {
        for (n, fn_) in images.iter().enumerate() {
            let ip = fock_inner(fn_, fm)?;
            let want = if m == n { 1.0 } else { 0.0 };
            worst = worst
                .max((ip.w - want).abs())
                .max(ip.im_norm());
        }
    }
    Ok(worst)
}

fn kernel_section_identity(cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let nu = cfg.nu;
    let rule = GaussHermite::new(cfg.gh_nodes)?;
    let mut worst = 0.0f64;
    for _ in 0..40 {
        let psi = HermiteExpansion::new(nu, rand_coeffs(rng, 8, 1.0))?;
        let f = bargmann_coeff(&psi);
        let sampled = psi.to_sampled();
        let q = rand_quat(rng, 1.0);
        let through_integral = bargmann_quadrature(&sampled, q, nu, &rule)?;
        let through_coeffs = f.eval(q);
        worst = worst.max(scaled(through_integral - through_coeffs, through_coeffs));
    }
    Ok(worst)
}

fn generating_series(cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let nu = cfg.nu;
    let mut worst = 0.0f64;
    for _ in 0..30 {
        let q = rand_quat(rng, 0.5);
        let x = rng.random_range(-2.0..2.0);
        let summed = generating_partial_sum(q, x, nu, 40)?;
        let closed = kernel_a(q, x, nu)?;
        worst = worst.max(scaled(summed - closed, closed));
    }
    Ok(worst)
}

fn inverse_paths(cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let nu = cfg.nu;
    let rule = SliceQuadrature::new(nu, cfg.radial_nodes, cfg.angular_count)?;
    let xs = grid(-3.0, 3.0, 13);
    let mut worst = 0.0f64;
    for _ in 0..5 {
        let f = FockElement::from_coeffs(nu, rand_coeffs(rng, 12, 1.0))?;
        let series_path = inverse_coeff(&f);
        for unit in fixed_units() {
            for &x in &xs {
                let through_integral = inverse_quadrature(&f, x, unit, &rule)?;
                let direct = series_path.eval(x);
                worst = worst.max(scaled(through_integral - direct, direct));
            }
        }
    }
    Ok(worst)
}

fn transform_roundtrip(cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let nu = cfg.nu;
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let degree = rng.random_range(0..=cfg.truncation);
        let psi = HermiteExpansion::new(nu, rand_coeffs(rng, degree, 1.0))?;
        let back = inverse_coeff(&bargmann_coeff(&psi));
        for (a, b) in back.coeffs().iter().zip(psi.coeffs()) {
            worst = worst.max(scaled(*a - *b, *b));
        }

        let f = FockElement::from_coeffs(nu, rand_coeffs(rng, degree, 1.0))?;
        let forward = bargmann_coeff(&inverse_coeff(&f));
        for (a, b) in forward.coeffs().iter().zip(f.coeffs()) {
            worst = worst.max(scaled(*a - *b, *b));
        }
    }
    Ok(worst)
}

// ---- slice regular structure ----

fn split_roundtrip(_cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let f = PowerSeries::new(rand_coeffs(rng, 12, 1.0));
        let u = rand_unit(rng);
        let j = u.any_perpendicular();
        let pair = split(&f, u, j)?;
        for _ in 0..5 {
            let z = Complex64::new(rng.random_range(-1.2..1.2), rng.random_range(-1.2..1.2));
            let direct = f.eval(u.embed(z));
            worst = worst.max(scaled(pair.recombine(z) - direct, direct));
        }
    }
    Ok(worst)
}

fn split_norm_identity(_cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let f = PowerSeries::new(rand_coeffs(rng, 12, 1.0));
        let u = rand_unit(rng);
        let pair = split(&f, u, u.any_perpendicular())?;
        let z = Complex64::new(rng.random_range(-1.2..1.2), rng.random_range(-1.2..1.2));
        let whole = f.eval(u.embed(z)).norm_sqr();
        let parts = pair.eval_f(z).norm_sqr() + pair.eval_g(z).norm_sqr();
        worst = worst.max((whole - parts).abs() / whole.max(1.0));
    }
    Ok(worst)
}

fn representation_formula(_cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let f = PowerSeries::new(rand_coeffs(rng, 8, 1.0));
        let u = rand_unit(rng);
        let v = rand_unit(rng);
        let z = Complex64::new(rng.random_range(-1.5..1.5), rng.random_range(-1.5..1.5));
        let f_plus = f.eval(u.embed(z));
        let f_minus = f.eval(u.embed(z.conj()));
        let got = representation_eval(f_plus, f_minus, u, v);
        let direct = f.eval(v.embed(z));
        worst = worst.max(scaled(got - direct, direct));
    }
    Ok(worst)
}

fn representation_eval(
    f_plus: Quaternion,
    f_minus: Quaternion,
    u: ImaginaryUnit,
    v: ImaginaryUnit,
) -> Quaternion {
    qsb_core::representation(f_plus, f_minus, u, v)
}

fn extension_roundtrip(_cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let f = PowerSeries::new(rand_coeffs(rng, 8, 1.0));
        let u = rand_unit(rng);
        let target = rand_quat(rng, 1.5);
        let got = extend(|q| f.eval(q), u, target);
        let direct = f.eval(target);
        worst = worst.max(scaled(got - direct, direct));
    }
    Ok(worst)
}

fn slice_holomorphy(_cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let step = 1e-5;
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let u = rand_unit(rng);
        // coefficients inside C_I keep the restriction complex-valued
        let coeffs: Vec<Quaternion> = (0..=8)
            .map(|_| {
                u.embed(Complex64::new(
                    rng.random_range(-1.0..1.0),
                    rng.random_range(-1.0..1.0),
                ))
            })
            .collect();
        let f = PowerSeries::new(coeffs);
        let g = |z: Complex64| u.project(f.eval(u.embed(z)));
        let z = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        let dx = (g(z + step) - g(z - step)) / (2.0 * step);
        let dy = (g(z + Complex64::new(0.0, step)) - g(z - Complex64::new(0.0, step)))
            / (2.0 * step);
        let dbar = (dx + Complex64::new(0.0, 1.0) * dy) / 2.0;
        worst = worst.max(dbar.norm());
    }
    Ok(worst)
}

// ---- quaternionic Fourier transform ----

fn qft_eigenrelation(cfg: &RunConfig, _rng: &mut ChaCha8Rng) -> SuiteResult {
    let rule = GaussHermite::new(cfg.gh_nodes)?;
    let xs = grid(-3.0, 3.0, 13);
    let scale = (2.0 * PI).sqrt();
    let mut worst = 0.0f64;
    for unit in fixed_units() {
        for n in 0..=10usize {
            let psi = HermiteExpansion::basis_state(1.0, n)?;
            let factor = unit.as_quaternion().powu(n as u32) * scale;
            let mut sup_diff = 0.0f64;
            let mut sup_ref = 0.0f64;
            for &x in &xs {
                let got = qft_expansion(&psi, unit, x, &rule)?;
                let want = factor * psi.eval(x).w;
                sup_diff = sup_diff.max((got - want).modulus());
                sup_ref = sup_ref.max(want.modulus());
            }
            worst = worst.max(sup_diff / sup_ref);
        }
    }
    Ok(worst)
}

fn qft_constants(cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let rule = GaussHermite::new(cfg.gh_nodes)?;
    let nu = 1.0;
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let coeffs = rand_coeffs(rng, 6, 1.0);
        let c = rand_quat(rng, 1.0);
        let unit = rand_unit(rng);
        let x = rng.random_range(-2.0..2.0);
        let psi = HermiteExpansion::new(nu, coeffs.clone())?;
        let base = qft_expansion(&psi, unit, x, &rule)?;

        let psi_c = HermiteExpansion::new(nu, coeffs.iter().map(|a| *a * c).collect())?;
        let right = qft_expansion(&psi_c, unit, x, &rule)?;
        worst = worst.max(scaled(right - base * c, base * c));

        let sampled = psi.to_sampled();
        rule.ensure_covers(nu / 2.0, sampled.support())?;
        let left = rule.integrate_gaussian(nu / 2.0, |y| {
            c * unit.embed(Complex64::cis(x * y)) * sampled.eval(y)
        })?;
        worst = worst.max(scaled(left - c * base, c * base));
    }
    Ok(worst)
}

fn qft_intertwine(cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let rule = GaussHermite::new(cfg.gh_nodes)?;
    let mut worst = 0.0f64;
    for idx in 0..50 {
        let nu = NU_SWEEP[idx % 3];
        let degree = rng.random_range(0..=8usize);
        let psi = HermiteExpansion::new(nu, rand_coeffs(rng, degree, 1.0))?;
        let unit = rand_unit(rng);
        let x = rng.random_range(-2.0..2.0);
        let (lhs, rhs) = check_intertwine(&psi, unit, x, nu, &rule)?;
        worst = worst.max((lhs - rhs).modulus());
    }
    Ok(worst)
}

fn qft_diagonalization(cfg: &RunConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let rule = GaussHermite::new(cfg.gh_nodes)?;
    let scale = (2.0 * PI).sqrt();
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let degree = rng.random_range(0..=8usize);
        let f = FockElement::from_coeffs(1.0, rand_coeffs(rng, degree, 1.0))?;
        let unit = rand_unit(rng);
        let x = rng.random_range(-2.0..2.0);
        let (lhs, rhs) = check_diag(&f, unit, x, &rule)?;
        worst = worst.max((lhs - rhs).modulus());
    }
    // closed-form spots: the monomials map to sqrt(2 pi) (I x)^n
    for unit in fixed_units() {
        for n in 0..=8usize {
            let f = FockElement::monomial(1.0, n)?;
            for x in [-2.0, -0.7, 1.3] {
                let (lhs, _) = check_diag(&f, unit, x, &rule)?;
                let want =
                    unit.embed(Complex64::new(0.0, x).powu(n as u32)) * scale;
                worst = worst.max((lhs - want).modulus());
            }
        }
    }
    Ok(worst)
}
