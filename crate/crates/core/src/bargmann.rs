//! The quaternionic Segal-Bargmann transform.
//!
//! Forward: B(psi)(q) = int A(q;x) psi(x) dx with the kernel
//! A(q;x) = (nu/pi)^{3/4} exp(-nu/2 (q^2 + x^2) + nu sqrt2 q x),
//! which sends the weighted Hermite function h_n^nu to the monomial
//! (nu/pi)^{1/4} 2^{n/2} nu^n q^n. Two implementations of each direction
//! coexist on purpose: the coefficient maps are exact and canonical, the
//! quadrature paths integrate the defining formulas and act as the oracle.
//!
//! The exponent of A lies in the slice of q, so it is assembled in complex
//! arithmetic there and embedded back; no general quaternion exponential is
//! involved unless q is real, where the scalar branch applies.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{FockElement, SliceQuadrature};
use crate::hermite::{psi_column, HermiteExpansion, SampledFunction};
use crate::quadrature::GaussHermite;
use crate::quaternion::{ImaginaryUnit, Quaternion};

const SQRT_2: f64 = std::f64::consts::SQRT_2;

fn check_nu(nu: f64) -> Result<()> {
    if nu <= 0.0 || !nu.is_finite() {
        return Err(Error::Parameter {
            name: "nu",
            requirement: "nu > 0",
            value: nu,
        });
    }
    Ok(())
}

fn complex_exponent(z: Complex64, x: f64, nu: f64) -> Complex64 {
    -0.5 * nu * (z * z + x * x) + nu * SQRT_2 * x * z
}

/// The transform kernel A(q;x); real-valued whenever q is real.
pub fn kernel_a(q: Quaternion, x: f64, nu: f64) -> Result<Quaternion> {
    check_nu(nu)?;
    let amp = (nu / PI).powf(0.75);
    match q.to_slice() {
        Ok(s) => Ok(s.unit.embed(complex_exponent(s.complex(), x, nu).exp()) * amp),
        Err(_) => {
            let e = complex_exponent(Complex64::new(q.w, 0.0), x, nu).re;
            Ok(Quaternion::from_real(amp * e.exp()))
        }
    }
}

/// Partial sum of the generating-function expansion
/// A(q;x) = sum_n psi_n^nu(x) q^n (nu^{n+1}/(pi n!))^{1/2},
/// through the monomial of index `terms`. Converges factorially to
/// kernel_a(q, x, nu).
pub fn generating_partial_sum(
    q: Quaternion,
    x: f64,
    nu: f64,
    terms: usize,
) -> Result<Quaternion> {
    let psis = psi_column(terms, x, nu)?;
    let mut s = (nu / PI).sqrt();
    let mut coeffs = Vec::with_capacity(terms + 1);
    for (n, p) in psis.iter().enumerate() {
        if n > 0 {
            s *= (nu / n as f64).sqrt();
        }
        coeffs.push(p * s);
    }
    let mut acc = Quaternion::ZERO;
    for c in coeffs.iter().rev() {
        acc = Quaternion::from_real(*c) + q * acc;
    }
    Ok(acc)
}

/// Exact coefficient form of the transform: the normalized basis element
/// psi_n^nu maps to e_n / ||e_n||, so the coefficient c_n becomes the Fock
/// coefficient a_n = c_n (nu^{n+1} / (pi n!))^{1/2}. Unitary by
/// construction.
pub fn bargmann_coeff(psi: &HermiteExpansion) -> FockElement {
    let nu = psi.nu();
    let mut s = (nu / PI).sqrt();
    let coeffs = psi
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| {
            if n > 0 {
                s *= (nu / n as f64).sqrt();
            }
            *c * s
        })
        .collect();
    FockElement::from_coeffs(nu, coeffs).expect("expansion weight is already validated")
}

/// Exact inverse of bargmann_coeff: c_n = a_n (pi n! / nu^{n+1})^{1/2},
/// with the reciprocal scale accumulated incrementally so no underflowing
/// intermediate appears.
pub fn inverse_coeff(f: &FockElement) -> HermiteExpansion {
    let nu = f.nu();
    let mut s = (PI / nu).sqrt();
    let coeffs = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, a)| {
            if n > 0 {
                s *= (n as f64 / nu).sqrt();
            }
            *a * s
        })
        .collect();
    HermiteExpansion::new(nu, coeffs).expect("Fock weight is already validated")
}

/// The defining integral B(psi)(q) = int A(q;x) psi(x) dx by Gauss-Hermite
/// quadrature folded at the weight's decay rate. The kernel multiplies from
/// the left, which matters for quaternion-valued psi.
pub fn bargmann_quadrature(
    psi: &SampledFunction,
    q: Quaternion,
    nu: f64,
    rule: &GaussHermite,
) -> Result<Quaternion> {
    check_nu(nu)?;
    rule.ensure_covers(nu, psi.support())?;
    let amp = (nu / PI).powf(0.75);
    match q.to_slice() {
        Ok(s) => {
            let unit = s.unit;
            let zq = s.complex();
            rule.integrate_gaussian(nu, |x| {
                unit.embed(complex_exponent(zq, x, nu).exp()) * amp * psi.eval(x)
            })
        }
        Err(_) => rule.integrate_gaussian(nu, |x| {
            let e = complex_exponent(Complex64::new(q.w, 0.0), x, nu).re;
            Quaternion::from_real(amp * e.exp()) * psi.eval(x)
        }),
    }
}

/// The integral form of the inverse transform,
/// (nu/pi)^{3/4} int_{C_I} e^{-nu/2 (conj(q)^2 + x^2) + nu sqrt2 conj(q) x}
/// f(q) e^{-nu |q|^2} dlambda_I(q),
/// i.e. the slice integral of conj(A(q;x)) f(q) against the Gaussian
/// measure. Agrees with evaluating inverse_coeff(f) at x on every slice.
pub fn inverse_quadrature(
    f: &FockElement,
    x: f64,
    unit: ImaginaryUnit,
    rule: &SliceQuadrature,
) -> Result<Quaternion> {
    let nu = f.nu();
    if rule.nu() != nu {
        return Err(Error::MismatchedWeight { lhs: nu, rhs: rule.nu() });
    }
    rule.ensure_resolves(f.degree())?;
    let amp = (nu / PI).powf(0.75);
    Ok(rule.integrate(unit, |q| {
        let zbar = unit.project(q).conj();
        unit.embed(complex_exponent(zbar, x, nu).exp()) * amp * f.eval(q)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::fock_inner;
    use crate::hermite::hermite_norm_sq;

    fn close(a: Quaternion, b: Quaternion, tol: f64) -> bool {
        (a - b).modulus() <= tol
    }

    #[test]
    fn kernel_at_real_arguments() {
        // q = 0 leaves the pure Gaussian
        for (x, nu) in [(0.0, 1.0), (0.8, 0.5), (-1.3, 2.0)] {
            let got = kernel_a(Quaternion::ZERO, x, nu).unwrap();
            let want = (nu / PI).powf(0.75) * (-nu * x * x / 2.0).exp();
            assert!((got.w - want).abs() < 1e-15 && got.im_norm() == 0.0);
        }
    }

    #[test]
    fn kernel_at_x_zero_is_a_slice_gaussian() {
        let q = Quaternion::new(0.3, -0.5, 0.8, 0.1);
        let nu = 1.5;
        let got = kernel_a(q, 0.0, nu).unwrap();
        let want = (q * q * (-nu / 2.0)).exp() * (nu / PI).powf(0.75);
        assert!(close(got, want, 1e-14));
    }

    #[test]
    fn kernel_scalar_branch_joins_the_slice_branch() {
        let nu = 1.0;
        let x = 0.7;
        let real = kernel_a(Quaternion::from_real(0.4), x, nu).unwrap();
        let nearly = kernel_a(Quaternion::new(0.4, 1e-9, 0.0, 0.0), x, nu).unwrap();
        assert!(close(real, nearly, 1e-9));
        assert_eq!(real.im_norm(), 0.0);
    }

    #[test]
    fn generating_sum_at_q_zero_is_exact_immediately() {
        let x = 1.2;
        let nu = 0.5;
        let got = generating_partial_sum(Quaternion::ZERO, x, nu, 0).unwrap();
        let want = kernel_a(Quaternion::ZERO, x, nu).unwrap();
        assert!(close(got, want, 1e-15));
    }

    #[test]
    fn generating_sum_converges_to_the_kernel() {
        let nu = 1.0;
        for (q, x) in [
            (Quaternion::new(0.5, 0.3, -0.6, 0.2), 1.7),
            (Quaternion::new(-0.8, 0.0, 0.1, 0.4), -2.0),
            (Quaternion::new(0.0, 0.9, 0.0, 0.0), 0.4),
        ] {
            let got = generating_partial_sum(q, x, nu, 40).unwrap();
            let want = kernel_a(q, x, nu).unwrap();
            assert!(
                close(got, want, 1e-10),
                "q={q} x={x}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn generating_sum_stays_in_the_slice_of_q() {
        let q = Quaternion::new(0.4, 0.9, 0.0, 0.0);
        let got = generating_partial_sum(q, -0.3, 2.0, 25).unwrap();
        assert_eq!(got.y, 0.0);
        assert_eq!(got.z, 0.0);
    }

    #[test]
    fn coefficient_map_on_basis_states() {
        // h_0^nu has coefficient ||h_0|| against psi_0 and maps to the
        // constant (nu/pi)^{1/4}
        for nu in [0.5, 1.0, 2.0] {
            let c0 = hermite_norm_sq(0, nu).unwrap().sqrt();
            let psi = HermiteExpansion::new(nu, vec![Quaternion::from_real(c0)]).unwrap();
            let f = bargmann_coeff(&psi);
            let want = (nu / PI).powf(0.25);
            assert!((f.coeffs()[0].w - want).abs() < 1e-15);
        }

        // h_2^1 maps to e_2 scaled by 2 (1/pi)^{1/4}
        let c2 = hermite_norm_sq(2, 1.0).unwrap().sqrt();
        let mut coeffs = vec![Quaternion::ZERO; 3];
        coeffs[2] = Quaternion::from_real(c2);
        let f = bargmann_coeff(&HermiteExpansion::new(1.0, coeffs).unwrap());
        let want = 2.0 * PI.powf(-0.25);
        assert!((f.coeffs()[2].w - want).abs() < 1e-14);

        // psi_3 j picks up the orthonormal scale (nu^4/(pi 3!))^{1/2}
        let nu = 1.3;
        let mut coeffs = vec![Quaternion::ZERO; 4];
        coeffs[3] = Quaternion::J;
        let f = bargmann_coeff(&HermiteExpansion::new(nu, coeffs).unwrap());
        let want = (nu.powi(4) / (PI * 6.0)).sqrt();
        assert!(close(f.coeffs()[3], Quaternion::J * want, 1e-15));
    }

    #[test]
    fn coefficient_map_is_an_isometry() {
        let nu = 2.0;
        let psi = HermiteExpansion::new(
            nu,
            vec![
                Quaternion::new(0.3, -0.7, 0.2, 0.0),
                Quaternion::new(0.0, 0.4, -0.1, 0.9),
                Quaternion::new(1.2, 0.0, 0.5, -0.3),
            ],
        )
        .unwrap();
        let f = bargmann_coeff(&psi);
        let fock = fock_inner(&f, &f).unwrap().w;
        assert!((fock - psi.norm_sq()).abs() < 1e-13 * psi.norm_sq());
    }

    #[test]
    fn basis_images_are_orthogonal() {
        let nu = 1.0;
        for n in 0..6 {
            for m in 0..6 {
                let fn_ = bargmann_coeff(&HermiteExpansion::basis_state(nu, n).unwrap());
                let fm = bargmann_coeff(&HermiteExpansion::basis_state(nu, m).unwrap());
                let ip = fock_inner(&fn_, &fm).unwrap();
                let want = if n == m { 1.0 } else { 0.0 };
                assert!((ip.w - want).abs() < 1e-12 && ip.im_norm() < 1e-12);
            }
        }
    }

    #[test]
    fn quadrature_reproduces_the_action_on_h0() {
        let rule = GaussHermite::new(128).unwrap();
        for nu in [0.5, 1.0, 2.0] {
            let c0 = hermite_norm_sq(0, nu).unwrap().sqrt();
            let psi = HermiteExpansion::new(nu, vec![Quaternion::from_real(c0)])
                .unwrap()
                .to_sampled();
            for q in [
                Quaternion::ZERO,
                Quaternion::new(0.7, -0.3, 0.5, 0.1),
                Quaternion::new(-1.2, 0.0, 0.0, 0.9),
            ] {
                let got = bargmann_quadrature(&psi, q, nu, &rule).unwrap();
                let want = (nu / PI).powf(0.25);
                assert!(close(got, Quaternion::from_real(want), 1e-12));
            }
        }
    }

    #[test]
    fn quadrature_matches_the_monomial_action() {
        let rule = GaussHermite::new(128).unwrap();
        let nu = 1.0;
        let q = Quaternion::new(0.4, 0.2, -0.6, 0.3);
        for n in [1usize, 3, 5] {
            let cn = hermite_norm_sq(n, nu).unwrap().sqrt();
            let mut coeffs = vec![Quaternion::ZERO; n + 1];
            coeffs[n] = Quaternion::from_real(cn);
            let psi = HermiteExpansion::new(nu, coeffs).unwrap().to_sampled();
            let got = bargmann_quadrature(&psi, q, nu, &rule).unwrap();
            let want = q.powu(n as u32)
                * ((nu / PI).powf(0.25) * 2f64.powf(n as f64 / 2.0) * nu.powi(n as i32));
            assert!(
                close(got, want, 1e-10 * want.modulus().max(1.0)),
                "n={n}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn quadrature_requires_support_coverage() {
        let rule = GaussHermite::new(8).unwrap();
        let psi = HermiteExpansion::basis_state(1.0, 32).unwrap().to_sampled();
        assert!(matches!(
            bargmann_quadrature(&psi, Quaternion::ZERO, 1.0, &rule),
            Err(Error::QuadratureUnderResolved { .. })
        ));
    }

    #[test]
    fn coefficient_roundtrip_is_identity() {
        let nu = 0.5;
        let psi = HermiteExpansion::new(
            nu,
            vec![
                Quaternion::new(0.1, 0.9, -0.4, 0.2),
                Quaternion::new(-0.6, 0.0, 0.8, 0.0),
                Quaternion::new(0.0, 0.3, 0.0, -1.1),
                Quaternion::new(0.7, -0.2, 0.1, 0.5),
            ],
        )
        .unwrap();
        let back = inverse_coeff(&bargmann_coeff(&psi));
        for (a, b) in back.coeffs().iter().zip(psi.coeffs()) {
            assert!(close(*a, *b, 1e-14 * b.modulus().max(1.0)));
        }
    }

    #[test]
    fn inverse_of_monomials_hits_the_closed_form() {
        // e_2 at nu = 1 inverts to (pi^{1/4}/2) h_2^1, which at x = 0 is
        // -pi^{1/4}
        let e2 = FockElement::monomial(1.0, 2).unwrap();
        let psi = inverse_coeff(&e2);
        let got = psi.eval(0.0);
        assert!((got.w + PI.powf(0.25)).abs() < 1e-14);
        assert!(got.im_norm() == 0.0);
    }

    #[test]
    fn inverse_quadrature_agrees_with_the_series_inverse() {
        let nu = 1.0;
        let rule = SliceQuadrature::new(nu, 96, 256).unwrap();
        let f = FockElement::from_coeffs(
            nu,
            vec![
                Quaternion::new(0.4, -0.1, 0.7, 0.0),
                Quaternion::new(0.0, 0.6, 0.0, -0.8),
                Quaternion::new(-0.5, 0.2, 0.0, 0.3),
            ],
        )
        .unwrap();
        let series_path = inverse_coeff(&f);
        let unit = ImaginaryUnit::new(0.5, -1.0, 0.25).unwrap();
        for x in [-2.0, -0.4, 0.0, 1.1, 2.7] {
            let got = inverse_quadrature(&f, x, unit, &rule).unwrap();
            let want = series_path.eval(x);
            assert!(
                close(got, want, 1e-10 * (1.0 + want.modulus())),
                "x={x}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn inverse_quadrature_monomial_value_at_zero() {
        let rule = SliceQuadrature::new(1.0, 96, 256).unwrap();
        let e2 = FockElement::monomial(1.0, 2).unwrap();
        let got = inverse_quadrature(&e2, 0.0, ImaginaryUnit::K, &rule).unwrap();
        assert!((got.w + PI.powf(0.25)).abs() < 1e-10);
        assert!(got.im_norm() < 1e-10);
    }

    #[test]
    fn inverse_quadrature_checks_the_weight() {
        let rule = SliceQuadrature::new(2.0, 96, 256).unwrap();
        let f = FockElement::monomial(1.0, 1).unwrap();
        assert!(matches!(
            inverse_quadrature(&f, 0.0, ImaginaryUnit::I, &rule),
            Err(Error::MismatchedWeight { .. })
        ));
    }
}
