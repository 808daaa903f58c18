//! Left one-dimensional quaternionic Fourier transform
//! F_I(psi)(x) = int e^{Ixy} psi(y) dy, with the slice unit I fixed per call
//! and the kernel multiplying from the left, plus the two checks tying it to
//! the Segal-Bargmann transform: the intertwining identity
//! B(psi)(Ix / sqrt(2 nu)) = (nu/pi)^{3/4} e^{x^2/(4 nu)} F_I(e^{-nu y^2/2} psi)(x)
//! and the diagonalization B F_I B^{-1}(f)(x) = sqrt(2 pi) f(Ix) at nu = 1.
//!
//! Everything in scope is Gaussian-damped, so the oscillatory integrals fall
//! to the same folded Gauss-Hermite rules used elsewhere; there is no FFT
//! here and none would be faithful to the slice-dependent left kernel.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::bargmann::{bargmann_quadrature, inverse_coeff, kernel_a};
use crate::error::{Error, Result};
use crate::fock::FockElement;
use crate::hermite::{HermiteExpansion, SampledFunction};
use crate::quadrature::GaussHermite;
use crate::quaternion::{ImaginaryUnit, Quaternion};

/// Transform values on a caller-supplied grid, tagged with the slice unit
/// they were computed against. For real-valued input the values all lie in
/// the slice C_I.
#[derive(Clone, Debug)]
pub struct QFTResult {
    pub unit: ImaginaryUnit,
    pub values: Vec<(f64, Quaternion)>,
}

/// F_I of a sampled function whose decay is at least e^{-gaussian_rate y^2}.
/// The rate steers the quadrature fold; it is not checked against the
/// samples, so an optimistic rate silently loses accuracy while a
/// pessimistic one wastes reach and may trip the coverage check.
pub fn qft_sampled(
    psi: &SampledFunction,
    gaussian_rate: f64,
    unit: ImaginaryUnit,
    x: f64,
    rule: &GaussHermite,
) -> Result<Quaternion> {
    if gaussian_rate <= 0.0 || !gaussian_rate.is_finite() {
        return Err(Error::Parameter {
            name: "gaussian_rate",
            requirement: "gaussian_rate > 0",
            value: gaussian_rate,
        });
    }
    rule.ensure_covers(gaussian_rate, psi.support())?;
    rule.integrate_gaussian(gaussian_rate, |y| {
        unit.embed(Complex64::cis(x * y)) * psi.eval(y)
    })
}

/// F_I of a Hermite expansion. The expansion decays like e^{-nu y^2 / 2},
/// which fixes the fold rate, so no rate argument is needed.
pub fn qft_expansion(
    psi: &HermiteExpansion,
    unit: ImaginaryUnit,
    x: f64,
    rule: &GaussHermite,
) -> Result<Quaternion> {
    let sampled = psi.to_sampled();
    qft_sampled(&sampled, psi.nu() / 2.0, unit, x, rule)
}

/// F_I of an expansion on a grid of evaluation points.
pub fn qft_grid(
    psi: &HermiteExpansion,
    unit: ImaginaryUnit,
    xs: &[f64],
    rule: &GaussHermite,
) -> Result<QFTResult> {
    let sampled = psi.to_sampled();
    let rate = psi.nu() / 2.0;
    let mut values = Vec::with_capacity(xs.len());
    for &x in xs {
        values.push((x, qft_sampled(&sampled, rate, unit, x, rule)?));
    }
    Ok(QFTResult { unit, values })
}

/// Evaluates both sides of the intertwining identity independently:
/// lhs = B(psi) at q = I x / (sqrt2 nu) by the forward integral,
/// rhs = (nu/pi)^{3/4} e^{x^2/(4 nu)} F_I(e^{-nu y^2/2} psi)(x).
/// At that evaluation point the transform kernel collapses to
/// (nu/pi)^{3/4} e^{x^2/(4 nu)} e^{-nu y^2/2} e^{Ixy}, which is where the
/// right side comes from. Returns the pair so callers can report the
/// residual, not just a verdict.
pub fn check_intertwine(
    psi: &HermiteExpansion,
    unit: ImaginaryUnit,
    x: f64,
    nu: f64,
    rule: &GaussHermite,
) -> Result<(Quaternion, Quaternion)> {
    if nu != psi.nu() {
        return Err(Error::MismatchedWeight {
            lhs: nu,
            rhs: psi.nu(),
        });
    }
    let sampled = psi.to_sampled();

    let q = unit.embed(Complex64::new(0.0, x / (std::f64::consts::SQRT_2 * nu)));
    let lhs = bargmann_quadrature(&sampled, q, nu, rule)?;

    let inner = sampled.clone();
    let damped = SampledFunction::new(sampled.support(), move |y| {
        inner.eval(y) * (-0.5 * nu * y * y).exp()
    });
    let rhs = qft_sampled(&damped, nu, unit, x, rule)?
        * ((nu / PI).powf(0.75) * (x * x / (4.0 * nu)).exp());
    Ok((lhs, rhs))
}

/// Evaluates both sides of the diagonalization identity at nu = 1:
/// lhs = B(F_I(B^{-1} f)) at the real point x, with the outer transform
/// integrated directly (the kernel A(x; t) is real for real x, so it passes
/// through the quaternion values on the left without reordering),
/// rhs = sqrt(2 pi) f(I x).
pub fn check_diag(
    f: &FockElement,
    unit: ImaginaryUnit,
    x: f64,
    rule: &GaussHermite,
) -> Result<(Quaternion, Quaternion)> {
    if f.nu() != 1.0 {
        return Err(Error::Parameter {
            name: "nu",
            requirement: "the diagonalization identity is stated at nu = 1",
            value: f.nu(),
        });
    }
    let psi = inverse_coeff(f);

    // Outer integrand A(x; t) F_I(psi)(t) decays like e^{-t^2}: e^{-t^2/2}
    // from the kernel and e^{-t^2/2} from the transformed expansion. At
    // fold rate 1 the rule's nodes are the abscissae themselves, so the
    // inner transform threads through a plain loop and its coverage errors
    // propagate.
    let mut lhs = Quaternion::ZERO;
    for (t, w) in rule.nodes().iter().zip(rule.folded_weights()) {
        let g = qft_expansion(&psi, unit, *t, rule)?;
        lhs += kernel_a(Quaternion::from_real(x), *t, 1.0)? * g * *w;
    }

    let rhs = f.eval(unit.embed(Complex64::new(0.0, x))) * (2.0 * PI).sqrt();
    Ok((lhs, rhs))
}
