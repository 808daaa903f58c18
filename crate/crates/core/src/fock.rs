//! The slice hyperholomorphic Bargmann-Fock space F(nu): truncated power
//! series under the Gaussian-weighted slice inner product.
//!
//! Two routes to every inner product are kept deliberately separate. The
//! coefficient route uses the monomial orthogonality <e_m, e_n> =
//! pi m!/nu^{m+1} delta and is exact; the quadrature route integrates over
//! one slice in polar coordinates and is the oracle that the closed forms
//! are what the analysis says they are. They must agree on every slice.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::quadrature::GaussLegendre;
use crate::quaternion::{ImaginaryUnit, Quaternion};
use crate::series::PowerSeries;

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

/// An element of the Fock space: a power series together with its weight.
#[derive(Clone, Debug, PartialEq)]
pub struct FockElement {
    series: PowerSeries,
    nu: f64,
}

impl FockElement {
    pub fn new(nu: f64, series: PowerSeries) -> Result<FockElement> {
        check_nu(nu)?;
        Ok(FockElement { series, nu })
    }

    pub fn from_coeffs(nu: f64, coeffs: Vec<Quaternion>) -> Result<FockElement> {
        FockElement::new(nu, PowerSeries::new(coeffs))
    }

    /// The monomial e_n(q) = q^n as a Fock element.
    pub fn monomial(nu: f64, n: usize) -> Result<FockElement> {
        FockElement::new(nu, PowerSeries::monomial(n))
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn series(&self) -> &PowerSeries {
        &self.series
    }

    pub fn coeffs(&self) -> &[Quaternion] {
        self.series.coeffs()
    }

    pub fn degree(&self) -> usize {
        self.series.degree()
    }

    pub fn eval(&self, q: Quaternion) -> Quaternion {
        self.series.eval(q)
    }

    /// Canonical squared norm (pi/nu) sum (n!/nu^n) |a_n|^2.
    pub fn norm_sq(&self) -> f64 {
        let mut acc = 0.0;
        let mut w = PI / self.nu;
        for (n, a) in self.coeffs().iter().enumerate() {
            if n > 0 {
                w = next_weight(w, n, self.nu);
            }
            acc += w * a.norm_sqr();
        }
        acc
    }
}

/// Advances the monomial weight pi n!/nu^{n+1} from index n-1 to n. When the
/// running product overflows, recompute that single weight in the log domain
/// so enormous indices degrade gracefully instead of poisoning the sum.
fn next_weight(prev: f64, n: usize, nu: f64) -> f64 {
    let w = prev * n as f64 / nu;
    if w.is_finite() {
        w
    } else {
        (PI.ln() + libm::lgamma(n as f64 + 1.0) - (n as f64 + 1.0) * nu.ln()).exp()
    }
}

/// <e_m, e_n> = pi m!/nu^{m+1} when m = n, else zero.
pub fn monomial_inner(m: usize, n: usize, nu: f64) -> Result<f64> {
    check_nu(nu)?;
    if m != n {
        return Ok(0.0);
    }
    let mut w = PI / nu;
    for k in 1..=m {
        w = next_weight(w, k, nu);
    }
    Ok(w)
}

/// Coefficient-formula inner product <f, g> = (pi/nu) sum (n!/nu^n)
/// conj(b_n) a_n; right-linear in f, conjugate-symmetric.
pub fn fock_inner(f: &FockElement, g: &FockElement) -> Result<Quaternion> {
    if f.nu != g.nu {
        return Err(Error::MismatchedWeight { lhs: f.nu, rhs: g.nu });
    }
    let mut acc = Quaternion::ZERO;
    let mut w = PI / f.nu;
    for (n, (a, b)) in f.coeffs().iter().zip(g.coeffs()).enumerate() {
        if n > 0 {
            w = next_weight(w, n, f.nu);
        }
        acc += b.conj() * *a * w;
    }
    Ok(acc)
}

/// Polar quadrature over one slice against the Gaussian measure
/// e^{-nu |q|^2} dlambda: Gauss-Legendre radially on [0, R], equispaced
/// angles (trapezoid, spectrally exact on trigonometric polynomials).
#[derive(Clone, Debug)]
pub struct SliceQuadrature {
    nu: f64,
    radial_nodes: Vec<f64>,
    radial_weights: Vec<f64>,
    cos_table: Vec<f64>,
    sin_table: Vec<f64>,
    capacity: usize,
    radius: f64,
}

/// Highest monomial power r^d integrated to near machine accuracy by an
/// m-node radial rule on the truncated Gaussian interval, measured by
/// self-consistency sweeps against the exact moments.
fn radial_capacity(m: usize) -> usize {
    match m {
        0..=23 => 0,
        24..=31 => 4,
        32..=47 => 16,
        _ => (2 * m - 6).min(200),
    }
}

impl SliceQuadrature {
    pub fn new(nu: f64, radial: usize, angular: usize) -> Result<SliceQuadrature> {
        check_nu(nu)?;
        if angular == 0 {
            return Err(Error::Parameter {
                name: "angular",
                requirement: "angular >= 1",
                value: angular as f64,
            });
        }
        let capacity = radial_capacity(radial);
        // Truncation radius: far enough out that r^capacity e^{-nu r^2}
        // has decayed below 1e-18 of its peak, in the weight's own scale.
        let c = capacity as f64 / 2.0;
        let radius = ((c + 9.0 * (c + 1.0).sqrt() + 46.0) / nu).sqrt();

        let rule = GaussLegendre::new(radial)?;
        let mut radial_nodes = Vec::with_capacity(radial);
        let mut radial_weights = Vec::with_capacity(radial);
        for (z, w) in rule.nodes().iter().zip(rule.weights()) {
            let r = radius * (z + 1.0) / 2.0;
            let wr = w * radius / 2.0 * r * (-nu * r * r).exp();
            radial_nodes.push(r);
            radial_weights.push(wr);
        }
        let m = angular as f64;
        let cos_table = (0..angular)
            .map(|k| (2.0 * PI * k as f64 / m).cos())
            .collect();
        let sin_table = (0..angular)
            .map(|k| (2.0 * PI * k as f64 / m).sin())
            .collect();
        Ok(SliceQuadrature {
            nu,
            radial_nodes,
            radial_weights,
            cos_table,
            sin_table,
            capacity,
            radius,
        })
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn radial_count(&self) -> usize {
        self.radial_nodes.len()
    }

    pub fn angular_count(&self) -> usize {
        self.cos_table.len()
    }

    /// Highest power of r this rule integrates reliably against its weight.
    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Fails unless a polar integrand of the given total degree (r-power and
    /// trigonometric order combined) is within this rule's exact range.
    pub fn ensure_resolves(&self, degree: usize) -> Result<()> {
        if self.capacity < degree || self.angular_count() <= degree {
            return Err(Error::QuadratureUnderResolved {
                what: "slice quadrature",
                needed: degree,
                supported: self.capacity.min(self.angular_count().saturating_sub(1)),
            });
        }
        Ok(())
    }

    /// Integral over C_I of f(q) e^{-nu |q|^2} dlambda_I(q). The Gaussian
    /// weight is part of the measure; f is the bare integrand. Fixed
    /// radial-major accumulation order keeps results bit-reproducible.
    pub fn integrate<F>(&self, unit: ImaginaryUnit, mut f: F) -> Quaternion
    where
        F: FnMut(Quaternion) -> Quaternion,
    {
        let u = unit.as_quaternion();
        let mut acc = Quaternion::ZERO;
        for (r, w) in self.radial_nodes.iter().zip(&self.radial_weights) {
            let mut ring = Quaternion::ZERO;
            for (c, s) in self.cos_table.iter().zip(&self.sin_table) {
                let q = Quaternion::new(r * c, r * s * u.x, r * s * u.y, r * s * u.z);
                ring += f(q);
            }
            acc += ring * *w;
        }
        acc * (2.0 * PI / self.angular_count() as f64)
    }
}

/// Squared Fock norm by slice quadrature of |f|^2; slice-independent up to
/// quadrature tolerance.
pub fn fock_norm_quadrature(
    f: &FockElement,
    unit: ImaginaryUnit,
    rule: &SliceQuadrature,
) -> Result<f64> {
    if rule.nu != f.nu {
        return Err(Error::MismatchedWeight { lhs: f.nu, rhs: rule.nu });
    }
    rule.ensure_resolves(2 * f.degree())?;
    Ok(rule.integrate(unit, |q| Quaternion::from_real(f.eval(q).norm_sqr())).w)
}

/// Inner product by slice quadrature of conj(g) f against the Gaussian
/// measure.
pub fn fock_inner_quadrature(
    f: &FockElement,
    g: &FockElement,
    unit: ImaginaryUnit,
    rule: &SliceQuadrature,
) -> Result<Quaternion> {
    if f.nu != g.nu {
        return Err(Error::MismatchedWeight { lhs: f.nu, rhs: g.nu });
    }
    if rule.nu != f.nu {
        return Err(Error::MismatchedWeight { lhs: f.nu, rhs: rule.nu });
    }
    rule.ensure_resolves(f.degree() + g.degree())?;
    Ok(rule.integrate(unit, |q| g.eval(q).conj() * f.eval(q)))
}

/// Series tail control for the kernel: number of terms needed before
/// (nu |p| |q|)^n / n! falls below 1e-16 of e^{nu |p| |q|}.
pub fn kernel_terms_needed(s: f64) -> usize {
    if s <= 0.0 {
        return 1;
    }
    let cutoff = 1e-16 * s.exp();
    let mut term = 1.0;
    for n in 1..=512 {
        term *= s / n as f64;
        if term < cutoff {
            return n;
        }
    }
    512
}

fn kernel_sum(p: Quaternion, q: Quaternion, nu: f64) -> Quaternion {
    let s = nu * p.modulus() * q.modulus();
    let terms = kernel_terms_needed(s);
    let qc = q.conj();
    let mut p_pow = Quaternion::ONE;
    let mut qc_pow = Quaternion::ONE;
    let mut coeff = 1.0;
    let mut acc = Quaternion::ONE;
    for n in 1..=terms {
        p_pow = p_pow * p;
        qc_pow = qc_pow * qc;
        coeff *= nu / n as f64;
        acc += p_pow * qc_pow * coeff;
    }
    acc * (nu / PI)
}

/// The reproducing kernel K_nu(p,q) = (nu/pi) sum nu^n p^n conj(q)^n / n!,
/// summed in exactly that order (the two powers do not commute).
pub fn reproducing_kernel(p: Quaternion, q: Quaternion, nu: f64) -> Result<Quaternion> {
    check_nu(nu)?;
    Ok(kernel_sum(p, q, nu))
}

/// K_q = K(., q) as a Fock element, truncated by the same tail rule at the
/// degree the coefficient norms need.
pub fn kernel_section(q: Quaternion, nu: f64) -> Result<FockElement> {
    check_nu(nu)?;
    let degree = kernel_terms_needed(nu * q.norm_sqr());
    let qc = q.conj();
    let mut coeffs = Vec::with_capacity(degree + 1);
    let mut qc_pow = Quaternion::ONE;
    let mut coeff = nu / PI;
    coeffs.push(qc_pow * coeff);
    for n in 1..=degree {
        qc_pow = qc_pow * qc;
        coeff *= nu / n as f64;
        coeffs.push(qc_pow * coeff);
    }
    FockElement::from_coeffs(nu, coeffs)
}

/// Closed-form squared norm of the kernel section, (nu/pi) e^{nu |q|^2}.
pub fn kernel_norm_sq(q: Quaternion, nu: f64) -> Result<f64> {
    check_nu(nu)?;
    Ok(nu / PI * (nu * q.norm_sqr()).exp())
}

/// The point-evaluation bound (nu/pi)^{1/2} e^{nu |q|^2 / 2} norm_f; every
/// |f(q)| stays below it.
pub fn point_eval_bound(q: Quaternion, nu: f64, norm_f: f64) -> f64 {
    (nu / PI).sqrt() * (nu * q.norm_sqr() / 2.0).exp() * norm_f
}

/// Evaluates f(q) through the reproducing identity
/// f(q) = int conj(K(p,q)) f(p) e^{-nu |p|^2} dlambda_I(p),
/// with the integral taken over the given slice.
pub fn reproduce(
    f: &FockElement,
    q: Quaternion,
    unit: ImaginaryUnit,
    rule: &SliceQuadrature,
) -> Result<Quaternion> {
    if rule.nu != f.nu {
        return Err(Error::MismatchedWeight { lhs: f.nu, rhs: rule.nu });
    }
    // the kernel column at |q| behaves like a polynomial of this degree on
    // the truncated disc of radius R
    let kernel_degree = kernel_terms_needed(f.nu * q.modulus() * rule.radius());
    rule.ensure_resolves(f.degree() + kernel_degree)?;
    Ok(rule.integrate(unit, |p| kernel_sum(p, q, f.nu).conj() * f.eval(p)))
}
