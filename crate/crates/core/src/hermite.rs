//! Weighted Hermite functions h_n^nu, their normalized companions, and
//! quaternion-coefficient expansions over them.
//!
//! h_n^nu(x) = (-1)^n e^{nu x^2/2} (d/dx)^n e^{-nu x^2} satisfies the
//! recurrence h_{n+1} = 2 nu x h_n - 2 nu n h_{n-1} starting from
//! h_0 = e^{-nu x^2/2}, and carries the closed-form norm
//! ||h_n||^2 = 2^n nu^n n! sqrt(pi/nu). All coefficient bookkeeping below
//! uses the normalized family psi_n = h_n / ||h_n|| instead, which stays
//! O(1) pointwise for any n in scope.

use std::f64::consts::PI;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::quadrature::GaussHermite;
use crate::quaternion::Quaternion;

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

/// Weighted Hermite function h_n^nu(x), by the stable three-term recurrence.
pub fn hermite_h(n: usize, x: f64, nu: f64) -> Result<f64> {
    check_nu(nu)?;
    let gauss = (-nu * x * x / 2.0).exp();
    let mut prev = 0.0;
    let mut cur = gauss;
    for k in 0..n {
        let next = 2.0 * nu * x * cur - 2.0 * nu * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// ||h_n^nu||^2 = 2^n nu^n n! sqrt(pi/nu), accumulated as a running product
/// so no intermediate factorial appears.
pub fn hermite_norm_sq(n: usize, nu: f64) -> Result<f64> {
    check_nu(nu)?;
    let mut acc = (PI / nu).sqrt();
    for k in 1..=n {
        acc *= 2.0 * nu * k as f64;
    }
    Ok(acc)
}

/// Normalized psi_n^nu(x) = h_n^nu(x) / ||h_n^nu||.
pub fn psi_n(n: usize, x: f64, nu: f64) -> Result<f64> {
    Ok(psi_column(n, x, nu)?.pop().unwrap())
}

/// psi_0 .. psi_n at one point, sharing a single recurrence pass:
/// psi_{k+1} = x sqrt(2 nu/(k+1)) psi_k - sqrt(k/(k+1)) psi_{k-1}.
pub fn psi_column(n: usize, x: f64, nu: f64) -> Result<Vec<f64>> {
    check_nu(nu)?;
    let mut out = Vec::with_capacity(n + 1);
    let mut prev = 0.0;
    let mut cur = (nu / PI).powf(0.25) * (-nu * x * x / 2.0).exp();
    out.push(cur);
    for k in 0..n {
        let k = k as f64;
        let next = x * (2.0 * nu / (k + 1.0)).sqrt() * cur - (k / (k + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        out.push(cur);
    }
    Ok(out)
}

/// The Gaussian integral over the real line: for a > 0 and b in any one
/// slice, int e^{-a x^2 + b x} dx = sqrt(pi/a) e^{b^2/(4a)}. b^2 stays in
/// the slice of b, so the quaternionic exponential is exact here.
pub fn gaussian_integral(a: f64, b: Quaternion) -> Result<Quaternion> {
    if a <= 0.0 || !a.is_finite() {
        return Err(Error::Parameter {
            name: "a",
            requirement: "a > 0",
            value: a,
        });
    }
    Ok((PI / a).sqrt() * (b * b * (1.0 / (4.0 * a))).exp())
}

/// A quaternion-valued function of a real variable given as a callable,
/// with a hint for where its mass effectively lives.
#[derive(Clone)]
pub struct SampledFunction {
    eval: Arc<dyn Fn(f64) -> Quaternion + Send + Sync>,
    support: f64,
}

impl SampledFunction {
    pub fn new<F>(support: f64, f: F) -> SampledFunction
    where
        F: Fn(f64) -> Quaternion + Send + Sync + 'static,
    {
        SampledFunction {
            eval: Arc::new(f),
            support,
        }
    }

    pub fn eval(&self, x: f64) -> Quaternion {
        (self.eval)(x)
    }

    /// Effective support radius R: the function is negligible outside [-R, R].
    pub fn support(&self) -> f64 {
        self.support
    }
}

impl std::fmt::Debug for SampledFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SampledFunction")
            .field("support", &self.support)
            .finish_non_exhaustive()
    }
}

/// A finite expansion sum_n psi_n^nu(x) c_n with right quaternion
/// coefficients c_n against the normalized basis.
#[derive(Clone, Debug, PartialEq)]
pub struct HermiteExpansion {
    nu: f64,
    coeffs: Vec<Quaternion>,
}

impl HermiteExpansion {
    pub fn new(nu: f64, coeffs: Vec<Quaternion>) -> Result<HermiteExpansion> {
        check_nu(nu)?;
        let coeffs = if coeffs.is_empty() {
            vec![Quaternion::ZERO]
        } else {
            coeffs
        };
        Ok(HermiteExpansion { nu, coeffs })
    }

    /// The single basis function psi_n^nu.
    pub fn basis_state(nu: f64, n: usize) -> Result<HermiteExpansion> {
        let mut coeffs = vec![Quaternion::ZERO; n + 1];
        coeffs[n] = Quaternion::ONE;
        HermiteExpansion::new(nu, coeffs)
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn coeffs(&self) -> &[Quaternion] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Pointwise value sum psi_n(x) c_n. The psi_n are real, so the scalar
    /// factors commute past the quaternion coefficients.
    pub fn eval(&self, x: f64) -> Quaternion {
        let mut acc = Quaternion::ZERO;
        let mut prev = 0.0;
        let mut cur = (self.nu / PI).powf(0.25) * (-self.nu * x * x / 2.0).exp();
        for (n, c) in self.coeffs.iter().enumerate() {
            acc += *c * cur;
            let k = n as f64;
            let next =
                x * (2.0 * self.nu / (k + 1.0)).sqrt() * cur - (k / (k + 1.0)).sqrt() * prev;
            prev = cur;
            cur = next;
        }
        acc
    }

    /// Parseval norm: ||psi||^2 = sum |c_n|^2.
    pub fn norm_sq(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    /// Wraps the expansion as a callable with its natural support radius
    /// (the classical turning point plus a Gaussian tail margin).
    pub fn to_sampled(&self) -> SampledFunction {
        let copy = self.clone();
        let support = ((2.0 * self.degree() as f64 + 1.0) / self.nu).sqrt() + 4.0 / self.nu.sqrt();
        SampledFunction::new(support, move |x| copy.eval(x))
    }
}

/// L^2 inner product of two expansions in the same weighted space:
/// <phi, psi> = sum conj(b_n) a_n, conjugating the second slot so the form
/// is right-linear in the first.
pub fn l2_inner(phi: &HermiteExpansion, psi: &HermiteExpansion) -> Result<Quaternion> {
    if phi.nu != psi.nu {
        return Err(Error::MismatchedWeight {
            lhs: phi.nu,
            rhs: psi.nu,
        });
    }
    let mut acc = Quaternion::ZERO;
    for (a, b) in phi.coeffs.iter().zip(&psi.coeffs) {
        acc += b.conj() * *a;
    }
    Ok(acc)
}

/// Projects a sampled function onto psi_0 .. psi_degree by Gauss-Hermite
/// quadrature folded at the weight's own decay rate. The rule must carry at
/// least 2 * degree nodes, the exactness threshold for the top coefficient
/// when the input is itself an expansion of that degree.
pub fn project(
    f: &SampledFunction,
    nu: f64,
    degree: usize,
    rule: &GaussHermite,
) -> Result<HermiteExpansion> {
    check_nu(nu)?;
    let needed = (2 * degree).max(1);
    if rule.len() < needed {
        return Err(Error::QuadratureUnderResolved {
            what: "Hermite projection",
            needed,
            supported: rule.len(),
        });
    }
    let s = nu.sqrt();
    let mut coeffs = vec![Quaternion::ZERO; degree + 1];
    for (t, w) in rule.nodes().iter().zip(rule.folded_weights()) {
        let x = t / s;
        let fw = f.eval(x) * (w / s);
        let mut prev = 0.0;
        let mut cur = (nu / PI).powf(0.25) * (-nu * x * x / 2.0).exp();
        for (n, slot) in coeffs.iter_mut().enumerate() {
            *slot += fw * cur;
            let k = n as f64;
            let next = x * (2.0 * nu / (k + 1.0)).sqrt() * cur - (k / (k + 1.0)).sqrt() * prev;
            prev = cur;
            cur = next;
        }
    }
    HermiteExpansion::new(nu, coeffs)
}
