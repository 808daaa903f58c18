//! Truncated slice regular power series f(q) = sum q^n a_n with right
//! quaternion coefficients, the splitting into two complex holomorphic
//! pieces, the representation formula across slices, and pointwise slice
//! extension.

use num_complex::Complex64;

use crate::error::Result;
use crate::quaternion::{ImaginaryUnit, Quaternion};

/// f(q) = sum_n q^n a_n, stored by its coefficient list.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Quaternion>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<Quaternion>) -> PowerSeries {
        let coeffs = if coeffs.is_empty() {
            vec![Quaternion::ZERO]
        } else {
            coeffs
        };
        PowerSeries { coeffs }
    }

    /// The basis monomial e_n(q) = q^n.
    pub fn monomial(n: usize) -> PowerSeries {
        let mut coeffs = vec![Quaternion::ZERO; n + 1];
        coeffs[n] = Quaternion::ONE;
        PowerSeries { coeffs }
    }

    pub fn coeffs(&self) -> &[Quaternion] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Left-nested Horner evaluation a_0 + q(a_1 + q(a_2 + ...)). The powers
    /// of q must stay on the left of each coefficient, so the nesting order
    /// is part of the contract, not an optimization.
    pub fn eval(&self, q: Quaternion) -> Quaternion {
        let mut acc = Quaternion::ZERO;
        for a in self.coeffs.iter().rev() {
            acc = *a + q * acc;
        }
        acc
    }
}

/// The two complex-holomorphic halves of a series restricted to C_I:
/// f_I(z) = F(z) + G(z) J, with F, G written in the complex coordinate of
/// the slice.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitPair {
    pub f_coeffs: Vec<Complex64>,
    pub g_coeffs: Vec<Complex64>,
    pub i: ImaginaryUnit,
    pub j: ImaginaryUnit,
}

fn eval_complex_poly(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for a in coeffs.iter().rev() {
        acc = a + z * acc;
    }
    acc
}

impl SplitPair {
    pub fn eval_f(&self, z: Complex64) -> Complex64 {
        eval_complex_poly(&self.f_coeffs, z)
    }

    pub fn eval_g(&self, z: Complex64) -> Complex64 {
        eval_complex_poly(&self.g_coeffs, z)
    }

    /// Reassembles the slice restriction: F(z) + G(z) J as a quaternion.
    pub fn recombine(&self, z: Complex64) -> Quaternion {
        self.i.embed(self.eval_f(z)) + self.i.embed(self.eval_g(z)) * self.j.as_quaternion()
    }
}

/// Splits a series along the orthogonal frame {1, I, J, IJ}: each
/// coefficient a_n decomposes uniquely as alpha_n + beta_n J with both
/// halves in C_I. Requires I perpendicular to J.
pub fn split(f: &PowerSeries, i: ImaginaryUnit, j: ImaginaryUnit) -> Result<SplitPair> {
    i.ensure_perpendicular(j)?;
    let e1 = i.as_quaternion();
    let e2 = j.as_quaternion();
    let e3 = e1 * e2;
    let mut f_coeffs = Vec::with_capacity(f.coeffs.len());
    let mut g_coeffs = Vec::with_capacity(f.coeffs.len());
    for a in &f.coeffs {
        f_coeffs.push(Complex64::new(a.w, a.dot(e1)));
        g_coeffs.push(Complex64::new(a.dot(e2), a.dot(e3)));
    }
    Ok(SplitPair { f_coeffs, g_coeffs, i, j })
}

/// The representation formula: from the two values f(x + yI) and f(x - yI)
/// on slice C_I, recovers f(x + yJ) as
/// (1 - JI)/2 * f(x+yI) + (1 + JI)/2 * f(x-yI).
pub fn representation(
    f_plus: Quaternion,
    f_minus: Quaternion,
    i: ImaginaryUnit,
    j: ImaginaryUnit,
) -> Quaternion {
    let ji = j.as_quaternion() * i.as_quaternion();
    ((Quaternion::ONE - ji) * f_plus + (Quaternion::ONE + ji) * f_minus) * 0.5
}

/// Pointwise slice extension: h lives on C_I (its argument is always of the
/// form x + yI), and the formula
/// ext(h)(x + yJ) = [h(x+yI) + h(x-yI)]/2 + (JI/2)[h(x-yI) - h(x+yI)]
/// defines the unique slice regular extension at target = x + yJ. Real
/// targets evaluate h on the real axis directly.
pub fn extend<F>(h: F, i: ImaginaryUnit, target: Quaternion) -> Quaternion
where
    F: Fn(Quaternion) -> Quaternion,
{
    match target.to_slice() {
        Ok(s) => {
            let zp = i.embed(Complex64::new(s.x, s.y));
            let zm = i.embed(Complex64::new(s.x, -s.y));
            let hp = h(zp);
            let hm = h(zm);
            let ji = s.unit.as_quaternion() * i.as_quaternion();
            (hp + hm) * 0.5 + ji * (hm - hp) * 0.5
        }
        Err(_) => h(Quaternion::from_real(target.w)),
    }
}
