//! Quaternion arithmetic and the slice decomposition q = x + yI.
//!
//! Everything downstream (power series, Fock inner products, the transform
//! kernels) reduces to Hamilton products and the polar form of a quaternion
//! relative to its imaginary axis, so this module keeps those primitives
//! small and branch-predictable.

use num_complex::Complex64;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// Below this imaginary norm a quaternion has no well-defined axis.
pub const AXIS_EPS: f64 = 1e-12;

/// Two imaginary units count as perpendicular when |<I,J>| stays under this.
pub const PERP_TOL: f64 = 1e-10;

/// A quaternion w + xi + yj + zk with f64 components.
#[derive(Copy, Clone, Debug, PartialEq, Default)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quaternion { w, x, y, z }
    }

    pub const fn from_real(t: f64) -> Self {
        Quaternion::new(t, 0.0, 0.0, 0.0)
    }

    /// Scalar (real) part.
    pub fn re(self) -> f64 {
        self.w
    }

    /// Imaginary part as a quaternion with zero scalar component.
    pub fn im(self) -> Quaternion {
        Quaternion::new(0.0, self.x, self.y, self.z)
    }

    /// Euclidean norm of the imaginary part.
    pub fn im_norm(self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn conj(self) -> Quaternion {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn modulus(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Euclidean inner product of the four components.
    pub fn dot(self, rhs: Quaternion) -> f64 {
        self.w * rhs.w + self.x * rhs.x + self.y * rhs.y + self.z * rhs.z
    }

    /// The unit imaginary direction Im(q)/|Im(q)|.
    ///
    /// Real and near-real quaternions have every slice through them, so no
    /// single axis can be returned; that case is an error the caller must
    /// handle (usually by treating q as real).
    pub fn axis(self) -> Result<ImaginaryUnit> {
        let v = self.im_norm();
        if v <= AXIS_EPS {
            return Err(Error::NearRealAxis {
                im_norm: v,
                eps: AXIS_EPS,
            });
        }
        Ok(ImaginaryUnit(Quaternion::new(
            0.0,
            self.x / v,
            self.y / v,
            self.z / v,
        )))
    }

    /// Polar slice form q = x + yI with y > 0.
    pub fn to_slice(self) -> Result<SlicePoint> {
        let unit = self.axis()?;
        Ok(SlicePoint {
            x: self.w,
            y: self.im_norm(),
            unit,
        })
    }

    /// Quaternionic exponential e^w (cos|v| + sin|v|/|v| · v), v = Im(q).
    pub fn exp(self) -> Quaternion {
        let v = self.im_norm();
        let ew = self.w.exp();
        // sin(v)/v, switching to the Taylor head near zero so the vector
        // factor stays smooth instead of hitting 0/0
        let sinc = if v < 1e-8 {
            1.0 - v * v / 6.0
        } else {
            v.sin() / v
        };
        Quaternion::new(
            ew * v.cos(),
            ew * sinc * self.x,
            ew * sinc * self.y,
            ew * sinc * self.z,
        )
    }

    /// q^n by repeated squaring. Powers of one quaternion commute, so the
    /// usual binary-exponentiation ladder is exact here.
    pub fn powu(self, n: u32) -> Quaternion {
        let mut acc = Quaternion::ONE;
        let mut base = self;
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            n >>= 1;
        }
        acc
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(self.w + rhs.w, self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, rhs: Quaternion) {
        *self = *self + rhs;
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(self.w - rhs.w, self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl SubAssign for Quaternion {
    fn sub_assign(&mut self, rhs: Quaternion) {
        *self = *self - rhs;
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    /// Hamilton product; noncommutative.
    fn mul(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w * rhs.w - self.x * rhs.x - self.y * rhs.y - self.z * rhs.z,
            self.w * rhs.x + self.x * rhs.w + self.y * rhs.z - self.z * rhs.y,
            self.w * rhs.y - self.x * rhs.z + self.y * rhs.w + self.z * rhs.x,
            self.w * rhs.z + self.x * rhs.y - self.y * rhs.x + self.z * rhs.w,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, t: f64) -> Quaternion {
        Quaternion::new(self.w * t, self.x * t, self.y * t, self.z * t)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    fn mul(self, q: Quaternion) -> Quaternion {
        q * self
    }
}

impl Div<f64> for Quaternion {
    type Output = Quaternion;
    fn div(self, t: f64) -> Quaternion {
        Quaternion::new(self.w / t, self.x / t, self.y / t, self.z / t)
    }
}

impl From<f64> for Quaternion {
    fn from(t: f64) -> Quaternion {
        Quaternion::from_real(t)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.w)?;
        for (c, name) in [(self.x, "i"), (self.y, "j"), (self.z, "k")] {
            // adding 0.0 turns -0.0 into +0.0 so zeros always print as "+ 0"
            let c = c + 0.0;
            if c >= 0.0 {
                write!(f, " + {c}{name}")?;
            } else {
                write!(f, " - {}{name}", -c)?;
            }
        }
        Ok(())
    }
}

/// A pure unit quaternion, i.e. a point of the 2-sphere of imaginary
/// directions. Each such I spans a complex plane C_I = R + RI inside the
/// quaternions.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct ImaginaryUnit(Quaternion);

impl ImaginaryUnit {
    pub const I: ImaginaryUnit = ImaginaryUnit(Quaternion::I);
    pub const J: ImaginaryUnit = ImaginaryUnit(Quaternion::J);
    pub const K: ImaginaryUnit = ImaginaryUnit(Quaternion::K);

    /// Normalizes (x, y, z) to a unit imaginary direction.
    pub fn new(x: f64, y: f64, z: f64) -> Result<ImaginaryUnit> {
        let v = (x * x + y * y + z * z).sqrt();
        if v <= AXIS_EPS {
            return Err(Error::NearRealAxis {
                im_norm: v,
                eps: AXIS_EPS,
            });
        }
        Ok(ImaginaryUnit(Quaternion::new(0.0, x / v, y / v, z / v)))
    }

    pub fn as_quaternion(self) -> Quaternion {
        self.0
    }

    /// Sends a complex number into the slice C_I: a + bi maps to a + bI.
    pub fn embed(self, c: Complex64) -> Quaternion {
        Quaternion::new(c.re, c.im * self.0.x, c.im * self.0.y, c.im * self.0.z)
    }

    /// Reads a point of C_I back as a complex number. The caller asserts the
    /// quaternion actually lies in this slice; components orthogonal to I
    /// are ignored.
    pub fn project(self, q: Quaternion) -> Complex64 {
        Complex64::new(q.w, q.x * self.0.x + q.y * self.0.y + q.z * self.0.z)
    }

    pub fn dot(self, other: ImaginaryUnit) -> f64 {
        self.0.dot(other.0)
    }

    /// A deterministic unit perpendicular to this one: Gram-Schmidt against
    /// whichever of i, j, k is least aligned with self.
    pub fn any_perpendicular(self) -> ImaginaryUnit {
        let n = self.0;
        let mut best = Quaternion::I;
        let mut best_dot = f64::INFINITY;
        for c in [Quaternion::I, Quaternion::J, Quaternion::K] {
            let d = c.dot(n).abs();
            if d < best_dot {
                best_dot = d;
                best = c;
            }
        }
        let p = best.dot(n);
        ImaginaryUnit::new(best.x - p * n.x, best.y - p * n.y, best.z - p * n.z)
            .expect("the least-aligned basis vector never projects to zero")
    }

    /// Checks |<I, J>| <= PERP_TOL, the prerequisite for a splitting basis.
    pub fn ensure_perpendicular(self, other: ImaginaryUnit) -> Result<()> {
        let d = self.dot(other).abs();
        if d > PERP_TOL {
            return Err(Error::NotPerpendicular { dot: d, tol: PERP_TOL });
        }
        Ok(())
    }
}

impl Neg for ImaginaryUnit {
    type Output = ImaginaryUnit;
    fn neg(self) -> ImaginaryUnit {
        ImaginaryUnit(-self.0)
    }
}

impl fmt::Display for ImaginaryUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0.x, self.0.y, self.0.z)
    }
}

/// A quaternion in polar slice coordinates: q = x + yI with y >= 0.
///
/// The upper-half-plane convention makes the representation unique away from
/// the real axis (where the axis itself is ambiguous).
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct SlicePoint {
    pub x: f64,
    pub y: f64,
    pub unit: ImaginaryUnit,
}

impl SlicePoint {
    /// Canonicalizes y >= 0 by flipping the unit when needed.
    pub fn new(x: f64, y: f64, unit: ImaginaryUnit) -> SlicePoint {
        if y < 0.0 {
            SlicePoint { x, y: -y, unit: -unit }
        } else {
            SlicePoint { x, y, unit }
        }
    }

    /// Back to an honest quaternion x + yI.
    pub fn quaternion(self) -> Quaternion {
        self.unit.embed(Complex64::new(self.x, self.y))
    }

    /// The complex coordinate x + iy of this point within its slice.
    pub fn complex(self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }
}
