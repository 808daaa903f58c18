use thiserror::Error;

/// Errors shared by every numerical layer of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The imaginary part of a quaternion is too small to define a slice axis.
    #[error("imaginary part has norm {im_norm:.3e}, below the axis threshold {eps:.1e}")]
    NearRealAxis { im_norm: f64, eps: f64 },

    /// A scalar argument fell outside its documented domain.
    #[error("parameter `{name}` must satisfy {requirement}, got {value}")]
    Parameter {
        name: &'static str,
        requirement: &'static str,
        value: f64,
    },

    /// Two expansions were combined although they live in different weighted spaces.
    #[error("mismatched Gaussian weights: nu = {lhs} vs nu = {rhs}")]
    MismatchedWeight { lhs: f64, rhs: f64 },

    /// A quadrature rule cannot integrate the requested degree exactly.
    #[error("quadrature under-resolved for {what}: needs {needed}, rule supports {supported}")]
    QuadratureUnderResolved {
        what: &'static str,
        needed: usize,
        supported: usize,
    },

    /// Two imaginary units that must be orthogonal are not.
    #[error("imaginary units are not perpendicular: |<I,J>| = {dot:.3e} exceeds {tol:.1e}")]
    NotPerpendicular { dot: f64, tol: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
