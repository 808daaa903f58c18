//! Numerics for the Segal-Bargmann transform over the quaternions.
//!
//! The transform B maps L^2(R; H) with the Gaussian weight of rate nu onto a
//! slice-regular Fock space: power series in a quaternion variable whose
//! coefficients are square-summable against the weights pi n! / nu^{n+1}.
//! This crate provides both spaces, the transform in both directions along
//! two independent paths (exact coefficient maps and defining-integral
//! quadrature), the reproducing kernel, the slice splitting machinery for
//! slice-regular functions, and the left quaternionic Fourier transform with
//! the identities that connect it to B.
//!
//! Quadrature rules are explicit values passed by the caller, never hidden
//! state, so every computed number is reproducible from its inputs.

pub mod bargmann;
pub mod error;
pub mod fock;
pub mod fourier;
pub mod hermite;
pub mod quadrature;
pub mod quaternion;
pub mod series;

pub use bargmann::{
    bargmann_coeff, bargmann_quadrature, generating_partial_sum, inverse_coeff,
    inverse_quadrature, kernel_a,
};
pub use error::{Error, Result};
pub use fock::{
    fock_inner, fock_inner_quadrature, fock_norm_quadrature, kernel_norm_sq, kernel_section,
    kernel_terms_needed, monomial_inner, point_eval_bound, reproduce, reproducing_kernel,
    FockElement, SliceQuadrature,
};
pub use fourier::{check_diag, check_intertwine, qft_expansion, qft_grid, qft_sampled, QFTResult};
pub use hermite::{
    gaussian_integral, hermite_h, hermite_norm_sq, l2_inner, project, psi_column, psi_n,
    HermiteExpansion, SampledFunction,
};
pub use quadrature::{GaussHermite, GaussLegendre, MAX_NODES};
pub use quaternion::{ImaginaryUnit, Quaternion, SlicePoint, AXIS_EPS, PERP_TOL};
pub use series::{extend, representation, split, PowerSeries, SplitPair};
