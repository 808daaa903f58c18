//! Gauss-Hermite and Gauss-Legendre rules with the Gaussian weight folded
//! analytically.
//!
//! Node generation is the classical Newton iteration, but run on the
//! *weighted* orthonormal Hermite functions psi_n(t) = H_n(t) e^{-t^2/2} /
//! (2^n n! sqrt(pi))^{1/2} instead of the bare polynomials. The recurrence
//! for psi_n keeps every intermediate O(1), so nodes and the e^{t^2}-folded
//! weights come out finite even where H_n itself would overflow and the raw
//! weight would underflow.

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;

/// Hard cap on rule sizes; far beyond anything the transforms need, but the
/// weighted recurrence loses its footing once e^{-t^2/2} underflows at the
/// extreme nodes (n around 700).
pub const MAX_NODES: usize = 512;

/// psi_n(t) and its derivative, by the normalized three-term recurrence.
/// At a root of psi_n the derivative reduces to sqrt(2n) psi_{n-1}(t).
fn weighted_hermite_pair(n: usize, t: f64) -> (f64, f64) {
    let mut prev = 0.0;
    let mut cur = std::f64::consts::PI.powf(-0.25) * (-t * t / 2.0).exp();
    for k in 0..n {
        let k = k as f64;
        let next = t * (2.0 / (k + 1.0)).sqrt() * cur - (k / (k + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    let slope = (2.0 * n as f64).sqrt() * prev - t * cur;
    (cur, slope)
}

/// Gauss-Hermite rule: integrates p(t) e^{-t^2} exactly for polynomials p of
/// degree <= 2n - 1.
#[derive(Clone, Debug)]
pub struct GaussHermite {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    folded: Vec<f64>,
}

impl GaussHermite {
    pub fn new(n: usize) -> Result<GaussHermite> {
        if n == 0 || n > MAX_NODES {
            return Err(Error::Parameter {
                name: "nodes",
                requirement: "1 <= nodes <= 512",
                value: n as f64,
            });
        }

        let mut nodes = vec![0.0; n];
        let mut folded = vec![0.0; n];
        let half = n.div_ceil(2);
        let nf = n as f64;
        let mut roots = Vec::with_capacity(half);

        for i in 0..half {
            // positive roots, largest first; the standard asymptotic guesses
            let mut t: f64 = match i {
                0 => (2.0 * nf + 1.0).sqrt() - 1.85575 * (2.0 * nf + 1.0).powf(-1.0 / 6.0),
                1 => roots[0] - 1.14 * nf.powf(0.426) / roots[0],
                2 => 1.86 * roots[1] - 0.86 * roots[0],
                3 => 1.91 * roots[2] - 0.91 * roots[1],
                _ => 2.0 * roots[i - 1] - roots[i - 2],
            };
            if n % 2 == 1 && i == half - 1 {
                // odd rules have an exact root at the origin
                t = 0.0;
            }
            // Newton, run until the step stalls at roundoff level
            let mut prev = f64::INFINITY;
            for _ in 0..100 {
                let (p, dp) = weighted_hermite_pair(n, t);
                let dt = p / dp;
                t -= dt;
                if dt == 0.0 || dt.abs() >= prev {
                    break;
                }
                prev = dt.abs();
            }
            roots.push(t);

            let (_, dp) = weighted_hermite_pair(n, t);
            let w = 2.0 / (dp * dp);
            nodes[n - 1 - i] = t;
            nodes[i] = -t;
            folded[n - 1 - i] = w;
            folded[i] = w;
        }

        let weights = nodes
            .iter()
            .zip(&folded)
            .map(|(t, w)| w * (-t * t).exp())
            .collect();
        Ok(GaussHermite { nodes, weights, folded })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes in ascending order, for the weight e^{-t^2}.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Classical weights w_i.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Barrier-free weights w_i e^{t_i^2}; finite even at the extreme nodes.
    pub fn folded_weights(&self) -> &[f64] {
        &self.folded
    }

    /// Integrates f over the real line, exactly whenever f(x) = p(x) e^{-rho x^2}
    /// with deg p <= 2n - 1. The Gaussian factor stays inside f; the folded
    /// weights cancel it at the nodes, so nothing is lost to underflow.
    pub fn integrate_gaussian<F>(&self, rho: f64, mut f: F) -> Result<Quaternion>
    where
        F: FnMut(f64) -> Quaternion,
    {
        if rho <= 0.0 || !rho.is_finite() {
            return Err(Error::Parameter {
                name: "rho",
                requirement: "rho > 0",
                value: rho,
            });
        }
        let s = rho.sqrt();
        let mut acc = Quaternion::ZERO;
        for (t, w) in self.nodes.iter().zip(&self.folded) {
            acc += f(t / s) * (w / s);
        }
        Ok(acc)
    }

    /// Half-width of the interval the rule actually samples once folded to
    /// decay rate rho: nodes map to t/sqrt(rho).
    pub fn reach(&self, rho: f64) -> f64 {
        self.nodes.last().copied().unwrap_or(0.0) / rho.sqrt()
    }

    /// Errors unless the folded rule samples past the given support radius.
    pub fn ensure_covers(&self, rho: f64, support: f64) -> Result<()> {
        // a rule of n nodes reaches about sqrt(2n + 1) - 1.86 (2n + 1)^{-1/6}
        // before folding; invert the crude bound sqrt(2n) - 1.86 to express
        // the deficit as a node count that always exceeds the current size
        if self.reach(rho) < support {
            let scaled = support * rho.sqrt() + 1.86;
            let needed = (scaled * scaled / 2.0).ceil() as usize;
            return Err(Error::QuadratureUnderResolved {
                what: "Gauss-Hermite support coverage",
                needed,
                supported: self.len(),
            });
        }
        Ok(())
    }
}

/// Gauss-Legendre rule on [-1, 1], exact for polynomials of degree <= 2n - 1.
#[derive(Clone, Debug)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Result<GaussLegendre> {
        if n == 0 || n > MAX_NODES {
            return Err(Error::Parameter {
                name: "nodes",
                requirement: "1 <= nodes <= 512",
                value: n as f64,
            });
        }
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let half = n.div_ceil(2);
        let nf = n as f64;

        for i in 0..half {
            let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut pp = 0.0;
            let mut prev = f64::INFINITY;
            for _ in 0..100 {
                let mut p1 = 1.0;
                let mut p2 = 0.0;
                for j in 0..n {
                    let j = j as f64;
                    let p3 = p2;
                    p2 = p1;
                    p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
                }
                pp = nf * (z * p1 - p2) / (z * z - 1.0);
                let dz = p1 / pp;
                z -= dz;
                if dz == 0.0 || dz.abs() >= prev {
                    break;
                }
                prev = dz.abs();
            }
            let w = 2.0 / ((1.0 - z * z) * pp * pp);
            nodes[i] = -z;
            nodes[n - 1 - i] = z;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[half - 1] = 0.0;
        }
        Ok(GaussLegendre { nodes, weights })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Integrates f over [a, b] by the affine change of variables.
    pub fn integrate<F>(&self, a: f64, b: f64, mut f: F) -> Quaternion
    where
        F: FnMut(f64) -> Quaternion,
    {
        let mid = 0.5 * (a + b);
        let hw = 0.5 * (b - a);
        let mut acc = Quaternion::ZERO;
        for (z, w) in self.nodes.iter().zip(&self.weights) {
            acc += f(mid + hw * z) * (w * hw);
        }
        acc
    }
}
