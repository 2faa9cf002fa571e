//! Numerical integration: Gauss-Laguerre rules, adaptive Gauss-Kronrod on
//! finite and semi-infinite ranges, and partition-extrapolation for
//! oscillatory tails.

pub mod kronrod;
pub mod laguerre;
pub mod oscillatory;

pub use kronrod::{integrate_adaptive, integrate_semi_infinite, Adaptive};
pub use laguerre::{gauss_laguerre_nodes, GaussRule};
pub use oscillatory::{integrate_oscillatory, OscillatorySpec, PartitionRule};

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuadratureError {
    #[error("invalid Gauss-Laguerre rule: n={n}, gamma={gamma}")]
    InvalidRule { n: usize, gamma: f64 },
    #[error("Jacobi-matrix eigen solve did not converge")]
    EigenFailure,
    #[error("zero spacing hint must be finite and positive, got {0}")]
    BadSpacing(f64),
    #[error("no sign change of the integrand found after x={0}")]
    NoSignChange(f64),
    #[error("quadrature did not converge: estimate {value}, error {error:e} above {tol:e}")]
    NotConverged { value: f64, error: f64, tol: f64 },
}

impl QuadratureResult {
    /// Ok(value) when converged, a diagnostic error otherwise.
    pub fn require(self, tol: f64) -> Result<f64, QuadratureError> {
        if self.converged {
            Ok(self.value)
        } else {
            Err(QuadratureError::NotConverged { value: self.value, error: self.error_estimate, tol })
        }
    }
}

/// Adaptive integral over [a, b] to absolute tolerance `tol`.
pub fn integrate_finite(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> QuadratureResult {
    integrate_adaptive(f, a, b, Adaptive::abs(tol))
}

/// Integral over the whole real line as two mapped half-line integrals.
pub fn integrate_real_line(f: &dyn Fn(f64) -> f64, tol: f64) -> QuadratureResult {
    let cfg = Adaptive::abs(0.5 * tol);
    let right = integrate_semi_infinite(f, 0.0, cfg);
    let left = integrate_semi_infinite(&|x: f64| f(-x), 0.0, cfg);
    QuadratureResult {
        value: right.value + left.value,
        error_estimate: right.error_estimate + left.error_estimate,
        evaluations: right.evaluations + left.evaluations,
        converged: right.converged && left.converged,
    }
}
