//! Partition-extrapolation for oscillatory integrals on [a, inf).
//!
//! The range is cut at sign changes of the integrand (or at a fixed
//! period), each piece is integrated adaptively, and the sequence of partial
//! sums is accelerated by repeated averaging over a trailing window.

use super::kronrod::{integrate_adaptive, Adaptive};
use super::{QuadratureError, QuadratureResult};

/// How partition boundaries are placed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PartitionRule {
    /// Bracket and bisect actual sign changes of f; the search step follows
    /// the last observed spacing.
    SignChanges,
    /// Fixed boundaries anchor + k * zero_spacing_hint.
    Periodic { anchor: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OscillatorySpec {
    /// Asymptotic spacing of sign changes (pi for J_0 and trig kernels).
    pub zero_spacing_hint: f64,
    pub max_partitions: usize,
    pub rule: PartitionRule,
    /// Lower integration limit.
    pub start: f64,
}

impl OscillatorySpec {
    pub fn new(zero_spacing_hint: f64) -> Self {
        Self { zero_spacing_hint, max_partitions: 400, rule: PartitionRule::SignChanges, start: 0.0 }
    }

    pub fn periodic(period: f64, anchor: f64) -> Self {
        Self { rule: PartitionRule::Periodic { anchor }, ..Self::new(period) }
    }

    pub fn with_max_partitions(mut self, n: usize) -> Self {
        self.max_partitions = n;
        self
    }

    pub fn validate(&self) -> Result<(), QuadratureError> {
        if !(self.zero_spacing_hint.is_finite() && self.zero_spacing_hint > 0.0) {
            return Err(QuadratureError::BadSpacing(self.zero_spacing_hint));
        }
        Ok(())
    }
}

fn bisect_root(f: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Next sign change of f after `from`, scanning with step `step`.
fn next_sign_change(f: &dyn Fn(f64) -> f64, from: f64, step: f64, limit: usize) -> Option<f64> {
    // start a quarter step in so a root sitting on `from` is not found again
    let mut x0 = from + 0.25 * step;
    let mut f0 = f(x0);
    let mut k = 0;
    while f0 == 0.0 && k < 8 {
        x0 += 1e-3 * step;
        f0 = f(x0);
        k += 1;
    }
    for _ in 0..limit {
        let x1 = x0 + step;
        let f1 = f(x1);
        if f1 == 0.0 {
            return Some(x1);
        }
        if (f1 > 0.0) != (f0 > 0.0) {
            return Some(bisect_root(f, x0, x1));
        }
        x0 = x1;
        f0 = f1;
    }
    None
}

/// Repeated averaging of the last `w` partial sums.
fn averaged(partials: &[f64], w: usize) -> f64 {
    let n = partials.len();
    let w = w.min(n);
    let mut row: Vec<f64> = partials[n - w..].to_vec();
    while row.len() > 1 {
        row = row.windows(2).map(|p| 0.5 * (p[0] + p[1])).collect();
    }
    row[0]
}

const WINDOW: usize = 16;

/// Integral of f over [spec.start, inf) for eventually alternating f.
pub fn integrate_oscillatory(
    f: &dyn Fn(f64) -> f64,
    spec: &OscillatorySpec,
    tol: f64,
) -> Result<QuadratureResult, QuadratureError> {
    spec.validate()?;
    let piece_cfg = Adaptive::abs(tol * 1e-3).with_rel(1e-13);
    let mut evaluations = 0usize;
    let mut piece_err = 0.0;

    let boundary = |prev: f64, spacing: f64, k: usize| -> Option<f64> {
        match spec.rule {
            PartitionRule::Periodic { anchor } => {
                let mut b = anchor + k as f64 * spec.zero_spacing_hint;
                while b <= prev {
                    b += spec.zero_spacing_hint;
                }
                Some(b)
            }
            PartitionRule::SignChanges => next_sign_change(f, prev, spacing / 8.0, 4000),
        }
    };

    let mut a = spec.start;
    let mut spacing = spec.zero_spacing_hint;
    // head: up to the first boundary
    let first = boundary(a, spacing, 0).ok_or(QuadratureError::NoSignChange(a))?;
    let head = integrate_adaptive(f, a, first, piece_cfg);
    evaluations += head.evaluations;
    piece_err += head.error_estimate;
    let mut partials = vec![head.value];
    a = first;

    let mut estimates: Vec<f64> = Vec::new();
    let mut best = head.value;
    let mut best_err = f64::INFINITY;
    let mut quiet = 0;
    for k in 1..=spec.max_partitions {
        let b = match boundary(a, spacing, k) {
            Some(b) => b,
            None => break,
        };
        if matches!(spec.rule, PartitionRule::SignChanges) {
            spacing = b - a;
        }
        let piece = integrate_adaptive(f, a, b, piece_cfg);
        evaluations += piece.evaluations;
        piece_err += piece.error_estimate;
        partials.push(partials.last().unwrap() + piece.value);
        a = b;
        if partials.len() >= 4 {
            let est = averaged(&partials, WINDOW);
            if let Some(&prev) = estimates.last() {
                let diff: f64 = est - prev;
                let e = diff.abs();
                if e < best_err {
                    best_err = e;
                    best = est;
                }
                if e <= tol {
                    quiet += 1;
                    if quiet >= 3 {
                        return Ok(QuadratureResult {
                            value: est,
                            error_estimate: e + piece_err,
                            evaluations,
                            converged: e + piece_err <= tol,
                        });
                    }
                } else {
                    quiet = 0;
                }
            }
            estimates.push(est);
        }
    }
    Ok(QuadratureResult { value: best, error_estimate: best_err + piece_err, evaluations, converged: false })
}
