//! Shared evaluation pieces: truncated sums with a convergence guard,
//! finite-difference oracles and a few integral representations.

use super::{fail, EvalError, Sample};
use crate::quadrature::{integrate_semi_infinite, Adaptive};
use crate::series::{Scalar, TruncatedSeries};
use crate::special::bessel::bessel_j;
use crate::special::bessel::tricomi_c;
use crate::special::gamma::sqrt_pi;

/// Truncation index for every generating-function sum.
pub const GF_TERMS: usize = 40;

/// Largest admissible final increment, relative to max(1, |sum|).
pub const GF_INCREMENT: f64 = 1e-14;

/// sum_{n=0}^{GF_TERMS} term(n), refusing when either of the last two terms
/// is not below GF_INCREMENT (two, so that parity zeros cannot hide a tail).
pub fn gf_sum(term: impl Fn(usize) -> f64) -> Result<f64, EvalError> {
    let mut sum = 0.0;
    let mut last = [0.0f64; 2];
    for n in 0..=GF_TERMS {
        let t = term(n);
        sum += t;
        last = [last[1], t];
    }
    let inc = last[0].abs().max(last[1].abs());
    if !(inc <= GF_INCREMENT * sum.abs().max(1.0)) {
        return fail(format!("truncated sum not settled at n={GF_TERMS}: last increment {inc:e}"));
    }
    Ok(sum)
}

/// Series value at a real point, refusing when the last stored term is not
/// negligible next to the value.
pub fn series_at(s: &TruncatedSeries, x: f64, tail_tol: f64) -> Result<f64, EvalError> {
    let e = s.eval(Scalar::new(x, 0.0))?;
    if !(e.tail <= tail_tol * e.value.norm().max(1.0)) {
        return fail(format!("series tail {:e} at x={x} above {tail_tol:e}; raise the order", e.tail));
    }
    Ok(e.value.re)
}

/// Coefficient k of a series as a sample value.
pub fn coeff_of(s: &TruncatedSeries, k: usize) -> Result<f64, EvalError> {
    if k > s.order() {
        return fail(format!("index {k} beyond order {}", s.order()));
    }
    let c = s.coeff(k);
    if c.im != 0.0 {
        return fail(format!("coefficient {k} has imaginary part {}", c.im));
    }
    Ok(c.re)
}

/// One sample per (case, coefficient index), args = case values then index.
pub fn coeff_samples(kind: &'static str, cases: &[&[f64]], order: usize) -> Vec<Sample> {
    let mut out = Vec::new();
    for case in cases {
        for k in 0..=order {
            let mut a = case.to_vec();
            a.push(k as f64);
            out.push(Sample::new(kind, &a));
        }
    }
    out
}

/// Last argument read back as a coefficient index.
pub fn index_arg(s: &Sample) -> usize {
    s.args[s.args.len() - 1] as usize
}

fn central_difference(f: &dyn Fn(f64) -> f64, n: usize, x: f64, h: f64) -> f64 {
    let mut sum = 0.0;
    let mut binom = 1.0;
    for k in 0..=n {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * binom * f(x + (n as f64 / 2.0 - k as f64) * h);
        binom = binom * (n - k) as f64 / (k + 1) as f64;
    }
    sum / h.powi(n as i32)
}

/// n-th derivative by central differences with Richardson extrapolation
/// over halving steps (error O(h^2) per level).
pub fn richardson_derivative(f: &dyn Fn(f64) -> f64, n: usize, x: f64, h0: f64) -> f64 {
    if n == 0 {
        return f(x);
    }
    const LEVELS: usize = 6;
    let mut table: Vec<Vec<f64>> = Vec::with_capacity(LEVELS);
    for i in 0..LEVELS {
        let h = h0 / 2f64.powi(i as i32);
        let mut row = vec![central_difference(f, n, x, h)];
        for j in 1..=i {
            let p = 4f64.powi(j as i32);
            let v = (p * row[j - 1] - table[i - 1][j - 1]) / (p - 1.0);
            row.push(v);
        }
        table.push(row);
    }
    // pick the diagonal entry whose change from its predecessor is smallest
    let mut best = table[1][1];
    let mut best_err = (table[1][1] - table[0][0]).abs();
    for i in 2..LEVELS {
        let err = (table[i][i] - table[i - 1][i - 1]).abs();
        if err < best_err {
            best_err = err;
            best = table[i][i];
        }
    }
    best
}

/// Zeroth-order Hankel transform int_0^inf x f(x) J_0(x y) dx for f that
/// decays fast enough for a plain semi-infinite rule.
pub fn hankel0(f: &dyn Fn(f64) -> f64, y: f64, tol: f64) -> Result<f64, EvalError> {
    let g = |x: f64| x * f(x) * bessel_j(0, x * y);
    Ok(integrate_semi_infinite(&g, 0.0, Adaptive::abs(tol).with_rel(tol)).require(tol)?)
}

/// Pointwise inverse image of e^{-x^2} under the quarter-order Borel
/// transform: sum (-x^2)^k / (k! Gamma(1 + k/2)), written through the
/// duplication formula as (2/sqrt(pi)) int_0^inf e^{-v^2} C_0(2 x^2 v) dv.
pub fn inverse_quarter_image(x: f64) -> Result<f64, EvalError> {
    let z = 2.0 * x * x;
    let g = |v: f64| (-v * v).exp() * tricomi_c(0.0, z * v);
    let r = integrate_semi_infinite(&g, 0.0, Adaptive::abs(1e-13).with_rel(1e-12)).require(1e-10)?;
    Ok(2.0 / sqrt_pi() * r)
}
