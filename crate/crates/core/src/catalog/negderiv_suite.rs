//! Integration through derivative series against quadrature and
//! finite-difference oracles.

use super::helpers::richardson_derivative;
use super::{fail, Context, EvalError, IdentityCheck, Sample, TolKind};
use crate::negderiv::{
    bessel_integral_series, bessel_nth_derivative, gaussian_integral_series, hermite_integral_series,
    negderiv_cos_integral, negderiv_integral, BuiltinIntegrand, FnProvider, HermiteIntegral,
};
use crate::quadrature::{integrate_adaptive, Adaptive};
use crate::special::bessel::bessel_j;
use crate::special::poly::hermite2_value;

fn quad(f: impl Fn(f64) -> f64, a: f64, b: f64) -> Result<f64, EvalError> {
    Ok(integrate_adaptive(&f, a, b, Adaptive::abs(1e-13).with_rel(1e-13)).require(1e-11)?)
}

fn which(kind: &str) -> HermiteIntegral {
    match kind {
        "hermite-x" => HermiteIntegral::X,
        "hermite-y" => HermiteIntegral::Y,
        "hermite-x-cos" => HermiteIntegral::XCos,
        _ => HermiteIntegral::YCos,
    }
}

fn lhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let a = &s.args;
    match s.kind {
        "sum-j0" => Ok(negderiv_integral(&BuiltinIntegrand::J0, a[0], a[1] as usize)?.value),
        "sum-gauss" => {
            Ok(negderiv_integral(&BuiltinIntegrand::Gauss { a: a[0], b: a[1] }, a[2], a[3] as usize)?.value)
        }
        "hermite-x" | "hermite-y" | "hermite-x-cos" | "hermite-y-cos" => Ok(hermite_integral_series(which(s.kind), a[0] as usize, a[1], a[2])),
        "gauss-closed" => Ok(gaussian_integral_series(a[0], a[1], a[2], a[3] as usize)?.value),
        "j0-deriv" => Ok(bessel_nth_derivative(a[0] as usize, a[1])?),
        "j0-bessel-sum" => Ok(bessel_integral_series(a[0], a[1] as usize)?.value),
        "cos-one" => {
            let one = FnProvider { f: |s: usize, _: f64| if s == 0 { 1.0 } else { 0.0 }, max_s: None };
            Ok(negderiv_cos_integral(&one, a[0], 4)?.value)
        }
        "cos-j0" => Ok(negderiv_cos_integral(&BuiltinIntegrand::J0, a[0], a[1] as usize)?.value),
        k => fail(format!("unknown case {k}")),
    }
}

fn rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let a = &s.args;
    match s.kind {
        "sum-j0" | "j0-bessel-sum" => quad(|t| bessel_j(0, t), 0.0, a[0]),
        "sum-gauss" | "gauss-closed" => {
            let (p, q) = (a[0], a[1]);
            quad(|t| (p * t * t + q * t).exp(), 0.0, a[a.len() - 2])
        }
        // int_0^x H_n(t, y) dt = (H_{n+1}(x, y) - H_{n+1}(0, y)) / (n + 1)
        "hermite-x" => {
            let (n, x, y) = (a[0] as usize, a[1], a[2]);
            Ok((hermite2_value(n + 1, x, y) - hermite2_value(n + 1, 0.0, y)) / (n + 1) as f64)
        }
        "hermite-y" => {
            let (n, x) = (a[0] as usize, a[1]);
            quad(|t| hermite2_value(n, x, t), 0.0, a[2])
        }
        "hermite-x-cos" => {
            let (n, y) = (a[0] as usize, a[2]);
            quad(|t| hermite2_value(n, t, y) * t.cos(), 0.0, a[1])
        }
        "hermite-y-cos" => {
            let (n, x) = (a[0] as usize, a[1]);
            quad(|t| hermite2_value(n, x, t) * t.cos(), 0.0, a[2])
        }
        "j0-deriv" => Ok(richardson_derivative(&|t| bessel_j(0, t), a[0] as usize, a[1], 0.4)),
        "cos-one" => Ok(a[0].sin()),
        "cos-j0" => quad(|t| bessel_j(0, t) * t.cos(), 0.0, a[0]),
        k => fail(format!("unknown case {k}")),
    }
}

fn suite_samples(_: &Context) -> Vec<Sample> {
    let mut v = vec![
        Sample::new("sum-j0", &[1.0, 30.0]).with_tol(1e-10),
        Sample::new("sum-j0", &[0.5, 25.0]).with_tol(1e-10),
        Sample::new("sum-gauss", &[-1.0, 0.0, 1.0, 40.0]).with_tol(1e-10),
        Sample::new("hermite-x", &[0.0, 0.7, 1.0]).with_tol(1e-13),
        Sample::new("hermite-x", &[2.0, 1.0, 1.0]).with_tol(1e-13),
        Sample::new("hermite-x", &[5.0, 0.8, -0.5]).with_tol(1e-12),
        Sample::new("hermite-y", &[2.0, 1.0, 0.5]).with_tol(1e-12),
        Sample::new("hermite-y", &[6.0, 0.5, 1.5]).with_tol(1e-11),
        Sample::new("hermite-x-cos", &[2.0, 1.0, 1.0]).with_tol(1e-10),
        Sample::new("hermite-x-cos", &[5.0, 1.3, -0.5]).with_tol(1e-10),
        Sample::new("hermite-y-cos", &[4.0, 1.0, 0.8]).with_tol(1e-10),
        Sample::new("gauss-closed", &[0.3, 0.5, 0.8, 40.0]).with_tol(1e-9),
        Sample::new("gauss-closed", &[-1.0, 0.0, 1.0, 40.0]).with_tol(1e-9),
        Sample::new("j0-bessel-sum", &[1.0, 30.0]).with_tol(1e-9),
        Sample::new("j0-bessel-sum", &[0.5, 25.0]).with_tol(1e-9),
        Sample::new("cos-one", &[0.7]).with_tol(1e-12),
        Sample::new("cos-j0", &[1.0, 30.0]).with_tol(1e-9),
    ];
    for n in 1..=3 {
        for &x in &[1.2, 2.0] {
            v.push(Sample::new("j0-deriv", &[n as f64, x]).with_tol(1e-7));
        }
    }
    v
}

pub(super) fn checks() -> Vec<IdentityCheck> {
    vec![IdentityCheck {
        id: "negderiv-suite",
        description: "integration-by-parts series with negative derivatives against quadrature and finite differences",
        paper_ref: "int_0^x f = sum (-1)^s x^{s+1}/(s+1)! f^{(s)}(x); Hermite, Gaussian and J_0 instances; \
                    d^n J_0/dx^n = (-1)^n n! sum (-2x)^{-r} J_{n-r}(x) / (r! (n-2r)!)",
        tags: &["negderiv"],
        lhs,
        rhs,
        samples: suite_samples,
        tolerance: 1e-9,
        tol_kind: TolKind::Abs,
        flags: &[],
        notes: "per-sample tolerances: 1e-10 for the J_0 partial sums, 1e-9 for the Gaussian series, 1e-7 against finite differences",
    }]
}
