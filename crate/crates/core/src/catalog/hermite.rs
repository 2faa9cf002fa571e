//! Two-variable Hermite polynomials through the Hermite functional
//! c^k -> (2 sqrt y)^k Gamma((1+k)/2) |cos(k pi/2)| / sqrt(pi).

use super::helpers::{coeff_of, series_at};
use super::{Context, EvalError, IdentityCheck, Sample, TolKind};
use crate::quadrature::integrate_real_line;
use crate::series::{Scalar, TruncatedSeries};
use crate::special::gamma::{factorial, sqrt_pi};
use crate::special::poly::{hermite2, heat_propagate};
use crate::umbral::{umbral_binomial, umbral_eval, umbral_exp, BinomialForm, HermiteFunctional, Rational};

fn poly_samples(ys: &[f64], n_max: usize) -> Vec<Sample> {
    let mut v = Vec::new();
    for &y in ys {
        for n in 0..=n_max {
            for k in 0..=n {
                v.push(Sample::new("coeff", &[y, n as f64, k as f64]));
            }
        }
    }
    v
}

fn yk(s: &Sample) -> (f64, usize, usize) {
    (s.arg(0), s.arg(1) as usize, s.arg(2) as usize)
}

fn hermite_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let (y, n, k) = yk(s);
    coeff_of(&hermite2(n, y), k)
}

fn def_lhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let (y, n, k) = yk(s);
    let e = umbral_binomial(BinomialForm::Shift, n);
    coeff_of(&umbral_eval(&e, &HermiteFunctional { y }, n)?, k)
}

fn exp_lhs(s: &Sample, ctx: &Context) -> Result<f64, EvalError> {
    let (y, k) = (s.arg(0), s.arg(1) as usize);
    let e = umbral_exp(Scalar::new(1.0, 0.0), Rational::from_integer(1), 1, ctx.order);
    coeff_of(&umbral_eval(&e, &HermiteFunctional { y }, ctx.order)?, k)
}

fn exp_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let (y, k) = (s.arg(0), s.arg(1) as usize);
    if k % 2 == 1 {
        return Ok(0.0);
    }
    Ok(y.powi((k / 2) as i32) / factorial(k / 2))
}

fn sqrt_lhs(s: &Sample, ctx: &Context) -> Result<f64, EvalError> {
    let (x, y) = (s.arg(0), s.arg(1));
    match s.kind {
        "umbral" => {
            let e = umbral_exp(Scalar::new(1.0, 0.0), Rational::from_integer(2), 1, ctx.order);
            series_at(&umbral_eval(&e, &HermiteFunctional { y }, ctx.order)?, x, 1e-15)
        }
        // (1/sqrt(pi)) int e^{-xi^2} e^{y (2 xi sqrt(x))^2} dxi
        _ => {
            let a = 1.0 - 4.0 * y * x;
            let r = integrate_real_line(&|xi: f64| (-a * xi * xi).exp(), 1e-13).require(1e-11)?;
            Ok(r / sqrt_pi())
        }
    }
}

fn sqrt_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let (x, y) = (s.arg(0), s.arg(1));
    Ok(1.0 / (1.0 - 4.0 * y * x).sqrt())
}

fn operational_lhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let (y, n, k) = yk(s);
    let mut c = vec![0.0; n + 1];
    c[n] = 1.0;
    coeff_of(&heat_propagate(&TruncatedSeries::from_real(&c), y), k)
}

pub(super) fn checks() -> Vec<IdentityCheck> {
    vec![
        IdentityCheck {
            id: "hermite-umbral-def",
            description: "umbral binomial (x + c)^n under the Hermite functional reproduces H_n(x, y)",
            paper_ref: "H_n(x, y) = (x + c)^n (2 sqrt y)^z Gamma((1+z)/2) |cos(z pi/2)| / sqrt(pi)|_{z=0} = n! sum x^{n-2r} y^r / (r! (n-2r)!)",
            tags: &["hermite", "umbral", "exact"],
            lhs: def_lhs,
            rhs: hermite_rhs,
            samples: |_| poly_samples(&[1.0, -0.5], 10),
            tolerance: 1e-13,
            tol_kind: TolKind::Rel,
            flags: &[],
            notes: "",
        },
        IdentityCheck {
            id: "hermite-umbral-exp",
            description: "umbral exponential e^{c x} under the Hermite functional",
            paper_ref: "e^{c x} [Hermite functional] = sum (4 y x^2)^r Gamma(1/2 + r) / (sqrt(pi) (2r)!) = e^{y x^2}",
            tags: &["hermite", "umbral"],
            lhs: exp_lhs,
            rhs: exp_rhs,
            samples: |ctx| {
                let mut v = Vec::new();
                for &y in &[1.0, 0.5, -2.0] {
                    for k in 0..=ctx.order {
                        v.push(Sample::new("coeff", &[y, k as f64]));
                    }
                }
                v
            },
            tolerance: 1e-12,
            tol_kind: TolKind::Rel,
            flags: &[],
            notes: "",
        },
        IdentityCheck {
            id: "hermite-sqrt-identity",
            description: "umbral e^{c^2 x} under the Hermite functional, by series and by the Gaussian integral",
            paper_ref: "e^{c^2 x} [Hermite functional] = (1/sqrt(pi)) int e^{-xi^2} e^{y (2 xi sqrt(x))^2} dxi = 1/sqrt(1 - 4 y x), |x| < 1/(4|y|)",
            tags: &["hermite", "umbral"],
            lhs: sqrt_lhs,
            rhs: sqrt_rhs,
            samples: |_| {
                let grid: [[f64; 2]; 5] = [[0.1, 1.0], [0.25, 0.5], [-0.125, 1.0], [0.5, -0.25], [1.0, 0.1]];
                grid.iter().flat_map(|a| [Sample::new("umbral", a), Sample::new("gauss", a)]).collect()
            },
            tolerance: 1e-10,
            tol_kind: TolKind::Mixed,
            flags: &[],
            notes: "|4 y x| <= 0.5",
        },
        IdentityCheck {
            id: "hermite-operational",
            description: "heat operator e^{y d^2/dx^2} on x^n gives H_n(x, y)",
            paper_ref: "H_n(x, y) = e^{y d^2/dx^2} x^n",
            tags: &["hermite", "exact"],
            lhs: operational_lhs,
            rhs: hermite_rhs,
            samples: |_| poly_samples(&[1.0, -0.5], 8),
            tolerance: 1e-13,
            tol_kind: TolKind::Rel,
            flags: &[],
            notes: "",
        },
    ]
}
