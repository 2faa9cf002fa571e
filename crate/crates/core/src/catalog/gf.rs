//! Generating functions: truncated sums (n <= 40) against closed forms.

use super::helpers::{gf_sum, series_at};
use super::{fail, Context, EvalError, IdentityCheck, Sample, TolKind};
use crate::series::Scalar;
use crate::special::bessel::{bessel_j, tricomi_c};
use crate::special::gamma::factorial;
use crate::special::poly::{bessel_truncated_value, hermite2_value, laguerre2_value};
use crate::umbral::{umbral_eval, umbral_exp, umbral_geometric, LaguerreFunctional, Rational};
use std::f64::consts::PI;

fn samples(kind: &'static str, grid: &[&[f64]]) -> Vec<Sample> {
    grid.iter().map(|a| Sample::new(kind, a)).collect()
}

fn routes(kinds: &[&'static str], grid: &[&[f64]]) -> Vec<Sample> {
    grid.iter().flat_map(|a| kinds.iter().map(move |k| Sample::new(k, a))).collect()
}

fn tricomi_lhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let (x, t, sigma) = (s.arg(0), s.arg(1), s.arg(2));
    gf_sum(|n| (sigma * t).powi(n as i32) / factorial(n) * tricomi_c(n as f64, x * t))
}

fn tricomi_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let (x, t, sigma) = (s.arg(0), s.arg(1), s.arg(2));
    Ok(tricomi_c(0.0, (x - sigma) * t))
}

fn bessel_lhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let (x, sigma) = (s.arg(0), s.arg(1));
    gf_sum(|n| sigma.powi(n as i32) / factorial(n) * bessel_j(n, x))
}

fn bessel_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let (x, sigma) = (s.arg(0), s.arg(1));
    let q = x * x - 2.0 * sigma * x;
    if q < 0.0 {
        return fail(format!("x^2 - 2 sigma x = {q} < 0"));
    }
    Ok(bessel_j(0, q.sqrt()))
}

fn laguerre_lhs(s: &Sample, ctx: &Context) -> Result<f64, EvalError> {
    let (x, y, xi) = (s.arg(0), s.arg(1), s.arg(2));
    match s.kind {
        "sum" => gf_sum(|n| xi.powi(n as i32) * laguerre2_value(n, x, y)),
        // 1/(1 - xi (y - c x)) = (1 - xi y)^{-1} (1 + c X)^{-1}, X = xi x / (1 - xi y)
        _ => {
            let d = 1.0 - xi * y;
            let e = umbral_eval(&umbral_geometric(Rational::from_integer(1), 1, ctx.order), &LaguerreFunctional, ctx.order)?;
            Ok(series_at(&e, xi * x / d, 1e-15)? / d)
        }
    }
}

fn laguerre_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let (x, y, xi) = (s.arg(0), s.arg(1), s.arg(2));
    let d = 1.0 - y * xi;
    Ok((-x * xi / d).exp() / d)
}

fn trunc_lhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let (x, y, xi) = (s.arg(0), s.arg(1), s.arg(2));
    gf_sum(|n| xi.powi(n as i32) / factorial(n) * bessel_truncated_value(n, x, y))
}

fn trunc_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let (x, y, xi) = (s.arg(0), s.arg(1), s.arg(2));
    Ok(tricomi_c(0.0, x * xi) / (1.0 - y * xi))
}

fn l2_ordinary_lhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let (x, y, t) = (s.arg(0), s.arg(1), s.arg(2));
    gf_sum(|n| t.powi(n as i32) * laguerre2_value(2 * n, x, y))
}

fn l2_ordinary_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let (x, y, t) = (s.arg(0), s.arg(1), s.arg(2));
    let r = t.sqrt();
    let (m, p) = (1.0 - r * y, 1.0 + r * y);
    Ok(0.5 * ((-r * x / m).exp() / m + (r * x / p).exp() / p))
}

fn l2_exp_lhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let (x, y, t) = (s.arg(0), s.arg(1), s.arg(2));
    gf_sum(|n| t.powi(n as i32) / factorial(n) * laguerre2_value(2 * n, x, y))
}

fn l2_exp_rhs(s: &Sample, ctx: &Context) -> Result<f64, EvalError> {
    let (x, y, t) = (s.arg(0), s.arg(1), s.arg(2));
    let pre = (t * y * y).exp();
    match s.kind {
        // e^{t y^2} e^{-2 x c t y + (x c)^2 t} under 1/Gamma(1 + mu)
        "umbral" => {
            let one = Rational::from_integer(1);
            let e = umbral_exp(Scalar::new(-2.0 * t * y, 0.0), one, 1, ctx.order)
                .mul(&umbral_exp(Scalar::new(t, 0.0), Rational::from_integer(2), 2, ctx.order));
            Ok(pre * series_at(&umbral_eval(&e, &LaguerreFunctional, ctx.order)?, x, 1e-15)?)
        }
        _ => Ok(pre * gf_sum(|r| x.powi(r as i32) / factorial(r).powi(2) * hermite2_value(r, -2.0 * y * t, t))?),
    }
}

fn lp_lhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let (p, x, y, t) = (s.arg(0) as usize, s.arg(1), s.arg(2), s.arg(3));
    gf_sum(|n| t.powi(n as i32) * laguerre2_value(p * n, x, y))
}

/// (1/p) sum_k (1 - tau_k y)^{-1} exp(-tau_k x / (1 - tau_k y)),
/// tau_k = t^{1/p} e^{2 pi i k/p}; the imaginary residue must vanish.
fn lp_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let (p, x, y, t) = (s.arg(0) as usize, s.arg(1), s.arg(2), s.arg(3));
    let root = t.powf(1.0 / p as f64);
    let mut sum = Scalar::new(0.0, 0.0);
    for k in 0..p {
        let tau = Scalar::from_polar(root, 2.0 * PI * k as f64 / p as f64);
        let d = Scalar::new(1.0, 0.0) - tau * y;
        sum += (-tau * x / d).exp() / d;
    }
    let v = sum / p as f64;
    if !(v.im.abs() < 1e-10) {
        return fail(format!("imaginary residue {:e} not below 1e-10", v.im));
    }
    Ok(v.re)
}

fn hermite_lacunary_lhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let (x, y, t) = (s.arg(0), s.arg(1), s.arg(2));
    gf_sum(|n| t.powi(n as i32) / factorial(n) * hermite2_value(2 * n, x, y))
}

fn hermite_lacunary_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let (x, y, t) = (s.arg(0), s.arg(1), s.arg(2));
    let d = 1.0 - 4.0 * y * t;
    Ok((x * x * t / d).exp() / d.sqrt())
}

fn mehler_lhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let (x, y, u, v, t) = (s.arg(0), s.arg(1), s.arg(2), s.arg(3), s.arg(4));
    gf_sum(|n| t.powi(n as i32) / factorial(n) * hermite2_value(n, x, y) * hermite2_value(n, u, v))
}

/// (1 - 4 y v t^2)^{-1/2} exp((x u t + v x^2 t^2 + y u^2 t^2) / (1 - 4 y v t^2)).
fn mehler_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let (x, y, u, v, t) = (s.arg(0), s.arg(1), s.arg(2), s.arg(3), s.arg(4));
    let d = 1.0 - 4.0 * y * v * t * t;
    Ok(((x * u * t + v * x * x * t * t + y * u * u * t * t) / d).exp() / d.sqrt())
}

fn hybrid_lhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let (x, y, u, v, t) = (s.arg(0), s.arg(1), s.arg(2), s.arg(3), s.arg(4));
    gf_sum(|n| t.powi(n as i32) / factorial(n) * laguerre2_value(n, x, y) * hermite2_value(n, u, v))
}

fn hybrid_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let (x, y, u, v, t) = (s.arg(0), s.arg(1), s.arg(2), s.arg(3), s.arg(4));
    let pre = (t * y * u + (t * y).powi(2) * v).exp();
    let (a, b) = (-t * u - 2.0 * y * v * t * t, v * t * t);
    Ok(pre * gf_sum(|r| x.powi(r as i32) / factorial(r).powi(2) * hermite2_value(r, a, b))?)
}

pub(super) fn checks() -> Vec<IdentityCheck> {
    vec![
        IdentityCheck {
            id: "gf-tricomi",
            description: "Taylor shift of C0 written through the Tricomi family",
            paper_ref: "A(x, t, sigma) = sum (sigma t)^n / n! C_n(x t) = C_0((x - sigma) t)",
            tags: &["gf"],
            lhs: tricomi_lhs,
            rhs: tricomi_rhs,
            samples: |_| {
                samples("sum", &[&[1.0, 1.0, 0.5], &[2.0, 0.5, -0.5], &[0.5, 2.0, 0.25], &[3.0, 1.0, 1.0], &[1.0, 3.0, 2.0]])
            },
            tolerance: 1e-10,
            tol_kind: TolKind::Mixed,
            flags: &[],
            notes: "",
        },
        IdentityCheck {
            id: "gf-bessel",
            description: "exponential generating function of J_n in the order",
            paper_ref: "sum sigma^n / n! J_n(x) = J_0(sqrt(x^2 - 2 sigma x))",
            tags: &["gf"],
            lhs: bessel_lhs,
            rhs: bessel_rhs,
            samples: |_| samples("sum", &[&[2.0, 0.5], &[3.0, 1.0], &[1.0, -0.5], &[4.0, 1.5], &[5.0, 2.0]]),
            tolerance: 1e-9,
            tol_kind: TolKind::Mixed,
            flags: &[],
            notes: "samples keep x^2 - 2 sigma x >= 0",
        },
        IdentityCheck {
            id: "gf-laguerre",
            description: "ordinary generating function of the two-variable Laguerre polynomials",
            paper_ref: "G(x, y | xi) = sum xi^n L_n(x, y) = 1/(1 - xi (y - c x)) / Gamma(1+z)|_{z=0} = (1 - y xi)^{-1} exp(-x xi / (1 - y xi))",
            tags: &["gf", "umbral"],
            lhs: laguerre_lhs,
            rhs: laguerre_rhs,
            samples: |_| {
                routes(
                    &["sum", "umbral"],
                    &[&[0.5, 1.0, 0.3], &[1.0, 0.5, 0.5], &[1.0, -1.0, 0.25], &[2.0, 1.0, 0.2], &[-1.0, 0.5, 0.4]],
                )
            },
            tolerance: 1e-10,
            tol_kind: TolKind::Mixed,
            flags: &[],
            notes: "|y xi| <= 0.5 against the pole at y xi = 1",
        },
        IdentityCheck {
            id: "gf-bessel-trunc",
            description: "exponential generating function of the Bessel truncated polynomials",
            paper_ref: "sum xi^n / n! b_n(x, y) = C_0(x xi) / (1 - y xi)",
            tags: &["gf"],
            lhs: trunc_lhs,
            rhs: trunc_rhs,
            samples: |_| samples("sum", &[&[1.0, 0.5, 0.5], &[2.0, 1.0, 0.3], &[0.5, -1.0, 0.4], &[3.0, 0.25, 1.0]]),
            tolerance: 1e-10,
            tol_kind: TolKind::Mixed,
            flags: &[],
            notes: "",
        },
        IdentityCheck {
            id: "gf-lacunary-l2-ordinary",
            description: "ordinary lacunary generating function of L_{2n}",
            paper_ref: "sum t^n L_{2n}(x, y) = (1/2) [exp(-sqrt(t) x / (1 - sqrt(t) y)) / (1 - sqrt(t) y) + exp(sqrt(t) x / (1 + sqrt(t) y)) / (1 + sqrt(t) y)]",
            tags: &["gf", "lacunary"],
            lhs: l2_ordinary_lhs,
            rhs: l2_ordinary_rhs,
            samples: |_| {
                samples("sum", &[&[0.5, 0.5, 0.25], &[1.0, 0.5, 0.1], &[0.3, -0.2, 0.5], &[-0.5, 0.25, 0.16]])
            },
            tolerance: 1e-9,
            tol_kind: TolKind::Mixed,
            flags: &[],
            notes: "sqrt(t) (|x| + |y|) <= 0.5",
        },
        IdentityCheck {
            id: "gf-lacunary-l2-exp",
            description: "exponential lacunary generating function of L_{2n}, umbral and Hermite-sum forms",
            paper_ref: "S(x, y | t) = sum t^n / n! L_{2n}(x, y) = e^{t y^2} e^{-2 x c t y + (x c)^2 t} / Gamma(1+z)|_{z=0} \
                        = e^{t y^2} sum x^r / (r!)^2 H_r(-2 y t, t)",
            tags: &["gf", "lacunary", "umbral"],
            lhs: l2_exp_lhs,
            rhs: l2_exp_rhs,
            samples: |_| {
                routes(
                    &["umbral", "hermite-sum"],
                    &[&[1.0, 0.5, 0.5], &[0.5, 1.0, 0.3], &[2.0, -0.5, 0.2], &[-1.0, 1.0, 0.4]],
                )
            },
            tolerance: 1e-9,
            tol_kind: TolKind::Mixed,
            flags: &[],
            notes: "",
        },
        IdentityCheck {
            id: "gf-lacunary-lp",
            description: "p-lacunary Laguerre generating function through p-th roots of unity",
            paper_ref: "sum t^n L_{pn}(x, y) = (1/p) sum_{k<p} (1 - tau_k y)^{-1} exp(-tau_k x / (1 - tau_k y)), tau_k = t^{1/p} e^{2 pi i k/p}",
            tags: &["gf", "lacunary"],
            lhs: lp_lhs,
            rhs: lp_rhs,
            samples: |_| {
                samples(
                    "sum",
                    &[&[2.0, 0.5, 0.5, 0.16], &[2.0, 1.0, 0.3, 0.09], &[3.0, 0.5, 0.5, 0.064], &[3.0, 1.0, -0.5, 0.02]],
                )
            },
            tolerance: 1e-8,
            tol_kind: TolKind::Mixed,
            flags: &[],
            notes: "the closed form is summed in complex arithmetic; an imaginary residue >= 1e-10 fails the sample",
        },
        IdentityCheck {
            id: "gf-hermite-double-lacunary",
            description: "double lacunary exponential generating function of H_{2n}",
            paper_ref: "sum t^n / n! H_{2n}(x, y) = e^{t (x + c)^2} [Hermite functional] = (1 - 4 y t)^{-1/2} exp(x^2 t / (1 - 4 y t))",
            tags: &["gf", "lacunary", "hermite"],
            lhs: hermite_lacunary_lhs,
            rhs: hermite_lacunary_rhs,
            samples: |_| {
                samples(
                    "sum",
                    &[&[0.5, 1.0, 0.1], &[1.0, 0.5, 0.1], &[0.3, -1.0, 0.1], &[1.5, 0.25, 0.2], &[-1.0, 0.5, -0.1]],
                )
            },
            tolerance: 1e-9,
            tol_kind: TolKind::Mixed,
            flags: &[],
            notes: "|4 y t| <= 0.4, and |4 y t| <= 0.2 for negative t, so that the n = 40 increment is below 1e-14",
        },
        IdentityCheck {
            id: "mehler",
            description: "bilinear generating function of two-variable Hermite polynomials",
            paper_ref: "sum t^n / n! H_n(x, y) H_n(u, v) = (1 - 4 y v t^2)^{-1/2} exp((x u t + v x^2 t^2 + y u^2 t^2) / (1 - 4 y v t^2))",
            tags: &["gf", "hermite"],
            lhs: mehler_lhs,
            rhs: mehler_rhs,
            samples: |_| {
                samples(
                    "sum",
                    &[
                        &[0.3, 0.2, 0.4, 0.1, 0.2],
                        &[1.0, 0.5, 0.5, 0.5, 0.3],
                        &[0.5, -0.5, 1.0, 0.5, 0.3],
                        &[-1.0, 1.0, 0.5, 0.25, 0.2],
                        &[2.0, 0.1, -1.0, 0.2, 0.5],
                    ],
                )
            },
            tolerance: 1e-10,
            tol_kind: TolKind::Mixed,
            flags: &[],
            notes: "1 - 4 y v t^2 >= 0.5 on every sample; the y u^2 t^2 term sits inside the exponent's numerator",
        },
        IdentityCheck {
            id: "hybrid-laguerre-hermite",
            description: "hybrid bilateral Laguerre-Hermite generating function",
            paper_ref: "sum t^n / n! L_n(x, y) H_n(u, v) = e^{t y u + (t y)^2 v} sum x^r / (r!)^2 H_r(-t u - 2 y v t^2, v t^2)",
            tags: &["gf", "hermite"],
            lhs: hybrid_lhs,
            rhs: hybrid_rhs,
            samples: |_| {
                samples(
                    "sum",
                    &[
                        &[0.5, 1.0, 0.5, 0.5, 0.3],
                        &[1.0, 0.5, -0.5, 0.25, 0.5],
                        &[2.0, 0.5, 1.0, -0.5, 0.2],
                        &[-1.0, 1.0, 0.3, 0.2, 0.4],
                    ],
                )
            },
            tolerance: 1e-9,
            tol_kind: TolKind::Mixed,
            flags: &[],
            notes: "",
        },
    ]
}
