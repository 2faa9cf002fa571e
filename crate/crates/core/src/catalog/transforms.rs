//! Borel, Borel-Leroy and beta-kernel transforms: exact coefficient maps,
//! integral forms and the integral-preservation proposition.

use super::helpers::{coeff_of, coeff_samples, index_arg, inverse_quarter_image, series_at};
use super::{fail, Context, EvalError, Flag, IdentityCheck, Sample, TolKind};
use crate::quadrature::{integrate_adaptive, Adaptive};
use crate::series::{Radius, Scalar, SeriesError, TruncatedSeries};
use crate::special::bessel::{bessel_i0_scaled, bessel_j, tricomi_c};
use crate::special::families::{
    bessel_j_series, bessel_r_series, bessel_wright, e_alpha_gamma, exp_series, gaussian, hyp_2f2,
    mittag_leffler_1_beta, tricomi,
};
use crate::special::gamma::{beta, factorial, gamma, sqrt_pi};
use crate::transforms::{
    borel_apply, borel_integral_form, laplace_link_check, proposition1_check, proposition1_inverse_check,
    BorelIntegrator, IntegralMethod, TransformError, TransformSpec,
};
use std::cell::Cell;
use std::f64::consts::FRAC_PI_2;

fn sign(r: usize) -> f64 {
    if r % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn repeated_borel(times: usize, order: usize) -> Result<TruncatedSeries, TransformError> {
    let mut s = tricomi(0.0, order);
    for _ in 0..times {
        s = borel_apply(&s, &TransformSpec::borel(1.0))?;
    }
    Ok(s)
}

fn c0_exp_lhs(s: &Sample, ctx: &Context) -> Result<f64, EvalError> {
    coeff_of(&repeated_borel(1, ctx.order)?, index_arg(s))
}

fn c0_exp_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let r = index_arg(s);
    Ok(sign(r) / factorial(r))
}

/// B[B[C_0]](x) with both transforms done by adaptive quadrature on
/// truncated ranges. For y < 0 the inner integrand e^{-s} C_0(s y) grows
/// like e^{-s + 2 sqrt(s |y|)} and peaks at s = |y|; it is cut at
/// (sqrt|y| + 7)^2, where it is e^{-49} below the peak. The outer integrand
/// decays like e^{-(1+x) t} and is cut at 45/(1+x).
fn nested_borel(x: f64) -> Result<f64, EvalError> {
    if !(x > -1.0) {
        return fail(format!("outer integral diverges at x = {x}"));
    }
    let cfg = Adaptive::abs(1e-13).with_rel(1e-13);
    let failed = Cell::new(None);
    // C_0(-z) = I_0(2 sqrt z); the scaled form keeps e^{-s} C_0(s y) finite
    let kernel = |s: f64, y: f64| {
        if y < 0.0 {
            let w = 2.0 * (s * -y).sqrt();
            (w - s).exp() * bessel_i0_scaled(w)
        } else {
            (-s).exp() * tricomi_c(0.0, s * y)
        }
    };
    let inner = |y: f64| {
        let end = if y < 0.0 { (y.abs().sqrt() + 7.0).powi(2) } else { 45.0 };
        let r = integrate_adaptive(&|s: f64| kernel(s, y), 0.0, end, cfg);
        if !r.converged {
            failed.set(Some(EvalError(format!("inner integral at y={y} did not converge"))));
        }
        r.value
    };
    let outer = integrate_adaptive(&|t: f64| (-t).exp() * inner(t * x), 0.0, 45.0 / (1.0 + x).min(1.0), Adaptive::abs(0.0).with_rel(1e-12));
    if let Some(e) = failed.into_inner() {
        return Err(e);
    }
    Ok(outer.require(1e-12)?)
}

fn c0_geom_lhs(s: &Sample, ctx: &Context) -> Result<f64, EvalError> {
    match s.kind {
        "coeff" => coeff_of(&repeated_borel(2, ctx.order)?, index_arg(s)),
        "series" => series_at(&repeated_borel(2, ctx.order)?, s.arg(0), 1e-13),
        _ => nested_borel(s.arg(0)),
    }
}

fn c0_geom_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    match s.kind {
        "coeff" => Ok(sign(index_arg(s))),
        _ => Ok(1.0 / (1.0 + s.arg(0))),
    }
}

fn divergent_lhs(s: &Sample, ctx: &Context) -> Result<f64, EvalError> {
    let b3 = repeated_borel(3, ctx.order)?;
    match s.kind {
        "coeff" => coeff_of(&b3, index_arg(s)),
        "radius-zero" => Ok(if b3.radius() == Radius::Zero { 1.0 } else { 0.0 }),
        _ => Ok(match b3.eval(Scalar::new(s.arg(0), 0.0)) {
            Err(SeriesError::Divergent { .. }) => 1.0,
            _ => 0.0,
        }),
    }
}

fn divergent_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    match s.kind {
        "coeff" => {
            let r = index_arg(s);
            Ok(sign(r) * factorial(r))
        }
        _ => Ok(1.0),
    }
}

fn half_j0_lhs(s: &Sample, ctx: &Context) -> Result<f64, EvalError> {
    let h = TransformSpec::borel(0.5);
    let out = match s.kind {
        "forward" => borel_apply(&bessel_j_series(0, ctx.order), &h)?,
        _ => borel_apply(&gaussian(-0.25, ctx.order), &h.inverted())?,
    };
    coeff_of(&out, index_arg(s))
}

fn half_j0_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let k = index_arg(s);
    if k % 2 == 1 {
        return Ok(0.0);
    }
    let m = k / 2;
    Ok(match s.kind {
        "forward" => (-0.25f64).powi(m as i32) / factorial(m),
        _ => sign(m) / (4f64.powi(m as i32) * factorial(m).powi(2)),
    })
}

/// Inverse quarter-order image, cut off where it is below 1e-15.
fn quarter_image_cut(x: f64) -> Result<f64, EvalError> {
    if x.abs() > 14.0 {
        return Ok(0.0);
    }
    inverse_quarter_image(x)
}

fn prop1_lhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let a = s.arg(0);
    let gauss = |x: f64| (-x * x).exp();
    match (s.kind, a) {
        ("forward", _) => Ok(proposition1_check(&gauss, &TransformSpec::borel(a), sqrt_pi(), 1e-7)?.0),
        ("inverse", a) if a == 0.5 => {
            Ok(proposition1_inverse_check(&|x| bessel_j(0, 2.0 * x), 0.5, sqrt_pi(), Some(FRAC_PI_2), 1e-7)?.0)
        }
        ("inverse", a) if a == 0.25 => {
            let failed = Cell::new(None);
            let g = |x: f64| match quarter_image_cut(x) {
                Ok(v) => v,
                Err(e) => {
                    failed.set(Some(e));
                    0.0
                }
            };
            let v = proposition1_inverse_check(&g, 0.25, sqrt_pi(), None, 1e-7)?.0;
            if let Some(e) = failed.into_inner() {
                return Err(e);
            }
            Ok(v)
        }
        _ => fail(format!("no inverse image for alpha = {a}")),
    }
}

fn prop1_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let a = s.arg(0);
    Ok(match s.kind {
        "forward" => sqrt_pi() * gamma(1.0 - a),
        _ => sqrt_pi() / gamma(1.0 - a),
    })
}

fn link_fn(kind: &str) -> fn(f64) -> f64 {
    match kind {
        "one" => |_| 1.0,
        "u" => |u| u,
        _ => |u| tricomi_c(0.0, u),
    }
}

fn laplace_lhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    Ok(laplace_link_check(&link_fn(s.kind), s.arg(0))?.0)
}

fn laplace_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    Ok(laplace_link_check(&link_fn(s.kind), s.arg(0))?.1)
}

fn link_j0_lhs(s: &Sample, ctx: &Context) -> Result<f64, EvalError> {
    let x = s.arg(0);
    match s.kind {
        "gauss-laguerre" => {
            let b = BorelIntegrator::new(TransformSpec::borel(1.0), IntegralMethod::GaussLaguerre { nodes: 64 })?;
            Ok(b.eval(&|u| tricomi_c(0.0, u), x)?)
        }
        _ => series_at(&repeated_borel(1, ctx.order)?, x, 1e-15),
    }
}

fn exp_minus(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    Ok((-s.arg(0)).exp())
}

fn bl_lhs(s: &Sample, ctx: &Context) -> Result<f64, EvalError> {
    let (a, g) = (s.arg(0), s.arg(1));
    let out = borel_apply(&tricomi(g, ctx.order), &TransformSpec::borel_leroy(a, g + 1.0))?;
    coeff_of(&out, index_arg(s))
}

fn bl_rhs(s: &Sample, ctx: &Context) -> Result<f64, EvalError> {
    let (a, g) = (s.arg(0), s.arg(1));
    coeff_of(&e_alpha_gamma(a, g, ctx.order)?.compose_linear(Scalar::new(-1.0, 0.0)), index_arg(s))
}

fn wright_lhs(s: &Sample, ctx: &Context) -> Result<f64, EvalError> {
    let (a, g) = (s.arg(0), s.arg(1));
    let out = borel_apply(&exp_series(-1.0, ctx.order), &TransformSpec::borel_leroy(a, g + 1.0).inverted())?;
    coeff_of(&out, index_arg(s))
}

fn wright_rhs(s: &Sample, ctx: &Context) -> Result<f64, EvalError> {
    coeff_of(&bessel_wright(s.arg(1), s.arg(0), ctx.order)?, index_arg(s))
}

fn rn_lhs(s: &Sample, ctx: &Context) -> Result<f64, EvalError> {
    let n = s.arg(0);
    let out = borel_apply(&gaussian(-0.25, ctx.order), &TransformSpec::borel_leroy(0.5, n + 1.0).inverted())?;
    coeff_of(&out, index_arg(s))
}

fn rn_rhs(s: &Sample, ctx: &Context) -> Result<f64, EvalError> {
    coeff_of(&bessel_r_series(s.arg(0) as usize, ctx.order), index_arg(s))
}

fn ml_input(b: f64, order: usize) -> TruncatedSeries {
    exp_series(1.0, order).scale_real(1.0 / gamma(b))
}

fn ml_lhs(s: &Sample, ctx: &Context) -> Result<f64, EvalError> {
    let b = s.arg(0);
    let spec = TransformSpec::beta(1.0, b, 1.0, 0.0);
    match s.kind {
        "coeff" => coeff_of(&borel_apply(&ml_input(b, ctx.order), &spec)?, index_arg(s)),
        _ => Ok(borel_integral_form(&|u: f64| u.exp() / gamma(b), &spec, s.arg(1))?),
    }
}

fn ml_rhs(s: &Sample, ctx: &Context) -> Result<f64, EvalError> {
    let b = s.arg(0);
    let ml = mittag_leffler_1_beta(b, ctx.order)?;
    match s.kind {
        "coeff" => coeff_of(&ml, index_arg(s)),
        _ => series_at(&ml, s.arg(1), 1e-15),
    }
}

fn beta_prop_lhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let spec = TransformSpec::beta(3.0, 2.0, 1.0, 0.0);
    let gauss = |u: f64| (-u * u).exp();
    match s.kind {
        "integral" => Ok(proposition1_check(&gauss, &spec, sqrt_pi(), 1e-7)?.0),
        _ => Ok(borel_integral_form(&gauss, &spec, s.arg(0))?),
    }
}

fn beta_prop_rhs(s: &Sample, ctx: &Context) -> Result<f64, EvalError> {
    match s.kind {
        // sqrt(pi) Gamma(alpha - 1) Gamma(beta) / Gamma(alpha - 1 + beta)
        "integral" => Ok(sqrt_pi() * gamma(2.0) * gamma(2.0) / gamma(4.0)),
        _ => {
            let x = s.arg(0);
            let f = hyp_2f2(1.5, 2.0, 2.5, 3.0, ctx.order)?;
            Ok(beta(3.0, 2.0) * series_at(&f, -x * x, 1e-15)?)
        }
    }
}

pub(super) fn checks() -> Vec<IdentityCheck> {
    vec![
        IdentityCheck {
            id: "borel-c0-exp",
            description: "Borel transform maps C0 to the exponential, coefficient by coefficient",
            paper_ref: "B[C_0(t); x] = Gamma(1 + x d/dx) C_0(x) = e^{-x}",
            tags: &["transform", "exact"],
            lhs: c0_exp_lhs,
            rhs: c0_exp_rhs,
            samples: |ctx| coeff_samples("coeff", &[&[]], ctx.order),
            tolerance: 1e-13,
            tol_kind: TolKind::Rel,
            flags: &[],
            notes: "",
        },
        IdentityCheck {
            id: "borel2-c0-geom",
            description: "second Borel transform of C0 is the geometric series; pointwise inside |x| < 1",
            paper_ref: "B^2[C_0; x] = sum (-x)^r = 1/(1 + x), |x| < 1",
            tags: &["transform"],
            lhs: c0_geom_lhs,
            rhs: c0_geom_rhs,
            samples: |ctx| {
                let mut v: Vec<Sample> =
                    coeff_samples("coeff", &[&[]], ctx.order).into_iter().map(|s| s.with_tol(1e-13)).collect();
                for &x in &[-0.6, -0.3, 0.0, 0.3, 0.6] {
                    v.push(Sample::new("series", &[x]));
                }
                for &x in &[-0.9, -0.6, -0.3, 0.0, 0.3, 0.6, 0.9] {
                    v.push(Sample::new("integral", &[x]));
                }
                v
            },
            tolerance: 1e-10,
            tol_kind: TolKind::Rel,
            flags: &[],
            notes: "the truncated series is only sampled to |x| = 0.6; the nested integral form covers |x| <= 0.9",
        },
        IdentityCheck {
            id: "borel3-divergent",
            description: "third Borel transform of C0 has coefficients r!(-1)^r and is flagged divergent",
            paper_ref: "B^3[C_0; x] = sum r! (-x)^r, a divergent series",
            tags: &["transform", "exact"],
            lhs: divergent_lhs,
            rhs: divergent_rhs,
            samples: |ctx| {
                let mut v = coeff_samples("coeff", &[&[]], ctx.order);
                v.push(Sample::new("radius-zero", &[]));
                v.push(Sample::new("eval-refused", &[0.5]));
                v
            },
            tolerance: 1e-13,
            tol_kind: TolKind::Rel,
            flags: &[Flag::DivergentAware],
            notes: "",
        },
        IdentityCheck {
            id: "borel-half-j0",
            description: "half-order Borel transform sends J0 to a Gaussian, and back",
            paper_ref: "B^(1/2)[J_0; x] = e^{-x^2/4}, (B^(1/2))^{-1} e^{-x^2/4} = J_0(x)",
            tags: &["transform", "exact"],
            lhs: half_j0_lhs,
            rhs: half_j0_rhs,
            samples: |ctx| {
                let mut v = coeff_samples("forward", &[&[]], ctx.order);
                v.extend(coeff_samples("inverse", &[&[]], ctx.order));
                v
            },
            tolerance: 1e-13,
            tol_kind: TolKind::Rel,
            flags: &[],
            notes: "",
        },
        IdentityCheck {
            id: "prop1",
            description: "integral over the real line of a Borel image of e^{-x^2}, forward and inverse",
            paper_ref: "int_R f = k  =>  int_R B^(alpha) f = k Gamma(1 - alpha), int_R (B^(alpha))^{-1} f = k / Gamma(1 - alpha)",
            tags: &["transform", "integral"],
            lhs: prop1_lhs,
            rhs: prop1_rhs,
            samples: |_| {
                let mut v = Vec::new();
                for kind in ["forward", "inverse"] {
                    for &a in &[0.25, 0.5] {
                        v.push(Sample::new(kind, &[a]));
                    }
                }
                v
            },
            tolerance: 1e-5,
            tol_kind: TolKind::Mixed,
            flags: &[],
            notes: "inverse images: J_0(2x) at alpha = 1/2; at alpha = 1/4 the Wright-type series \
                    sum (-x^2)^k/(k! Gamma(1 + k/2)), cut at |x| = 14 where it is below 1e-15",
        },
        IdentityCheck {
            id: "laplace-link",
            description: "Borel transform against the rescaled Laplace transform, two quadratures",
            paper_ref: "B[f(t); x] = x^{-1} L[f(t); x^{-1}]",
            tags: &["transform", "integral"],
            lhs: laplace_lhs,
            rhs: laplace_rhs,
            samples: |_| {
                let mut v = Vec::new();
                for kind in ["one", "u", "c0"] {
                    for &x in &[0.5, 1.0, 2.0] {
                        v.push(Sample::new(kind, &[x]));
                    }
                }
                v
            },
            tolerance: 1e-8,
            tol_kind: TolKind::Mixed,
            flags: &[],
            notes: "",
        },
        IdentityCheck {
            id: "mellin-link-j0sqrt",
            description: "Borel transform of J0(2 sqrt t) by 64-node Gauss-Laguerre and by the coefficient map",
            paper_ref: "B[J_0(2 sqrt t); x] = x^{-1} L[C_0(t); 1/x] = e^{-x}",
            tags: &["transform", "integral"],
            lhs: link_j0_lhs,
            rhs: exp_minus,
            samples: |_| {
                let mut v = Vec::new();
                for i in 0..=8 {
                    let x = 0.25 * i as f64;
                    v.push(Sample::new("gauss-laguerre", &[x]));
                    v.push(Sample::new("operator", &[x]));
                }
                v
            },
            tolerance: 1e-8,
            tol_kind: TolKind::Mixed,
            flags: &[],
            notes: "",
        },
        IdentityCheck {
            id: "borel-leroy-ealphagamma",
            description: "Borel-Leroy transform of C_gamma",
            paper_ref: "B^(alpha)_{gamma+1}[C_gamma; x] = e_{alpha,gamma}(-x) = sum Gamma(gamma + alpha r + 1) (-x)^r / (r! Gamma(gamma + r + 1))",
            tags: &["transform", "exact"],
            lhs: bl_lhs,
            rhs: bl_rhs,
            samples: |ctx| coeff_samples("coeff", &[&[1.0, 1.0], &[0.5, 2.0]], ctx.order),
            tolerance: 1e-13,
            tol_kind: TolKind::Rel,
            flags: &[],
            notes: "",
        },
        IdentityCheck {
            id: "bessel-wright-inverse",
            description: "inverse Borel-Leroy transform of e^{-x}",
            paper_ref: "(B^(alpha)_{gamma+1})^{-1} e^{-x} = W_gamma(-x | alpha) = sum (-x)^r / (r! Gamma(alpha r + gamma + 1))",
            tags: &["transform", "exact"],
            lhs: wright_lhs,
            rhs: wright_rhs,
            samples: |ctx| coeff_samples("coeff", &[&[1.0, 1.0], &[0.5, 2.0]], ctx.order),
            tolerance: 1e-13,
            tol_kind: TolKind::Rel,
            flags: &[],
            notes: "",
        },
        IdentityCheck {
            id: "rn-inverse-bl",
            description: "inverse half-order Borel-Leroy transform of a Gaussian gives R_n",
            paper_ref: "(B^(1/2)_{n+1})^{-1} e^{-(x/2)^2} = R_n(x) = c^n e^{-c (x/2)^2} / Gamma(1+z)|_{z=0}",
            tags: &["transform", "exact"],
            lhs: rn_lhs,
            rhs: rn_rhs,
            samples: |ctx| coeff_samples("coeff", &[&[0.0], &[1.0], &[2.0], &[3.0]], ctx.order),
            tolerance: 1e-13,
            tol_kind: TolKind::Rel,
            flags: &[],
            notes: "",
        },
        IdentityCheck {
            id: "mittag-leffler",
            description: "beta-kernel transform of e^x / Gamma(beta)",
            paper_ref: "B^(1,beta)_{1,0} e^x / Gamma(beta) = E_{1,beta+1}(x) = sum x^k / Gamma(k + beta + 1)",
            tags: &["transform", "exact"],
            lhs: ml_lhs,
            rhs: ml_rhs,
            samples: |ctx| {
                let mut v = coeff_samples("coeff", &[&[1.0], &[2.0]], ctx.order);
                for &b in &[1.0, 2.0] {
                    for &x in &[0.5, 1.0] {
                        v.push(Sample::new("integral", &[b, x]).with_tol(1e-12));
                    }
                }
                v
            },
            tolerance: 1e-13,
            tol_kind: TolKind::Rel,
            flags: &[],
            notes: "",
        },
        IdentityCheck {
            id: "beta-prop",
            description: "integral preservation under the beta-kernel transform, and its 2F2 form",
            paper_ref: "int_R B^(alpha,beta)_{gamma,delta} f = k B(alpha - gamma, beta - delta); \
                        B^(alpha,beta)_{1,0} e^{-x^2} = B(alpha, beta) 2F2([alpha/2, (1+alpha)/2], [(alpha+beta)/2, (alpha+beta+1)/2]; -x^2)",
            tags: &["transform", "integral"],
            lhs: beta_prop_lhs,
            rhs: beta_prop_rhs,
            samples: |_| {
                let mut v = vec![Sample::new("integral", &[])];
                for &x in &[0.5, 1.0, 1.5, 2.0] {
                    v.push(Sample::new("2f2", &[x]).with_tol(1e-10));
                }
                v
            },
            tolerance: 1e-5,
            tol_kind: TolKind::Mixed,
            flags: &[],
            notes: "(alpha, beta, gamma, delta) = (3, 2, 1, 0)",
        },
    ]
}
