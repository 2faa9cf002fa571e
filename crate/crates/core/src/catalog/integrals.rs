//! Definite integrals obtained from Gaussian and exponential images.

use super::helpers::{hankel0, series_at};
use super::{fail, Context, EvalError, Flag, IdentityCheck, Sample, TolKind};
use crate::quadrature::{integrate_adaptive, integrate_oscillatory, integrate_semi_infinite, Adaptive, OscillatorySpec};
use crate::series::Scalar;
use crate::special::bessel::{bessel_i0, bessel_j, tricomi_c};
use crate::special::families::{cs_closed_form, cs_sn_family, epsilon_half, erfi, gaussian, CsSn};
use crate::special::gamma::{factorial, gamma, sqrt_pi};
use crate::transforms::{mellin_numeric, MellinSpec};
use crate::umbral::{umbral_eval, umbral_power, LaguerreFunctional, Rational, UmbralExpression, UmbralTerm};
use std::f64::consts::{FRAC_PI_2, PI};

fn rational(v: f64) -> Result<Rational, EvalError> {
    Rational::approximate_float(v).ok_or_else(|| EvalError(format!("{v} has no rational form")))
}

/// Constant a c^mu pushed through the 1/Gamma(1 + mu) functional.
fn umbral_constant(a: f64, mu: f64) -> Result<f64, EvalError> {
    let e = UmbralExpression::from_terms([UmbralTerm { coeff: Scalar::new(a, 0.0), c_exp: rational(mu)?, x_exp: 0 }], 0);
    Ok(umbral_eval(&e, &LaguerreFunctional, 0)?.coeff(0).re)
}

/// int_0^inf u^s C_s(x u) e^{i u} du from its image s! c^s (c x - i)^{-(s+1)},
/// expanded in x and evaluated under 1/Gamma(1 + mu).
fn umbral_trig(s: usize, x: f64, order: usize) -> Result<Scalar, EvalError> {
    let i = Scalar::new(0.0, 1.0);
    let lead = UmbralExpression::from_terms(
        [UmbralTerm { coeff: factorial(s) * i.powu(s as u32 + 1), c_exp: Rational::from_integer(s as i64), x_exp: 0 }],
        order,
    );
    let body = umbral_power(i, -(s as f64 + 1.0), Rational::from_integer(1), 1, order);
    let series = umbral_eval(&lead.mul(&body), &LaguerreFunctional, order)?;
    let e = series.eval(Scalar::new(x, 0.0))?;
    if !(e.tail <= 1e-14) {
        return fail(format!("umbral trig series tail {:e} at x={x}", e.tail));
    }
    Ok(e.value)
}

fn oscillatory(f: &dyn Fn(f64) -> f64, spec: OscillatorySpec, tol: f64) -> Result<f64, EvalError> {
    Ok(integrate_oscillatory(f, &spec, tol)?.require(tol)?)
}

fn int_j0_lhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    match s.kind {
        "partition" => oscillatory(&|x| bessel_j(0, x), OscillatorySpec::new(PI), 1e-9),
        // int_0^inf e^{-c x^2/4} dx = sqrt(pi) c^{-1/2}
        _ => umbral_constant(sqrt_pi(), -0.5),
    }
}

fn mellin_j0_lhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let nu = s.arg(0);
    match s.kind {
        "partition" => {
            let spec = MellinSpec { strip: (0.0, 1.5), oscillation: Some(PI), tol: 1e-9 };
            Ok(mellin_numeric(&|x| bessel_j(0, x), nu, &spec)?)
        }
        // int_0^inf x^{nu-1} e^{-c x^2/4} dx = 2^{nu-1} Gamma(nu/2) c^{-nu/2}
        _ => umbral_constant(2f64.powf(nu - 1.0) * gamma(nu / 2.0), -nu / 2.0),
    }
}

fn mellin_j0_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let nu = s.arg(0);
    Ok(2f64.powf(nu - 1.0) * gamma(nu / 2.0) / gamma(1.0 - nu / 2.0))
}

fn j0_xsq_lhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    match s.kind {
        "partition" => {
            let spec = OscillatorySpec::new(1.0).with_max_partitions(4000);
            oscillatory(&|x| bessel_j(0, x * x), spec, 1e-8)
        }
        // int_0^inf e^{-c x^4/4} dx = Gamma(5/4) 4^{1/4} c^{-1/4}
        _ => umbral_constant(gamma(1.25) * 4f64.powf(0.25), -0.25),
    }
}

fn j0_xsq_rhs(_: &Sample, _: &Context) -> Result<f64, EvalError> {
    Ok(4f64.powf(-0.75) * gamma(0.25) / gamma(0.75))
}

fn gauss_j0_closed(b: f64) -> f64 {
    let q = b * b / 8.0;
    sqrt_pi() / 2.0 * (-q).exp() * bessel_i0(q)
}

fn gauss_j0_lhs(s: &Sample, ctx: &Context) -> Result<f64, EvalError> {
    let b = s.arg(0);
    match s.kind {
        "quadrature" => {
            let f = |x: f64| (-x * x).exp() * bessel_j(0, b * x);
            Ok(integrate_semi_infinite(&f, 0.0, Adaptive::abs(1e-14).with_rel(1e-13)).require(1e-12)?)
        }
        // (sqrt(pi)/2) (1 + c X)^{-1/2} at X = b^2/4
        _ => {
            let e = umbral_power(Scalar::new(1.0, 0.0), -0.5, Rational::from_integer(1), 1, ctx.order);
            let series = umbral_eval(&e, &LaguerreFunctional, ctx.order)?;
            Ok(sqrt_pi() / 2.0 * series_at(&series, b * b / 4.0, 1e-15)?)
        }
    }
}

fn gauss_j0_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    Ok(gauss_j0_closed(s.arg(0)))
}

fn hankel_lhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    hankel0(&|x| (-x * x).exp() / x, s.arg(0), 1e-13)
}

fn trig_kernel(kind: &str) -> (fn(f64) -> f64, f64) {
    if kind.ends_with("sin") {
        (f64::sin, 0.0)
    } else {
        (f64::cos, FRAC_PI_2)
    }
}

fn sincos_lhs(s: &Sample, ctx: &Context) -> Result<f64, EvalError> {
    let (order_s, x) = (s.arg(0) as usize, s.arg(1));
    if s.kind.starts_with("umbral") {
        let v = umbral_trig(order_s, x, ctx.order)?;
        // the real part pairs with cos u, the imaginary part with sin u
        return Ok(if s.kind.ends_with("sin") { v.im } else { v.re });
    }
    let (trig, anchor) = trig_kernel(s.kind);
    let p = order_s as f64;
    let f = move |u: f64| u.powf(p) * tricomi_c(p, x * u) * trig(u);
    let tol = if order_s == 0 { 1e-8 } else { 1e-6 };
    oscillatory(&f, OscillatorySpec::periodic(PI, anchor).with_max_partitions(4000), tol)
}

fn sincos_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let (order_s, x) = (s.arg(0) as usize, s.arg(1));
    let sign = if order_s % 2 == 0 { 1.0 } else { -1.0 };
    let phase = x + order_s as f64 * FRAC_PI_2;
    Ok(sign * if s.kind.ends_with("sin") { phase.cos() } else { phase.sin() })
}

fn sincos_samples(orders: &[f64], xs: &[f64]) -> Vec<Sample> {
    let mut out = Vec::new();
    for &p in orders {
        for &x in xs {
            for kind in ["partition-sin", "partition-cos", "umbral-sin", "umbral-cos"] {
                out.push(Sample::new(kind, &[p, x]));
            }
        }
    }
    out
}

fn projection_lhs(s: &Sample, ctx: &Context) -> Result<f64, EvalError> {
    let x = s.arg(0);
    match s.kind {
        "partition" => {
            let f = |u: f64| tricomi_c(0.0, x * u) * bessel_j(0, u);
            oscillatory(&f, OscillatorySpec::new(PI).with_max_partitions(4000), 1e-5)
        }
        // int e^{-c x u} J_0(u) du = (1 + c^2 x^2)^{-1/2}
        _ => {
            let e = umbral_power(Scalar::new(1.0, 0.0), -0.5, Rational::from_integer(2), 2, ctx.order);
            series_at(&umbral_eval(&e, &LaguerreFunctional, ctx.order)?, x, 1e-15)
        }
    }
}

fn projection_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    Ok(bessel_j(0, s.arg(0)))
}

fn erf_lhs(s: &Sample, ctx: &Context) -> Result<f64, EvalError> {
    let x = s.arg(0);
    match s.kind {
        "series" => series_at(&gaussian(-1.0, ctx.order).antidifferentiate(), x, 1e-15),
        // c^{-1/2} arctan(sqrt(c) x) = sum (-1)^k c^k x^{2k+1} / (2k+1)
        _ => {
            let terms = (0..=ctx.order / 2).map(|k| UmbralTerm {
                coeff: Scalar::new(if k % 2 == 0 { 1.0 } else { -1.0 } / (2 * k + 1) as f64, 0.0),
                c_exp: Rational::from_integer(k as i64),
                x_exp: 2 * k + 1,
            });
            let e = UmbralExpression::from_terms(terms, ctx.order);
            series_at(&umbral_eval(&e, &LaguerreFunctional, ctx.order)?, x, 1e-15)
        }
    }
}

fn erf_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    Ok(integrate_adaptive(&|t| (-t * t).exp(), 0.0, s.arg(0), Adaptive::abs(1e-14).with_rel(1e-14)).require(1e-12)?)
}

fn cs_lhs(s: &Sample, ctx: &Context) -> Result<f64, EvalError> {
    let x = s.arg(1);
    match s.kind {
        "cs" => series_at(&cs_sn_family(CsSn::Cs, s.arg(0) as usize, ctx.order), x, 1e-15),
        "sn" => series_at(&cs_sn_family(CsSn::Sn, 0, ctx.order), x, 1e-15),
        // Cs_{1/2} = Re eps_{1/2}(i x), Sn_{1/2} = -Im eps_{1/2}(i x)
        "eps-cs" | "eps-sn" => {
            let v = epsilon_half(ctx.order).eval(Scalar::new(0.0, x))?;
            if !(v.tail <= 1e-15) {
                return fail(format!("epsilon series tail {:e}", v.tail));
            }
            Ok(if s.kind == "eps-cs" { v.value.re } else { -v.value.im })
        }
        k => fail(format!("unknown case {k}")),
    }
}

fn cs_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let x = s.arg(1);
    match s.kind {
        "cs" | "eps-cs" => Ok(cs_closed_form(s.arg(0) as usize, x)),
        _ => Ok((-x * x).exp() * erfi(x)?),
    }
}

fn rmt_lhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let nu = s.arg(0);
    let spec = MellinSpec { strip: (0.0, f64::INFINITY), oscillation: None, tol: 1e-12 };
    match s.kind {
        "exp" => Ok(mellin_numeric(&|x| (-x).exp(), nu, &spec)?),
        // (1 - e^{-x})/x, phi(n) = 1/(n+1)
        _ => {
            let f = |x: f64| if x < 1e-8 { 1.0 - x / 2.0 } else { -(-x).exp_m1() / x };
            Ok(mellin_numeric(&f, nu, &MellinSpec { strip: (0.0, 1.0), ..spec })?)
        }
    }
}

fn rmt_rhs(s: &Sample, _: &Context) -> Result<f64, EvalError> {
    let nu = s.arg(0);
    let phi = match s.kind {
        "exp" => 1.0,
        _ => 1.0 / (1.0 - nu),
    };
    Ok(gamma(nu) * phi)
}

fn one(_: &Sample, _: &Context) -> Result<f64, EvalError> {
    Ok(1.0)
}

pub(super) fn checks() -> Vec<IdentityCheck> {
    vec![
        IdentityCheck {
            id: "int-j0-line",
            description: "integral of J0 over the half line, by partition-extrapolation and by the Gaussian image",
            paper_ref: "int_0^inf J_0(x) dx = sqrt(pi/c) / Gamma(1+z)|_{z=0} = 1",
            tags: &["integral", "umbral"],
            lhs: int_j0_lhs,
            rhs: one,
            samples: |_| vec![Sample::new("partition", &[]), Sample::new("umbral", &[])],
            tolerance: 1e-6,
            tol_kind: TolKind::Abs,
            flags: &[],
            notes: "",
        },
        IdentityCheck {
            id: "mellin-j0",
            description: "Mellin transform of J0 in the strip 0 < nu < 3/2",
            paper_ref: "int_0^inf J_0(x) x^{nu-1} dx = 2^{nu-1} Gamma(nu/2) / Gamma(1 - nu/2), |nu| <= 1",
            tags: &["integral", "umbral", "mellin"],
            lhs: mellin_j0_lhs,
            rhs: mellin_j0_rhs,
            samples: |_| {
                [0.5, 0.75].iter().flat_map(|&nu| [Sample::new("partition", &[nu]), Sample::new("umbral", &[nu])]).collect()
            },
            tolerance: 1e-5,
            tol_kind: TolKind::Mixed,
            flags: &[],
            notes: "",
        },
        IdentityCheck {
            id: "int-j0-xsq",
            description: "integral of J0(x^2) over the half line",
            paper_ref: "int_0^inf J_0(x^2) dx = 4^{-3/4} Gamma(1/4) / Gamma(3/4)",
            tags: &["integral", "umbral"],
            lhs: j0_xsq_lhs,
            rhs: j0_xsq_rhs,
            samples: |_| vec![Sample::new("partition", &[]), Sample::new("umbral", &[])],
            tolerance: 1e-5,
            tol_kind: TolKind::Mixed,
            flags: &[Flag::Slow],
            notes: "sign changes crowd together like pi/(2x); the partition count grows accordingly",
        },
        IdentityCheck {
            id: "gauss-j0",
            description: "Gaussian-weighted J0 integral by quadrature and by the binomial image",
            paper_ref: "int_0^inf e^{-x^2} J_0(b x) dx = (sqrt(pi)/2) (1 + b^2 c/4)^{-1/2} / Gamma(1+z)|_{z=0} = (sqrt(pi)/2) e^{-b^2/8} I_0(b^2/8)",
            tags: &["integral", "umbral"],
            lhs: gauss_j0_lhs,
            rhs: gauss_j0_rhs,
            samples: |_| {
                [0.5, 1.0, 2.0].iter().flat_map(|&b| [Sample::new("quadrature", &[b]), Sample::new("umbral", &[b])]).collect()
            },
            tolerance: 1e-8,
            tol_kind: TolKind::Rel,
            flags: &[],
            notes: "",
        },
        IdentityCheck {
            id: "hankel-gauss",
            description: "zeroth-order Hankel transform of e^{-x^2}/x",
            paper_ref: "H_0[e^{-x^2}/x; y] = int_0^inf e^{-(1 + y^2 c/4) x^2} dx / Gamma(1+z)|_{z=0} = (sqrt(pi)/2) e^{-y^2/8} I_0(y^2/8)",
            tags: &["integral", "hankel"],
            lhs: hankel_lhs,
            rhs: gauss_j0_rhs,
            samples: |_| [0.5, 1.0, 2.0].iter().map(|&y| Sample::new("quadrature", &[y])).collect(),
            tolerance: 1e-8,
            tol_kind: TolKind::Rel,
            flags: &[],
            notes: "",
        },
        IdentityCheck {
            id: "j0-sincos",
            description: "sine and cosine transforms of J0(2 sqrt(x u))",
            paper_ref: "int_0^inf J_0(2 sqrt(x u)) e^{i u} du = 1/(c x - i) / Gamma(1+z)|_{z=0} = i e^{-i x}",
            tags: &["integral", "umbral", "oscillatory"],
            lhs: sincos_lhs,
            rhs: sincos_rhs,
            samples: |_| sincos_samples(&[0.0], &[0.5, 1.0, 2.0]),
            tolerance: 1e-5,
            tol_kind: TolKind::Mixed,
            flags: &[],
            notes: "",
        },
        IdentityCheck {
            id: "tricomi-sincos",
            description: "sine and cosine transforms of u^s C_s(x u)",
            paper_ref: "int_0^inf u^s C_s(x u) {sin, cos}(u) du = (-1)^s {cos, sin}(x + s pi/2)",
            tags: &["integral", "umbral", "oscillatory"],
            lhs: sincos_lhs,
            rhs: sincos_rhs,
            samples: |_| sincos_samples(&[0.0, 1.0], &[0.5, 1.0]),
            tolerance: 1e-4,
            tol_kind: TolKind::Mixed,
            flags: &[Flag::Slow],
            notes: "for s = 1 the integrand amplitude grows like u^{1/4}; the value is the averaged (Abel) limit",
        },
        IdentityCheck {
            id: "tricomi-j0-projection",
            description: "C0 against J0 over the half line",
            paper_ref: "int_0^inf C_0(x u) J_0(u) du = J_0(x)",
            tags: &["integral", "umbral", "oscillatory"],
            lhs: projection_lhs,
            rhs: projection_rhs,
            samples: |_| {
                [0.5, 1.0].iter().flat_map(|&x| [Sample::new("partition", &[x]), Sample::new("umbral", &[x])]).collect()
            },
            tolerance: 1e-3,
            tol_kind: TolKind::Mixed,
            flags: &[Flag::Slow],
            notes: "stated without a convergence qualification; the integrand decays like u^{-3/4} with two \
                    incommensurate oscillations, so the tolerance is loose by judgment",
        },
        IdentityCheck {
            id: "erf-umbral",
            description: "error-function integral from the Gaussian series and from its rational image",
            paper_ref: "int_0^x e^{-xi^2} dxi = c^{-1/2} arctan(sqrt(c) x) / Gamma(1+z)|_{z=0}",
            tags: &["umbral", "series"],
            lhs: erf_lhs,
            rhs: erf_rhs,
            samples: |_| {
                [0.25, 0.5, 1.0, 1.5].iter().flat_map(|&x| [Sample::new("series", &[x]), Sample::new("umbral", &[x])]).collect()
            },
            tolerance: 1e-10,
            tol_kind: TolKind::Mixed,
            flags: &[],
            notes: "",
        },
        IdentityCheck {
            id: "cs-sn-closed",
            description: "Cs family series against the Hermite closed form, and the p = 0 members through epsilon_{1/2}",
            paper_ref: "Cs_{1/2,2p}(x) = (2^{2p}/sqrt(pi)) sum (-1)^r (2x)^{2r} Gamma(r + p + 1/2)/(2r)! = (-1)^p H_{2p}(2x, -1) e^{-x^2}; \
                        Cs_{1/2} = Re eps_{1/2}(i x), Sn_{1/2} = -Im eps_{1/2}(i x)",
            tags: &["special", "series"],
            lhs: cs_lhs,
            rhs: cs_rhs,
            samples: |_| {
                let mut v = Vec::new();
                for p in 0..=4 {
                    for &x in &[0.5, 1.0, 1.5] {
                        v.push(Sample::new("cs", &[p as f64, x]));
                    }
                }
                for &x in &[0.5, 1.0, 2.0] {
                    v.push(Sample::new("sn", &[0.0, x]));
                    v.push(Sample::new("eps-cs", &[0.0, x]));
                    v.push(Sample::new("eps-sn", &[0.0, x]));
                }
                v
            },
            tolerance: 1e-10,
            tol_kind: TolKind::Mixed,
            flags: &[],
            notes: "Cs samples stop at x = 1.5: at x = 2 the order-64 tail estimate reaches 2e-8 for p = 4",
        },
        IdentityCheck {
            id: "rmt-footnote",
            description: "Ramanujan master theorem for f = e^{-x} and f = (1 - e^{-x})/x",
            paper_ref: "f(x) = sum phi(n) (-x)^n / n!  =>  int_0^inf x^{nu-1} f(x) dx = Gamma(nu) phi(-nu)",
            tags: &["integral", "mellin"],
            lhs: rmt_lhs,
            rhs: rmt_rhs,
            samples: |_| vec![Sample::new("exp", &[0.5]), Sample::new("exp", &[2.0]), Sample::new("expm1-ratio", &[0.5])],
            tolerance: 1e-9,
            tol_kind: TolKind::Mixed,
            flags: &[],
            notes: "",
        },
    ]
}
