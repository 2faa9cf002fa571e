//! Borel-type transforms as coefficient maps, with their defining integrals.
//!
//! Borel / Borel-Leroy: coefficient r is multiplied by Gamma(gamma + alpha r),
//! matching the integral int_0^inf e^{-t} t^{gamma-1} f(t^alpha x) dt.
//! Beta family: coefficient r is multiplied by B(alpha + gamma r, beta + delta r),
//! matching int_0^1 t^{alpha-1} (1-t)^{beta-1} f(t^gamma (1-t)^delta x) dt.
//! Inverse transforms divide instead; they have no integral form here.

use crate::quadrature::{
    gauss_laguerre_nodes, integrate_adaptive, integrate_oscillatory, integrate_real_line, integrate_semi_infinite,
    Adaptive, GaussRule, OscillatorySpec, QuadratureError, QuadratureResult,
};
use crate::series::{Scalar, TruncatedSeries};
use crate::special::gamma::{beta as beta_fn, gamma as gamma_fn, ln_beta, ln_gamma_abs};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TransformError {
    #[error("invalid transform spec: {0}")]
    InvalidSpec(String),
    #[error("gamma-function pole at coefficient r={index} (argument {arg})")]
    Pole { index: usize, arg: f64 },
    #[error("beta-function arguments must be positive at coefficient r={index}: B({a}, {b})")]
    BetaDomain { index: usize, a: f64, b: f64 },
    #[error("coefficient r={index} is not representable after the transform")]
    Overflow { index: usize },
    #[error("the integral form of an inverse transform is not provided (use the coefficient map)")]
    NoInverseIntegral,
    #[error("strip violated: s={s} outside ({lo}, {hi})")]
    Strip { s: f64, lo: f64, hi: f64 },
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TransformFamily {
    Borel,
    BorelLeroy,
    Beta,
}

fn one() -> f64 {
    1.0
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransformSpec {
    pub family: TransformFamily,
    pub alpha: f64,
    #[serde(default = "one")]
    pub gamma: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    #[serde(default)]
    pub inverse: bool,
}

impl TransformSpec {
    pub fn borel(alpha: f64) -> Self {
        Self { family: TransformFamily::Borel, alpha, gamma: 1.0, beta: None, delta: None, inverse: false }
    }

    pub fn borel_leroy(alpha: f64, gamma: f64) -> Self {
        Self { family: TransformFamily::BorelLeroy, gamma, ..Self::borel(alpha) }
    }

    /// Kernel t^{alpha-1} (1-t)^{beta-1}, argument t^gamma (1-t)^delta x.
    pub fn beta(alpha: f64, beta: f64, gamma: f64, delta: f64) -> Self {
        Self { family: TransformFamily::Beta, alpha, gamma, beta: Some(beta), delta: Some(delta), inverse: false }
    }

    pub fn inverted(mut self) -> Self {
        self.inverse = !self.inverse;
        self
    }

    pub fn validate(&self) -> Result<(), TransformError> {
        let bad = |m: String| Err(TransformError::InvalidSpec(m));
        if !(self.alpha.is_finite() && self.alpha > 0.0) {
            return bad(format!("alpha must be > 0, got {}", self.alpha));
        }
        if !(self.gamma.is_finite() && self.gamma > 0.0) {
            return bad(format!("gamma must be > 0, got {}", self.gamma));
        }
        match self.family {
            TransformFamily::Borel if self.gamma != 1.0 => bad("plain Borel has gamma = 1; use borel-leroy".into()),
            TransformFamily::Borel | TransformFamily::BorelLeroy => {
                if self.beta.is_some() || self.delta.is_some() {
                    return bad("beta/delta are only meaningful for the beta family".into());
                }
                Ok(())
            }
            TransformFamily::Beta => match (self.beta, self.delta) {
                (Some(b), Some(d)) if b.is_finite() && b > 0.0 && d.is_finite() && d >= 0.0 => Ok(()),
                (Some(_), Some(_)) => bad("beta family needs beta > 0 and delta >= 0".into()),
                _ => bad("beta family needs alpha, beta, gamma and delta".into()),
            },
        }
    }

    /// (value, ln|value|, sign) of the coefficient factor at index r.
    fn factor(&self, r: usize) -> Result<(f64, f64, f64), TransformError> {
        let rf = r as f64;
        match self.family {
            TransformFamily::Borel | TransformFamily::BorelLeroy => {
                let arg = self.gamma + self.alpha * rf;
                if arg <= 0.0 && arg == arg.round() {
                    return Err(TransformError::Pole { index: r, arg });
                }
                let (l, s) = ln_gamma_abs(arg);
                Ok((gamma_fn(arg), l, s))
            }
            TransformFamily::Beta => {
                let a = self.alpha + self.gamma * rf;
                let b = self.beta.unwrap_or(f64::NAN) + self.delta.unwrap_or(f64::NAN) * rf;
                if !(a > 0.0 && b > 0.0) {
                    return Err(TransformError::BetaDomain { index: r, a, b });
                }
                Ok((beta_fn(a, b), ln_beta(a, b), 1.0))
            }
        }
    }
}

/// Exact coefficient action of the transform (forward multiplies, inverse divides).
pub fn borel_apply(s: &TruncatedSeries, spec: &TransformSpec) -> Result<TruncatedSeries, TransformError> {
    spec.validate()?;
    let mut out = Vec::with_capacity(s.order() + 1);
    for (r, &c) in s.coeffs().iter().enumerate() {
        let (w, lw, sw) = spec.factor(r)?;
        let v = if w.is_finite() && w != 0.0 {
            if spec.inverse {
                c / w
            } else {
                c * w
            }
        } else if c == Scalar::default() {
            c
        } else {
            // factor out of f64 range: combine magnitudes in log space
            let lv = c.norm().ln() + if spec.inverse { -lw } else { lw };
            c / c.norm() * sw * lv.exp()
        };
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(TransformError::Overflow { index: r });
        }
        out.push(v);
    }
    Ok(TruncatedSeries::new(out).expect("finite by construction"))
}

/// Quadrature route for the integral form.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum IntegralMethod {
    /// Gauss-Laguerre with the t^{gamma-1} e^{-t} weight; suits alpha = 1.
    GaussLaguerre { nodes: usize },
    /// Adaptive Gauss-Kronrod after t = u^{1/alpha}, which smooths t^alpha.
    Adaptive { tol: f64 },
}

impl IntegralMethod {
    pub fn default_for(spec: &TransformSpec) -> Self {
        if spec.family != TransformFamily::Beta && spec.alpha == 1.0 {
            IntegralMethod::GaussLaguerre { nodes: 64 }
        } else {
            IntegralMethod::Adaptive { tol: 1e-12 }
        }
    }
}

/// Prepared integral form; holds the Gauss-Laguerre rule when one is used.
pub struct BorelIntegrator {
    spec: TransformSpec,
    method: IntegralMethod,
    rule: Option<GaussRule>,
}

impl BorelIntegrator {
    pub fn new(spec: TransformSpec, method: IntegralMethod) -> Result<Self, TransformError> {
        spec.validate()?;
        if spec.inverse {
            return Err(TransformError::NoInverseIntegral);
        }
        let rule = match (spec.family, method) {
            (TransformFamily::Beta, IntegralMethod::GaussLaguerre { .. }) => {
                return Err(TransformError::InvalidSpec("the beta family integrates over (0, 1); use Adaptive".into()))
            }
            (_, IntegralMethod::GaussLaguerre { nodes }) => Some(gauss_laguerre_nodes(nodes, spec.gamma)?),
            _ => None,
        };
        Ok(Self { spec, method, rule })
    }

    pub fn eval(&self, f: &dyn Fn(f64) -> f64, x: f64) -> Result<f64, TransformError> {
        let sp = &self.spec;
        if let Some(rule) = &self.rule {
            return Ok(rule.apply(|t| f(t.powf(sp.alpha) * x)));
        }
        let tol = match self.method {
            IntegralMethod::Adaptive { tol } => tol,
            IntegralMethod::GaussLaguerre { .. } => unreachable!("rule prepared in new"),
        };
        let cfg = Adaptive::abs(tol).with_rel(tol);
        let r = match sp.family {
            TransformFamily::Borel | TransformFamily::BorelLeroy => {
                let (a, g) = (sp.alpha, sp.gamma);
                let p = g / a - 1.0;
                let h = move |u: f64| {
                    if u == 0.0 {
                        return if p == 0.0 { f(0.0) / a } else { 0.0 };
                    }
                    (-u.powf(1.0 / a)).exp() * u.powf(p) / a * f(u * x)
                };
                // f(u x) lives on the scale u ~ 1/|x|, the kernel on u ~ 1
                let c = 1.0 / x.abs().max(1.0);
                let mut parts = geometric_pieces(&h, c, 1.0, 1.0, cfg);
                parts.push(integrate_semi_infinite(&h, 1.0, cfg));
                sum_results(&parts)
            }
            TransformFamily::Beta => beta_integral(f, sp, x, cfg),
        };
        Ok(r.require(tol)?)
    }
}

/// int_0^1 t^{a-1} (1-t)^{b-1} f(t^g (1-t)^d x) dt, split at 1/2 with the
/// power substitutions t = u^{1/a} (left) and 1 - t = v^{1/b} (right).
fn beta_integral(f: &dyn Fn(f64) -> f64, sp: &TransformSpec, x: f64, cfg: Adaptive) -> QuadratureResult {
    let (a, b, g, d) = (sp.alpha, sp.beta.unwrap_or(1.0), sp.gamma, sp.delta.unwrap_or(0.0));
    let arg = move |t: f64| t.powf(g) * (1.0 - t).powf(d) * x;
    let left = move |u: f64| {
        let t = u.powf(1.0 / a);
        (1.0 - t).powf(b - 1.0) * f(arg(t)) / a
    };
    let right = move |v: f64| {
        let s = v.powf(1.0 / b);
        let t = 1.0 - s;
        t.powf(a - 1.0) * f(arg(t)) / b
    };
    // the argument reaches order one at t ~ |x|^{-1/g} (resp. 1 - t ~ |x|^{-1/d})
    let ax = x.abs().max(1.0);
    let tl = ax.powf(-1.0 / g).min(0.5);
    let tr = if d > 0.0 { ax.powf(-1.0 / d).min(0.5) } else { 0.5 };
    let mut parts = geometric_pieces(&left, tl.powf(a), 0.5f64.powf(a), a, cfg);
    parts.extend(geometric_pieces(&right, tr.powf(b), 0.5f64.powf(b), b, cfg));
    sum_results(&parts)
}

/// Pieces [0, c], [c, 4c], [4c, 16c], ... up to `end`, with the ratio taken
/// in the original variable t = u^{1/p}.
fn geometric_pieces(h: &dyn Fn(f64) -> f64, c: f64, end: f64, p: f64, cfg: Adaptive) -> Vec<QuadratureResult> {
    let ratio = 4f64.powf(p).max(1.5);
    let mut out = Vec::new();
    let (mut a, mut b) = (0.0, c.min(end));
    loop {
        out.push(integrate_adaptive(h, a, b, cfg));
        if b >= end {
            return out;
        }
        a = b;
        b = (b * ratio).min(end);
    }
}

fn sum_results(parts: &[QuadratureResult]) -> QuadratureResult {
    QuadratureResult {
        value: parts.iter().map(|p| p.value).sum(),
        error_estimate: parts.iter().map(|p| p.error_estimate).sum(),
        evaluations: parts.iter().map(|p| p.evaluations).sum(),
        converged: parts.iter().all(|p| p.converged),
    }
}

/// The defining integral at one point, with the default method.
pub fn borel_integral_form(f: &dyn Fn(f64) -> f64, spec: &TransformSpec, x: f64) -> Result<f64, TransformError> {
    BorelIntegrator::new(*spec, IntegralMethod::default_for(spec))?.eval(f, x)
}

/// Integral of the transformed function over the real line against the
/// predicted k * Gamma(gamma - alpha) (Borel family) or k * B(alpha - gamma, beta - delta).
/// The inner transform is evaluated by quadrature at every outer node.
pub fn proposition1_check(
    f: &dyn Fn(f64) -> f64,
    spec: &TransformSpec,
    k_expected: f64,
    tol: f64,
) -> Result<(f64, f64), TransformError> {
    spec.validate()?;
    if spec.inverse {
        return Err(TransformError::InvalidSpec(
            "inverse form needs a pointwise inverse image; use proposition1_inverse_check".into(),
        ));
    }
    let rhs = match spec.family {
        TransformFamily::Beta => {
            let (a, b) = (spec.alpha - spec.gamma, spec.beta.unwrap_or(0.0) - spec.delta.unwrap_or(0.0));
            if !(a > 0.0 && b > 0.0) {
                return Err(TransformError::InvalidSpec(format!("needs alpha > gamma and beta > delta, got B({a}, {b})")));
            }
            k_expected * beta_fn(a, b)
        }
        _ => {
            let g = spec.gamma - spec.alpha;
            if !(g > 0.0) {
                return Err(TransformError::InvalidSpec(format!("needs alpha < gamma, got {}", spec.alpha)));
            }
            k_expected * gamma_fn(g)
        }
    };
    let inner = BorelIntegrator::new(*spec, IntegralMethod::Adaptive { tol: 1e-3 * tol })?;
    let failed = std::cell::Cell::new(None);
    let h = |x: f64| match inner.eval(f, x) {
        Ok(v) => v,
        Err(e) => {
            failed.set(Some(e));
            0.0
        }
    };
    let lhs = integrate_real_line(&h, 0.1 * tol);
    if let Some(e) = failed.into_inner() {
        return Err(e);
    }
    Ok((lhs.require(tol)?, rhs))
}

/// Inverse form: integral over R of a caller-supplied pointwise inverse image
/// g against k / Gamma(1 - alpha). `spacing` selects the oscillatory
/// integrator for conditionally convergent g (g is then assumed even).
pub fn proposition1_inverse_check(
    g: &dyn Fn(f64) -> f64,
    alpha: f64,
    k_expected: f64,
    spacing: Option<f64>,
    tol: f64,
) -> Result<(f64, f64), TransformError> {
    if !(alpha.abs() < 1.0) {
        return Err(TransformError::InvalidSpec(format!("needs |alpha| < 1, got {alpha}")));
    }
    let rhs = k_expected / gamma_fn(1.0 - alpha);
    let lhs = match spacing {
        Some(h) => 2.0 * integrate_oscillatory(g, &OscillatorySpec::new(h), 0.5 * tol)?.require(tol)?,
        None => integrate_real_line(g, tol).require(tol)?,
    };
    Ok((lhs, rhs))
}

/// (B[f; x], x^{-1} L[f; 1/x]) by two separate quadratures.
pub fn laplace_link_check(f: &dyn Fn(f64) -> f64, x: f64) -> Result<(f64, f64), TransformError> {
    if !(x > 0.0) {
        return Err(TransformError::InvalidSpec(format!("x must be > 0, got {x}")));
    }
    let borel = borel_integral_form(f, &TransformSpec::borel(1.0), x)?;
    let cfg = Adaptive::abs(1e-13).with_rel(1e-13);
    let lap = integrate_semi_infinite(&|t: f64| (-t / x).exp() * f(t), 0.0, cfg);
    Ok((borel, lap.require(1e-10)? / x))
}

/// Where and how to integrate a Mellin transform.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MellinSpec {
    /// Open convergence strip lo < Re s < hi declared by the caller.
    pub strip: (f64, f64),
    /// Sign-change spacing hint for oscillating f; None for decaying f.
    pub oscillation: Option<f64>,
    pub tol: f64,
}

/// M[f; s] = int_0^inf x^{s-1} f(x) dx.
pub fn mellin_numeric(f: &dyn Fn(f64) -> f64, s: f64, spec: &MellinSpec) -> Result<f64, TransformError> {
    let (lo, hi) = spec.strip;
    if !(s > lo && s < hi) {
        return Err(TransformError::Strip { s, lo, hi });
    }
    let g = |x: f64| if x == 0.0 { 0.0 } else { x.powf(s - 1.0) * f(x) };
    let r = match spec.oscillation {
        Some(h) => integrate_oscillatory(&g, &OscillatorySpec::new(h), spec.tol)?,
        None => integrate_semi_infinite(&g, 0.0, Adaptive::abs(spec.tol).with_rel(spec.tol)),
    };
    Ok(r.require(spec.tol)?)
}
