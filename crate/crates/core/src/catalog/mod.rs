//! Registry of identities as executable checks, a runner, and report
//! writers (JSON, CSV, text).
//!
//! Each check pairs an LHS and an RHS evaluator over a list of samples. An
//! evaluator failure does not abort the run: it is recorded against the
//! sample (with the sample label) and the check fails.

mod gf;
mod hermite;
mod helpers;
mod integrals;
mod negderiv_suite;
mod transforms;

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;
use std::time::Instant;
use thiserror::Error;

pub use helpers::{inverse_quarter_image, richardson_derivative};

/// Evaluation settings shared by every check.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Context {
    /// Truncation order for series-based evaluators.
    pub order: usize,
    /// Multiplies every tolerance.
    pub tol_scale: f64,
    /// Record wall-clock time per check.
    pub timings: bool,
}

impl Default for Context {
    fn default() -> Self {
        Self { order: crate::series::DEFAULT_ORDER, tol_scale: 1.0, timings: false }
    }
}

/// How a sample's difference is compared with its tolerance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TolKind {
    Abs,
    /// abs_diff / |rhs|, falling back to abs_diff when rhs = 0.
    Rel,
    /// abs_diff <= tol * max(1, |rhs|).
    Mixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flag {
    Slow,
    DivergentAware,
}

/// One argument tuple. `kind` selects the route or case inside a check.
#[derive(Clone, Debug, PartialEq)]
pub struct Sample {
    pub kind: &'static str,
    pub args: Vec<f64>,
    /// Overrides the check tolerance for this sample.
    pub tol: Option<f64>,
}

impl Sample {
    pub fn new(kind: &'static str, args: &[f64]) -> Self {
        Self { kind, args: args.to_vec(), tol: None }
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = Some(tol);
        self
    }

    pub fn arg(&self, i: usize) -> f64 {
        self.args[i]
    }

    pub fn label(&self) -> String {
        if self.args.is_empty() {
            return self.kind.to_string();
        }
        let a: Vec<String> = self.args.iter().map(|v| format!("{v}")).collect();
        format!("{}({})", self.kind, a.join(","))
    }
}

/// Error text from an evaluator.
#[derive(Clone, Debug, PartialEq)]
pub struct EvalError(pub String);

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<E: std::error::Error> From<E> for EvalError {
    fn from(e: E) -> Self {
        EvalError(e.to_string())
    }
}

pub fn fail<T>(msg: impl Into<String>) -> Result<T, EvalError> {
    Err(EvalError(msg.into()))
}

pub type Evaluator = fn(&Sample, &Context) -> Result<f64, EvalError>;

pub struct IdentityCheck {
    pub id: &'static str,
    pub description: &'static str,
    /// The identity in mathematical notation; required.
    pub paper_ref: &'static str,
    pub tags: &'static [&'static str],
    pub lhs: Evaluator,
    pub rhs: Evaluator,
    pub samples: fn(&Context) -> Vec<Sample>,
    pub tolerance: f64,
    pub tol_kind: TolKind,
    pub flags: &'static [Flag],
    pub notes: &'static str,
}

impl IdentityCheck {
    pub fn is_slow(&self) -> bool {
        self.flags.contains(&Flag::Slow)
    }
}

impl fmt::Debug for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityCheck").field("id", &self.id).field("tolerance", &self.tolerance).finish()
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CatalogError {
    #[error("unknown check id '{0}'")]
    UnknownId(String),
    #[error("check '{0}' is already registered")]
    DuplicateId(String),
    #[error("check '{0}' has no identity reference")]
    MissingReference(String),
    #[error("check '{0}' has no samples")]
    NoSamples(String),
    #[error("check '{id}' has non-positive tolerance {tol}")]
    BadTolerance { id: String, tol: f64 },
    #[error("invalid context: {0}")]
    BadContext(String),
}

#[derive(Debug, Default)]
pub struct Registry {
    checks: Vec<IdentityCheck>,
}

impl Registry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn register(&mut self, c: IdentityCheck) -> Result<(), CatalogError> {
        if c.paper_ref.trim().is_empty() {
            return Err(CatalogError::MissingReference(c.id.into()));
        }
        if self.checks.iter().any(|k| k.id == c.id) {
            return Err(CatalogError::DuplicateId(c.id.into()));
        }
        if !(c.tolerance > 0.0) {
            return Err(CatalogError::BadTolerance { id: c.id.into(), tol: c.tolerance });
        }
        let samples = (c.samples)(&Context::default());
        if samples.is_empty() {
            return Err(CatalogError::NoSamples(c.id.into()));
        }
        if let Some(t) = samples.iter().filter_map(|s| s.tol).find(|t| !(*t > 0.0)) {
            return Err(CatalogError::BadTolerance { id: c.id.into(), tol: t });
        }
        self.checks.push(c);
        Ok(())
    }

    pub fn get(&self, id: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Checks in registration order.
    pub fn checks(&self) -> &[IdentityCheck] {
        &self.checks
    }

    pub fn run_check(&self, id: &str, ctx: &Context) -> Result<CheckReport, CatalogError> {
        validate_context(ctx)?;
        let c = self.get(id).ok_or_else(|| CatalogError::UnknownId(id.into()))?;
        Ok(run_one(c, ctx))
    }

    /// Runs every check whose id starts with `filter` or that carries it as a
    /// tag; slow checks only with `include_slow`. Reports are sorted by id.
    pub fn run_all(&self, filter: Option<&str>, include_slow: bool, ctx: &Context) -> Result<Vec<CheckReport>, CatalogError> {
        validate_context(ctx)?;
        let picked: Vec<&IdentityCheck> = self
            .checks
            .iter()
            .filter(|c| include_slow || !c.is_slow())
            .filter(|c| match filter {
                None => true,
                Some(f) => c.id.starts_with(f) || c.tags.contains(&f),
            })
            .collect();
        let mut out = run_parallel(&picked, ctx);
        out.sort_by(|a, b| a.id.cmp(&b.id));
        Ok(out)
    }
}

fn validate_context(ctx: &Context) -> Result<(), CatalogError> {
    if ctx.order < 1 {
        return Err(CatalogError::BadContext(format!("order must be >= 1, got {}", ctx.order)));
    }
    if !(ctx.tol_scale > 0.0 && ctx.tol_scale.is_finite()) {
        return Err(CatalogError::BadContext(format!("tolerance scale must be > 0, got {}", ctx.tol_scale)));
    }
    Ok(())
}

fn run_parallel(checks: &[&IdentityCheck], ctx: &Context) -> Vec<CheckReport> {
    let workers = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(checks.len().max(1));
    if workers <= 1 {
        return checks.iter().map(|c| run_one(c, ctx)).collect();
    }
    let next = std::sync::atomic::AtomicUsize::new(0);
    let mut slots: Vec<Option<CheckReport>> = (0..checks.len()).map(|_| None).collect();
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                s.spawn(|| {
                    let mut done = Vec::new();
                    loop {
                        let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                        if i >= checks.len() {
                            break;
                        }
                        done.push((i, run_one(checks[i], ctx)));
                    }
                    done
                })
            })
            .collect();
        for h in handles {
            for (i, r) in h.join().expect("check worker panicked") {
                slots[i] = Some(r);
            }
        }
    });
    slots.into_iter().map(|r| r.expect("every check ran")).collect()
}

fn run_one(c: &IdentityCheck, ctx: &Context) -> CheckReport {
    let start = Instant::now();
    let samples: Vec<SampleReport> = (c.samples)(ctx)
        .iter()
        .map(|s| {
            let tol = s.tol.unwrap_or(c.tolerance) * ctx.tol_scale;
            evaluate_sample(c, s, ctx, tol)
        })
        .collect();
    let max = |f: fn(&SampleReport) -> Option<f64>| samples.iter().filter_map(f).fold(None, |m: Option<f64>, v| Some(m.map_or(v, |m| m.max(v))));
    CheckReport {
        id: c.id.to_string(),
        pass: samples.iter().all(|s| s.pass),
        max_abs_diff: max(|s| s.abs_diff),
        max_rel_diff: max(|s| s.rel_diff),
        samples,
        paper_ref: c.paper_ref.to_string(),
        runtime_ms: ctx.timings.then(|| start.elapsed().as_secs_f64() * 1e3),
    }
}

fn finite(side: &str, r: Result<f64, EvalError>) -> Result<f64, String> {
    match r {
        Ok(v) if v.is_finite() => Ok(v),
        Ok(v) => Err(format!("{side}: non-finite value {v}")),
        Err(e) => Err(format!("{side}: {e}")),
    }
}

fn evaluate_sample(c: &IdentityCheck, s: &Sample, ctx: &Context, tol: f64) -> SampleReport {
    let label = s.label();
    let lhs = finite("lhs", (c.lhs)(s, ctx));
    let rhs = finite("rhs", (c.rhs)(s, ctx));
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => {
            let abs = (l - r).abs();
            let rel = if r == 0.0 { abs } else { abs / r.abs() };
            let pass = match c.tol_kind {
                TolKind::Abs => abs <= tol,
                TolKind::Rel => rel <= tol,
                TolKind::Mixed => abs <= tol * r.abs().max(1.0),
            };
            SampleReport { label, lhs: Some(l), rhs: Some(r), abs_diff: Some(abs), rel_diff: Some(rel), tolerance: tol, pass, error: None }
        }
        (l, r) => {
            let msg: Vec<String> = [l.as_ref().err(), r.as_ref().err()].into_iter().flatten().cloned().collect();
            SampleReport {
                label: label.clone(),
                lhs: l.ok(),
                rhs: r.ok(),
                abs_diff: None,
                rel_diff: None,
                tolerance: tol,
                pass: false,
                error: Some(format!("sample {label}: {}", msg.join("; "))),
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleReport {
    pub label: String,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub abs_diff: Option<f64>,
    pub rel_diff: Option<f64>,
    pub tolerance: f64,
    pub pass: bool,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub pass: bool,
    pub max_abs_diff: Option<f64>,
    pub max_rel_diff: Option<f64>,
    pub samples: Vec<SampleReport>,
    pub paper_ref: String,
    pub runtime_ms: Option<f64>,
}

pub fn reports_to_json(reports: &[CheckReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

pub fn reports_from_json(s: &str) -> Result<Vec<CheckReport>, serde_json::Error> {
    serde_json::from_str(s)
}

fn opt(v: Option<f64>) -> String {
    v.map(|v| format!("{v:e}")).unwrap_or_default()
}

/// One row per sample; check-level columns repeat on every row.
pub fn reports_to_csv(reports: &[CheckReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "id", "pass", "max_abs_diff", "max_rel_diff", "paper_ref", "runtime_ms", "sample", "lhs", "rhs", "abs_diff",
        "rel_diff", "tolerance", "sample_pass", "error",
    ])
    .expect("in-memory csv");
    for r in reports {
        for s in &r.samples {
            w.write_record([
                r.id.clone(),
                r.pass.to_string(),
                opt(r.max_abs_diff),
                opt(r.max_rel_diff),
                r.paper_ref.clone(),
                r.runtime_ms.map(|t| format!("{t:.3}")).unwrap_or_default(),
                s.label.clone(),
                opt(s.lhs),
                opt(s.rhs),
                opt(s.abs_diff),
                opt(s.rel_diff),
                format!("{:e}", s.tolerance),
                s.pass.to_string(),
                s.error.clone().unwrap_or_default(),
            ])
            .expect("in-memory csv");
        }
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8 csv")
}

/// One line per check, followed by failing samples.
pub fn reports_to_text(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let verdict = if r.pass { "PASS" } else { "FAIL" };
        let time = r.runtime_ms.map(|t| format!("  {t:.1} ms")).unwrap_or_default();
        out += &format!(
            "{verdict} {:<28} samples={:<4} max_abs={:<12} max_rel={:<12}{time}\n",
            r.id,
            r.samples.len(),
            opt(r.max_abs_diff),
            opt(r.max_rel_diff)
        );
        for s in r.samples.iter().filter(|s| !s.pass) {
            match &s.error {
                Some(e) => out += &format!("    {e}\n"),
                None => out += &format!(
                    "    {}: lhs={} rhs={} abs={} tol={:e}\n",
                    s.label,
                    opt(s.lhs),
                    opt(s.rhs),
                    opt(s.abs_diff),
                    s.tolerance
                ),
            }
        }
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    out += &format!("{} checks, {} failed\n", reports.len(), failed);
    out
}

/// The built-in catalog, validated on first use.
pub fn registry() -> &'static Registry {
    static REG: OnceLock<Registry> = OnceLock::new();
    REG.get_or_init(|| {
        let mut r = Registry::new();
        for c in integrals::checks()
            .into_iter()
            .chain(transforms::checks())
            .chain(gf::checks())
            .chain(hermite::checks())
            .chain(negderiv_suite::checks())
        {
            r.register(c).expect("built-in check is valid");
        }
        r
    })
}

pub fn run_check(id: &str, ctx: &Context) -> Result<CheckReport, CatalogError> {
    registry().run_check(id, ctx)
}

pub fn run_all(filter: Option<&str>, include_slow: bool, ctx: &Context) -> Result<Vec<CheckReport>, CatalogError> {
    registry().run_all(filter, include_slow, ctx)
}

/// Ids of every registered check, in registration order.
pub fn check_ids() -> Vec<&'static str> {
    registry().checks().iter().map(|c| c.id).collect()
}

/// Distinct tags across the catalog.
pub fn tags() -> BTreeSet<&'static str> {
    registry().checks().iter().flat_map(|c| c.tags.iter().copied()).collect()
}
