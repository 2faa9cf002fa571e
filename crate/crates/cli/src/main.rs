use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use log::debug;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use umbra_core::catalog::{self, CatalogError, Context};
use umbra_core::negderiv::{negderiv_with_oracle, BuiltinIntegrand, Kernel};
use umbra_core::series::TruncatedSeries;
use umbra_core::special::families::{eval_with_tail, family_series, FamilyParams, PolyFamilyId};
use umbra_core::transforms::{borel_apply, TransformFamily, TransformSpec};

#[derive(Parser, Debug)]
#[command(name = "umbra", version, about = "Umbral images, Borel-type transforms and identity checks")]
struct Cli {
    /// Series truncation order.
    #[arg(long, global = true, env = "UMBRA_ORDER", default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..))]
    order: u32,
    /// Multiplies every check tolerance.
    #[arg(long, global = true, env = "UMBRA_TOL_SCALE", default_value_t = 1.0, value_parser = positive)]
    tol_scale: f64,
    #[command(subcommand)]
    cmd: Cmd,
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        Ok(v) => Err(format!("must be a finite number > 0, got {v}")),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Special functions and polynomial families.
    Special {
        #[command(subcommand)]
        cmd: SpecialCmd,
    },
    /// Apply a Borel, Borel-Leroy or beta transform to a series read as JSON.
    Transform(TransformArgs),
    /// Integral from 0 to x through the negative-derivative series, with a quadrature oracle.
    Negderiv(NegderivArgs),
    /// Identity catalog.
    Check {
        #[command(subcommand)]
        cmd: CheckCmd,
    },
}

#[derive(Subcommand, Debug)]
enum SpecialCmd {
    /// Evaluate a family member at x; prints value and tail estimate.
    Eval(EvalArgs),
    /// List family names.
    List,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(long)]
    family: String,
    #[arg(long, default_value_t = 0)]
    n: usize,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    x: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    y: f64,
    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    #[arg(long, default_value_t = 0.0)]
    gamma: f64,
    /// Index p of the Cs/Sn 2p families.
    #[arg(long, default_value_t = 0)]
    p: usize,
    /// 2F2 parameters a1,a2,b1,b2.
    #[arg(long, value_delimiter = ',', num_args = 4, allow_negative_numbers = true)]
    hyp: Option<Vec<f64>>,
    /// Largest accepted tail estimate, relative to max(1, |value|).
    #[arg(long, default_value_t = 1e-10)]
    max_tail: f64,
    /// Instead of one value, print CSV (x, value) on n points of [a, b].
    #[arg(long, value_name = "A:B:N", allow_hyphen_values = true)]
    emit_samples: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Borel,
    BorelLeroy,
    Beta,
}

#[derive(Args, Debug)]
struct TransformArgs {
    /// Series JSON file; stdin when absent.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Full transform spec as JSON, instead of the individual flags.
    #[arg(long, conflicts_with_all = ["family", "alpha", "gamma", "beta", "delta", "inverse"])]
    spec: Option<String>,
    #[arg(long, value_enum, default_value = "borel")]
    family: FamilyArg,
    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    delta: Option<f64>,
    #[arg(long)]
    inverse: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum IntegrandArg {
    One,
    Cos,
}

#[derive(Args, Debug)]
struct NegderivArgs {
    /// Kernel multiplying f: `one` for int f, `cos` for int f(t) cos(t).
    #[arg(long, value_enum, default_value = "one")]
    integrand: IntegrandArg,
    /// j0 | gauss:a,b | hermite:n,y
    #[arg(long, value_parser = parse_integrand)]
    f: BuiltinIntegrand,
    #[arg(long, allow_negative_numbers = true)]
    x: f64,
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..))]
    terms: u32,
}

fn parse_integrand(s: &str) -> Result<BuiltinIntegrand, String> {
    BuiltinIntegrand::parse(s).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum CheckCmd {
    /// Run checks and write a report; exits 1 if any check fails.
    Run(RunArgs),
    /// List registered checks.
    List {
        #[arg(long)]
        include_slow: bool,
    },
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("select").required(true).args(["all", "id", "filter"])))]
struct RunArgs {
    #[arg(long)]
    all: bool,
    /// Check id; repeat for several.
    #[arg(long)]
    id: Vec<String>,
    /// Id prefix or tag.
    #[arg(long)]
    filter: Option<String>,
    #[arg(long)]
    include_slow: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Record per-check runtime in the report.
    #[arg(long)]
    timings: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

/// A failed command: message plus exit code.
struct Failure(u8, String);

impl Failure {
    fn compute(msg: impl ToString) -> Self {
        Failure(1, msg.to_string())
    }
    fn usage(msg: impl ToString) -> Self {
        Failure(2, msg.to_string())
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    debug!("order={} tol_scale={}", cli.order, cli.tol_scale);
    let ctx = Context { order: cli.order as usize, tol_scale: cli.tol_scale, timings: false };
    let result = match cli.cmd {
        Cmd::Special { cmd: SpecialCmd::Eval(a) } => cmd_special(&a, ctx.order),
        Cmd::Special { cmd: SpecialCmd::List } => {
            PolyFamilyId::ALL.iter().for_each(|f| println!("{}", f.name()));
            Ok(0)
        }
        Cmd::Transform(a) => cmd_transform(&a),
        Cmd::Negderiv(a) => cmd_negderiv(&a),
        Cmd::Check { cmd: CheckCmd::Run(a) } => cmd_check(&a, ctx),
        Cmd::Check { cmd: CheckCmd::List { include_slow } } => cmd_list(include_slow),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn family_params(a: &EvalArgs) -> FamilyParams {
    let mut p = FamilyParams { n: a.n, y: a.y, alpha: a.alpha, beta: a.beta, gamma: a.gamma, p: a.p, ..FamilyParams::default() };
    if let Some(h) = &a.hyp {
        (p.a1, p.a2, p.b1, p.b2) = (h[0], h[1], h[2], h[3]);
    }
    p
}

fn parse_range(s: &str) -> Result<(f64, f64, usize), Failure> {
    let bad = || Failure::usage(format!("--emit-samples expects A:B:N with N >= 2, got '{s}'"));
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let a: f64 = parts[0].parse().map_err(|_| bad())?;
    let b: f64 = parts[1].parse().map_err(|_| bad())?;
    let n: usize = parts[2].parse().map_err(|_| bad())?;
    if n < 2 || !(a.is_finite() && b.is_finite()) {
        return Err(bad());
    }
    Ok((a, b, n))
}

fn cmd_special(a: &EvalArgs, order: usize) -> Result<u8, Failure> {
    let id = PolyFamilyId::parse(&a.family).map_err(Failure::usage)?;
    let s = family_series(id, &family_params(a), order).map_err(Failure::compute)?;
    let eval = |x: f64| -> Result<(f64, f64), Failure> {
        let (v, tail) = eval_with_tail(&s, x).map_err(Failure::compute)?;
        if !(tail <= a.max_tail * v.abs().max(1.0)) {
            return Err(Failure::compute(format!(
                "tail estimate {tail:e} at x = {x} exceeds --max-tail {:e}; raise --order or move x toward 0",
                a.max_tail
            )));
        }
        Ok((v, tail))
    };
    match &a.emit_samples {
        None => {
            let (v, tail) = eval(a.x)?;
            println!("value {v}");
            println!("tail {tail:e}");
        }
        Some(r) => {
            let (lo, hi, n) = parse_range(r)?;
            let mut out = String::from("x,value\n");
            for i in 0..n {
                let x = lo + (hi - lo) * i as f64 / (n - 1) as f64;
                out += &format!("{x},{}\n", eval(x)?.0);
            }
            print!("{out}");
        }
    }
    Ok(0)
}

fn transform_spec(a: &TransformArgs) -> Result<TransformSpec, Failure> {
    if let Some(js) = &a.spec {
        return serde_json::from_str(js).map_err(|e| Failure::usage(format!("--spec: {e}")));
    }
    let family = match a.family {
        FamilyArg::Borel => TransformFamily::Borel,
        FamilyArg::BorelLeroy => TransformFamily::BorelLeroy,
        FamilyArg::Beta => TransformFamily::Beta,
    };
    Ok(TransformSpec { family, alpha: a.alpha, gamma: a.gamma.unwrap_or(1.0), beta: a.beta, delta: a.delta, inverse: a.inverse })
}

fn cmd_transform(a: &TransformArgs) -> Result<u8, Failure> {
    let spec = transform_spec(a)?;
    let text = match &a.input {
        Some(p) => std::fs::read_to_string(p).map_err(|e| Failure::usage(format!("{}: {e}", p.display())))?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(Failure::compute)?;
            s
        }
    };
    let series: TruncatedSeries = serde_json::from_str(&text).map_err(|e| Failure::compute(format!("input series: {e}")))?;
    let out = borel_apply(&series, &spec).map_err(Failure::compute)?;
    println!("{}", serde_json::to_string(&out).map_err(Failure::compute)?);
    Ok(0)
}

fn cmd_negderiv(a: &NegderivArgs) -> Result<u8, Failure> {
    let kernel = match a.integrand {
        IntegrandArg::One => Kernel::One,
        IntegrandArg::Cos => Kernel::Cos,
    };
    let (value, oracle) = negderiv_with_oracle(&a.f, kernel, a.x, a.terms as usize).map_err(Failure::compute)?;
    println!("value {value}");
    println!("oracle {oracle}");
    println!("abs_diff {:e}", (value - oracle).abs());
    Ok(0)
}

fn cmd_check(a: &RunArgs, ctx: Context) -> Result<u8, Failure> {
    let ctx = Context { timings: a.timings, ..ctx };
    let to_failure = |e: CatalogError| match e {
        CatalogError::UnknownId(_) | CatalogError::BadContext(_) => Failure::usage(e),
        _ => Failure::compute(e),
    };
    let reports = if !a.id.is_empty() {
        let mut v = Vec::new();
        for id in &a.id {
            v.push(catalog::run_check(id, &ctx).map_err(to_failure)?);
        }
        v.sort_by(|x, y| x.id.cmp(&y.id));
        v.dedup_by(|x, y| x.id == y.id);
        v
    } else {
        let r = catalog::run_all(a.filter.as_deref(), a.include_slow, &ctx).map_err(to_failure)?;
        if r.is_empty() {
            let hint = if a.include_slow { "" } else { " (slow checks need --include-slow)" };
            return Err(Failure::usage(format!("no check matches '{}'{hint}", a.filter.as_deref().unwrap_or(""))));
        }
        r
    };
    let text = match a.format {
        Format::Json => catalog::reports_to_json(&reports) + "\n",
        Format::Csv => catalog::reports_to_csv(&reports),
        Format::Text => catalog::reports_to_text(&reports),
    };
    match &a.output {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::compute(format!("{}: {e}", p.display())))?,
        None => print!("{text}"),
    }
    Ok(if reports.iter().all(|r| r.pass) { 0 } else { 1 })
}

fn cmd_list(include_slow: bool) -> Result<u8, Failure> {
    for c in catalog::registry().checks().iter().filter(|c| include_slow || !c.is_slow()) {
        let slow = if c.is_slow() { " [slow]" } else { "" };
        println!("{:<28} {}{slow}", c.id, c.description);
    }
    Ok(0)
}
