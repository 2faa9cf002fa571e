//! Acceptance harness: one PASS/FAIL line per criterion with its runtime
//! budget. Exits non-zero if any criterion fails.

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use std::time::{Duration, Instant};
use umbra_core::catalog::{self, CheckReport, Context};
use umbra_core::negderiv::{bessel_nth_derivative, negderiv_integral, BuiltinIntegrand};
use umbra_core::quadrature::integrate_finite;
use umbra_core::series::{Scalar, TruncatedSeries};
use umbra_core::special::bessel::{bessel_j, tricomi_c};
use umbra_core::special::families::{cs_closed_form, cs_sn_family, tricomi, CsSn};
use umbra_core::special::poly::{hermite2_derivative_rules, hermite2_padded, Var};
use umbra_core::transforms::{borel_apply, BorelIntegrator, IntegralMethod, TransformSpec};

type Outcome = Result<String, String>;

fn run(ids: &[&str], slow: bool) -> Result<Vec<CheckReport>, String> {
    let ctx = Context::default();
    let mut out = Vec::new();
    for id in ids {
        let r = catalog::run_check(id, &ctx).map_err(|e| e.to_string())?;
        if catalog::registry().get(id).map(|c| c.is_slow()) != Some(slow) {
            return Err(format!("{id}: slow flag is not {slow}"));
        }
        out.push(r);
    }
    Ok(out)
}

fn all_pass(reports: &[CheckReport]) -> Result<(), String> {
    let failed: Vec<&str> = reports.iter().filter(|r| !r.pass).map(|r| r.id.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(format!("failing checks: {}", failed.join(", ")))
    }
}

/// |lhs - rhs| of the sample with this label.
fn sample_diff(r: &CheckReport, label: &str) -> Result<f64, String> {
    let s = r.samples.iter().find(|s| s.label == label).ok_or_else(|| format!("{}: no sample {label}", r.id))?;
    match (s.lhs, s.rhs) {
        (Some(l), Some(rv)) => Ok((l - rv).abs()),
        _ => Err(format!("{}: {}", r.id, s.error.clone().unwrap_or_default())),
    }
}

fn criterion_1() -> Outcome {
    let ids = [
        "borel-c0-exp",
        "borel3-divergent",
        "borel-half-j0",
        "borel-leroy-ealphagamma",
        "bessel-wright-inverse",
        "rn-inverse-bl",
        "mittag-leffler",
    ];
    let reports = run(&ids, false)?;
    all_pass(&reports)?;
    let mut worst = 0.0f64;
    for r in &reports {
        for s in r.samples.iter().filter(|s| s.label.starts_with("coeff") || s.label.starts_with("forward") || s.label.starts_with("inverse")) {
            let rel = s.rel_diff.ok_or("missing rel diff")?;
            worst = worst.max(rel);
        }
    }
    if worst > 1e-13 {
        return Err(format!("worst coefficient rel diff {worst:e}"));
    }
    Ok(format!("worst coefficient rel diff {worst:.1e}"))
}

fn criterion_2() -> Outcome {
    let op = borel_apply(&tricomi(0.0, 64), &TransformSpec::borel(1.0)).map_err(|e| e.to_string())?;
    let gl = BorelIntegrator::new(TransformSpec::borel(1.0), IntegralMethod::GaussLaguerre { nodes: 64 }).map_err(|e| e.to_string())?;
    let (mut op_exp, mut gl_exp, mut op_gl) = (0.0f64, 0.0f64, 0.0f64);
    for i in 0..=400 {
        let x = 2.0 * i as f64 / 400.0;
        let a = op.eval_real(x).map_err(|e| e.to_string())?;
        let b = gl.eval(&|u| tricomi_c(0.0, u), x).map_err(|e| e.to_string())?;
        let e = (-x).exp();
        op_exp = op_exp.max((a - e).abs());
        gl_exp = gl_exp.max((b - e).abs());
        op_gl = op_gl.max((a - b).abs());
    }
    let worst = op_exp.max(gl_exp).max(op_gl);
    let msg = format!("sup |op-exp| {op_exp:.1e}, |GL64-exp| {gl_exp:.1e}, |op-GL64| {op_gl:.1e}");
    if worst <= 1e-8 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn criterion_3() -> Outcome {
    let r = run(&["int-j0-line"], false)?;
    all_pass(&r)?;
    let d = r[0].samples.iter().filter_map(|s| s.lhs.map(|l| (l - 1.0).abs())).fold(0.0, f64::max);
    if d <= 1e-6 {
        Ok(format!("|int J0 - 1| = {d:.1e}"))
    } else {
        Err(format!("|int J0 - 1| = {d:e}"))
    }
}

fn criterion_4() -> Outcome {
    let r = run(&["gauss-j0"], false)?;
    all_pass(&r)?;
    let mut worst = 0.0f64;
    for b in ["0.5", "1", "2"] {
        let s = r[0].samples.iter().find(|s| s.label == format!("quadrature({b})")).ok_or("missing quadrature sample")?;
        worst = worst.max(s.rel_diff.ok_or("no rel diff")?);
    }
    if worst <= 1e-8 {
        Ok(format!("worst rel diff {worst:.1e} at b in {{0.5, 1, 2}}"))
    } else {
        Err(format!("worst rel diff {worst:e}"))
    }
}

fn criterion_5() -> Outcome {
    let r = run(&["prop1", "beta-prop"], false)?;
    all_pass(&r)?;
    let pi = sample_diff(&r[0], "forward(0.5)")?;
    let s = r[1].samples.iter().find(|s| s.label.starts_with("integral")).ok_or("no beta-prop integral sample")?;
    let beta = (s.lhs.ok_or("no lhs")? - umbra_core::special::gamma::sqrt_pi() / 6.0).abs();
    if pi <= 1e-5 && beta <= 1e-5 {
        Ok(format!("|int B^(1/2) - pi| = {pi:.1e}, |beta form - sqrt(pi)/6| = {beta:.1e}"))
    } else {
        Err(format!("pi diff {pi:e}, beta diff {beta:e}"))
    }
}

fn criterion_6() -> Outcome {
    let r = run(&["negderiv-suite"], false)?;
    all_pass(&r)?;
    let sum = negderiv_integral(&BuiltinIntegrand::J0, 1.0, 30).map_err(|e| e.to_string())?;
    let quad = integrate_finite(&|t| bessel_j(0, t), 0.0, 1.0, 1e-14).value;
    let d1 = (sum.partial_sums[29] - 0.9197304101).abs().max((sum.partial_sums[29] - quad).abs());
    let d10 = sample_diff(&r[0], "gauss-closed(0.3,0.5,0.8,40)")?;
    let mut d20 = 0.0f64;
    for n in 1..=3usize {
        for &x in &[0.7, 1.2, 2.0] {
            let v = bessel_nth_derivative(n, x).map_err(|e| e.to_string())?;
            d20 = d20.max((v - catalog::richardson_derivative(&|t| bessel_j(0, t), n, x, 0.4)).abs());
        }
    }
    let msg = format!("J0 sum at 30 terms {d1:.1e}, Gaussian {d10:.1e}, J0 derivatives vs Richardson {d20:.1e}");
    if d1 <= 1e-10 && d10 <= 1e-9 && d20 <= 1e-7 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn criterion_7() -> Outcome {
    let ids = [
        "gf-tricomi",
        "gf-bessel",
        "gf-laguerre",
        "gf-bessel-trunc",
        "gf-lacunary-l2-ordinary",
        "gf-lacunary-l2-exp",
        "gf-lacunary-lp",
        "hermite-umbral-exp",
        "hermite-sqrt-identity",
        "gf-hermite-double-lacunary",
        "mehler",
        "hybrid-laguerre-hermite",
    ];
    let reports = run(&ids, false)?;
    all_pass(&reports)?;
    let lp = reports.iter().find(|r| r.id == "gf-lacunary-lp").ok_or("no lp report")?;
    if !lp.samples.iter().any(|s| s.label.starts_with("sum(3,")) {
        return Err("no p = 3 sample in the lacunary check".into());
    }
    let samples: usize = reports.iter().map(|r| r.samples.len()).sum();
    Ok(format!("{} checks, {samples} samples", reports.len()))
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(Config { cases, failure_persistence: None, ..Config::default() }, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn close(a: &TruncatedSeries, b: &TruncatedSeries, rel: f64) -> bool {
    a.coeffs().iter().zip(b.coeffs()).all(|(x, y)| (x - y).norm() <= rel * (1.0 + x.norm().max(y.norm())))
}

fn arb_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    proptest::collection::vec(-5.0f64..5.0, order + 1).prop_map(|c| TruncatedSeries::from_real(&c))
}

fn criterion_8() -> Outcome {
    let mut failures = Vec::new();
    let mut note = |name: &str, r: Result<(), String>| {
        if let Err(e) = r {
            failures.push(format!("{name}: {e}"));
        }
    };

    let ring = runner(256).run(&(arb_series(16), arb_series(16), arb_series(16)), |(a, b, c)| {
        prop_assert!(close(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c)), 1e-12));
        prop_assert!(close(&a.mul(&b.add(&c)), &a.mul(&b).add(&a.mul(&c)), 1e-12));
        Ok(())
    });
    note("ring laws", ring.map_err(|e| e.to_string()));

    let borel = runner(256).run(
        &(proptest::collection::vec(-10.0f64..10.0, 1..65), 0.05f64..2.0, 0.1f64..3.0, 0usize..3),
        |(coeffs, a, g, which)| {
            let s = TruncatedSeries::from_real(&coeffs);
            let spec = match which {
                0 => TransformSpec::borel(a),
                1 => TransformSpec::borel_leroy(a, g),
                _ => TransformSpec::beta(a, g, a, 0.5 * g),
            };
            let back = borel_apply(&borel_apply(&s, &spec).unwrap(), &spec.inverted()).unwrap();
            for (x, y) in back.real_coeffs().iter().zip(&coeffs) {
                prop_assert!((x - y).abs() <= 2.0 * f64::EPSILON * y.abs());
            }
            Ok(())
        },
    );
    note("Borel round trip", borel.map_err(|e| e.to_string()));

    let chains = runner(128).run(&(0usize..=12, 0usize..=12, 0usize..3, 0usize..=8, -3.0f64..3.0), |(n, s, yi, k, x)| {
        let y = [-1.0, 1.0, 2.5][yi];
        let s = s.min(n);
        // x-derivatives by the rule against repeated series differentiation
        let mut d = hermite2_padded(n, y, n);
        for _ in 0..s {
            d = d.differentiate().unwrap().truncate(n);
        }
        prop_assert!(close(&hermite2_derivative_rules(n, s, Var::X, y), &d, 1e-13));
        // d/dy = d^2/dx^2 on H_n(x, y)
        let mut d = hermite2_padded(n, y, n);
        for _ in 0..(2 * s).min(n + 1) {
            d = d.differentiate().unwrap().truncate(n);
        }
        if 2 * s > n {
            d = TruncatedSeries::zero(n);
        }
        prop_assert!(close(&hermite2_derivative_rules(n, s, Var::Y, y), &d, 1e-13));
        // (d/dx)^k C_0 = (-1)^k C_k, series route against the closed-form value
        let mut c = tricomi(0.0, 64);
        for _ in 0..k {
            c = c.differentiate().unwrap();
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let v = c.eval(Scalar::new(x, 0.0)).unwrap().value.re;
        prop_assert!((v - sign * tricomi_c(k as f64, x)).abs() <= 1e-12 * v.abs().max(1.0));
        Ok(())
    });
    note("Hermite/Tricomi derivative chains", chains.map_err(|e| e.to_string()));

    let series: Vec<TruncatedSeries> = (0..=4).map(|p| cs_sn_family(CsSn::Cs, p, 120)).collect();
    let cs = runner(256).run(&(0usize..=4, -2.0f64..2.0), |(p, x)| {
        let a = series[p].eval_real(x).unwrap();
        let b = cs_closed_form(p, x);
        prop_assert!((a - b).abs() <= 1e-10 * b.abs().max(1.0), "p={} x={} {} {}", p, x, a, b);
        Ok(())
    });
    note("Cs closed form", cs.map_err(|e| e.to_string()));

    if failures.is_empty() {
        Ok("ring laws, Borel round trip, derivative chains, Cs closed form".into())
    } else {
        Err(failures.join("; "))
    }
}

fn criterion_9() -> Outcome {
    let ctx = Context::default();
    let a = catalog::run_all(None, false, &ctx).map_err(|e| e.to_string())?;
    let b = catalog::run_all(None, false, &ctx).map_err(|e| e.to_string())?;
    all_pass(&a)?;
    if catalog::reports_to_json(&a) != catalog::reports_to_json(&b) {
        return Err("two runs gave different JSON".into());
    }
    Ok(format!("{} checks green, JSON byte-identical across two runs", a.len()))
}

fn criterion_10() -> Outcome {
    let r = run(&["int-j0-xsq", "tricomi-sincos", "tricomi-j0-projection"], true)?;
    all_pass(&r)?;
    let worst: Vec<String> = r.iter().map(|c| format!("{} {:.1e}", c.id, c.max_abs_diff.unwrap_or(f64::NAN))).collect();
    Ok(worst.join(", "))
}

fn main() {
    let criteria: [(u32, &str, Duration, fn() -> Outcome); 10] = [
        (1, "coefficient-exact transforms", Duration::from_secs(1), criterion_1),
        (2, "operator / Gauss-Laguerre / e^-x on [0, 2]", Duration::from_secs(1), criterion_2),
        (3, "int_0^inf J0 = 1", Duration::from_secs(5), criterion_3),
        (4, "Gaussian-J0 integral vs I0 closed form", Duration::from_secs(2), criterion_4),
        (5, "integral preservation under Borel-type transforms", Duration::from_secs(5), criterion_5),
        (6, "negative-derivative suite", Duration::from_secs(2), criterion_6),
        (7, "generating-function suite", Duration::from_secs(10), criterion_7),
        (8, "property suites", Duration::from_secs(5), criterion_8),
        (9, "full default suite, deterministic", Duration::from_secs(60), criterion_9),
        (10, "slow checks", Duration::from_secs(300), criterion_10),
    ];
    let mut failed = 0;
    for (n, name, budget, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if took <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} {n:>2} {name}: {:.3} s (budget {} s) - {detail}",
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            budget.as_secs()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
