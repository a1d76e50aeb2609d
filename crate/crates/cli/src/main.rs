//! Command-line front end: convergent tables for the named fractions,
//! the verification suites with JSON reports, and certified digits of
//! zeta(3) / 2 zeta(3).
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
//! errors (including precision requests beyond the supported range).

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{Signed, Zero};

use zeta3::apery;
use zeta3::cf::{CfSpec, Mat2};
use zeta3::exact::{RatInterval, Rational};
use zeta3::oracle;
use zeta3::report::{RationalRepr, Report};
use zeta3::suites::{self, SuiteConfig};
use zeta3::theorem_a::{self, Expansion};

#[derive(Parser)]
#[command(name = "zeta3", version, about = "Exact continued-fraction tables and verification suites around zeta(3)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print convergents P_nu, Q_nu of a named continued fraction.
    Convergents(ConvergentsArgs),
    /// Run a verification suite and emit a JSON report.
    Verify(VerifyArgs),
    /// Print zeta(3) (or 2 zeta(3)) to a requested number of digits with a
    /// certified enclosure.
    Digits(DigitsArgs),
    /// Emit a beta coefficient table and its generating polynomials as
    /// JSON with exact numerator/denominator strings.
    BetaTable(BetaTableArgs),
    /// Measure the growth/decay slopes of an expansion by log-regression.
    Slopes(SlopesArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum SpecName {
    /// Normalized pairs (v_nu, u_nu) with ratio tending to zeta(3).
    Apery,
    /// Integer convergents of the zeta(3) fraction.
    Zeta3,
    /// The Nesterenko fraction, value zeta(3).
    Nesterenko,
    /// The head-rescaled Nesterenko fraction, value 2 zeta(3).
    Nesterenko2,
    /// First integer-coefficient expansion of 2 zeta(3).
    #[value(name = "theoremA1", alias = "theorem-a1")]
    TheoremA1,
    /// Second integer-coefficient expansion of 2 zeta(3).
    #[value(name = "theoremA2", alias = "theorem-a2")]
    TheoremA2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Args)]
struct ConvergentsArgs {
    /// Which fraction to expand.
    #[arg(long, value_enum)]
    spec: SpecName,
    /// Deepest index to print.
    #[arg(long)]
    n: i64,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    /// Decimal digits of the printed ratios.
    #[arg(long, default_value = "12")]
    precision: u32,
    /// Write to a file instead of standard output.
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// all | nesterenko | matrix | beta | theoremA
    #[arg(long, default_value = "all")]
    suite: String,
    /// Depth of the intertwining sweeps.
    #[arg(long, default_value = "40")]
    kmax: i64,
    /// Depth of the beta-table sweeps.
    #[arg(long, default_value = "20")]
    numax: i64,
    /// Largest alpha in the table sweeps.
    #[arg(long, default_value = "3")]
    alpha: i64,
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct DigitsArgs {
    /// Number of decimal digits (at most 1000).
    #[arg(long, default_value = "10")]
    count: u32,
    /// Print 2 zeta(3) instead of zeta(3).
    #[arg(long)]
    double: bool,
}

#[derive(Args)]
struct BetaTableArgs {
    #[arg(long)]
    alpha: i64,
    #[arg(long)]
    nu: i64,
    /// Weight power, 0..=3.
    #[arg(long, default_value = "0")]
    r: u32,
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct SlopesArgs {
    /// Which expansion: 1 or 2.
    #[arg(long, default_value = "1")]
    which: u8,
    /// First index of the regression window.
    #[arg(long, default_value = "5")]
    lo: i64,
    /// Last index of the regression window.
    #[arg(long, default_value = "40")]
    hi: i64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

fn spec_of(name: SpecName) -> CfSpec {
    match name {
        SpecName::Apery => apery::apery_cf_spec(),
        SpecName::Zeta3 => apery::zeta3_cf_spec(),
        SpecName::Nesterenko => apery::nesterenko_cf_spec(),
        SpecName::Nesterenko2 => apery::nesterenko_2zeta3_cf_spec(),
        SpecName::TheoremA1 => theorem_a::theorem_a_spec(Expansion::One),
        SpecName::TheoremA2 => theorem_a::theorem_a_spec(Expansion::Two),
    }
}

/// The constant each fraction converges to, as a certified enclosure.
fn target_of(name: SpecName, tol: &Rational) -> RatInterval {
    match name {
        SpecName::Apery | SpecName::Zeta3 | SpecName::Nesterenko => oracle::zeta3_interval(tol),
        _ => oracle::two_zeta3_interval(tol),
    }
}

fn exact_cell(v: &Rational) -> String {
    if v.denom() == &1.into() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

struct Row {
    index: i64,
    p: Rational,
    q: Rational,
    ratio: Option<String>,
    error_bound: Option<String>,
}

fn cmd_convergents(args: &ConvergentsArgs) -> Result<String, String> {
    if args.n < 0 {
        return Err("--n must be nonnegative".into());
    }
    let spec = spec_of(args.spec);
    let conv = spec.convergents(args.n).map_err(|e| e.to_string())?;
    let target = target_of(args.spec, &oracle::pow10_inv(args.precision + 10));
    let rows: Vec<Row> = conv
        .into_iter()
        .enumerate()
        .map(|(i, (p, q))| {
            let (ratio, error_bound) = if q.is_zero() {
                (None, None)
            } else {
                let r = &p / &q;
                let e = target.max_distance(&r);
                let shown = if r.is_negative() {
                    format!("-{}", oracle::decimal_string(&(-&r), args.precision))
                } else {
                    oracle::decimal_string(&r, args.precision)
                };
                (
                    Some(shown),
                    Some(oracle::decimal_upper_bound(&e, args.precision)),
                )
            };
            Row { index: i as i64, p, q, ratio, error_bound }
        })
        .collect();

    let mut out = String::new();
    match args.format {
        Format::Plain => {
            out.push_str(&format!(
                "{:>5}  {:<28} {:<28} {:<20} error_bound\n",
                "index", "P", "Q", "ratio"
            ));
            for r in &rows {
                out.push_str(&format!(
                    "{:>5}  {:<28} {:<28} {:<20} {}\n",
                    r.index,
                    exact_cell(&r.p),
                    exact_cell(&r.q),
                    r.ratio.as_deref().unwrap_or("-"),
                    r.error_bound.as_deref().unwrap_or("-"),
                ));
            }
        }
        Format::Csv => {
            out.push_str("index,p,q,ratio,error_bound\n");
            for r in &rows {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    r.index,
                    exact_cell(&r.p),
                    exact_cell(&r.q),
                    r.ratio.as_deref().unwrap_or(""),
                    r.error_bound.as_deref().unwrap_or(""),
                ));
            }
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "index": r.index,
                        "p": RationalRepr::from(&r.p),
                        "q": RationalRepr::from(&r.q),
                        "ratio": r.ratio,
                        "error_bound": r.error_bound,
                    })
                })
                .collect();
            let doc = serde_json::json!({ "spec": spec.name(), "rows": items });
            out = serde_json::to_string_pretty(&doc).expect("table serialization");
            out.push('\n');
        }
    }
    Ok(out)
}

fn cmd_verify(args: &VerifyArgs) -> Result<(String, bool), String> {
    let cfg = SuiteConfig {
        k_max: args.kmax,
        nu_max_beta: args.numax,
        nu_max_forms: args.kmax.max(14),
        alpha_max: args.alpha.clamp(1, 3),
    };
    let report: Report = match args.suite.as_str() {
        "all" => suites::all_suites(&cfg),
        "nesterenko" => suites::nesterenko_suite(&cfg),
        "matrix" => suites::matrix_suite(&cfg),
        "beta" => suites::beta_suite(&cfg),
        "theoremA" | "theorem-a" | "theorema" => suites::theorem_a_suite(&cfg),
        other => return Err(format!("unknown suite '{other}'")),
    };
    Ok((report.to_json() + "\n", report.all_passed()))
}

fn cmd_digits(args: &DigitsArgs) -> Result<String, String> {
    const MAX_DIGITS: u32 = 1000;
    if args.count == 0 || args.count > MAX_DIGITS {
        return Err(format!(
            "digit count must be between 1 and {MAX_DIGITS}, got {}",
            args.count
        ));
    }
    let d = args.count;
    let tol = oracle::pow10_inv(d + 2);
    let (label, enc) = if args.double {
        ("2*zeta(3)", oracle::two_zeta3_interval(&tol))
    } else {
        ("zeta(3)", oracle::zeta3_interval(&tol))
    };
    let digits = oracle::certified_digits(&enc, d).expect("enclosure width within target");
    // deepest-needed convergent of the matching integer-coefficient
    // fraction, found in one incremental pass
    let spec = if args.double {
        theorem_a::theorem_a_spec(Expansion::One)
    } else {
        apery::zeta3_cf_spec()
    };
    let mid = enc.midpoint();
    let want = oracle::pow10_inv(d);
    let mut index = 0;
    let mut u = spec.u_matrix(0).map_err(|e| e.to_string())?;
    loop {
        index += 1;
        let (a, b) = spec.coeffs(index).map_err(|e| e.to_string())?;
        u.m = Mat2::step(&a, &b).mul(&u.m);
        if u.q().is_zero() {
            continue;
        }
        let r = u.p() / u.q();
        if (r - &mid).abs() <= want {
            break;
        }
    }
    let mut out = String::new();
    out.push_str(&format!("{label} = {digits} (+/- 1 ulp)\n"));
    out.push_str(&format!(
        "enclosure: [{}, {}]\n",
        oracle::decimal_string(&enc.lo, d + 2),
        oracle::decimal_string(&enc.hi, d + 2)
    ));
    out.push_str(&format!(
        "first convergent of the {} fraction within 10^-{d}: index {index}\n",
        spec.name()
    ));
    Ok(out)
}

fn cmd_beta_table(args: &BetaTableArgs) -> Result<String, String> {
    if args.alpha < 0 || args.nu < 0 || args.r > 3 {
        return Err("need --alpha >= 0, --nu >= 0, --r <= 3".into());
    }
    let table = zeta3::beta::beta_table(args.alpha, args.nu, args.r);
    let star = zeta3::beta::beta_star(args.alpha, args.nu, args.r).map_err(|e| e.to_string())?;
    let reprs = |v: &[Rational]| -> Vec<RationalRepr> { v.iter().map(RationalRepr::from).collect() };
    let doc = serde_json::json!({
        "alpha": args.alpha,
        "nu": args.nu,
        "r": args.r,
        "beta1": reprs(&table.beta1),
        "beta2": reprs(&table.beta2),
        "stars": {
            "p1": zeta3::report::poly_repr(&star.p1),
            "p2": zeta3::report::poly_repr(&star.p2),
            "p3": zeta3::report::poly_repr(&star.p3),
            "p4": zeta3::report::poly_repr(&star.p4),
        },
    });
    Ok(serde_json::to_string_pretty(&doc).expect("table serialization") + "\n")
}

fn cmd_slopes(args: &SlopesArgs) -> Result<String, String> {
    let label = match args.which {
        1 => Expansion::One,
        2 => Expansion::Two,
        other => return Err(format!("--which must be 1 or 2, got {other}")),
    };
    if args.lo < 0 || args.hi - args.lo < 9 {
        return Err("regression window must hold at least 10 indices".into());
    }
    let q_growth = theorem_a::q_growth_slope(label, args.lo, args.hi).map_err(|e| e.to_string())?;
    let form_decay =
        theorem_a::linear_form_slope(label, args.lo, args.hi).map_err(|e| e.to_string())?;
    let (_, _, ratio_err) =
        theorem_a::converge_2zeta3(label, args.hi, &oracle::pow10_inv(12)).map_err(|e| e.to_string())?;
    let ratio_err = ratio_err.ok_or("window too shallow for the error slope")?;
    let silver = oracle::eight_ln_silver() / 2.0;
    match args.format {
        Format::Csv => {
            let mut out = String::from("quantity,slope,reference\n");
            out.push_str(&format!("q_growth,{q_growth:.6},{:.6}\n", silver));
            out.push_str(&format!("linear_form_decay,{form_decay:.6},{:.6}\n", -silver));
            out.push_str(&format!("ratio_error,{ratio_err:.6},{:.6}\n", -2.0 * silver));
            Ok(out)
        }
        _ => {
            let doc = serde_json::json!({
                "expansion": args.which,
                "window": [args.lo, args.hi],
                "slopes": {
                    "q_growth": q_growth,
                    "linear_form_decay": form_decay,
                    "ratio_error": ratio_err,
                },
                "references": {
                    "q_growth": silver,
                    "linear_form_decay": -silver,
                    "ratio_error": -2.0 * silver,
                },
            });
            Ok(serde_json::to_string_pretty(&doc).expect("slope serialization") + "\n")
        }
    }
}

fn emit(text: &str, path: &Option<std::path::PathBuf>) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("writing {}: {e}", p.display())),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Convergents(args) => cmd_convergents(args).and_then(|t| {
            emit(&t, &args.output)?;
            Ok(ExitCode::SUCCESS)
        }),
        Command::Verify(args) => cmd_verify(args).and_then(|(t, passed)| {
            emit(&t, &args.output)?;
            Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }),
        Command::Digits(args) => cmd_digits(args).and_then(|t| {
            emit(&t, &None)?;
            Ok(ExitCode::SUCCESS)
        }),
        Command::BetaTable(args) => cmd_beta_table(args).and_then(|t| {
            emit(&t, &args.output)?;
            Ok(ExitCode::SUCCESS)
        }),
        Command::Slopes(args) => cmd_slopes(args).and_then(|t| {
            emit(&t, &None)?;
            Ok(ExitCode::SUCCESS)
        }),
    };
    match outcome {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
