//! Command-line surface. Exact subcommands print the `p/q * pi^n` contract;
//! verify-* subcommands print a grid report and encode the outcome in the
//! exit status.
//!
//! Exit codes: 0 success, 1 verification failure, 2 bad arguments (including
//! library domain rejections), 3 route disagreement, 4 I/O failure.

use crate::error::{Error, Result};
use crate::exact_kernel::{format_rational, rat};
use crate::quadrature_lab::{
    fubini_inner_check, ode_residual_with_step, plemelj_sweep, pv_consistency_check,
    reflection_closed_form_check, PlemeljSign,
};
use crate::report::GridReport;
use crate::sequences::{
    bernoulli_from_tangent_table, bernoulli_recurrence, cotangent_numbers, tangent_numbers,
    SequenceTable,
};
use crate::series_lab::{
    coulomb_force, default_terms, partial_zeta_sum, reflection_check_with_terms,
    regularized_potential, SeriesEstimate,
};
use crate::zeta_engine::{zeta_validated, ZetaEngine, ZetaRoute};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::fmt::Write as _;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "zeta-forge",
    version,
    about = "Exact even zeta values, their generating sequences, and the numerical checks behind them"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write output to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Exact,
    Decimal,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EstimateFormat {
    Decimal,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Markdown,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Tangent,
    Cotangent,
    Recurrence,
    Bernoulli,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BernoulliRouteArg {
    Recurrence,
    FromTangent,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SignArg {
    Minus,
    Plus,
}

impl From<SignArg> for PlemeljSign {
    fn from(s: SignArg) -> PlemeljSign {
        match s {
            SignArg::Minus => PlemeljSign::Minus,
            SignArg::Plus => PlemeljSign::Plus,
        }
    }
}

const DEFAULT_EPS: [f64; 4] = [0.1, 0.01, 0.001, 0.0001];

#[derive(Subcommand)]
enum Command {
    /// Exact tangent numbers T_0..T_n
    Tangent {
        #[arg(long, default_value_t = 11)]
        max_index: usize,
        #[arg(long, value_enum, default_value_t = Format::Exact)]
        format: Format,
    },
    /// Exact cotangent-expansion numbers S_0..S_n
    Cotangent {
        #[arg(long, default_value_t = 12)]
        max_index: usize,
        #[arg(long, value_enum, default_value_t = Format::Exact)]
        format: Format,
    },
    /// Exact even Bernoulli numbers B_2..B_n
    Bernoulli {
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(usize))]
        max_index: usize,
        /// all = compute both routes, insist they agree, print once
        #[arg(long, value_enum, default_value_t = BernoulliRouteArg::All)]
        route: BernoulliRouteArg,
        #[arg(long, value_enum, default_value_t = Format::Exact)]
        format: Format,
    },
    /// Exact ζ(2k) as a rational multiple of pi^2k
    Zeta {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=300))]
        k: u32,
        /// all = cross-validate the four routes (disagreement exits 3)
        #[arg(long, value_enum, default_value_t = RouteArg::All)]
        route: RouteArg,
        #[arg(long, value_enum, default_value_t = Format::Exact)]
        format: Format,
    },
    /// Exact odd-order polygamma value at 1/2: a rational multiple of pi^2k
    PolygammaHalf {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=300))]
        k: u32,
        #[arg(long, value_enum, default_value_t = Format::Exact)]
        format: Format,
    },
    /// Lattice force sum Σ 1/(n−x)² with a certified tail bracket
    Force {
        #[arg(long, default_value_t = 0.5)]
        x: f64,
        /// partial-sum length (default 10^6)
        #[arg(long)]
        terms: Option<u64>,
        #[arg(long, value_enum, default_value_t = EstimateFormat::Decimal)]
        format: EstimateFormat,
    },
    /// Regularized lattice potential −Σ (1/(n−x) − 1/n) with tail bracket
    Potential {
        #[arg(long, default_value_t = 0.5)]
        x: f64,
        #[arg(long)]
        terms: Option<u64>,
        #[arg(long, value_enum, default_value_t = EstimateFormat::Decimal)]
        format: EstimateFormat,
    },
    /// Check partial sums against exact zeta values and the half-shift split
    VerifySeries {
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..=15))]
        max_k: u32,
        #[arg(long)]
        terms: Option<u64>,
        #[arg(long, default_value_t = 1e-6)]
        threshold: f64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Polygamma reflection identity via lattice series vs cot derivatives
    VerifyReflection {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=20))]
        k: u32,
        #[arg(long, default_value = "0.1:0.9:0.05")]
        grid: String,
        #[arg(long)]
        terms: Option<u64>,
        #[arg(long, default_value_t = 1e-5)]
        threshold: f64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// φ(x) principal value vs closed form and vs the unit-interval integral
    VerifyPv {
        #[arg(long, default_value = "0.1:0.9:0.05")]
        grid: String,
        #[arg(long, default_value_t = 1e-8)]
        threshold: f64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// ε-sweep of the regularized integral: Im must walk to ±π
    VerifyPlemelj {
        #[arg(long, default_value_t = 0.3)]
        x: f64,
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        eps_list: Option<Vec<f64>>,
        #[arg(long, value_enum, default_value_t = SignArg::Minus)]
        sign: SignArg,
        /// bound on |Im − target| at the smallest ε; the sweep must also
        /// strictly improve
        #[arg(long, default_value_t = 0.05)]
        threshold: f64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Riccati residual φ′ − π² − φ² from Richardson central differences
    VerifyOde {
        #[arg(long, default_value = "0.2:0.8:0.05")]
        grid: String,
        #[arg(long, default_value_t = 1e-3)]
        h: f64,
        #[arg(long, default_value_t = 1e-4)]
        threshold: f64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Two-pole regularized integral vs −ln y/(1−y) across an ε-sweep
    VerifyFubini {
        #[arg(long, default_value_t = 0.5)]
        y: f64,
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        eps_list: Option<Vec<f64>>,
        /// bound on the residual at the smallest ε; the sweep must also
        /// strictly improve
        #[arg(long, default_value_t = 1e-2)]
        threshold: f64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Row-per-k table: k, 2k, exact zeta, decimal, T_{2k−1}, B_{2k}
    Table {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=100))]
        max_k: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Markdown)]
        format: TableFormat,
    },
}

/// Parse args from the environment, run, and return the process exit code.
pub fn main_entry() -> i32 {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::RouteDisagreement { .. } => 3,
        Error::Io(_) => 4,
        _ => 2,
    }
}

fn execute(cli: Cli) -> Result<i32> {
    let mut out = String::new();
    let code = dispatch(&cli.command, &mut out)?;
    match &cli.output {
        Some(path) => std::fs::write(path, out)?,
        None => print!("{out}"),
    }
    Ok(code)
}

/// Render with 15 significant digits, plain notation.
pub(crate) fn decimal15(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (14 - magnitude).max(0) as usize;
    format!("{v:.decimals$}")
}

/// "start:stop:step" → inclusive grid; stop joins when it lands within 1e−9.
pub(crate) fn parse_grid(s: &str) -> Result<Vec<f64>> {
    let parse_part = |p: &str| -> Result<f64> {
        p.trim().parse::<f64>().map_err(|_| Error::Parse {
            what: "grid",
            input: s.to_string(),
        })
    };
    let parts: Vec<&str> = s.split(':').collect();
    let [start, stop, step] = parts.as_slice() else {
        return Err(Error::Parse {
            what: "grid",
            input: s.to_string(),
        });
    };
    let (start, stop, step) = (parse_part(start)?, parse_part(stop)?, parse_part(step)?);
    if !start.is_finite() || !stop.is_finite() || !(step > 0.0) || stop < start {
        return Err(Error::Parse {
            what: "grid",
            input: s.to_string(),
        });
    }
    let mut points = Vec::new();
    for i in 0.. {
        let x = start + i as f64 * step;
        if x > stop + 1e-9 {
            break;
        }
        points.push(if (x - stop).abs() <= 1e-9 { stop } else { x });
    }
    Ok(points)
}

fn emit_sequence(out: &mut String, table: &SequenceTable, letter: char, format: Format) {
    match format {
        Format::Json => {
            let _ = writeln!(out, "{}", table.to_json());
        }
        _ => {
            for (i, v) in table.values() {
                let rendered = match format {
                    Format::Decimal => decimal15(crate::exact_kernel::to_f64(v)),
                    _ => format_rational(v),
                };
                let _ = writeln!(out, "{letter}_{i} = {rendered}");
            }
        }
    }
}

fn emit_estimate(out: &mut String, est: &SeriesEstimate, format: EstimateFormat) {
    match format {
        EstimateFormat::Json => {
            let _ = writeln!(out, "{}", est.to_json());
        }
        EstimateFormat::Decimal => {
            let (lo, hi) = est.bracket();
            let _ = writeln!(
                out,
                "estimate = {}  bracket = [{}, {}]  terms = {}",
                decimal15(est.value_estimate()),
                decimal15(lo),
                decimal15(hi),
                est.terms_used
            );
        }
    }
}

/// Print a report and return the exit code for a plain threshold check.
fn emit_report(
    out: &mut String,
    report: &GridReport,
    threshold: f64,
    format: ReportFormat,
) -> i32 {
    let pass = report.passes(threshold);
    match format {
        ReportFormat::Json => {
            let _ = writeln!(out, "{}", report.to_json());
        }
        ReportFormat::Text => {
            let _ = writeln!(out, "points = {}", report.points().len());
            let _ = writeln!(out, "max_abs_residual = {:.3e}", report.max_abs_residual());
            let _ = writeln!(out, "threshold = {threshold:e}");
            let _ = writeln!(out, "{}", if pass { "PASS" } else { "FAIL" });
        }
    }
    i32::from(!pass)
}

/// Print an ε-sweep report; passing needs strict improvement across the
/// sweep and a final residual within threshold.
fn emit_sweep_report(
    out: &mut String,
    report: &GridReport,
    threshold: f64,
    format: ReportFormat,
) -> i32 {
    let r = report.residuals();
    let monotone = r.windows(2).all(|w| w[1].abs() < w[0].abs());
    let final_ok = r.last().is_some_and(|v| v.abs() <= threshold);
    let pass = monotone && final_ok;
    match format {
        ReportFormat::Json => {
            let _ = writeln!(out, "{}", report.to_json());
        }
        ReportFormat::Text => {
            for (eps, res) in report.points().iter().zip(r) {
                let _ = writeln!(out, "eps = {eps:e}  residual = {:.3e}", res.abs());
            }
            let _ = writeln!(
                out,
                "strictly_improving = {monotone}  final_within_threshold = {final_ok} (threshold = {threshold:e})"
            );
            let _ = writeln!(out, "{}", if pass { "PASS" } else { "FAIL" });
        }
    }
    i32::from(!pass)
}

fn series_report(max_k: usize, terms: Option<u64>) -> Result<GridReport> {
    let mut points = Vec::new();
    let mut residuals = Vec::new();
    for k in 1..=max_k {
        let n = terms.unwrap_or_else(|| default_terms(k));
        let plain = partial_zeta_sum(k, n, false)?;
        let shifted = partial_zeta_sum(k, n, true)?;
        let scale = ((1u64 << (2 * k)) - 1) as f64;
        let exact = zeta_validated(k)?.to_f64();
        let vs_exact = (plain.value_estimate() - exact).abs();
        let vs_split = (plain.value_estimate() - shifted.value_estimate() / scale).abs();
        points.push(k as f64);
        residuals.push(vs_exact.max(vs_split));
    }
    Ok(GridReport::new(points, residuals))
}

fn dispatch(command: &Command, out: &mut String) -> Result<i32> {
    match command {
        Command::Tangent { max_index, format } => {
            emit_sequence(out, &tangent_numbers(*max_index), 'T', *format);
            Ok(0)
        }
        Command::Cotangent { max_index, format } => {
            emit_sequence(out, &cotangent_numbers(*max_index), 'S', *format);
            Ok(0)
        }
        Command::Bernoulli {
            max_index,
            route,
            format,
        } => {
            let max_n = (*max_index / 2).max(1);
            let table = match route {
                BernoulliRouteArg::FromTangent => bernoulli_from_tangent_table(max_n),
                BernoulliRouteArg::Recurrence => bernoulli_recurrence(max_n, &rat(1, 6)),
                BernoulliRouteArg::All => {
                    let rec = bernoulli_recurrence(max_n, &rat(1, 6));
                    let tan = bernoulli_from_tangent_table(max_n);
                    if rec.values() != tan.values() {
                        // impossible on correct code; surface loudly
                        return Err(Error::domain(
                            "bernoulli",
                            "recurrence and tangent routes disagree",
                        ));
                    }
                    rec
                }
            };
            emit_sequence(out, &table, 'B', *format);
            Ok(0)
        }
        Command::Zeta { k, route, format } => {
            let k = *k as usize;
            let value = match route {
                RouteArg::All => zeta_validated(k)?,
                RouteArg::Tangent => ZetaEngine::new(k).via(ZetaRoute::Tangent, k)?,
                RouteArg::Cotangent => ZetaEngine::new(k).via(ZetaRoute::Cotangent, k)?,
                RouteArg::Recurrence => ZetaEngine::new(k).via(ZetaRoute::SelfRecurrence, k)?,
                RouteArg::Bernoulli => ZetaEngine::new(k).via(ZetaRoute::Bernoulli, k)?,
            };
            match format {
                Format::Exact => {
                    let _ = writeln!(out, "{}", value.exact_string());
                }
                Format::Decimal => {
                    let _ = writeln!(out, "{}", decimal15(value.to_f64()));
                }
                Format::Json => {
                    let _ = writeln!(out, "{}", value.to_json());
                }
            }
            Ok(0)
        }
        Command::PolygammaHalf { k, format } => {
            let k = *k as usize;
            let value = crate::zeta_engine::polygamma_half_exact(k)?;
            match format {
                Format::Exact => {
                    let _ = writeln!(out, "{}", value.exact_string());
                }
                Format::Decimal => {
                    let _ = writeln!(out, "{}", decimal15(value.to_f64()));
                }
                Format::Json => {
                    let _ = writeln!(
                        out,
                        "{}",
                        json!({
                            "k": k,
                            "coeff": format_rational(&value.coeff),
                            "pi_power": value.pi_power,
                        })
                    );
                }
            }
            Ok(0)
        }
        Command::Force { x, terms, format } => {
            let est = coulomb_force(*x, terms.unwrap_or_else(|| default_terms(1)))?;
            emit_estimate(out, &est, *format);
            Ok(0)
        }
        Command::Potential { x, terms, format } => {
            let est = regularized_potential(*x, terms.unwrap_or_else(|| default_terms(1)))?;
            emit_estimate(out, &est, *format);
            Ok(0)
        }
        Command::VerifySeries {
            max_k,
            terms,
            threshold,
            format,
        } => {
            let report = series_report(*max_k as usize, *terms)?;
            Ok(emit_report(out, &report, *threshold, *format))
        }
        Command::VerifyReflection {
            k,
            grid,
            terms,
            threshold,
            format,
        } => {
            let grid = parse_grid(grid)?;
            let k = *k as usize;
            let n = terms.unwrap_or_else(|| default_terms(k));
            let report = reflection_check_with_terms(k, &grid, n)?;
            Ok(emit_report(out, &report, *threshold, *format))
        }
        Command::VerifyPv {
            grid,
            threshold,
            format,
        } => {
            let grid = parse_grid(grid)?;
            let closed = reflection_closed_form_check(&grid)?;
            let routes = pv_consistency_check(&grid)?;
            let residuals = closed
                .residuals()
                .iter()
                .zip(routes.residuals())
                .map(|(a, b)| a.abs().max(b.abs()))
                .collect();
            let merged = GridReport::new(grid, residuals);
            Ok(emit_report(out, &merged, *threshold, *format))
        }
        Command::VerifyPlemelj {
            x,
            eps_list,
            sign,
            threshold,
            format,
        } => {
            let eps = eps_list.clone().unwrap_or_else(|| DEFAULT_EPS.to_vec());
            let report = plemelj_sweep(*x, &eps, (*sign).into())?;
            Ok(emit_sweep_report(out, &report, *threshold, *format))
        }
        Command::VerifyOde {
            grid,
            h,
            threshold,
            format,
        } => {
            let grid = parse_grid(grid)?;
            let report = ode_residual_with_step(&grid, *h)?;
            Ok(emit_report(out, &report, *threshold, *format))
        }
        Command::VerifyFubini {
            y,
            eps_list,
            threshold,
            format,
        } => {
            let eps = eps_list.clone().unwrap_or_else(|| DEFAULT_EPS.to_vec());
            let report = fubini_inner_check(*y, &eps)?;
            Ok(emit_sweep_report(out, &report, *threshold, *format))
        }
        Command::Table { max_k, format } => {
            emit_table(out, *max_k as usize, *format)?;
            Ok(0)
        }
    }
}

fn emit_table(out: &mut String, max_k: usize, format: TableFormat) -> Result<()> {
    let engine = ZetaEngine::new(max_k);
    let tangent = tangent_numbers(2 * max_k - 1);
    let bernoulli = bernoulli_from_tangent_table(max_k);
    let mut rows = Vec::new();
    for k in 1..=max_k {
        let zeta = engine.validated(k)?;
        rows.push((
            k,
            2 * k,
            zeta.exact_string(),
            decimal15(zeta.to_f64()),
            format_rational(tangent.get(2 * k - 1)?),
            format_rational(bernoulli.get(2 * k)?),
        ));
    }
    match format {
        TableFormat::Markdown => {
            let _ = writeln!(out, "| k | 2k | zeta | decimal | tangent | bernoulli |");
            let _ = writeln!(out, "|---|----|------|---------|---------|-----------|");
            for (k, two_k, zeta, dec, t, b) in &rows {
                let _ = writeln!(out, "| {k} | {two_k} | {zeta} | {dec} | {t} | {b} |");
            }
        }
        TableFormat::Csv => {
            let _ = writeln!(out, "k,2k,zeta,decimal,tangent,bernoulli");
            for (k, two_k, zeta, dec, t, b) in &rows {
                let _ = writeln!(out, "{k},{two_k},{zeta},{dec},{t},{b}");
            }
        }
        TableFormat::Json => {
            let array: Vec<_> = rows
                .iter()
                .map(|(k, two_k, zeta, dec, t, b)| {
                    json!({
                        "k": k,
                        "two_k": two_k,
                        "zeta": zeta,
                        "decimal": dec,
                        "tangent": t,
                        "bernoulli": b,
                    })
                })
                .collect();
            let _ = writeln!(out, "{}", serde_json::Value::Array(array));
        }
    }
    Ok(())
}
