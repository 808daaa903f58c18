//! `qsb`: verification harness and convenience CLI for the quaternionic
//! Segal-Bargmann library.
//!
//! Exit codes: 0 when the requested work succeeded (for `verify`, all suites
//! passed), 1 when `verify` ran to completion but at least one suite failed,
//! 2 for configuration or usage errors.

mod coeff_io;
mod config;
mod report;
mod suites;
mod table;

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use qsb_core::{bargmann_coeff, inverse_coeff, FockElement, HermiteExpansion, Quaternion};

use config::RunConfig;
use table::KernelRequest;

#[derive(Parser)]
#[command(
    name = "qsb",
    version,
    about = "Numerical verification for a quaternionic Segal-Bargmann transform"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suites and emit a pass/fail report
    Verify(VerifyArgs),
    /// Map Hermite coefficients to Fock coefficients or back
    Transform(TransformArgs),
    /// Print a closed-form-versus-quadrature table
    Table(TableArgs),
    /// Evaluate the transform kernel A(q; x) or the reproducing kernel K(p, q)
    Kernel(KernelArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    /// Gaussian weight parameter
    #[arg(long, default_value_t = 1.0)]
    nu: f64,

    /// Truncation degree for the round-trip suites
    #[arg(long = "trunc", default_value_t = 32)]
    truncation: usize,

    /// Gauss-Hermite node count for line integrals
    #[arg(long = "gh-nodes", default_value_t = 128)]
    gh_nodes: usize,

    /// Radial node count for slice integrals
    #[arg(long = "radial-nodes", default_value_t = 96)]
    radial_nodes: usize,

    /// Equispaced angle count for slice integrals
    #[arg(long = "angular", default_value_t = 256)]
    angular_count: usize,

    /// Seed for the suite RNG stream
    #[arg(long, default_value_t = 7)]
    seed: u64,

    /// Per-suite tolerance override, repeatable: --tol NAME=VALUE
    #[arg(long = "tol", value_name = "SUITE=VALUE")]
    tol: Vec<String>,

    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Write the report to this path instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    /// Hermite coefficients in, Fock coefficients out
    Forward,
    /// Fock coefficients in, Hermite coefficients out
    Inverse,
}

#[derive(Args)]
struct TransformArgs {
    #[arg(value_enum)]
    direction: Direction,

    /// CSV coefficient file with header n,w,x,y,z
    file: PathBuf,

    /// Gaussian weight parameter
    #[arg(long, default_value_t = 1.0)]
    nu: f64,

    /// Write the result to this path instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    MonomialNorms,
    HermiteNorms,
    KernelNorms,
}

#[derive(Args)]
struct TableArgs {
    #[arg(value_enum)]
    which: TableKind,

    /// Gaussian weight parameter
    #[arg(long, default_value_t = 1.0)]
    nu: f64,

    /// Largest basis index for the norm tables
    #[arg(long = "max-n", default_value_t = 8)]
    max_n: usize,

    /// Largest |q| for the kernel table
    #[arg(long = "max-q", default_value_t = 1.5)]
    max_q: f64,

    /// |q| increment for the kernel table
    #[arg(long = "q-step", default_value_t = 0.25)]
    q_step: f64,

    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Write the table to this path instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct KernelArgs {
    /// Evaluation point q as w,x,y,z
    #[arg(long, value_parser = parse_quat, allow_hyphen_values = true)]
    q: Quaternion,

    /// Second kernel argument p as w,x,y,z; selects K(p, q)
    #[arg(long, value_parser = parse_quat, allow_hyphen_values = true)]
    p: Option<Quaternion>,

    /// Real line argument; selects A(q; x)
    #[arg(long, allow_hyphen_values = true)]
    x: Option<f64>,

    /// Gaussian weight parameter
    #[arg(long, default_value_t = 1.0)]
    nu: f64,
}

fn parse_quat(s: &str) -> Result<Quaternion, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(format!("expected four components w,x,y,z, got {s:?}"));
    }
    let mut vals = [0.0f64; 4];
    for (slot, part) in vals.iter_mut().zip(&parts) {
        *slot = part
            .parse::<f64>()
            .map_err(|e| format!("bad component {part:?}: {e}"))?;
    }
    Ok(Quaternion::new(vals[0], vals[1], vals[2], vals[3]))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Transform(args) => cmd_transform(args).map(|()| true),
        Command::Table(args) => cmd_table(args).map(|()| true),
        Command::Kernel(args) => cmd_kernel(args).map(|()| true),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{text}");
            std::io::stdout().flush().context("flushing stdout")
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<bool> {
    let config = RunConfig {
        nu: args.nu,
        truncation: args.truncation,
        gh_nodes: args.gh_nodes,
        radial_nodes: args.radial_nodes,
        angular_count: args.angular_count,
        seed: args.seed,
        tolerance_overrides: config::parse_tolerance_overrides(&args.tol)?,
    };
    let report = suites::run_suites(&config)?;
    let text = match args.format {
        Format::Human => report.render_human(),
        Format::Json => report.render_json()?,
        Format::Csv => report.render_csv()?,
    };
    emit(&args.out, &text)?;
    Ok(report.all_passed())
}

fn cmd_transform(args: TransformArgs) -> Result<()> {
    let coeffs = coeff_io::read_coeffs(&args.file)?;
    let result = match args.direction {
        Direction::Forward => {
            let psi = HermiteExpansion::new(args.nu, coeffs)?;
            bargmann_coeff(&psi).coeffs().to_vec()
        }
        Direction::Inverse => {
            let f = FockElement::from_coeffs(args.nu, coeffs)?;
            inverse_coeff(&f).coeffs().to_vec()
        }
    };
    let mut buf = Vec::new();
    coeff_io::write_coeffs(&mut buf, &result)?;
    emit(&args.out, &String::from_utf8(buf).context("CSV output was not UTF-8")?)
}

fn cmd_table(args: TableArgs) -> Result<()> {
    let table = match args.which {
        TableKind::MonomialNorms => table::monomial_norm_table(args.nu, args.max_n)?,
        TableKind::HermiteNorms => table::hermite_norm_table(args.nu, args.max_n)?,
        TableKind::KernelNorms => table::kernel_norm_table(args.nu, args.max_q, args.q_step)?,
    };
    let text = match args.format {
        Format::Human => table::render_table_human(&table),
        Format::Json => table::render_table_json(&table)?,
        Format::Csv => table::render_table_csv(&table),
    };
    emit(&args.out, &text)
}

fn cmd_kernel(args: KernelArgs) -> Result<()> {
    let request = match (args.p, args.x) {
        (Some(p), None) => KernelRequest::ReproducingKernel { p, q: args.q },
        (None, Some(x)) => KernelRequest::TransformKernel { q: args.q, x },
        (Some(_), Some(_)) => bail!("pass either --p or --x, not both"),
        (None, None) => bail!("pass --p (for K(p, q)) or --x (for A(q; x))"),
    };
    let line = table::evaluate_kernel(&request, args.nu)?;
    emit(&None, &line)
}
