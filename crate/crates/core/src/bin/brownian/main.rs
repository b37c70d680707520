//! Command-line surface: generate test matrices, invert them by any path,
//! compute determinants, verify the library's invariants on random
//! instances, and benchmark the paths against the dense oracle.
//!
//! Exit codes: 0 success / all verified; 1 property or computation failure
//! (singular input, unrecovered breakdown, verification or match failure);
//! 2 usage and file/parse errors. The environment variable `BROWNIAN_SEED`
//! overrides `--seed` wherever a seed is accepted.

mod bench;
mod verify;

use brownian_matrices::closed_form::{self, SingularInput};
use brownian_matrices::elimination::{self, EliminationError};
use brownian_matrices::io::{self, IoError, MatrixFormat};
use brownian_matrices::model::{random_params, BrownianParams, DenseMatrix, ModelError, Variant};
use brownian_matrices::oracle::{self, OracleError};
use brownian_matrices::recursive::{self, RecurrenceForm, RecursiveError};
use brownian_matrices::scalar::{format_f64_full, FieldTag, Rational, Scalar};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "brownian",
    version,
    about = "Brownian-type test matrices with closed-form inverses"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a parameter set and write its matrix (or the parameters).
    Gen(GenArgs),
    /// Invert the matrix described by a parameter file.
    Invert(InvertArgs),
    /// Print the determinant, optionally cross-checked against the oracle.
    Det(DetArgs),
    /// Run the invariant suite on seeded random instances.
    Verify(verify::VerifyArgs),
    /// Time inversion paths on a well-conditioned family.
    Bench(bench::BenchArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    A1,
    A2,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::A1 => Variant::A1,
            VariantArg::A2 => Variant::A2,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Closed,
    RecursiveI,
    RecursiveJ,
    Elimination,
    Oracle,
}

impl MethodArg {
    pub fn name(self) -> &'static str {
        match self {
            MethodArg::Closed => "closed",
            MethodArg::RecursiveI => "recursive-i",
            MethodArg::RecursiveJ => "recursive-j",
            MethodArg::Elimination => "elimination",
            MethodArg::Oracle => "oracle",
        }
    }
}

impl std::fmt::Display for MethodArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    Exact,
    F64,
}

#[derive(Copy, Clone, ValueEnum)]
enum GenFormat {
    Mm,
    Csv,
    Json,
}

#[derive(Args)]
struct GenArgs {
    /// Matrix family (required unless --params supplies it).
    #[arg(long)]
    variant: Option<VariantArg>,
    /// Order (required unless --params supplies it).
    #[arg(long)]
    n: Option<usize>,
    /// Read the parameter set from a JSON file instead of drawing one.
    #[arg(long, conflicts_with = "seed")]
    params: Option<PathBuf>,
    /// Seed for the random parameter draw.
    #[arg(long)]
    seed: Option<u64>,
    /// Output path.
    #[arg(long)]
    out: PathBuf,
    /// mm / csv write the matrix; json writes the parameter set.
    #[arg(long, value_enum)]
    format: GenFormat,
}

#[derive(Args)]
struct InvertArgs {
    /// Parameter JSON file.
    #[arg(long)]
    params: PathBuf,
    #[arg(long, value_enum)]
    method: MethodArg,
    /// Scalar field to compute in.
    #[arg(long, value_enum, default_value = "exact")]
    field: FieldArg,
    /// Report the recurrence operation counts (recursive methods only).
    #[arg(long)]
    count_ops: bool,
    /// Write the inverse here (.csv for CSV, anything else Matrix Market)
    /// instead of printing it.
    #[arg(long)]
    out: Option<PathBuf>,
    /// With --method elimination: dump all stage matrices into this
    /// directory as stage{1..4}_{working,multiplier}.mtx.
    #[arg(long)]
    dump_trace: Option<PathBuf>,
}

#[derive(Args)]
struct DetArgs {
    /// Parameter JSON file.
    #[arg(long)]
    params: PathBuf,
    /// Also compute the Gaussian-elimination determinant and compare.
    #[arg(long)]
    oracle: bool,
}

/// Error carrying its process exit code (1 = computation/property failure,
/// 2 = usage/parse/file failure).
pub struct CliError {
    pub code: u8,
    pub msg: String,
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError {
            code: 2,
            msg: msg.into(),
        }
    }

    pub fn failure(msg: impl Into<String>) -> Self {
        CliError {
            code: 1,
            msg: msg.into(),
        }
    }
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        CliError::usage(e.to_string())
    }
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        CliError::usage(e.to_string())
    }
}

impl From<SingularInput> for CliError {
    fn from(e: SingularInput) -> Self {
        CliError::failure(e.to_string())
    }
}

impl From<RecursiveError> for CliError {
    fn from(e: RecursiveError) -> Self {
        CliError::failure(e.to_string())
    }
}

impl From<EliminationError> for CliError {
    fn from(e: EliminationError) -> Self {
        CliError::failure(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::failure(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::usage(format!("IoError: {e}"))
    }
}

/// Resolves the effective seed: `BROWNIAN_SEED` beats `--seed`.
pub fn resolve_seed(flag: Option<u64>) -> Result<Option<(u64, &'static str)>, CliError> {
    match std::env::var("BROWNIAN_SEED") {
        Ok(text) => {
            let seed: u64 = text.trim().parse().map_err(|_| {
                CliError::usage(format!("BROWNIAN_SEED is not a valid u64: {text:?}"))
            })?;
            Ok(Some((seed, "BROWNIAN_SEED")))
        }
        Err(_) => Ok(flag.map(|s| (s, "--seed"))),
    }
}

fn fmt_scalar<S: Scalar>(x: &S) -> String {
    match S::FIELD {
        FieldTag::Exact => x.to_string(),
        FieldTag::Float64 => format_f64_full(x.to_f64()),
    }
}

/// Nested-list rendering, e.g. `[[2,-1,0],[-1,2,-1],[0,-1,1]]`.
fn matrix_text<S: Scalar>(m: &DenseMatrix<S>) -> String {
    let n = m.order();
    let rows: Vec<String> = (0..n)
        .map(|i| {
            let cells: Vec<String> = (0..n).map(|j| fmt_scalar(&m[(i, j)])).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

fn format_for_path(path: &Path) -> MatrixFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("csv") => MatrixFormat::Csv,
        _ => MatrixFormat::MatrixMarket,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.cmd {
        Cmd::Gen(args) => gen_cmd(args),
        Cmd::Invert(args) => invert_cmd(args),
        Cmd::Det(args) => det_cmd(args),
        Cmd::Verify(args) => verify::run(args),
        Cmd::Bench(args) => bench::run(args),
    }
}

fn gen_cmd(args: GenArgs) -> Result<ExitCode, CliError> {
    let seed = resolve_seed(args.seed)?;
    let p: BrownianParams<Rational> = match &args.params {
        Some(path) => {
            let p = io::read_params(path)?;
            if let Some(v) = args.variant {
                if Variant::from(v) != p.variant() {
                    return Err(CliError::usage(format!(
                        "--variant {} contradicts the parameter file ({})",
                        Variant::from(v),
                        p.variant()
                    )));
                }
            }
            if let Some(n) = args.n {
                if n != p.order() {
                    return Err(CliError::usage(format!(
                        "--n {n} contradicts the parameter file (order {})",
                        p.order()
                    )));
                }
            }
            p
        }
        None => {
            let variant = args
                .variant
                .ok_or_else(|| CliError::usage("--variant is required without --params"))?;
            let n = args
                .n
                .ok_or_else(|| CliError::usage("--n is required without --params"))?;
            let (seed, source) = seed.ok_or_else(|| {
                CliError::usage("either --params or a seed (--seed / BROWNIAN_SEED) is required")
            })?;
            println!("seed: {seed} (from {source})");
            random_params(variant.into(), n, seed)?
        }
    };
    println!("variant: {}", p.variant());
    println!("n: {}", p.order());
    let report = p.validate();
    if !report.is_valid() {
        eprintln!("warning: parameters are singular: {}", report.reasons());
    }

    let written = match args.format {
        GenFormat::Json => {
            io::write_params(&p, &args.out)?;
            vec![args.out.clone()]
        }
        GenFormat::Mm => io::write_matrix(&p.build_matrix(), &args.out, MatrixFormat::MatrixMarket)?,
        GenFormat::Csv => io::write_matrix(&p.build_matrix(), &args.out, MatrixFormat::Csv)?,
    };
    for path in written {
        println!("wrote {}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn invert_cmd(args: InvertArgs) -> Result<ExitCode, CliError> {
    if args.count_ops
        && !matches!(args.method, MethodArg::RecursiveI | MethodArg::RecursiveJ)
    {
        return Err(CliError::usage(
            "--count-ops only applies to --method recursive-i / recursive-j",
        ));
    }
    if args.dump_trace.is_some() && args.method != MethodArg::Elimination {
        return Err(CliError::usage(
            "--dump-trace only applies to --method elimination",
        ));
    }
    let p = io::read_params(&args.params)?;
    match args.field {
        FieldArg::Exact => invert_in_field(&p, &args),
        FieldArg::F64 => invert_in_field(&p.to_f64(), &args),
    }
}

fn invert_in_field<S: Scalar>(
    p: &BrownianParams<S>,
    args: &InvertArgs,
) -> Result<ExitCode, CliError> {
    let inverse = match args.method {
        MethodArg::Closed => closed_form::inverse(p)?,
        MethodArg::RecursiveI | MethodArg::RecursiveJ => {
            let form = if args.method == MethodArg::RecursiveI {
                RecurrenceForm::RowI
            } else {
                RecurrenceForm::ColJ
            };
            match recursive::recursive_inverse(p, form) {
                Ok((m, ops)) => {
                    if args.count_ops {
                        println!("mul_div = {}", ops.mul_div);
                        println!("add_sub = {}", ops.add_sub);
                    }
                    m
                }
                Err(RecursiveError::Breakdown(bd)) => {
                    eprintln!("warning: {bd}; falling back to closed form");
                    closed_form::inverse(p)?
                }
                Err(other) => return Err(other.into()),
            }
        }
        MethodArg::Elimination => {
            let trace = elimination::eliminate(p)?;
            if let Some(dir) = &args.dump_trace {
                for path in io::dump_trace(&trace, dir)? {
                    println!("wrote {}", path.display());
                }
            }
            trace.stage(4).multiplier.clone()
        }
        MethodArg::Oracle => oracle::gauss_inverse(&p.build_matrix())?,
    };

    match &args.out {
        Some(path) => {
            for written in io::write_matrix(&inverse, path, format_for_path(path))? {
                println!("wrote {}", written.display());
            }
        }
        None => println!("{}", matrix_text(&inverse)),
    }
    Ok(ExitCode::SUCCESS)
}

fn det_cmd(args: DetArgs) -> Result<ExitCode, CliError> {
    let p = io::read_params(&args.params)?;
    let formula = closed_form::determinant(&p);
    if args.oracle {
        let reference = oracle::gauss_det(&p.build_matrix());
        let matches = formula == reference;
        println!("formula: {formula}, oracle: {reference}, match: {matches}");
        if !matches {
            return Ok(ExitCode::from(1));
        }
    } else {
        println!("formula: {formula}");
    }
    Ok(ExitCode::SUCCESS)
}
