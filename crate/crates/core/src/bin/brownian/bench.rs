//! `bench` subcommand: wall-clock comparison of the inversion methods.
//!
//! Each (method, n) cell inverts the same well-conditioned instance,
//! reporting the best time over a few repetitions together with the
//! max-norm residual ‖A·X − I‖ of the result. Cells run sequentially and
//! single-threaded so the timings are comparable. The float field is the
//! default; `--field exact` times arbitrary-precision arithmetic instead,
//! which is orders of magnitude slower at these sizes.

use crate::{CliError, FieldArg, MethodArg, VariantArg};
use brownian_matrices::closed_form;
use brownian_matrices::elimination;
use brownian_matrices::model::{well_conditioned_params, BrownianParams, DenseMatrix, Variant};
use brownian_matrices::oracle;
use brownian_matrices::recursive::{self, RecurrenceForm};
use brownian_matrices::scalar::Scalar;
use clap::Args;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Args)]
pub struct BenchArgs {
    /// Matrix orders to time.
    #[arg(long, value_delimiter = ',', default_values_t = [250usize, 500, 1000, 2000])]
    sizes: Vec<usize>,
    /// Methods to time.
    #[arg(
        long,
        value_enum,
        value_delimiter = ',',
        default_values_t = [MethodArg::Closed, MethodArg::RecursiveI, MethodArg::RecursiveJ, MethodArg::Oracle]
    )]
    methods: Vec<MethodArg>,
    /// Arithmetic field to run in.
    #[arg(long, value_enum, default_value = "f64")]
    field: FieldArg,
    /// Matrix family to draw the instance from.
    #[arg(long, value_enum, default_value = "a1")]
    variant: VariantArg,
    /// CSV report destination (columns: method,n,ms,residual).
    #[arg(long)]
    out: PathBuf,
}

/// Upper bound on repetitions per cell; cells also stop after ~250 ms spent.
const MAX_REPS: u32 = 5;
const REP_BUDGET_MS: f64 = 250.0;

fn run_method<S: Scalar>(
    method: MethodArg,
    p: &BrownianParams<S>,
) -> Result<DenseMatrix<S>, CliError> {
    Ok(match method {
        MethodArg::Closed => closed_form::inverse(p)?,
        MethodArg::RecursiveI => recursive::recursive_inverse(p, RecurrenceForm::RowI)?.0,
        MethodArg::RecursiveJ => recursive::recursive_inverse(p, RecurrenceForm::ColJ)?.0,
        MethodArg::Elimination => {
            let trace = elimination::eliminate(p)?;
            trace.stage(4).multiplier.clone()
        }
        MethodArg::Oracle => oracle::gauss_inverse(&p.build_matrix())?,
    })
}

/// Best-of-reps timing; returns (milliseconds, result as f64).
fn time_method<S: Scalar>(
    method: MethodArg,
    p: &BrownianParams<S>,
) -> Result<(f64, DenseMatrix<f64>), CliError> {
    let mut best_ms = f64::INFINITY;
    let mut result = None;
    let mut spent = 0.0;
    for _ in 0..MAX_REPS {
        let start = Instant::now();
        let x = run_method(method, p)?;
        let ms = start.elapsed().as_secs_f64() * 1e3;
        spent += ms;
        if ms < best_ms {
            best_ms = ms;
            result = Some(x);
        }
        if spent > REP_BUDGET_MS {
            break;
        }
    }
    Ok((best_ms, result.expect("at least one rep ran").to_f64()))
}

pub fn run(args: BenchArgs) -> Result<ExitCode, CliError> {
    if args.sizes.is_empty() || args.methods.is_empty() {
        return Err(CliError::usage("--sizes and --methods must be non-empty"));
    }
    let variant = Variant::from(args.variant);
    println!(
        "bench: variant={variant} field={} sizes={:?}",
        match args.field {
            FieldArg::Exact => "exact",
            FieldArg::F64 => "f64",
        },
        args.sizes
    );

    let mut csv = String::from("method,n,ms,residual\n");
    for &n in &args.sizes {
        if n == 0 {
            return Err(CliError::usage("--sizes entries must be positive"));
        }
        let (rows, a_f64) = match args.field {
            FieldArg::F64 => bench_order::<f64>(&args.methods, variant, n)?,
            FieldArg::Exact => {
                bench_order::<brownian_matrices::scalar::Rational>(&args.methods, variant, n)?
            }
        };
        for (method, ms, x) in rows {
            let residual = oracle::residual(&a_f64, &x)?;
            println!("{:<12} n={n:<6} {ms:>12.3} ms   residual {residual:.3e}", method.name());
            csv.push_str(&format!("{},{n},{ms:.6},{residual:.17e}\n", method.name()));
        }
    }
    fs::write(&args.out, csv).map_err(CliError::from)?;
    println!("wrote {}", args.out.display());
    Ok(ExitCode::SUCCESS)
}

type BenchRows = Vec<(MethodArg, f64, DenseMatrix<f64>)>;

fn bench_order<S: Scalar>(
    methods: &[MethodArg],
    variant: Variant,
    n: usize,
) -> Result<(BenchRows, DenseMatrix<f64>), CliError> {
    let p = well_conditioned_params::<S>(variant, n);
    let a_f64 = p.build_matrix().to_f64();
    let mut rows = Vec::new();
    for &method in methods {
        let (ms, x) = time_method(method, &p)?;
        rows.push((method, ms, x));
    }
    Ok((rows, a_f64))
}
