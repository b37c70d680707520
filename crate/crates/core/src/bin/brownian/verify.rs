//! `verify` subcommand: the full invariant suite on seeded random instances.
//!
//! Each trial draws a random order in `1..=n_max` and a random valid
//! parameter set, then checks every library invariant: closed-form inverse
//! identities and structure, oracle agreement, both recurrences (with
//! operation counts and the deep-ratio identity), all four elimination
//! stages, and the float-conversion residual. Recurrence and elimination
//! breakdowns on degenerate draws are counted as skips, never as passes.
//! One extra unfiltered draw per trial checks that the determinant is zero
//! exactly when validation reports the parameters singular.

use crate::{resolve_seed, CliError, VariantArg};
use brownian_matrices::closed_form;
use brownian_matrices::elimination::{self, EliminationError};
use brownian_matrices::model::{random_params, BrownianParams, Variant};
use brownian_matrices::oracle;
use brownian_matrices::recursive::{
    self, paper_add_sub, paper_mul_div_bound, RecurrenceForm, RecursiveError,
};
use brownian_matrices::scalar::Rational;
use clap::Args;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use std::process::ExitCode;

#[derive(Args)]
pub struct VerifyArgs {
    /// Matrix family to verify.
    #[arg(long, value_enum)]
    variant: VariantArg,
    /// Orders are drawn uniformly from 1..=n-max.
    #[arg(long, default_value_t = 20)]
    n_max: usize,
    /// Number of random instances.
    #[arg(long, default_value_t = 50)]
    trials: u64,
    /// Seed for the whole run (BROWNIAN_SEED overrides).
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

struct Prop {
    name: &'static str,
    pass: u64,
    skip: u64,
    fail: u64,
    first_failure: Option<String>,
}

impl Prop {
    fn new(name: &'static str) -> Self {
        Prop {
            name,
            pass: 0,
            skip: 0,
            fail: 0,
            first_failure: None,
        }
    }

    fn pass(&mut self) {
        self.pass += 1;
    }

    fn skip(&mut self) {
        self.skip += 1;
    }

    fn fail(&mut self, trial: u64, n: usize, msg: impl Into<String>) {
        self.fail += 1;
        if self.first_failure.is_none() {
            self.first_failure = Some(format!("trial {trial} (n={n}): {}", msg.into()));
        }
    }

    fn check(&mut self, trial: u64, n: usize, ok: bool, msg: &str) {
        if ok {
            self.pass();
        } else {
            self.fail(trial, n, msg);
        }
    }

    fn report(&self) -> bool {
        let mut line = if self.fail == 0 {
            format!("PASS {}: {} passed", self.name, self.pass)
        } else {
            format!("FAIL {}: {} passed, {} failed", self.name, self.pass, self.fail)
        };
        if self.skip > 0 {
            line.push_str(&format!(", {} skipped", self.skip));
        }
        if let Some(first) = &self.first_failure {
            line.push_str(&format!(" — first failure: {first}"));
        }
        println!("{line}");
        self.fail == 0
    }
}

pub fn run(args: VerifyArgs) -> Result<ExitCode, CliError> {
    let seed = match resolve_seed(Some(args.seed))? {
        Some((s, src)) => {
            println!(
                "verify: variant={} n-max={} trials={} seed={s} (from {src})",
                Variant::from(args.variant),
                args.n_max,
                args.trials
            );
            s
        }
        None => unreachable!("--seed has a default"),
    };
    if args.n_max == 0 || args.trials == 0 {
        return Err(CliError::usage("--n-max and --trials must be positive"));
    }
    let variant = Variant::from(args.variant);

    let mut identity = Prop::new("closed inverse identity (A·X = X·A = I)");
    let mut hessenberg = Prop::new("inverse is lower Hessenberg");
    let mut entry = Prop::new("entry formula matches bulk inverse");
    let mut oracle_inv = Prop::new("closed inverse equals oracle inverse");
    let mut oracle_det = Prop::new("determinant equals oracle determinant");
    let mut det_iff = Prop::new("determinant is zero iff parameters invalid");
    let mut rec_i = Prop::new("i-form recurrence equals closed form");
    let mut rec_j = Prop::new("j-form recurrence equals closed form");
    let mut counts = Prop::new("operation counts match published figures");
    let mut deep_ratio = Prop::new("deep entries follow the step coefficient");
    let mut elim_stages = Prop::new("elimination stages 1-4 validate");
    let mut elim_final = Prop::new("elimination multiplier equals closed inverse");
    let mut elim_det = Prop::new("stage-3 diagonal product equals determinant");
    let mut float_residual = Prop::new("float conversion residual within conditioning bound");

    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    for trial in 0..args.trials {
        let n = rng.random_range(1..=args.n_max);
        let pseed: u64 = rng.random();
        let p = random_params(variant, n, pseed)?;
        let a_mat = p.build_matrix();

        let x = match closed_form::inverse(&p) {
            Ok(x) => x,
            Err(e) => {
                identity.fail(trial, n, format!("inverse refused valid parameters: {e}"));
                continue;
            }
        };

        let left = a_mat.mul(&x).expect("same order").is_identity();
        let right = x.mul(&a_mat).expect("same order").is_identity();
        identity.check(trial, n, left && right, "A·X or X·A is not the identity");

        hessenberg.check(trial, n, x.is_lower_hessenberg(), "nonzero above superdiagonal");

        let mut entries_ok = true;
        for _ in 0..(2 * n).min(12) {
            let i = rng.random_range(0..n);
            let j = rng.random_range(0..n);
            match closed_form::inverse_entry(&p, i, j) {
                Ok(v) if v == x[(i, j)] => {}
                other => {
                    entries_ok = false;
                    let _ = other;
                    break;
                }
            }
        }
        entry.check(trial, n, entries_ok, "inverse_entry disagrees with bulk inverse");

        match oracle::gauss_inverse(&a_mat) {
            Ok(g) => oracle_inv.check(trial, n, g == x, "oracle inverse differs"),
            Err(e) => oracle_inv.fail(trial, n, format!("oracle failed: {e}")),
        }
        let det = closed_form::determinant(&p);
        oracle_det.check(
            trial,
            n,
            det == oracle::gauss_det(&a_mat),
            "oracle determinant differs",
        );

        // Unfiltered draw: zero determinant must coincide with invalidity.
        {
            let draw_len = |rng: &mut ChaCha12Rng, len: usize| -> Vec<Rational> {
                (0..len)
                    .map(|_| Rational::from_int(rng.random_range(-3..=3)))
                    .collect()
            };
            let nn = rng.random_range(1..=args.n_max.min(8));
            let k = draw_len(&mut rng, nn);
            let a = draw_len(&mut rng, nn - 1);
            let b = draw_len(&mut rng, nn);
            let raw = BrownianParams::new(variant, k, a, b).expect("consistent lengths");
            let d = closed_form::determinant(&raw);
            let valid = raw.validate().is_valid();
            let consistent =
                d.is_zero() != valid && d == oracle::gauss_det(&raw.build_matrix());
            det_iff.check(trial, nn, consistent, "determinant/validity disagree");
        }

        let mut i_result = None;
        for (form, prop) in [
            (RecurrenceForm::RowI, &mut rec_i),
            (RecurrenceForm::ColJ, &mut rec_j),
        ] {
            match recursive::recursive_inverse(&p, form) {
                Ok((m, ops)) => {
                    prop.check(trial, n, m == x, "recurrence output differs from closed form");
                    let ok = if n == 1 {
                        ops.add_sub == 0 && ops.mul_div == 2
                    } else {
                        ops.add_sub == paper_add_sub(n) && ops.mul_div <= paper_mul_div_bound(n)
                    };
                    counts.check(
                        trial,
                        n,
                        ok,
                        &format!("counts {ops:?} off the published figures"),
                    );
                    if form == RecurrenceForm::RowI {
                        i_result = Some(m);
                    }
                }
                Err(RecursiveError::Breakdown(_)) => {
                    prop.skip();
                    counts.skip();
                }
                Err(e) => prop.fail(trial, n, format!("unexpected error: {e}")),
            }
        }

        // Deep-recurrence consistency: for i − j ≥ 2 and nonzero α_{i,j+1},
        // α_{i,j} / α_{i,j+1} equals the i-form step coefficient of column
        // j+1.
        match &i_result {
            Some(m) if n >= 4 => {
                let h = p.helper_seqs();
                let kf = |i: usize| p.k()[i - 1].clone();
                let mut ok = true;
                'outer: for i in 3..=n {
                    for j in 1..=i - 2 {
                        let upper = m[(i - 1, j)].clone();
                        if upper.is_zero() {
                            continue;
                        }
                        let mi = j + 1;
                        let num = h.d(mi - 2).clone() * kf(mi) * h.f(mi).clone();
                        let den = h.d(mi - 1).clone() * h.c(mi - 2).clone();
                        if m[(i - 1, j - 1)].clone() / upper != -(num / den) {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
                deep_ratio.check(trial, n, ok, "ratio differs from step coefficient");
            }
            _ => deep_ratio.skip(),
        }

        match elimination::eliminate(&p) {
            Ok(trace) => {
                let mut stage_err = None;
                for stage in 1..=4 {
                    if let Err(e) = elimination::validate_stage(&trace, stage) {
                        stage_err = Some(e.to_string());
                        break;
                    }
                }
                match stage_err {
                    None => elim_stages.pass(),
                    Some(e) => elim_stages.fail(trial, n, e),
                }
                elim_final.check(
                    trial,
                    n,
                    trace.stage(4).multiplier == x,
                    "final multiplier differs from closed inverse",
                );
                elim_det.check(
                    trial,
                    n,
                    trace.stage3_determinant() == det,
                    "stage-3 product differs from determinant",
                );
            }
            Err(EliminationError::Breakdown(_)) => {
                elim_stages.skip();
                elim_final.skip();
                elim_det.skip();
            }
            Err(e) => elim_stages.fail(trial, n, format!("unexpected error: {e}")),
        }

        {
            let af = a_mat.to_f64();
            let xf = x.to_f64();
            let max_abs = |m: &brownian_matrices::model::DenseMatrix<f64>| {
                m.as_slice().iter().fold(1.0f64, |acc, v| acc.max(v.abs()))
            };
            let bound = 64.0 * n as f64 * max_abs(&af) * max_abs(&xf) * f64::EPSILON;
            match oracle::residual(&af, &xf) {
                Ok(r) => float_residual.check(
                    trial,
                    n,
                    r <= bound,
                    &format!("residual {r:e} exceeds bound {bound:e}"),
                ),
                Err(e) => float_residual.fail(trial, n, e.to_string()),
            }
        }
    }

    let props = [
        &identity,
        &hessenberg,
        &entry,
        &oracle_inv,
        &oracle_det,
        &det_iff,
        &rec_i,
        &rec_j,
        &counts,
        &deep_ratio,
        &elim_stages,
        &elim_final,
        &elim_det,
        &float_residual,
    ];
    let ok = props.iter().map(|p| p.report() as usize).sum::<usize>();
    println!("result: {ok}/{} properties verified", props.len());
    if ok == props.len() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}
