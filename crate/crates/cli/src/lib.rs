//! The `amm` command line: root extraction, Legendre symbols and a
//! counter-emitting benchmark.
//!
//! [`run`] takes the argument list and two writers and returns the process
//! exit code, so the binary and the tests drive the same code path.

use std::ffi::OsString;
use std::io::{self, Write};
use std::time::Instant;

use amm_core::field::{find_irreducible, parse_coeffs};
use amm_core::ntcore::{factor_out, is_probable_prime, legendre};
use amm_core::oracle::{brute_root_bounded, DEFAULT_ORACLE_BOUND};
use amm_core::{extract, rth_root, Element, Error, Field, Natural};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_RESIDUE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "amm", version, about = "r-th roots in finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Extract an r-th root of delta.
    Root(RootArgs),
    /// Print the Legendre symbol (a/p).
    Legendre(LegendreArgs),
    /// Time the general algorithm over a list of prime exponents, as CSV.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct FieldArgs {
    /// Odd prime characteristic.
    #[arg(long)]
    p: Natural,
    /// Extension degree.
    #[arg(long)]
    m: Option<usize>,
    /// Monic irreducible modulus "c0,c1,...,1", constant term first.
    #[arg(long)]
    modulus: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct RootArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    r: Natural,
    /// Element "c0,c1,...", constant term first; missing high coefficients are zero.
    #[arg(long)]
    delta: String,
    /// Print every r-th root, sorted.
    #[arg(long)]
    all: bool,
    /// Cross-check against exhaustive search.
    #[arg(long)]
    verify_oracle: bool,
    /// Print operation counters on the last line.
    #[arg(long)]
    counters: bool,
}

#[derive(Args, Debug)]
struct LegendreArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: BigInt,
    #[arg(long)]
    p: Natural,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Comma-separated prime divisors of q - 1.
    #[arg(long, value_delimiter = ',', required = true)]
    r_list: Vec<Natural>,
    #[arg(long, default_value_t = 100)]
    trials: u64,
}

#[derive(Debug)]
enum Failure {
    NotResidue,
    Invalid(String),
    Verify(String),
    Io(io::Error),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::NotResidue => EXIT_NOT_RESIDUE,
            Failure::Invalid(_) => EXIT_INVALID,
            Failure::Verify(_) | Failure::Io(_) => EXIT_VERIFY,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::NotResidue => Error::NotAResidue.to_string(),
            Failure::Invalid(msg) => format!("invalid input: {msg}"),
            Failure::Verify(msg) => format!("verification failed: {msg}"),
            Failure::Io(e) => format!("output error: {e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotAResidue => Failure::NotResidue,
            Error::InternalVerificationFailed
            | Error::NotInSubgroup
            | Error::TrialBudgetExceeded(_) => Failure::Verify(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parse `args` (including the program name) and execute the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                return EXIT_INVALID;
            }
            let _ = out.write_all(text.as_bytes());
            return EXIT_OK;
        }
    };
    let result = match cli.command {
        Command::Root(a) => cmd_root(a, out),
        Command::Legendre(a) => cmd_legendre(a, out),
        Command::Bench(a) => cmd_bench(a, out),
    };
    match result.and_then(|()| out.flush().map_err(Failure::from)) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "{}", f.message());
            f.code()
        }
    }
}

fn check_prime(p: &Natural) -> Outcome {
    if p.is_even() || !is_probable_prime(p) {
        return Err(Failure::Invalid(format!("{p} is not an odd prime")));
    }
    Ok(())
}

/// Build the field and report whether its modulus was generated here.
fn build_field(
    args: &FieldArgs,
    rng: &mut ChaCha8Rng,
) -> std::result::Result<(Field, bool), Failure> {
    check_prime(&args.p)?;
    match (&args.modulus, args.m) {
        (Some(text), m) => {
            let modulus: Vec<Natural> = parse_coeffs(text)?;
            if modulus.len() < 2 {
                return Err(Failure::Invalid("modulus must have degree >= 1".into()));
            }
            if let Some(m) = m.filter(|&m| m != modulus.len() - 1) {
                return Err(Failure::Invalid(format!(
                    "--m {m} disagrees with a modulus of degree {}",
                    modulus.len() - 1
                )));
            }
            Ok((Field::extension(args.p.clone(), modulus)?, false))
        }
        (None, None | Some(1)) => Ok((Field::prime(args.p.clone())?, false)),
        (None, Some(0)) => Err(Failure::Invalid("--m must be at least 1".into())),
        (None, Some(m)) => {
            let modulus = find_irreducible(&args.p, m, rng)?;
            Ok((Field::extension(args.p.clone(), modulus)?, true))
        }
    }
}

fn parse_delta(ctx: &Field, text: &str) -> std::result::Result<Element, Failure> {
    let mut coeffs: Vec<Natural> = parse_coeffs(text)?;
    if coeffs.len() < ctx.degree() {
        coeffs.resize(ctx.degree(), Natural::zero());
    }
    Ok(ctx.element(coeffs)?)
}

fn cmd_root(args: RootArgs, out: &mut dyn Write) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(args.field.seed);
    let (ctx, generated) = build_field(&args.field, &mut rng)?;
    let delta = parse_delta(&ctx, &args.delta)?;
    let oracle = if args.verify_oracle {
        Some(brute_root_bounded(
            &ctx,
            &delta,
            &args.r,
            DEFAULT_ORACLE_BOUND,
        )?)
    } else {
        None
    };

    let report = extract(&ctx, &delta, &args.r, &mut rng, args.all)?;
    let mut roots = report
        .all_roots
        .clone()
        .unwrap_or_else(|| vec![report.root.clone()]);
    roots.sort();
    for x in &roots {
        if ctx.pow(x, &args.r)? != delta {
            return Err(Failure::Verify(format!("{x} is not a root")));
        }
    }
    if let Some(expected) = &oracle {
        let agrees = if args.all {
            roots.iter().eq(expected.iter())
        } else {
            expected.contains(&report.root)
        };
        if !agrees {
            return Err(Failure::Verify(
                "result disagrees with exhaustive search".into(),
            ));
        }
    }

    if generated {
        writeln!(
            out,
            "modulus={}",
            amm_core::field::format_coeffs(ctx.modulus())
        )?;
    }
    if args.all {
        for x in &roots {
            writeln!(out, "{x}")?;
        }
    } else {
        writeln!(out, "{}", report.root)?;
    }
    if args.counters {
        writeln!(out, "{}", report.counters)?;
    }
    Ok(())
}

fn cmd_legendre(args: LegendreArgs, out: &mut dyn Write) -> Outcome {
    check_prime(&args.p)?;
    let p = BigInt::from(args.p.clone());
    let a = args
        .a
        .mod_floor(&p)
        .to_biguint()
        .expect("reduced value is nonnegative");
    writeln!(out, "{}", legendre(&a, &args.p)?)?;
    Ok(())
}

fn cmd_bench(args: BenchArgs, out: &mut dyn Write) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(args.field.seed);
    let (ctx, _) = build_field(&args.field, &mut rng)?;
    let q_minus_1 = ctx.order_minus_one();
    for r in &args.r_list {
        if !is_probable_prime(r) || !q_minus_1.is_multiple_of(r) {
            return Err(Failure::Invalid(format!(
                "{r} is not a prime divisor of q - 1"
            )));
        }
    }

    writeln!(out, "r,q,t,trials,loop,dlogmul,fieldmul,nanos")?;
    for r in &args.r_list {
        let (t, _) = factor_out(q_minus_1, r)?;
        for _ in 0..args.trials {
            let x = ctx.random_nonzero(&mut rng);
            let delta = ctx.pow(&x, r)?;
            let start = Instant::now();
            let report = rth_root(&ctx, &delta, r, &mut rng)?;
            let nanos = start.elapsed().as_nanos();
            let c = report.counters;
            writeln!(
                out,
                "{r},{q},{t},{},{},{},{},{nanos}",
                c.nonresidue_trials,
                c.loop_iterations,
                c.dlog_multiplications,
                c.field_multiplications,
                q = ctx.order(),
            )?;
        }
    }
    Ok(())
}
