//! Command-line front end for the radica solver.

pub mod parse;
pub mod report;
pub mod selftest;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use radica_core::records::{solve_complex_rational, solve_rational_auto};
use radica_core::solvers::SolveError;
use radica_core::verifier::{root_residuals, verify_solution, Coefficients};
use radica_core::Mode;

pub use parse::{parse_polynomial, ParseError, PolynomialInput};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DEGREE: i32 = 3;
pub const EXIT_BACKEND: i32 = 4;
pub const EXIT_VERIFY: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "radica", version, about = "Closed-form roots of polynomials up to degree four")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve a univariate polynomial such as "x^3 - 6*x - 9".
    Solve(SolveArgs),
    /// Run the randomized invariant corpus (seed from RADICA_SEED if set).
    Selftest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FieldChoice {
    Exact,
    Complex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, clap::Args)]
struct SolveArgs {
    /// Polynomial expression.
    #[arg(allow_hyphen_values = true)]
    poly: String,
    #[arg(long, value_enum, default_value_t = FieldChoice::Exact)]
    field: FieldChoice,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Verify roots by substitution, factorization and a numeric oracle.
    #[arg(long)]
    verify: bool,
    /// Print the radical expression of every root.
    #[arg(long)]
    radical: bool,
    /// Use the restricted formulas and reject inputs outside their hypotheses.
    #[arg(long = "paper-strict")]
    strict: bool,
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_PARSE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match cli.command {
        Command::Solve(args) => solve(&args, out, err),
        Command::Selftest => selftest::run_selftest(selftest::seed_from_env(), out),
    }
}

fn solve(args: &SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let input = match parse_polynomial(&args.poly) {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            let _ = writeln!(err, "  {}", args.poly);
            let _ = writeln!(err, "  {}^", " ".repeat(e.offset()));
            return EXIT_PARSE;
        }
    };
    let degree = match input.degree() {
        Some(d @ 1..=4) => d,
        Some(d) => {
            let _ = writeln!(err, "error: unsupported degree {d} (supported: 1 to 4)");
            return EXIT_DEGREE;
        }
        None => {
            let _ = writeln!(err, "error: the zero polynomial has no finite root set");
            return EXIT_DEGREE;
        }
    };
    let coeffs = input.leading_first();
    let mode = if args.strict { Mode::Strict } else { Mode::Total };
    let force_complex = args.field == FieldChoice::Complex || input.has_decimal;
    let result = if force_complex {
        solve_complex_rational(&coeffs, mode)
    } else {
        solve_rational_auto(&coeffs, mode)
    };
    let mut solution = match result {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return match e {
                SolveError::UnsupportedDegree(_) => EXIT_DEGREE,
                _ => EXIT_BACKEND,
            };
        }
    };
    if input.has_decimal && args.field == FieldChoice::Exact {
        solution
            .notes
            .push("decimal coefficients select the complex backend".to_string());
    }
    let residuals = root_residuals(Coefficients::Rational(&coeffs), &solution);
    let verification = args
        .verify
        .then(|| verify_solution(Coefficients::Rational(&coeffs), &solution));

    let rendered = report::Rendered::new(&input, degree, &solution, &residuals, verification.as_ref());
    let written = match args.format {
        Format::Json => writeln!(out, "{}", rendered.to_json()),
        Format::Text => write!(out, "{}", rendered.to_text(args.radical)),
    };
    if written.is_err() {
        return EXIT_BACKEND;
    }
    if verification.is_none() {
        for note in &solution.notes {
            let _ = writeln!(err, "note: {note}");
        }
    }
    match verification {
        Some(v) if !v.pass => {
            let _ = writeln!(err, "verification failed");
            EXIT_VERIFY
        }
        _ => EXIT_OK,
    }
}
