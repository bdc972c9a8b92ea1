use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ambitoric::algebra::set_degree_cap;
use ambitoric::builder::FormType;
use ambitoric_cli::report::Format;
use ambitoric_cli::{
    run_calabi, run_check, run_classify, run_curvature, run_pd, run_table, CliError, Expectation, Outcome, TensorKind,
    Which, EXIT_PARSE,
};

/// Exact curvature checks for ambitoric and Calabi-type 4-manifolds.
///
/// Quartic coefficients are always given highest power first: `A: a0 a1 a2 a3 a4`
/// means A(z) = a0 z^4 + a1 z^3 + a2 z^2 + a3 z + a4. Quadratics `q0 q1 q2`
/// stand for q0 z^2 + 2 q1 z + q2.
///
/// Set AMBITORIC_DEGREE_CAP to change the polynomial degree cap (default 200).
///
/// Exit codes: 0 pass, 1 verdict failed, 2 bad input, 3 degenerate input,
/// 4 resource cap exceeded.
#[derive(Parser)]
#[command(name = "ambitoric", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a spec file and require the listed criteria to hold.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        expect: Vec<ExpectArg>,
        #[arg(long)]
        json: bool,
    },
    /// Report every criterion for a spec file.
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print the nonzero components of a curvature tensor.
    Curvature {
        file: PathBuf,
        #[arg(long, value_enum)]
        tensor: TensorArg,
        #[arg(long, value_enum, default_value = "plus")]
        metric: MetricArg,
    },
    /// Compare the coefficient tables with the tensor computation on random instances.
    Table {
        #[arg(long = "type")]
        form_type: FormType,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Where a failing instance is written.
        #[arg(long, default_value = ".")]
        witness_dir: PathBuf,
    },
    /// Plebanski-Demianski family: h,kappa,sigma,delta,gamma,epsilon,lambda.
    Pd {
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        #[arg(long)]
        json: bool,
    },
    /// Calabi-type metric with quartic V (v0,..,v4, z^4 coefficient first) and constant k.
    Calabi {
        #[arg(long = "V", allow_hyphen_values = true)]
        v: String,
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpectArg {
    Extremal,
    Bachflat,
    Csc,
    Einstein,
}

#[derive(Clone, Copy, ValueEnum)]
enum TensorArg {
    Ricci,
    Scalar,
    Weyl,
    Bach,
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricArg {
    Plus,
    Minus,
    Barycentric,
}

fn format(json: bool) -> Format {
    if json {
        Format::Json
    } else {
        Format::Text
    }
}

fn degree_cap_from_env() -> Result<(), CliError> {
    if let Ok(v) = std::env::var("AMBITORIC_DEGREE_CAP") {
        let cap: u32 = v
            .trim()
            .parse()
            .ok()
            .filter(|&c| c > 0)
            .ok_or_else(|| CliError { code: EXIT_PARSE, message: format!("invalid AMBITORIC_DEGREE_CAP `{v}`") })?;
        set_degree_cap(cap);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    degree_cap_from_env()?;
    match cli.command {
        Command::Check { file, expect, json } => {
            let expect: Vec<Expectation> = expect
                .into_iter()
                .map(|e| match e {
                    ExpectArg::Extremal => Expectation::Extremal,
                    ExpectArg::Bachflat => Expectation::BachFlat,
                    ExpectArg::Csc => Expectation::Csc,
                    ExpectArg::Einstein => Expectation::Einstein,
                })
                .collect();
            run_check(&file, &expect, format(json))
        }
        Command::Classify { file, json } => run_classify(&file, format(json)),
        Command::Curvature { file, tensor, metric } => {
            let kind = match tensor {
                TensorArg::Ricci => TensorKind::Ricci,
                TensorArg::Scalar => TensorKind::Scalar,
                TensorArg::Weyl => TensorKind::Weyl,
                TensorArg::Bach => TensorKind::Bach,
            };
            let which = match metric {
                MetricArg::Plus => Which::Plus,
                MetricArg::Minus => Which::Minus,
                MetricArg::Barycentric => Which::Barycentric,
            };
            run_curvature(&file, kind, which)
        }
        Command::Table { form_type, trials, seed, witness_dir } => run_table(form_type, trials, seed, &witness_dir),
        Command::Pd { params, json } => run_pd(&params, format(json)),
        Command::Calabi { v, k, json } => run_calabi(&v, &k, format(json)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(o) => {
            print!("{}", o.output);
            ExitCode::from(o.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
