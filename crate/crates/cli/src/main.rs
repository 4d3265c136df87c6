//! `immanant`: exact immanantal polynomials of graph matrices from the
//! command line.
//!
//! Exit codes: 0 success, 1 a checked property failed, 2 usage error,
//! 3 tractability cap exceeded.

mod commands;
mod input;
mod output;
mod search;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use immanant::Error;

use crate::output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "immanant",
    version,
    about = "Exact immanants and immanantal polynomials of graph matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text, global = true)]
    format: FormatArg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Text,
}

/// Graph, matrix and rational parameters shared by several subcommands.
#[derive(Debug, Clone, Args)]
pub struct MatrixArgs {
    /// `g6:<graph6>`, `file:<path>` or `family:<path|star|cycle|complete>:<n>` / `family:kbip:<p>,<q>`.
    #[arg(long)]
    pub graph: String,
    /// `D`, `A`, `L`, `Q`, `Aalpha[:a]` or `lincomb[:beta,gamma]`.
    #[arg(long, default_value = "L")]
    pub matrix: String,
    /// Parameter of a bare `Aalpha`, as `p/q`.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Coefficient of `D` for a bare `lincomb`, as `p/q`.
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    /// Coefficient of `A` for a bare `lincomb`, as `p/q`.
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<String>,
    /// `hook:k` or a part list such as `2,1,1`.
    #[arg(long)]
    pub partition: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Coefficients of `Imm_lambda(xI - M)`.
    Poly(MatrixArgs),
    /// One coefficient, with the closed form alongside for hook partitions.
    Coeff {
        #[command(flatten)]
        m: MatrixArgs,
        #[arg(long)]
        r: usize,
    },
    /// Irreducible character values.
    Char {
        /// `hook:k` (needs `--n`) or a part list.
        #[arg(long)]
        partition: String,
        /// Order, for hook specs.
        #[arg(long)]
        n: Option<usize>,
        /// Cycle type; every class when omitted.
        #[arg(long)]
        class: Option<String>,
    },
    /// Orientation counts by type.
    Census {
        #[arg(long)]
        graph: String,
        /// Subset size; every size when omitted.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Run verification suites against the brute-force oracles.
    Verify {
        /// Suite name; repeat for several, omit for all.
        #[arg(long)]
        suite: Vec<String>,
        /// Order bound replacing every suite's default.
        #[arg(long)]
        max_n: Option<usize>,
        /// Replaces the default parameter samples (needs `--gamma`).
        #[arg(long, allow_hyphen_values = true, requires = "gamma")]
        beta: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "beta")]
        gamma: Option<String>,
        /// Directory of graph6 atlas files.
        #[arg(long)]
        atlas: Option<std::path::PathBuf>,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        matrix_samples: usize,
        #[arg(long, default_value_t = 500)]
        graph_samples: usize,
    },
    /// Bucket regular graphs by hook polynomial and report cospectral pairs.
    Search {
        /// graph6 file, one graph per line.
        #[arg(long)]
        input: String,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        beta: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-1")]
        gamma: String,
        /// Keep only graphs of this order.
        #[arg(long)]
        n: Option<usize>,
        /// Keep only graphs of this degree.
        #[arg(long)]
        degree: Option<usize>,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Intractable { .. } => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
        FormatArg::Text => Format::Text,
    };
    let outcome = match cli.command {
        Command::Poly(m) => commands::poly(&m),
        Command::Coeff { m, r } => commands::coeff(&m, r),
        Command::Char {
            partition,
            n,
            class,
        } => commands::char(&partition, n, class.as_deref()),
        Command::Census { graph, r } => commands::census(&graph, r),
        Command::Verify {
            suite,
            max_n,
            beta,
            gamma,
            atlas,
            seed,
            matrix_samples,
            graph_samples,
        } => commands::verify(&commands::VerifyArgs {
            suites: suite,
            max_n,
            beta,
            gamma,
            atlas,
            seed,
            matrix_samples,
            graph_samples,
        }),
        Command::Search {
            input,
            k,
            beta,
            gamma,
            n,
            degree,
        } => commands::search(&input, k, &beta, &gamma, n, degree),
    };
    match outcome {
        Ok(out) => {
            if let Err(e) = out.write(format, &mut std::io::stdout().lock()) {
                eprintln!("immanant: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if out.failed { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("immanant: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
