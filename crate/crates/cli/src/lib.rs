//! Command-line front end: integration and differentiation of matrix forms,
//! coefficient-scheme tables, the scheme audit, Fibonacci values and the
//! lookup-versus-oracle benchmark.

pub mod commands;
pub mod error;
pub mod json;
pub mod matrix_file;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use commands::Method;
pub use error::CliError;
pub use matrix_file::MatrixFile;

#[derive(Debug, Parser)]
#[command(
    name = "matint",
    version,
    about = "Exact integration of linear and quadratic matrix forms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Linear,
    Quadratic,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the k-th Fibonacci number (F(0) = 0, F(1) = F(2) = 1).
    Fib {
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    /// Integrate y = Ax element-wise, or xᵀAx, with respect to x_i.
    Integrate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long = "var")]
        var: usize,
        #[arg(long)]
        matrix: PathBuf,
        /// `oracle` or a scheme id such as `lin3` or `quad2:printed`.
        #[arg(long, default_value = "oracle")]
        method: String,
        #[arg(long)]
        json: bool,
    },
    /// Jacobian of y = Ax, or gradient of xᵀAx.
    Differentiate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Coefficient of every cell of one scheme branch next to the delta rule.
    SchemeTable {
        #[arg(long)]
        scheme: String,
        #[arg(long = "var")]
        var: usize,
        #[arg(long)]
        json: bool,
    },
    /// Audit schemes against the calculus oracle (all schemes when omitted).
    Verify {
        #[arg(long)]
        scheme: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Time coefficient lookup against the generic oracle on seeded matrices.
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
    },
}

/// Parses `args` (including the program name) and runs the command, writing
/// normal output to `out`.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> Result<(), CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            write!(out, "{e}")?;
            return Ok(());
        }
        Err(e) => return Err(CliError::Usage(e.render().to_string().trim_end().to_string())),
    };
    match cli.command {
        Command::Fib { k } => commands::cmd_fib(k, out),
        Command::Integrate {
            kind,
            var,
            matrix,
            method,
            json,
        } => {
            let method: Method = method.parse()?;
            let m = MatrixFile::load(&matrix)?.to_matrix()?;
            commands::cmd_integrate(kind, var, &m, method, json, out)
        }
        Command::Differentiate { kind, matrix, json } => {
            let m = MatrixFile::load(&matrix)?.to_matrix()?;
            commands::cmd_differentiate(kind, &m, json, out)
        }
        Command::SchemeTable { scheme, var, json } => commands::cmd_scheme_table(&scheme, var, json, out),
        Command::Verify { scheme, json } => commands::cmd_verify(scheme.as_deref(), json, out),
        Command::Bench { n, count, seed } => commands::cmd_bench(n, count, seed, out),
    }
}
