mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{CliError, Output};

#[derive(Parser, Debug)]
#[command(
    name = "corank2",
    version,
    about = "Exact classification toolkit for corank-2 symbols and type-(k,w) algebras"
)]
struct Cli {
    /// Render tables or indented JSON instead of compact JSON.
    #[arg(long, global = true)]
    pretty: bool,

    /// Write the report to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug)]
pub struct KArg {
    #[arg(long)]
    pub k: usize,
}

#[derive(Args, Debug)]
pub struct KwArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub w: usize,
}

#[derive(Args, Debug)]
pub struct SourceArgs {
    /// JSON input file.
    #[arg(long = "in", value_name = "FILE", conflicts_with = "builtin")]
    pub input: Option<PathBuf>,
    /// Built-in model: symb(K), m7_3_3, k3, k4, k6.
    #[arg(long, value_name = "NAME")]
    pub builtin: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// List the families of type (k, w) for every odd w.
    Classify(KArg),
    /// Solve one type (k, w) and print the family JSON.
    Family(KwArgs),
    /// Check an algebra (or a family file) for Jacobi and growth.
    Verify(SourceArgs),
    /// Kernel curve, Kronecker index and the rank test of a pencil.
    Pencil {
        #[arg(long = "in", value_name = "FILE", conflicts_with = "k")]
        input: Option<PathBuf>,
        /// Use the symbol pencil of this size instead of a file.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Decompose wedge powers of V_k, or V_k ⊗ V_w when --w is given.
    Sl2 {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        w: Option<usize>,
    },
    /// Invariants w, i and the L-flag of a frame algebra.
    Invariants {
        #[arg(long, requires = "w")]
        k: Option<usize>,
        #[arg(long, requires = "k")]
        w: Option<usize>,
        /// Family JSON file.
        #[arg(long = "in", value_name = "FILE", conflicts_with = "k")]
        input: Option<PathBuf>,
    },
    /// Print a built-in model as algebra JSON.
    Builtin {
        #[arg(long, value_name = "NAME")]
        builtin: String,
    },
    /// Compare the oracle with the parameter count over 3 <= k <= KMAX.
    Sweep {
        #[arg(long, default_value_t = 14)]
        kmax: usize,
    },
}

fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    match &cli.verb {
        Verb::Classify(a) => commands::classify(a.k),
        Verb::Family(a) => commands::family(a.k, a.w),
        Verb::Verify(s) => commands::verify(s.input.as_deref(), s.builtin.as_deref()),
        Verb::Pencil { input, k } => commands::pencil(input.as_deref(), *k),
        Verb::Sl2 { k, w } => commands::sl2(*k, *w),
        Verb::Invariants { k, w, input } => commands::invariants(*k, *w, input.as_deref()),
        Verb::Builtin { builtin } => commands::builtin(builtin),
        Verb::Sweep { kmax } => commands::sweep(*kmax),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, format!("{text}\n"))
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            writeln!(out, "{text}").map_err(|e| CliError::usage(e.to_string()))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = dispatch(&cli).and_then(|out| {
        emit(&cli, &out.render(cli.pretty))?;
        Ok(out.failed)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("corank2: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
