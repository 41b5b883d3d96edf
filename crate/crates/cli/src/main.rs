use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod output;

use output::{Format, Reply};

#[derive(Parser, Debug)]
#[command(name = "frobrig", version, about = "Groebner bases, resolutions and Frobenius rigidity checks over F_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = FormatArg::Json)]
    format: FormatArg,

    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

/// Caps on the computation. Only these may be set from the environment.
#[derive(Args, Debug, Clone)]
struct BudgetArgs {
    /// Largest internal degree considered by resolutions and syzygies.
    #[arg(long, global = true, env = "FROBRIG_MAX_DEGREE")]
    max_degree: Option<i32>,
    /// Largest homological step a resolution may reach.
    #[arg(long, global = true, env = "FROBRIG_MAX_STEPS")]
    max_steps: Option<usize>,
    /// Wall-clock limit in seconds.
    #[arg(long, global = true, env = "FROBRIG_TIME_LIMIT")]
    time_limit: Option<u64>,
}

/// An input file, `-` for standard input.
#[derive(Args, Debug, Clone)]
struct Input {
    /// Ring or module description file.
    file: PathBuf,
    /// Reorder the ring before computing: grevlex, grlex or lex.
    #[arg(long)]
    order: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Groebner basis of the defining ideal.
    Gb(Input),
    /// Normal form of a polynomial modulo the defining ideal.
    Nf {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        poly: String,
    },
    /// Colon ideal (J : f) in the polynomial ring.
    Colon {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        by: String,
    },
    /// Bracket power J^[q], q a power of the characteristic.
    Bracket {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        q: u64,
    },
    /// Krull dimension of the module (or of the ring when no module is given).
    Dim(Input),
    /// Length of the module.
    Length(Input),
    /// Depth of the module at the homogeneous maximal ideal.
    Depth(Input),
    /// Minimal free resolution with its differentials.
    Resolve {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 3)]
        steps: usize,
    },
    /// Graded Betti numbers; with --pd also decides finiteness of pd.
    Betti {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 3)]
        steps: usize,
        #[arg(long)]
        pd: bool,
    },
    /// The Frobenius functor F^n applied to the module.
    Frobenius {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// Tor_i(M, f^n R).
    Tor {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        i: usize,
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// Euler characteristics of M against R/x, checked for nonnegativity.
    Chi {
        #[command(flatten)]
        input: Input,
        /// Comma-separated sequence x.
        #[arg(long)]
        seq: String,
        /// Report only chi_i.
        #[arg(long)]
        i: Option<usize>,
    },
    /// Compare l(F^n(M)/xF^n(M)) with q^c chi(M, R/x).
    CheckProp43 {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        seq: String,
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// Run a shipped or file-defined scenario.
    Verify {
        /// Scenario id, or a path to a scenario file.
        scenario: String,
        #[arg(long)]
        p: Option<i64>,
        #[arg(long)]
        n: Option<i64>,
        /// Further parameter overrides, `name=value`.
        #[arg(long = "param")]
        params: Vec<String>,
    },
    /// List the shipped scenarios.
    Scenarios,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Text => Format::Text,
    };
    let name = command_name(&cli.command);
    let reply = match commands::dispatch(&cli.command, &cli.budget) {
        Ok(r) => r,
        Err(e) => Reply::from_error(name, e),
    };
    print!("{}", reply.render(format));
    ExitCode::from(reply.exit_code())
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Gb(_) => "gb",
        Command::Nf { .. } => "nf",
        Command::Colon { .. } => "colon",
        Command::Bracket { .. } => "bracket",
        Command::Dim(_) => "dim",
        Command::Length(_) => "length",
        Command::Depth(_) => "depth",
        Command::Resolve { .. } => "resolve",
        Command::Betti { .. } => "betti",
        Command::Frobenius { .. } => "frobenius",
        Command::Tor { .. } => "tor",
        Command::Chi { .. } => "chi",
        Command::CheckProp43 { .. } => "check-prop43",
        Command::Verify { .. } => "verify",
        Command::Scenarios => "scenarios",
    }
}

fn parse_params(list: &[String]) -> Result<BTreeMap<String, i64>, String> {
    let mut out = BTreeMap::new();
    for item in list {
        let (k, v) = item.split_once('=').ok_or_else(|| format!("expected name=value, got `{item}`"))?;
        let v: i64 = v.trim().parse().map_err(|_| format!("`{v}` is not an integer"))?;
        out.insert(k.trim().to_string(), v);
    }
    Ok(out)
}
