use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lefschetz::wlp::Method;
use lefschetz_cli::run::{run_check, run_explain, run_gamma, run_oracle, CheckOptions};

/// Decide the weak Lefschetz property of graded modules over K[x,y].
///
/// Exit status: 0 when every checked module has the property, 1 when at
/// least one does not, 2 on any error.
#[derive(Parser)]
#[command(name = "wlp", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Algorithm,
    Determinant,
    Oracle,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Algorithm => Method::Algorithm,
            MethodArg::Determinant => Method::Determinant,
            MethodArg::Oracle => Method::Oracle,
        }
    }
}

#[derive(clap::Args, Clone, Copy)]
struct CommonFlags {
    /// Decision procedure to run; `determinant` fails on pairs outside its
    /// scope instead of switching silently
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
    /// Emit one JSON object per file instead of text
    #[arg(long)]
    json: bool,
    /// Include the witness linear form in the report
    #[arg(long)]
    witness: bool,
    /// Include the step-by-step decision trace
    #[arg(long)]
    trace: bool,
}

impl From<CommonFlags> for CheckOptions {
    fn from(f: CommonFlags) -> CheckOptions {
        CheckOptions {
            method: f.method.into(),
            json: f.json,
            witness: f.witness,
            trace: f.trace,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Verdict for each specification file
    Check {
        #[command(flatten)]
        flags: CommonFlags,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Full trace and witness for one file
    Explain {
        #[command(flatten)]
        flags: CommonFlags,
        file: PathBuf,
    },
    /// Verdict by the matrix-pencil method only
    Oracle {
        #[command(flatten)]
        flags: CommonFlags,
        file: PathBuf,
    },
    /// Print the pencil determinant p(gamma) for each square degree pair
    Gamma {
        #[command(flatten)]
        flags: CommonFlags,
        file: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, err, exit) = match cli.command {
        Command::Check { flags, files } => {
            let paths: Vec<&std::path::Path> = files.iter().map(PathBuf::as_path).collect();
            run_check(&paths, flags.into())
        }
        Command::Explain { flags, file } => run_explain(&file, flags.into()),
        Command::Oracle { flags, file } => run_oracle(&file, flags.into()),
        Command::Gamma { flags, file } => run_gamma(&file, flags.into()),
    };
    print!("{out}");
    eprint!("{err}");
    ExitCode::from(exit.code() as u8)
}
