//! Command-line front end: clone identification, complexity classification,
//! decision procedures, enumeration, gadget construction, lattice export,
//! and base conversion for circuit files.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod run;

use run::{CliError, Output};

#[derive(Parser)]
#[command(
    name = "postlab",
    about = "Analysis of Boolean circuits over restricted gate bases",
    version
)]
struct Cli {
    /// Print plain text instead of JSON.
    #[arg(long, global = true)]
    plain: bool,
    /// Exit with status 1 when a decision answer is "no".
    #[arg(long, global = true)]
    exit_status: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Name the clone generated by a circuit's base.
    CloneOf { file: PathBuf },
    /// Classify the complexity of a problem for the circuit's base.
    Classify {
        #[command(flatten)]
        problem: ProblemArg,
        file: PathBuf,
    },
    /// Decide a problem instance on concrete circuits.
    Solve {
        #[command(flatten)]
        problem: ProblemArg,
        /// Variable set for the frozen-variables problem.
        #[arg(long, value_delimiter = ',')]
        vars: Vec<String>,
        /// Assignment bits for the circuit-value problem.
        #[arg(long)]
        assign: Option<String>,
        /// Circuit file; equivalence and isomorphism take a second file.
        files: Vec<PathBuf>,
    },
    /// Enumerate satisfying assignments.
    Enum {
        /// Required output order: `lex` or `any`.
        #[arg(long, default_value = "any")]
        order: String,
        /// Append the delay accounting as JSON.
        #[arg(long)]
        stats: bool,
        file: PathBuf,
    },
    /// Build a reduction gadget from source instances.
    Gadget {
        /// One of: taut-to-eq, eliminate-constant, selfdual-eq,
        /// iso-restricted, satstar-chain, unsat-to-frozen, eq-to-frozen,
        /// satp, satstar-to-efv, audit, usat-const-elim.
        name: String,
        /// Source files (circuit `.bc` files, or DNF text for taut-to-eq).
        args: Vec<PathBuf>,
        /// Threshold parameter for the gadgets that take one.
        #[arg(short, long, default_value_t = 2)]
        k: usize,
        /// Constant replaced by eliminate-constant (0 or 1).
        #[arg(long, default_value_t = 1)]
        constant: u8,
        /// Skip the brute-force verification of the claim.
        #[arg(long)]
        no_verify: bool,
    },
    /// Print the lattice of clones as a DOT digraph.
    Lattice {
        /// Emit DOT (the only supported format).
        #[arg(long)]
        dot: bool,
        /// Truncation parameter for the separation-degree families.
        #[arg(long, default_value_t = 3)]
        max_n: usize,
    },
    /// Convert a circuit to an equivalent one over another base.
    Convert {
        /// Circuit file whose base supplies the target gate set.
        #[arg(long)]
        to: PathBuf,
        file: PathBuf,
    },
}

#[derive(Args)]
struct ProblemArg {
    /// One of: sat, sat-star, val, eq, iso, fv, efv, audit, usat, enum,
    /// enum-lex.
    #[arg(long)]
    problem: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let plain = cli.plain;
    let exit_status = cli.exit_status;
    match dispatch(cli) {
        Ok(output) => {
            print!("{}", output.render(plain));
            if exit_status && output.answer_is_no() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn dispatch(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::CloneOf { file } => run::clone_of(&read(&file)?),
        Command::Classify { problem, file } => run::classify(&problem.problem, &read(&file)?),
        Command::Solve {
            problem,
            vars,
            assign,
            files,
        } => {
            let texts = files
                .iter()
                .map(read)
                .collect::<Result<Vec<_>, _>>()?;
            run::solve(&problem.problem, &vars, assign.as_deref(), &texts)
        }
        Command::Enum { order, stats, file } => run::enumerate(&order, stats, &read(&file)?),
        Command::Gadget {
            name,
            args,
            k,
            constant,
            no_verify,
        } => {
            let texts = args
                .iter()
                .map(read)
                .collect::<Result<Vec<_>, _>>()?;
            run::gadget(&name, &texts, k, constant != 0, !no_verify)
        }
        Command::Lattice { dot: _, max_n } => run::lattice(max_n),
        Command::Convert { to, file } => run::convert(&read(&file)?, &read(&to)?),
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}
