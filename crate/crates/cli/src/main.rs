use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ordlen_cli::commands::{ArgKind, CommandRegistry};
use ordlen_cli::run::{run_source, Options, RunError};
use ordlen_cli::sample::sample_script;

/// Ordinal lengths and topologies of monomial subquotients.
#[derive(Parser, Debug)]
#[command(name = "ordlen", version)]
struct Cli {
    /// One JSON object per command instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Write ω as `w`
    #[arg(long, global = true)]
    ascii: bool,

    /// Maximum number of ring variables
    #[arg(long, global = true, default_value_t = ordlen::monomial::DEFAULT_MAX_VARS)]
    max_vars: usize,

    /// Seed for `sample`
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Local multiplicity backend
    #[arg(long, global = true, default_value = "restriction")]
    backend: String,

    /// Cap on the exponent search in `eopen`
    #[arg(long, global = true, env = "ORDLEN_CAP", default_value_t = ordlen::invariants::DEFAULT_E_OPEN_CAP)]
    cap: u32,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run a script file (`-` reads standard input)
    Run { file: String },
    /// Evaluate commands against ideals given on the command line
    Eval {
        /// Comma-separated variable names
        #[arg(long)]
        ring: String,
        /// `gens` binds `I`; `NAME=gens` binds NAME
        #[arg(long = "ideal", required = true)]
        ideals: Vec<String>,
        /// Command lines such as `len I` (default `len I`)
        #[arg(long = "cmd")]
        cmds: Vec<String>,
    },
    /// Print a random script for `--seed`
    Sample,
    /// List the script commands
    Commands,
}

fn eval_script(ring: &str, ideals: &[String], cmds: &[String]) -> String {
    let mut s = format!("ring {ring}\n");
    for spec in ideals {
        match spec.split_once('=') {
            Some((name, gens)) => s += &format!("{} = {}\n", name.trim(), gens.trim()),
            None => s += &format!("I = {spec}\n"),
        }
    }
    if cmds.is_empty() {
        s += "len I\n";
    }
    let registry = CommandRegistry::builtin();
    for c in cmds {
        s += c;
        // a bare single-module command applies to `I`
        let bare = registry
            .get(c.trim())
            .is_some_and(|cmd| cmd.signature() == [ArgKind::Module]);
        if bare {
            s += " I";
        }
        s.push('\n');
    }
    s
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Options {
        json: cli.json,
        ascii: cli.ascii,
        max_vars: cli.max_vars,
        backend: cli.backend.clone(),
        cap: cli.cap,
    };
    let source = match &cli.command {
        Cmd::Run { file } => {
            let read = if file == "-" {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s).map(|_| s)
            } else {
                std::fs::read_to_string(file)
            };
            match read {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: cannot read {file}: {e}");
                    return ExitCode::from(2);
                }
            }
        }
        Cmd::Eval { ring, ideals, cmds } => eval_script(ring, ideals, cmds),
        Cmd::Sample => {
            print!("{}", sample_script(cli.seed));
            return ExitCode::SUCCESS;
        }
        Cmd::Commands => {
            for c in CommandRegistry::builtin().iter() {
                println!("{:<12} {}", c.name(), c.summary());
            }
            return ExitCode::SUCCESS;
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run_source(&source, &opts, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            report(&e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn report(e: &RunError) {
    eprintln!("error: {e}");
}
