//! `uqrm`: build, verify, count, analyze and export quantum Reed-Muller
//! distillation codes and their layouts.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use unfolded_qrm_cli::commands::{self, CommandResult, Status};
use unfolded_qrm_cli::manifest::Manifest;

#[derive(Parser)]
#[command(name = "uqrm", version, about = "Quantum Reed-Muller distillation codes and layouts")]
struct Cli {
    /// Print the JSON result instead of the human summary.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a layout basis is free and spans its code's Z stabilizers.
    VerifyBasis {
        /// small-unfolded, qrm611, big-unfolded, rubik (qrm612) or qrm722.
        name: String,
    },
    /// Minimum weight and number of minimum-weight logicals (or stabilizers for k = 0).
    Census {
        /// Registry label.
        code: String,
    },
    /// Logical circuit of transversal T (or of S on one subcube).
    LogicalAction {
        /// Registry label.
        code: String,
        /// Subcube `base+<coords>` for S instead of transversal T.
        #[arg(long)]
        subcube: Option<String>,
    },
    /// Row/rank tables of QRM_4(1,1) before and after puncturing.
    AppendixTables,
    /// Write a basis drawn on a layout as JSON or SVG.
    Export {
        /// Registry label with a basis.
        code: String,
        /// planar-4, planar-6, rubik-6 or cube-7.
        layout: String,
        /// json or svg.
        format: String,
        /// Output path (default `<code>-<layout>.<format>`).
        path: Option<PathBuf>,
        /// Output path (alternative to the positional form).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Factory error analysis.
    Factory {
        #[command(subcommand)]
        command: FactoryCommand,
    },
    /// Build QRM_m(q,r), optionally punctured.
    Qrm {
        /// Cube dimension.
        #[arg(long)]
        m: usize,
        /// X-stabilizer degree.
        #[arg(long)]
        q: usize,
        /// Z logical degree.
        #[arg(long)]
        r: usize,
        /// Delete this qubit (k = 0 codes only).
        #[arg(long)]
        puncture: Option<usize>,
        /// Write the code's JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every acceptance check against the expected-values manifest.
    ReproducePaper,
}

#[derive(Subcommand)]
enum FactoryCommand {
    /// Exact rates summed over error supports up to weight `wmax`.
    Analyze {
        /// Registry label.
        #[arg(long)]
        code: String,
        /// Error probability per input T state.
        #[arg(long)]
        p: f64,
        /// Truncation weight.
        #[arg(long)]
        wmax: usize,
    },
    /// Monte Carlo estimate with Wilson intervals.
    Mc {
        /// Registry label.
        #[arg(long)]
        code: String,
        /// Error probability per input T state.
        #[arg(long)]
        p: f64,
        /// Number of samples.
        #[arg(long)]
        samples: u64,
        /// RNG seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The five factories with recomputed distances and prefactors.
    Catalog,
}

fn run(command: Command) -> anyhow::Result<CommandResult> {
    match command {
        Command::VerifyBasis { name } => commands::verify_basis(&name),
        Command::Census { code } => commands::census_cmd(&code),
        Command::LogicalAction { code, subcube } => commands::logical_action(&code, subcube.as_deref()),
        Command::AppendixTables => commands::appendix(&Manifest::load()?),
        Command::Export {
            code,
            layout,
            format,
            path,
            out,
        } => commands::export(&code, &layout, &format, out.or(path).as_deref()),
        Command::Factory { command } => match command {
            FactoryCommand::Analyze { code, p, wmax } => commands::factory_analyze(&code, p, wmax),
            FactoryCommand::Mc {
                code,
                p,
                samples,
                seed,
            } => commands::factory_mc(&code, p, samples, seed),
            FactoryCommand::Catalog => commands::factory_list(),
        },
        Command::Qrm {
            m,
            q,
            r,
            puncture,
            out,
        } => commands::qrm(m, q, r, puncture, out.as_deref()),
        Command::ReproducePaper => Ok(commands::reproduce(&Manifest::load()?)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command).unwrap_or_else(|e| CommandResult::error(&e));
    // Write errors (e.g. a closed pipe) are ignored; the exit code still
    // carries the status.
    if cli.json {
        match serde_json::to_string_pretty(&result) {
            Ok(text) => {
                let _ = writeln!(std::io::stdout(), "{text}");
            }
            Err(e) => {
                let _ = writeln!(std::io::stderr(), "error: {e}");
            }
        }
    } else if result.status == Status::Ok {
        let _ = writeln!(std::io::stdout(), "{}", result.human_summary);
    } else {
        let _ = writeln!(std::io::stderr(), "{}", result.human_summary);
    }
    match result.status {
        Status::Ok => ExitCode::SUCCESS,
        Status::Fail => ExitCode::FAILURE,
    }
}
