//! Thin command-line front end over the library: build module descriptors,
//! apply generators, and run verification suites with JSON reports.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use toroidal::formal::ExponentWindow;
use toroidal::harness::{cmd_apply, cmd_build, cmd_verify, RunConfig, SUITE_NAMES};
use toroidal::modules::ModuleDescriptor;

#[derive(Parser)]
#[command(name = "toroidal", about = "Exact toroidal Lie algebra module verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a module from a JSON descriptor and print a summary.
    Build {
        /// Path to the descriptor file.
        descriptor: PathBuf,
    },
    /// Apply one generator to a vector and print the sparse result.
    Apply {
        descriptor: PathBuf,
        /// Generator key, e.g. '{"g":"e","n0":1,"n":[1]}', '{"k0":[3]}', '{"ki":1}'.
        #[arg(long)]
        key: String,
        /// Basis label or JSON map {label: "scalar"}.
        #[arg(long)]
        vector: String,
    },
    /// Run a verification suite and emit a JSON report.
    Verify {
        /// One of the built-in suites.
        #[arg(long)]
        suite: String,
        /// Optional module descriptor for module-dependent suites.
        #[arg(long)]
        module: Option<PathBuf>,
        /// Symmetric window "lo..hi" applied to every variable.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Report destination; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_window(text: &str, rank: usize) -> Result<ExponentWindow, String> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| format!("window `{text}` must look like -4..4"))?;
    let lo: i64 = lo.trim().parse().map_err(|_| format!("bad window bound `{lo}`"))?;
    let hi: i64 = hi.trim().parse().map_err(|_| format!("bad window bound `{hi}`"))?;
    ExponentWindow::new((lo, hi), vec![(lo, hi); rank]).map_err(|e| e.to_string())
}

fn read_descriptor(path: &PathBuf) -> Result<ModuleDescriptor, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    ModuleDescriptor::from_json_str(&text).map_err(|e| e.to_string())
}

fn run() -> Result<i32, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Build { descriptor } => {
            let summary = cmd_build(&read_descriptor(&descriptor)?).map_err(|e| e.to_string())?;
            println!("{}", serde_json::to_string_pretty(&summary).expect("serializes"));
            Ok(0)
        }
        Command::Apply { descriptor, key, vector } => {
            match cmd_apply(&read_descriptor(&descriptor)?, &key, &vector) {
                Ok(out) => {
                    println!("{}", serde_json::to_string_pretty(&out).expect("serializes"));
                    Ok(0)
                }
                // a refused truncated-module operation is a check failure,
                // not a configuration error
                Err(e @ toroidal::Error::NotWithinValidWindow { .. }) => {
                    eprintln!("refused: {e}");
                    Ok(1)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Verify { suite, module, window, seed, out } => {
            if !SUITE_NAMES.contains(&suite.as_str()) {
                return Err(format!(
                    "unknown suite `{suite}`; available: {}",
                    SUITE_NAMES.join(", ")
                ));
            }
            let mut config = RunConfig::new(&suite);
            config.seed = seed;
            if let Some(path) = module {
                config.module = Some(read_descriptor(&path)?);
            }
            if let Some(text) = window {
                // the flag fixes a symmetric box with the suite's natural rank
                let rank = match suite.as_str() {
                    "bracket-jacobi" | "eq2.3-coefficients" => 2,
                    _ => 1,
                };
                config.window = Some(parse_window(&text, rank)?);
            }
            let (code, report) = cmd_verify(&config).map_err(|e| e.to_string())?;
            let text = report.to_json_string();
            match out {
                Some(path) => std::fs::write(&path, &text)
                    .map_err(|e| format!("{}: {e}", path.display()))?,
                None => println!("{text}"),
            }
            for check in &report.checks {
                eprintln!(
                    "{} {} ({} comparisons)",
                    if check.pass { "PASS" } else { "FAIL" },
                    check.identity,
                    check.comparisons
                );
            }
            Ok(code)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(0) => ExitCode::from(0),
        Ok(code) => ExitCode::from(code as u8),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
