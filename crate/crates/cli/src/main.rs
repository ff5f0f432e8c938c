use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod demo;

#[derive(Parser)]
#[command(name = "relalg", version, about = "Algebra of finite binary relations over words")]
struct Cli {
    /// Emit a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Vector,
    Ray,
    Line,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ReprKind {
    Roots,
    Cayley,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum DemoName {
    Weekdays,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a relation expression such as "s^3 o s^5".
    Eval {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        expr: String,
    },
    /// Order of a relation under composition.
    Order {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        relation: String,
    },
    /// Closure, group, abelian and cyclic analysis of generated relations.
    Analyze {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        generators: Vec<String>,
    },
    /// Finite-order obstruction to relation-as-vector representation.
    Certify {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Fit word and relation vectors to every relation in the spec.
    Fit {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check whether an embedding well-represents the spec's relations.
    Audit {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        embedding: PathBuf,
        #[arg(long, default_value_t = 1e-6)]
        tol_rep: f64,
        #[arg(long, default_value_t = 1e-6)]
        tol_distinct: f64,
        #[arg(long, value_enum, default_value = "vector")]
        mode: ModeArg,
    },
    /// Build and verify a multiplicative representation of a closure.
    Repr {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        generators: Vec<String>,
        #[arg(long, value_enum)]
        kind: ReprKind,
    },
    /// Build a log-conditional embedding from context counts.
    Psi {
        #[arg(long)]
        counts: PathBuf,
        #[arg(long, default_value_t = relalg::cond_dist::DEFAULT_ALPHA)]
        alpha: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// End-to-end walkthrough on a built-in example.
    Demo {
        #[arg(value_enum)]
        name: DemoName,
    },
}

/// What a subcommand produced: a report plus whether its check passed.
pub struct Outcome {
    pub json: serde_json::Value,
    pub text: String,
    pub passed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval { spec, expr } => commands::eval(&spec, &expr),
        Command::Order { spec, relation } => commands::order(&spec, &relation),
        Command::Analyze { spec, generators } => commands::analyze(&spec, &generators),
        Command::Certify { spec } => commands::certify(&spec),
        Command::Fit { spec, dim, tol, out } => commands::fit(&spec, dim, tol, &out),
        Command::Audit { spec, embedding, tol_rep, tol_distinct, mode } => {
            commands::audit(&spec, &embedding, tol_rep, tol_distinct, mode)
        }
        Command::Repr { spec, generators, kind } => commands::repr(&spec, &generators, kind),
        Command::Psi { counts, alpha, out } => commands::psi(&counts, alpha, &out),
        Command::Demo { name: DemoName::Weekdays } => demo::weekdays(),
    };
    match result {
        Ok(outcome) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&outcome.json).expect("report serializes") + "\n"
            } else {
                outcome.text
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
