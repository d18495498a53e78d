use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use snipforge::cli::{cmd_analyze, cmd_run, AnalyzeError, RunConfig, ValidityMode};
use snipforge::sampler::PoolMode;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "snipforge",
    version,
    about = "Mutate Java snippets with single line/statement edits and track performance-lint violation deltas"
)]
struct Args {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Clone, Copy, ValueEnum)]
enum ValidityArg {
    Proxy,
    External,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Run the full pipeline: ingest, analyze, sample, re-analyze, report.
    Run {
        /// Directory of .java snippet files
        #[arg(long)]
        corpus: PathBuf,
        /// Output directory for the report artifacts
        #[arg(long)]
        out: PathBuf,
        /// RNG seed (the SNIPFORGE_SEED env var overrides this flag)
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of line-edit draws
        #[arg(long = "n-line", default_value_t = 10_000)]
        n_line: usize,
        /// Number of statement-edit draws
        #[arg(long = "n-stmt", default_value_t = 10_000)]
        n_stmt: usize,
        /// Validity decision: the built-in proxy or an external compiler
        #[arg(long, value_enum, default_value = "proxy")]
        validity: ValidityArg,
        /// External compiler command template with a {file} placeholder
        #[arg(long = "compiler-cmd")]
        compiler_cmd: Option<String>,
        /// Worker threads for patch evaluation (0 = default)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Lint one file against the performance rule catalog.
    Analyze {
        /// File to analyze
        file: PathBuf,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match Args::parse().command {
        CliCommand::Run {
            corpus,
            out,
            seed,
            n_line,
            n_stmt,
            validity,
            compiler_cmd,
            jobs,
        } => {
            let seed = match seed_override() {
                Ok(Some(env_seed)) => env_seed,
                Ok(None) => seed,
                Err(e) => {
                    eprintln!("error: {e:#}");
                    return ExitCode::from(1);
                }
            };
            let config = RunConfig {
                corpus_dir: corpus,
                out_dir: out,
                seed,
                n_line,
                n_stmt,
                validity_mode: match validity {
                    ValidityArg::Proxy => ValidityMode::Proxy,
                    ValidityArg::External => ValidityMode::External,
                },
                external_compiler_cmd: compiler_cmd,
                jobs,
                pool: PoolMode::GlobalPool,
            };
            match cmd_run(&config) {
                Ok(output) => {
                    for path in &output.artifacts {
                        println!("wrote {}", path.display());
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
        CliCommand::Analyze { file } => match cmd_analyze(&file) {
            Ok(violations) if violations.is_empty() => ExitCode::SUCCESS,
            Ok(violations) => {
                for v in &violations {
                    println!("{}:{}: {}: {}", file.display(), v.line, v.rule, v.message);
                }
                // lint convention: findings exist
                ExitCode::from(2)
            }
            Err(e @ AnalyzeError::Parse { .. }) => {
                eprintln!("{e}");
                ExitCode::from(1)
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
    }
}

fn seed_override() -> anyhow::Result<Option<u64>> {
    match std::env::var("SNIPFORGE_SEED") {
        Ok(v) => {
            let seed = v
                .trim()
                .parse::<u64>()
                .with_context(|| format!("SNIPFORGE_SEED must be a u64, got `{v}`"))?;
            Ok(Some(seed))
        }
        Err(_) => Ok(None),
    }
}
