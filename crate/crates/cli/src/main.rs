//! `codevocab`: batch front end for vocabulary experiments on Java corpora.
//!
//! Every command takes an experiment manifest (see [`manifest`]) and writes
//! into its output directory. Exit status is 0 on success, 1 for I/O errors
//! or missing inputs, 2 for configuration errors.

mod commands;
mod error;
mod manifest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use codevocab::ngram::Scenario;

use commands::Level;
use error::CliError;
use manifest::Experiment;

#[derive(Parser)]
#[command(name = "codevocab", version, about = "Source-code vocabulary experiments")]
struct Cli {
    /// Experiment manifest (TOML).
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    /// Overrides the manifest seed.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Overrides the manifest output directory.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScenarioArg {
    Static,
    Dynamic,
}

#[derive(Subcommand)]
enum Command {
    /// List, deduplicate and split the corpus projects.
    Ingest,
    /// Ingest, then write the tokenized corpus and `config.echo`.
    Preprocess,
    /// Learn BPE merges from the training split.
    BpeTrain {
        /// Number of merges (default: manifest `bpe_merges`).
        #[arg(long)]
        merges: Option<usize>,
    },
    /// Rewrite the corpus at subword granularity.
    BpeApply,
    /// Vocabulary, token and OOV statistics.
    Stats {
        #[arg(long, value_enum, default_value = "word")]
        level: Level,
        /// Leave marker words out of the vocabulary count.
        #[arg(long)]
        exclude_markers: bool,
    },
    /// Vocabulary growth curve over projects.
    Growth,
    /// Compare this experiment's statistics against other experiments.
    Compare {
        /// Manifests of the variant experiments.
        #[arg(long = "variant", required = true)]
        variants: Vec<PathBuf>,
        #[arg(long)]
        exclude_markers: bool,
    },
    /// Fit the n-gram model on the training split.
    LmTrain {
        #[arg(long, value_enum, default_value = "word")]
        level: Level,
    },
    /// Entropy and MRR of the n-gram model on the test split.
    LmEval {
        #[arg(long, value_enum, default_value = "word")]
        level: Level,
        #[arg(long, value_enum, default_value = "static")]
        scenario: ScenarioArg,
        /// Mix in the file-scoped cache.
        #[arg(long)]
        cache: bool,
    },
    /// Run every stage in order.
    Run,
}

fn execute(cli: Cli) -> Result<(), CliError> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| CliError::Config(format!("--jobs: {e}")))?;
    }
    let manifest = cli
        .manifest
        .ok_or_else(|| CliError::Config("--manifest is required".into()))?;
    let exp = Experiment::load(&manifest, cli.seed, cli.out.clone())?;
    match cli.command {
        Command::Ingest => commands::ingest(&exp).map(drop),
        Command::Preprocess => commands::preprocess(&exp),
        Command::BpeTrain { merges } => commands::bpe_train(&exp, merges).map(drop),
        Command::BpeApply => commands::bpe_apply(&exp),
        Command::Stats { level, exclude_markers } => {
            commands::stats(&exp, level, !exclude_markers).map(drop)
        }
        Command::Growth => commands::growth(&exp).map(drop),
        Command::Compare { variants, exclude_markers } => {
            let variants = variants
                .iter()
                .map(|m| Experiment::load(m, cli.seed, None))
                .collect::<Result<Vec<_>, _>>()?;
            commands::compare(&exp, &variants, !exclude_markers).map(drop)
        }
        Command::LmTrain { level } => commands::lm_train(&exp, level).map(drop),
        Command::LmEval { level, scenario, cache } => {
            let scenario = match scenario {
                ScenarioArg::Static => Scenario::Static,
                ScenarioArg::Dynamic => Scenario::Dynamic,
            };
            commands::lm_eval(&exp, level, scenario, cache).map(drop)
        }
        Command::Run => commands::run_all(&exp),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
