use std::path::PathBuf;

use clap::{Parser, Subcommand};

mod commands;
mod config;
mod error;
mod formats;
mod io_util;
mod manifest;
mod pipeline;

use config::Config;

/// Adapts a sentiment lexicon from its home domain to a new target domain
/// and prepares datasets for transfer learning, one pipeline stage per
/// subcommand. Every stage writes its outputs plus a manifest recording
/// input hashes and effective settings into --out-dir.
#[derive(Parser)]
#[command(name = "lexshift", version)]
struct Cli {
    /// Key=value configuration file; paths inside resolve relative to it.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Override one configuration key (repeatable); paths resolve
    /// relative to the working directory.
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    set: Vec<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank content words of the target corpus and cut the working vocabulary
    Vocab {
        #[arg(long, value_name = "DIR")]
        out_dir: PathBuf,
    },
    /// Pick the domain-similarity threshold from judged verb pairs
    Calibrate {
        #[arg(long, value_name = "DIR")]
        out_dir: PathBuf,
    },
    /// Compute the evidence profile for every vocabulary word
    Profile {
        #[arg(long, value_name = "DIR")]
        out_dir: PathBuf,
    },
    /// Run the adaptation rules over the seed partition
    Adapt {
        #[arg(long, value_name = "DIR")]
        out_dir: PathBuf,
    },
    /// Build the expert-review worklist from an adapted lexicon
    Worklist {
        /// Adapted lexicon written by `adapt`
        #[arg(long, value_name = "FILE")]
        adapted: PathBuf,
        #[arg(long, value_name = "DIR")]
        out_dir: PathBuf,
    },
    /// Validate a completed worklist and fix the expert labels
    Ingest {
        /// The blank worklist written by `worklist`
        #[arg(long, value_name = "FILE")]
        worklist: PathBuf,
        /// The same file with the label column filled in
        #[arg(long, value_name = "FILE")]
        annotations: PathBuf,
        #[arg(long, value_name = "DIR")]
        out_dir: PathBuf,
    },
    /// Diff expert labels against the seed classes
    Deltas {
        #[arg(long, value_name = "FILE")]
        worklist: PathBuf,
        /// Validated labels written by `ingest`
        #[arg(long, value_name = "FILE")]
        annotated: PathBuf,
        #[arg(long, value_name = "DIR")]
        out_dir: PathBuf,
    },
    /// Collapse five-class dataset labels to negative/neutral/positive
    MapLabels {
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        /// Treat tokens as word_TAG pairs
        #[arg(long)]
        tagged: bool,
        #[arg(long, value_name = "DIR")]
        out_dir: PathBuf,
    },
    /// Drop sentences whose label contradicts a deviated word they contain
    Filter {
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        /// Confirmed deviations written by `deltas`
        #[arg(long, value_name = "FILE")]
        deviations: PathBuf,
        /// Treat tokens as word_TAG pairs
        #[arg(long)]
        tagged: bool,
        #[arg(long, value_name = "DIR")]
        out_dir: PathBuf,
    },
    /// Pull example sentences for listed words from the target corpus
    Sample {
        /// One word per line
        #[arg(long, value_name = "FILE")]
        words: PathBuf,
        #[arg(long, value_name = "DIR")]
        out_dir: PathBuf,
    },
    /// Concatenate a source-domain and a target-domain dataset
    Merge {
        #[arg(long, value_name = "FILE")]
        source: PathBuf,
        #[arg(long, value_name = "FILE")]
        target: PathBuf,
        #[arg(long, value_name = "DIR")]
        out_dir: PathBuf,
    },
    /// Replace deviated tokens with class-appropriate stand-ins by POS tag
    Substitute {
        /// A tagged dataset (word_TAG tokens)
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        deviations: PathBuf,
        #[arg(long, value_name = "DIR")]
        out_dir: PathBuf,
    },
    /// Score predictions or measure word lists against gold labels
    Eval {
        #[command(subcommand)]
        mode: EvalMode,
    },
}

#[derive(Subcommand)]
enum EvalMode {
    /// Score a gold/predicted label pair file
    Predictions {
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "DIR")]
        out_dir: PathBuf,
    },
    /// Measure word lists against a gold lexicon
    Lexicon {
        #[arg(long, value_name = "FILE")]
        gold: PathBuf,
        /// Named word list as NAME=PATH (repeatable)
        #[arg(long = "list", value_name = "NAME=PATH")]
        lists: Vec<String>,
        #[arg(long, value_name = "DIR")]
        out_dir: PathBuf,
    },
}

fn run(cli: Cli) -> error::Result<()> {
    let config = Config::load(cli.config.as_deref(), &cli.set)?;
    match cli.command {
        Command::Vocab { out_dir } => commands::vocab::run(&config, &out_dir),
        Command::Calibrate { out_dir } => commands::calibrate::run(&config, &out_dir),
        Command::Profile { out_dir } => commands::profile::run(&config, &out_dir),
        Command::Adapt { out_dir } => commands::adapt::run(&config, &out_dir),
        Command::Worklist { adapted, out_dir } => {
            commands::review::worklist(&config, &adapted, &out_dir)
        }
        Command::Ingest { worklist, annotations, out_dir } => {
            commands::review::ingest(&config, &worklist, &annotations, &out_dir)
        }
        Command::Deltas { worklist, annotated, out_dir } => {
            commands::review::deltas(&config, &worklist, &annotated, &out_dir)
        }
        Command::MapLabels { input, tagged, out_dir } => {
            commands::datasets::map_labels(&config, &input, tagged, &out_dir)
        }
        Command::Filter { input, deviations, tagged, out_dir } => {
            commands::datasets::filter(&config, &input, &deviations, tagged, &out_dir)
        }
        Command::Sample { words, out_dir } => commands::datasets::sample(&config, &words, &out_dir),
        Command::Merge { source, target, out_dir } => {
            commands::datasets::merge(&config, &source, &target, &out_dir)
        }
        Command::Substitute { input, deviations, out_dir } => {
            commands::datasets::substitute(&config, &input, &deviations, &out_dir)
        }
        Command::Eval { mode } => match mode {
            EvalMode::Predictions { input, out_dir } => {
                commands::eval::predictions(&config, &input, &out_dir)
            }
            EvalMode::Lexicon { gold, lists, out_dir } => {
                commands::eval::lexicon(&config, &gold, &lists, &out_dir)
            }
        },
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("{err}");
        std::process::exit(err.exit_code());
    }
}
