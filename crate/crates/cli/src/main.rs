//! `brokeneyes` command-line tool.
//!
//! Exit codes: 0 success, 1 runtime failure, 2 usage error.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use brokeneyes::metrics::ReportFormat;
use brokeneyes::Condition;
use clap::{Args, Parser, Subcommand};

use crate::config::ToolConfig;

#[derive(Debug, Parser)]
#[command(name = "brokeneyes", version, about = "Simulate eye disorders on images and compare feature maps")]
struct Cli {
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = "BROKENEYES_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply one condition to an image or a directory of images.
    Filter(FilterArgs),
    /// Curate human/non-human sources into the six-condition dataset.
    Curate(CurateArgs),
    /// Compare disorder feature maps against a baseline.
    Analyze(AnalyzeArgs),
}

fn parse_condition(s: &str) -> Result<Condition, String> {
    s.parse().map_err(|e: brokeneyes::Error| e.to_string())
}

fn parse_format(s: &str) -> Result<ReportFormat, String> {
    s.parse().map_err(|e: brokeneyes::Error| e.to_string())
}

#[derive(Debug, Args)]
pub struct FilterArgs {
    /// Image file or directory of images.
    #[arg(long)]
    pub input: PathBuf,
    /// normal, amd, cataract, glaucoma, refractive or retinopathy.
    #[arg(long, value_parser = parse_condition)]
    pub condition: Condition,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CurateArgs {
    /// Directory of human (face) images.
    #[arg(long)]
    pub human: PathBuf,
    /// Directory of non-human images.
    #[arg(long)]
    pub nonhuman: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Feature tensor of the normal-vision model.
    #[arg(long)]
    pub baseline: PathBuf,
    /// Directory holding `<condition>.tnsr` for the five disorders.
    #[arg(long)]
    pub disorders: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value = "json", value_parser = parse_format)]
    pub format: ReportFormat,
}

fn config_path(command: &Command) -> Option<&std::path::Path> {
    match command {
        Command::Filter(a) => a.config.as_deref(),
        Command::Curate(a) => a.config.as_deref(),
        Command::Analyze(_) => None,
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let config = ToolConfig::load(config_path(&cli.command))?;
    let threads = cli.threads.or(config.threads).unwrap_or(0);
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;

    match &cli.command {
        Command::Filter(args) => commands::filter::run(args, &config),
        Command::Curate(args) => commands::curate::run(args, &config),
        Command::Analyze(args) => commands::analyze::run(args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
