use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lyndon_pbw::cli::corpus;
use lyndon_pbw::cli::pipeline::{run_file, Options, Outcome, Stage};

#[derive(Parser)]
#[command(
    name = "lyndon-pbw",
    version,
    about = "PBW bases and Ore towers for graded Hopf quotients of free algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a presentation and check that the coproduct preserves the ideal.
    Check(RunArgs),
    /// Also compute the relative PBW generators and verify their properties.
    Pbw(RunArgs),
    /// Also build and verify the Ore extension tower.
    Tower(RunArgs),
    /// Work with the bundled corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// List bundled presentations.
    List,
    /// Run every bundled presentation and compare with its expected exit code.
    RunAll {
        /// Directory to read corpus files from instead of the bundled copies.
        #[arg(long, env = corpus::CORPUS_DIR_VAR)]
        dir: Option<PathBuf>,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Presentation file (JSON).
    file: PathBuf,
    /// Degree bound; overrides the file's `max_degree` (default 6).
    #[arg(long)]
    max_degree: Option<u32>,
    /// Treat a non-coassociative coproduct as a violation.
    #[arg(long)]
    strict_coassoc: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn run(stage: Stage, args: RunArgs) -> ExitCode {
    let opts = Options {
        max_degree: args.max_degree,
        strict_coassoc: args.strict_coassoc,
    };
    let outcome = run_file(&args.file, stage, opts);
    match &outcome {
        Outcome::Report(r) => match args.format {
            Format::Json => print!("{}", r.to_json()),
            Format::Text => print!("{}", r.to_text()),
        },
        Outcome::InputError(e) => eprintln!("error: {e}"),
    }
    ExitCode::from(outcome.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Check(a) => run(Stage::Check, a),
        Command::Pbw(a) => run(Stage::Pbw, a),
        Command::Tower(a) => run(Stage::Tower, a),
        Command::Corpus {
            action: CorpusAction::List,
        } => {
            print!("{}", corpus::render_list());
            ExitCode::SUCCESS
        }
        Command::Corpus {
            action: CorpusAction::RunAll { dir },
        } => {
            let results = corpus::run_all(dir.as_deref(), Options::default());
            print!("{}", corpus::render_results(&results));
            if results.iter().all(|r| r.ok()) {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
