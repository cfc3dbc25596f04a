use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use runforge::commands::{self, Suite, TABLE1_DEFAULT_MAX};
use runforge::{parallel, CliError, Format, Output};
use runforge_core::anneal::AnnealConfig;
use runforge_core::extremal::Mode;

#[derive(Parser)]
#[command(name = "runforge", version, about = "Runs and total run length of words")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Max,
    Min,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Max => Mode::Max,
            ModeArg::Min => Mode::Min,
        }
    }
}

#[derive(clap::Args)]
struct Jobs {
    /// Worker threads (defaults to available parallelism).
    #[arg(long, env = "RUNFORGE_JOBS")]
    jobs: Option<usize>,
}

impl Jobs {
    fn get(&self) -> usize {
        self.jobs.unwrap_or_else(parallel::default_jobs).max(1)
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the runs of a word with TRL, run count and exponent sum.
    Runs {
        word: String,
        #[arg(long)]
        alphabet: Option<u8>,
    },
    /// Total run length of one or more words.
    Trl {
        #[arg(required = true)]
        words: Vec<String>,
        #[arg(long)]
        alphabet: Option<u8>,
    },
    /// Exhaustive maximum or minimum TRL over all words of length n.
    Tau {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        alpha: u8,
        #[arg(long, value_enum, default_value_t = ModeArg::Max)]
        mode: ModeArg,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Exhaustive minimum TRL, compared with the word a b a^(n-4) b a.
    MinTrl {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        alpha: u8,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Exhaustive checks of the coverage theorems and periodicity lemmas.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Longest word length checked.
        #[arg(long, default_value_t = 14)]
        n_max: usize,
        #[arg(long, default_value_t = 2)]
        alpha: u8,
        /// Largest period for the square-pair structure lemma.
        #[arg(long, default_value_t = 6)]
        max_p: usize,
    },
    /// Explicit words: u(k) = ((ab)^k a)^2 or a b a^(n-4) b a.
    Construct {
        #[command(subcommand)]
        kind: Construct,
    },
    /// Check the quadratic upper bound and the n^2/8 lower bound.
    Bounds {
        #[arg(long, default_value_t = 1_000_000)]
        max_n: u64,
    },
    /// Exact expected TRL of a uniformly random word.
    Expected {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        alpha: u32,
        /// Also average over every word and compare.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 10)]
        digits: u32,
        /// Compare previously published closed forms with computed values.
        #[arg(long)]
        verify_paper: bool,
    },
    /// Limiting expected TRL per letter.
    Density {
        #[arg(long, default_value_t = 2)]
        alpha: u32,
        #[arg(long, default_value_t = 5e-5)]
        tol: f64,
        #[arg(long, default_value_t = 4)]
        digits: u32,
        #[arg(long)]
        verify_paper: bool,
    },
    /// Simulated annealing for binary words with large TRL.
    Anneal {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = AnnealConfig::DEFAULT_ITERATIONS)]
        iters: u64,
        #[arg(long, default_value_t = AnnealConfig::DEFAULT_RESTARTS)]
        restarts: u32,
        #[arg(long, default_value_t = AnnealConfig::DEFAULT_TEMPERATURE)]
        temperature: f64,
        #[arg(long, default_value_t = AnnealConfig::DEFAULT_COOLING)]
        cooling: f64,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Maximum binary TRL for n = 1..max-n, checked against known values.
    Table1 {
        #[arg(long, default_value_t = TABLE1_DEFAULT_MAX)]
        max_n: usize,
        /// Allow lengths beyond the default budget.
        #[arg(long)]
        allow_large: bool,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Limiting TRL density for alphabets 2, 3, 5 and 10.
    Table2,
}

#[derive(Subcommand)]
enum Construct {
    U {
        #[arg(long)]
        k: usize,
    },
    Min {
        #[arg(long)]
        n: usize,
    },
}

fn dispatch(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Runs { word, alphabet } => commands::runs(&word, alphabet),
        Command::Trl { words, alphabet } => commands::trl_many(&words, alphabet),
        Command::Tau { n, alpha, mode, jobs } => commands::tau(n, alpha, mode.into(), jobs.get()),
        Command::MinTrl { n, alpha, jobs } => commands::min_trl(n, alpha, jobs.get()),
        Command::Verify { suite, n_max, alpha, max_p } => {
            commands::verify(suite, n_max, alpha, max_p)
        }
        Command::Construct { kind: Construct::U { k } } => commands::construct_u(k),
        Command::Construct { kind: Construct::Min { n } } => commands::construct_min(n),
        Command::Bounds { max_n } => commands::bounds(max_n),
        Command::Expected { n, alpha, oracle, digits, verify_paper } => {
            commands::expected(n, alpha, oracle, digits, verify_paper)
        }
        Command::Density { alpha, tol, digits, verify_paper } => {
            commands::density(alpha, tol, digits, verify_paper)
        }
        Command::Anneal { n, seed, iters, restarts, temperature, cooling, jobs } => {
            let config = AnnealConfig {
                n,
                seed,
                iterations: iters,
                restarts,
                initial_temperature: temperature,
                cooling_factor: cooling,
            };
            commands::anneal(&config, jobs.get())
        }
        Command::Table1 { max_n, allow_large, jobs } => {
            commands::table1(max_n, allow_large, jobs.get())
        }
        Command::Table2 => commands::table2(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = dispatch(cli.command);
    let elapsed = start.elapsed().as_millis() as u64;
    match outcome {
        Ok(out) => {
            print!("{}", out.render(cli.format, elapsed));
            ExitCode::SUCCESS
        }
        Err(err) => {
            if let CliError::Invariant { output: Some(out), .. } = &err {
                print!("{}", out.render(cli.format, elapsed));
            }
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
