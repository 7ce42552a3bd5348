use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mcomplexity::check::run_checks;
use mcomplexity::dot::gap_digraph;
use mcomplexity::record::render_series;
use mcomplexity::{count, enumerate, parse_gap_spec, series, CliError, CountMethod, Format, SeriesKind};
use mcomplexity_core::parse_word;

#[derive(Parser)]
#[command(name = "mcomplexity", version, about = "Scattered-subword (M-) complexity of words")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the M-subwords of a rainbow word of length n.
    Count {
        #[arg(long)]
        n: usize,
        /// Gaps such as `1,3`, `2-5` or `2-n-1`.
        #[arg(long)]
        gaps: String,
        #[arg(long, value_enum, default_value_t = CountMethod::Matrix)]
        method: CountMethod,
    },
    /// List the M-subwords of a word, sorted, with the count last.
    Enumerate {
        #[arg(long)]
        word: String,
        #[arg(long)]
        gaps: String,
        /// Also list the single letters.
        #[arg(long)]
        include_single: bool,
        /// Merge repeated strings (needed for words with repeated letters).
        #[arg(long)]
        dedup: bool,
    },
    /// Coefficients of A(z) or K(z) for the gap range d1-d2.
    Series {
        #[arg(long, default_value_t = 2)]
        d1: usize,
        #[arg(long, default_value_t = 4)]
        d2: usize,
        #[arg(long)]
        count: usize,
        #[arg(long, value_enum, default_value_t = SeriesKind::A)]
        which: SeriesKind,
    },
    /// Cross-check every method over a grid of small parameters.
    Check {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=64))]
        n_max: u32,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=64))]
        d_max: u32,
    },
    /// Print the gap digraph in Graphviz DOT.
    Dot {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        gaps: String,
    },
}

fn run(cli: Cli) -> Result<(String, bool), CliError> {
    let format = cli.format;
    match cli.command {
        Command::Count { n, gaps, method } => {
            let gaps = parse_gap_spec(&gaps, Some(n))?;
            Ok((count(n, &gaps, method)?.render(format)?, true))
        }
        Command::Enumerate { word, gaps, include_single, dedup } => {
            let word = parse_word(&word)?;
            let gaps = parse_gap_spec(&gaps, Some(word.len()))?;
            Ok((enumerate(&word, &gaps, include_single, dedup).render(format)?, true))
        }
        Command::Series { d1, d2, count, which } => {
            let rows = series(d1, d2, count, which)?;
            Ok((render_series(&rows, format)?, true))
        }
        Command::Check { n_max, d_max } => {
            let report = run_checks(n_max as usize, d_max as usize);
            Ok((report.to_string(), report.passed()))
        }
        Command::Dot { n, gaps } => {
            if n == 0 {
                return Err(CliError::ZeroLength);
            }
            let gaps = parse_gap_spec(&gaps, Some(n))?;
            Ok((gap_digraph(n, &gaps), true))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((output, passed)) => {
            print!("{output}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}
