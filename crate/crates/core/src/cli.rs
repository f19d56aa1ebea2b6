//! `moonshine` command-line interface.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::corpus::{
    emit_report, parse_checksums, parse_corpus, parse_corpus_structure, parse_degrees,
    CorpusFile, ReportFormat,
};
use crate::decomp::{
    multiplicities_from_column, thompson_prefix_from_column, verify_corpus, VerifyOptions,
    TABLE_DEPTH,
};
use crate::series::{
    big_j_series, delta_series, eisenstein_series, eta_power, eta_series, euler_function,
    format_exponent, j_series, partition_series, GradedSeries,
};
use crate::virasoro::{feigin_fuchs_solutions, irreducible_character, verma_character};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "moonshine",
    version,
    about = "Exact q-series for the Monster module as a Virasoro module at c = 24"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a standard q-expansion
    Series {
        #[arg(long, value_enum)]
        kind: SeriesKind,
        #[arg(long, default_value_t = TABLE_DEPTH as u64, value_parser = clap::value_parser!(u64).range(1..))]
        terms: u64,
    },
    /// Print the Verma character M(H,24)
    Verma {
        #[arg(long)]
        height: u64,
        #[arg(long, default_value_t = TABLE_DEPTH as u64, value_parser = clap::value_parser!(u64).range(1..))]
        terms: u64,
    },
    /// Print the vacuum character L(0,24)
    Vacuum {
        #[arg(long, default_value_t = TABLE_DEPTH as u64, value_parser = clap::value_parser!(u64).range(1..))]
        terms: u64,
    },
    /// Print embedding analyses for heights H..=MAX
    Classify {
        #[arg(long)]
        height: u64,
        #[arg(long)]
        max: Option<u64>,
    },
    /// Print the multiplicities c_h of one character
    Deconvolve {
        #[arg(long)]
        chi: u16,
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, default_value_t = TABLE_DEPTH as u64, value_parser = clap::value_parser!(u64).range(1..))]
        terms: u64,
    },
    /// Print the McKay–Thompson prefix of one character, normalized by its degree
    Thompson {
        #[arg(long)]
        chi: u16,
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, default_value_t = TABLE_DEPTH as u64, value_parser = clap::value_parser!(u64).range(1..))]
        terms: u64,
    },
    /// Run every consistency check over a corpus
    Verify {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        degrees: Option<PathBuf>,
        /// Row checksums; defaults to <corpus stem>.checksums.csv next to the corpus
        #[arg(long)]
        checksums: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SeriesKind {
    Partition,
    Euler,
    Eta,
    Eta23,
    Delta,
    E4,
    E6,
    J,
    #[value(name = "bigJ")]
    BigJ,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for ReportFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => ReportFormat::Text,
            FormatArg::Json => ReportFormat::Json,
        }
    }
}

/// Runs the CLI against the process's standard streams.
pub fn run_cli<I, T>(argv: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_cli_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI with explicit output streams.
pub fn run_cli_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<u8, String> {
    let io = |e: std::io::Error| e.to_string();
    match command {
        Command::Series { kind, terms } => {
            let n = terms as usize;
            let s = match kind {
                SeriesKind::Partition => partition_series(n),
                SeriesKind::Euler => euler_function(n),
                SeriesKind::Eta => eta_series(n),
                SeriesKind::Eta23 => eta_power(23, n),
                SeriesKind::Delta => delta_series(n),
                SeriesKind::E4 => eisenstein_series(4, n).map_err(|e| e.to_string())?,
                SeriesKind::E6 => eisenstein_series(6, n).map_err(|e| e.to_string())?,
                SeriesKind::J => j_series(n),
                SeriesKind::BigJ => big_j_series(n),
            };
            write!(out, "{s}").map_err(io)?;
        }
        Command::Verma { height, terms } => {
            let v = verma_character(height, terms as usize);
            write_in_x(out, &v.series).map_err(io)?;
        }
        Command::Vacuum { terms } => {
            write_in_x(out, &irreducible_character(0, terms as usize)).map_err(io)?;
        }
        Command::Classify { height, max } => {
            let last = max.unwrap_or(height);
            if last < height {
                return Err(format!("--max {last} is below --height {height}"));
            }
            for h in height..=last {
                write!(out, "{}", feigin_fuchs_solutions(h)).map_err(io)?;
            }
        }
        Command::Deconvolve { chi, corpus, terms } => {
            let corpus = load_corpus(&corpus)?;
            let col = corpus
                .column(chi)
                .ok_or_else(|| format!("chi={chi} is not in the corpus"))?;
            let c = multiplicities_from_column(col, terms as usize).map_err(|e| e.to_string())?;
            for (h, v) in c.values.iter().enumerate() {
                writeln!(out, "c_{h}: {v}").map_err(io)?;
            }
        }
        Command::Thompson { chi, corpus, terms } => {
            let corpus = load_corpus(&corpus)?;
            let col = corpus
                .column(chi)
                .ok_or_else(|| format!("chi={chi} is not in the corpus"))?;
            let t = thompson_prefix_from_column(col, terms as usize).map_err(|e| e.to_string())?;
            write!(out, "{t}").map_err(io)?;
        }
        Command::Verify {
            corpus,
            degrees,
            checksums,
            format,
        } => {
            let bytes = read(&corpus)?;
            let parsed = parse_corpus_structure(&bytes)
                .map_err(|e| format!("{}: {e}", corpus.display()))?;
            let degrees = match degrees {
                Some(path) => Some(
                    parse_degrees(&read(&path)?)
                        .map_err(|e| format!("{}: {e}", path.display()))?
                        .entries,
                ),
                None => None,
            };
            let checksum_path = checksums.or_else(|| {
                let sibling = sibling_checksums(&corpus);
                sibling.exists().then_some(sibling)
            });
            let checksums = match checksum_path {
                Some(path) => Some(
                    parse_checksums(&read(&path)?)
                        .map_err(|e| format!("{}: {e}", path.display()))?,
                ),
                None => None,
            };
            let options = VerifyOptions {
                checksums,
                ..VerifyOptions::default()
            };
            let report = verify_corpus(&parsed.columns, degrees.as_ref(), &options);
            writeln!(out, "{}", emit_report(&report, format.into()).trim_end()).map_err(io)?;
            return Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            });
        }
    }
    Ok(EXIT_OK)
}

fn read(path: &Path) -> Result<Vec<u8>, String> {
    fs::read(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_corpus(path: &Path) -> Result<CorpusFile, String> {
    parse_corpus(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

/// `dir/corpus.csv` → `dir/corpus.checksums.csv`.
fn sibling_checksums(corpus: &Path) -> PathBuf {
    let stem = corpus
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    corpus.with_file_name(format!("{stem}.checksums.csv"))
}

fn write_in_x(out: &mut dyn Write, s: &GradedSeries) -> std::io::Result<()> {
    for (e, c) in s.terms() {
        writeln!(out, "x^{}: {}", format_exponent(e), c)?;
    }
    Ok(())
}
