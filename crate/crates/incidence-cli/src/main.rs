use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use incidence::Construction;
use incidence_cli::commands::{
    cmd_generate, cmd_oracle_verify, cmd_stats, cmd_sweep, OutputFormat,
};
use incidence_cli::rangespec::RangeSpec;
use incidence_cli::CliError;

/// Exact point-line incidence constructions and their constants.
#[derive(Parser)]
#[command(name = "incidence", version, about)]
struct Cli {
    /// Worker threads for counting and sweeps (0 = automatic).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
        }
    }
}

fn parse_construction(s: &str) -> Result<Construction, String> {
    Construction::from_str(s).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Generate a configuration and write it as text or JSON.
    Generate {
        /// Construction: elekes, classic-elekes, or erdos.
        #[arg(value_parser = parse_construction)]
        construction: Construction,
        k: u64,
        m: u64,
        /// Output format.
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print n, l, I, the constant, and the regime flag from exact formulas.
    Stats {
        #[arg(value_parser = parse_construction)]
        construction: Construction,
        k: u64,
        m: u64,
        /// Recompute I with both counting engines and fail on any mismatch.
        #[arg(long)]
        verify: bool,
        /// Output format.
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Sweep parameter ranges and emit one CSV row per (k, m).
    Sweep {
        #[arg(value_parser = parse_construction)]
        construction: Construction,
        /// k values, e.g. 3..10 or 100,1000.
        #[arg(long = "k")]
        k_spec: RangeSpec,
        /// m values, e.g. 1..12, a list, or 'diag' for m = k-1.
        #[arg(long = "m")]
        m_spec: RangeSpec,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check generators against the oracle and both counters for
    /// every (k, m) up to the given maxima.
    OracleVerify {
        #[arg(value_parser = parse_construction)]
        construction: Construction,
        k_max: u64,
        m_max: u64,
    },
}

fn run(command: Command) -> Result<(), CliError> {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    match command {
        Command::Generate {
            construction,
            k,
            m,
            format,
            out: path,
        } => cmd_generate(
            construction,
            k,
            m,
            format.into(),
            path.as_deref(),
            &mut out,
            &mut err,
        ),
        Command::Stats {
            construction,
            k,
            m,
            verify,
            format,
        } => cmd_stats(construction, k, m, verify, format.into(), &mut out),
        Command::Sweep {
            construction,
            k_spec,
            m_spec,
            out: path,
        } => cmd_sweep(
            construction,
            &k_spec,
            &m_spec,
            path.as_deref(),
            &mut out,
            &mut err,
        ),
        Command::OracleVerify {
            construction,
            k_max,
            m_max,
        } => cmd_oracle_verify(construction, k_max, m_max, &mut out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            // Argument problems are validation errors: exit code 1.
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };

    if cli.threads > 0 {
        // Ignore a second initialization (e.g. in tests); the pool size is
        // best-effort.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }

    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = writeln!(io::stderr(), "error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
