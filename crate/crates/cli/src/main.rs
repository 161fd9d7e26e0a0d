mod report;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use graded_clifford::classify::{periodic_table, MAX_TABLE_N};
use graded_clifford::clifford::Signature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

/// Discrete Clifford groups Q_{p,q}: structure, tables and classification.
#[derive(Debug, Parser)]
#[command(name = "gclif", version)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

/// `p q`, a positional signature string, or `--signature`.
#[derive(Debug, clap::Args)]
struct SignatureArgs {
    /// Either `P Q` or a signature such as `1,Z,Z`.
    #[arg(num_args = 0..=2, value_name = "P Q | SIGNATURE")]
    positional: Vec<String>,
    /// Comma separated tokens `1` and `Z`.
    #[arg(long, value_name = "S", allow_hyphen_values = true)]
    signature: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Order, center, classes, commutators, even part and normal form.
    Info(SignatureArgs),
    /// Full multiplication table.
    Table(SignatureArgs),
    /// Triangle of normal forms of Q_{p,q} for p + q <= max-n.
    Periodic {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Pair each group with its Clifford algebra.
        #[arg(long)]
        algebras: bool,
    },
    /// The ±1 character matrix of (Z/2)^n.
    Characters { n: usize },
    /// Central-function basis of K[Q(t)] and the center of Cl(t).
    Central(SignatureArgs),
    /// Structure constants e_A e_B = ± e_{AΔB} of Cl(t).
    Constants(SignatureArgs),
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] graded_clifford::Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use graded_clifford::Error as E;
        match self {
            CliError::Core(E::SizeCap { .. }) => 3,
            CliError::Core(E::InvalidArgument(_) | E::Parse(_) | E::SignatureMismatch(_)) => 2,
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

impl SignatureArgs {
    fn resolve(&self) -> Result<Signature> {
        match (self.positional.as_slice(), &self.signature) {
            ([], Some(s)) => Ok(s.parse()?),
            ([s], None) => Ok(s.parse()?),
            ([p, q], None) => {
                let parse = |x: &str| x.parse::<usize>().map_err(|_| CliError::Usage(format!("not a count: {x}")));
                Ok(Signature::pq(parse(p)?, parse(q)?)?)
            }
            ([], None) => Err(CliError::Usage("expected P Q or a signature".into())),
            _ => Err(CliError::Usage("give either P Q, a positional signature or --signature".into())),
        }
    }
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn csv_records<T: Serialize>(rows: impl IntoIterator<Item = T>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    finish(w)
}

fn csv_grid(header: impl IntoIterator<Item = String>, rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    finish(w)
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn render(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Info(args) => {
            let r = report::info(&args.resolve()?)?;
            match cli.format {
                Format::Text => Ok(r.text()),
                Format::Json => json(&r),
                Format::Csv => csv_grid(["key".into(), "value".into()], r.rows().into_iter().map(|(k, v)| vec![k, v])),
            }
        }
        Command::Table(args) => {
            let t = report::group_table(&args.resolve()?)?;
            match cli.format {
                Format::Text => Ok(t.text()),
                Format::Json => json(&t),
                Format::Csv => csv_grid(
                    std::iter::once(String::new()).chain(t.elements.iter().cloned()),
                    t.elements.iter().zip(&t.rows).map(|(x, row)| std::iter::once(x.clone()).chain(row.iter().cloned()).collect()),
                ),
            }
        }
        Command::Periodic { max_n, algebras } => {
            if *max_n > MAX_TABLE_N {
                return Err(graded_clifford::Error::SizeCap { what: "periodic table", size: *max_n, cap: MAX_TABLE_N }.into());
            }
            let t = periodic_table(*max_n);
            match cli.format {
                Format::Text => Ok(t.render_text(*algebras)),
                Format::Json => json(&t),
                Format::Csv => csv_records(report::periodic_rows(&t)),
            }
        }
        Command::Characters { n } => {
            let t = report::characters(*n)?;
            match cli.format {
                Format::Text => Ok(t.text()),
                Format::Json => json(&t),
                Format::Csv => csv_grid(
                    std::iter::once("A".to_string()).chain(t.subsets.iter().cloned()),
                    t.subsets.iter().zip(&t.matrix).map(|(a, row)| {
                        std::iter::once(a.clone()).chain(row.iter().map(|c| c.to_string())).collect()
                    }),
                ),
            }
        }
        Command::Central(args) => {
            let r = report::central(&args.resolve()?)?;
            match cli.format {
                Format::Text => Ok(r.text()),
                Format::Json => json(&r),
                Format::Csv => csv_records(r.rows()),
            }
        }
        Command::Constants(args) => {
            let r = report::constants(&args.resolve()?)?;
            match cli.format {
                Format::Text => Ok(r.text()),
                Format::Json => json(&r),
                Format::Csv => csv_records(&r.constants),
            }
        }
    }
}

fn run(cli: &Cli) -> Result<()> {
    let output = render(cli)?;
    match &cli.out {
        Some(path) => fs::write(path, output)?,
        None => io::stdout().lock().write_all(output.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("gclif: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
