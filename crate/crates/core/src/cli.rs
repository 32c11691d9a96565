//! Command-line front end. [`run`] returns the process exit code:
//! 0 on success, 1 when a verification fails, 2 on a usage error.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::canonical::{canonical_basis_with, IntermediatePath};
use crate::crystal::{basic_component, component};
use crate::error::{Error, Result};
use crate::modular::reduced_matrix;
use crate::partitions::{ladder_index, ladders, residue, Modulus, Partition};
use crate::verify::{self, PropertyConfig, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "spinfock", version, about = "Canonical bases of the q-Fock space of type A(2)_2n")]
pub struct Cli {
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, env = "SPINFOCK_JOBS", default_value_t = 0)]
    pub jobs: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct ModulusArgs {
    /// Rank n; the modulus is h = 2n + 1.
    #[arg(long)]
    pub n: Option<usize>,
    /// Odd modulus p = h.
    #[arg(long)]
    pub p: Option<usize>,
    /// Odd modulus h.
    #[arg(long)]
    pub h: Option<usize>,
}

impl ModulusArgs {
    pub fn modulus(&self) -> Result<Modulus> {
        match (self.n, self.p.or(self.h)) {
            (Some(n), _) => Modulus::from_rank(n),
            (None, Some(h)) => Modulus::new(h),
            (None, None) => Err(Error::InvalidModulus(0)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Dot,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Crystal graph of the basic module, or of the component of --start.
    Crystal {
        #[command(flatten)]
        modulus: ModulusArgs,
        #[arg(long, default_value_t = 10)]
        max_degree: usize,
        /// Start vertex, e.g. `3` or `6,3`.
        #[arg(long)]
        start: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Canonical basis of one degree.
    Canonical {
        #[command(flatten)]
        modulus: ModulusArgs,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Build each intermediate vector from the full ladder monomial.
        #[arg(long)]
        slow: bool,
    },
    /// Reduced decomposition matrix of one degree.
    Decomp {
        #[command(flatten)]
        modulus: ModulusArgs,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Embedded fixture and property checks.
    Verify {
        /// paper, properties or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 9)]
        max_degree: usize,
        #[arg(long, default_value_t = 10_000)]
        words: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Residue diagram, ladder indices and the monomial of A(μ).
    Ladders {
        #[command(flatten)]
        modulus: ModulusArgs,
        #[arg(long)]
        partition: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidModulus(_)
            | Error::InvalidPartition(_)
            | Error::NotInDpH { .. }
            | Error::NotRegular { .. }
            | Error::Parse(_) => Failure::Usage(e.to_string()),
            other => Failure::Internal(other.to_string()),
        }
    }
}

fn unsupported(command: &str, format: Format) -> Failure {
    Failure::Usage(format!("{command} does not support --format {format:?}").to_lowercase())
}

fn json_text(value: &serde_json::Value) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Output text, and whether it reports a failed verification.
fn execute(command: &Command) -> std::result::Result<(String, bool), Failure> {
    match command {
        Command::Crystal { modulus, max_degree, start, format } => {
            let h = modulus.modulus()?;
            let graph = match start {
                None => basic_component(h, *max_degree)?,
                Some(s) => component(h, &Partition::parse(s)?, *max_degree)?,
            };
            let text = match format {
                Format::Dot => graph.to_dot(),
                Format::Json => json_text(&graph.to_json())?,
                Format::Table => {
                    let mut s = String::new();
                    for (m, _) in graph.degree_counts() {
                        let labels: Vec<String> = graph.vertices_of_degree(m).iter().map(|v| format!("({v})")).collect();
                        let _ = writeln!(s, "{m}: {}", labels.join(" "));
                    }
                    s
                }
                Format::Csv => return Err(unsupported("crystal", *format)),
            };
            Ok((text, false))
        }
        Command::Canonical { modulus, m, format, slow } => {
            let h = modulus.modulus()?;
            let path = if *slow { IntermediatePath::Slow } else { IntermediatePath::Fast };
            let basis = canonical_basis_with(h, *m, path)?;
            let text = match format {
                Format::Table => basis.render_table(),
                Format::Json => json_text(&basis.to_json())?,
                Format::Csv => basis.to_csv()?,
                Format::Dot => return Err(unsupported("canonical", *format)),
            };
            Ok((text, false))
        }
        Command::Decomp { modulus, m, format } => {
            let p = modulus.modulus()?;
            let matrix = reduced_matrix(p, *m)?;
            let text = match format {
                Format::Table => matrix.render_table(),
                Format::Json => json_text(&matrix.to_json())?,
                Format::Csv => matrix.to_csv()?,
                Format::Dot => return Err(unsupported("decomp", *format)),
            };
            Ok((text, false))
        }
        Command::Verify { suite, max_degree, words, seed, format } => {
            let suite: Suite = suite.parse()?;
            let config = PropertyConfig { max_degree: *max_degree, words: *words, seed: *seed, ..Default::default() };
            let report = verify::run(suite, &config);
            let text = match format {
                Format::Table => report.render_text(),
                Format::Json => json_text(&serde_json::to_value(&report).map_err(Error::from)?)?,
                _ => return Err(unsupported("verify", *format)),
            };
            Ok((text, !report.passed))
        }
        Command::Ladders { modulus, partition, format } => {
            let h = modulus.modulus()?;
            let lambda = Partition::parse(partition)?;
            let decomposition = ladders(h, &lambda)?;
            let text = match format {
                Format::Table => render_ladders(h, &lambda)?,
                Format::Json => json_text(&serde_json::json!({
                    "h": h.h(),
                    "partition": lambda,
                    "ladders": decomposition.ladders,
                    "monomial": decomposition.monomial_word(),
                }))?,
                _ => return Err(unsupported("ladders", *format)),
            };
            Ok((text, false))
        }
    }
}

fn grid_rows(lambda: &Partition, cell: impl Fn(usize, usize) -> String) -> Vec<Vec<String>> {
    lambda.parts().iter().enumerate().map(|(r, &len)| (0..len).map(|c| cell(r + 1, c)).collect()).collect()
}

fn render_grid(rows: &[Vec<String>]) -> String {
    let width = rows.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Residues, ladder indices, and the monomial word.
pub fn render_ladders(h: Modulus, lambda: &Partition) -> Result<String> {
    let decomposition = ladders(h, lambda)?;
    let mut out = String::new();
    let _ = writeln!(out, "partition ({lambda}), h = {h}");
    out.push_str("residues:\n");
    out.push_str(&render_grid(&grid_rows(lambda, |_, c| residue(h, c).to_string())));
    out.push_str("ladders:\n");
    out.push_str(&render_grid(&grid_rows(lambda, |r, c| ladder_index(h, r, c).to_string())));
    let _ = writeln!(out, "{} ladders", decomposition.ladders.len());
    let _ = writeln!(out, "A({lambda}) = {} |0>", decomposition.monomial_word());
    Ok(out)
}

/// Parses `args` (program name first), runs the command and writes its
/// output. Diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_FAILED;
        }
    };
    match pool.install(|| execute(&cli.command)) {
        Ok((text, failed)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_FAILED;
            }
            if failed {
                EXIT_FAILED
            } else {
                EXIT_OK
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILED
        }
    }
}
