//! Command-line front end for `cremona_core`.
//!
//! [`run`] parses an argument vector, executes one verb and returns the exit
//! code with everything destined for stdout and stderr, so the binary is a
//! thin wrapper and tests can drive the tool in-process.

mod batch;
pub mod error;
pub mod output;

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use cremona_core::enumeration::{enumerate_with_orbits, stabilizer};
use cremona_core::multidegree::multidegree_from_vertex;
use cremona_core::{
    brute_force_cremona, classify, enumerate_cremona, inverse, multidegree, orbit, torus_degree,
    triangulate, triangulate_default, ExponentMatrix, LatticePoint, MonomialMap, NewtonPolyhedron,
};
use serde::Serialize;
use serde_json::json;

pub use batch::{run_batch, run_batch_with};
pub use error::CliError;
use output::*;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Default hard cap on any matrix entry read or produced.
pub const DEFAULT_MAX_ENTRY: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    /// Diagnostics on stderr.
    pub verbose: bool,
    pub max_entry: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            verbose: false,
            max_entry: DEFAULT_MAX_ENTRY,
        }
    }
}

impl Settings {
    /// Reads `CREMONA_VERBOSE` and `CREMONA_MAX_ENTRY`.
    pub fn from_env() -> Result<Settings, CliError> {
        let verbose = std::env::var("CREMONA_VERBOSE")
            .map(|v| !v.is_empty() && v != "0")
            .unwrap_or(false);
        let max_entry = match std::env::var("CREMONA_MAX_ENTRY") {
            Ok(v) => v.trim().parse().map_err(|_| {
                CliError::Usage(format!(
                    "CREMONA_MAX_ENTRY must be a non-negative integer, got {v:?}"
                ))
            })?,
            Err(_) => DEFAULT_MAX_ENTRY,
        };
        Ok(Settings { verbose, max_entry })
    }

    pub fn check_entries(&self, m: &ExponentMatrix) -> Result<(), CliError> {
        match m.max_entry() {
            e if e > self.max_entry => Err(CliError::EntryCap {
                entry: e,
                cap: self.max_entry,
            }),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "cremona",
    version,
    about = "Classify, enumerate, invert and iterate monomial Cremona maps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether a monomial map is a Cremona transformation
    Classify(MatrixArg),
    /// Multidegree, determinant and torus degree of a monomial map
    Multidegree(MatrixArg),
    /// Pulling triangulation of the Newton polyhedron, one cell per line
    Triangulate(TriangulateArgs),
    /// List the monomial Cremona maps of a given degree
    Enumerate(EnumerateArgs),
    /// Inverse of a monomial Cremona map
    Invert(MatrixArg),
    /// Iterates of a monomial map and their degrees
    Iterate(IterateArgs),
    /// Orbit under simultaneous row/column permutation
    Orbit(MatrixArg),
    /// Classify every matrix in a file, one per line
    Batch(BatchArgs),
}

#[derive(Debug, Args)]
struct MatrixArg {
    /// Exponent matrix, e.g. "0,0,5;4,1,0;3,1,1"
    #[arg(long)]
    matrix: String,
}

#[derive(Debug, Args)]
struct TriangulateArgs {
    #[command(flatten)]
    matrix: MatrixArg,
    /// Distinguished vertex such as "(0,0,3)"; defaults to the lexicographically smallest
    #[arg(long)]
    vertex: Option<String>,
    #[arg(long, value_enum, default_value_t = CellFormat::Text)]
    format: CellFormat,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    delta: u64,
    /// Expand each normal form to its permutation-similarity orbit
    #[arg(long)]
    orbits: bool,
    /// Cross-check against exhaustive search (degree at most 12)
    #[arg(long)]
    oracle: bool,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    format: TableFormat,
}

#[derive(Debug, Args)]
struct IterateArgs {
    #[command(flatten)]
    matrix: MatrixArg,
    /// Number of iterates
    #[arg(long, value_parser = clap::value_parser!(u64).range(0..=100_000))]
    n: u64,
}

#[derive(Debug, Args)]
struct BatchArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: PathBuf,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    format: TableFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CellFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
}

/// Exit code plus captured streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn failure(err: &CliError) -> Output {
        Output {
            code: err.exit_code(),
            stdout: String::new(),
            stderr: serde_json::to_string(&err.to_json()).expect("plain struct") + "\n",
        }
    }
}

/// Runs with settings taken from the environment. `args[0]` is the program name.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Settings::from_env() {
        Ok(settings) => run_with(args, &settings),
        Err(e) => Output::failure(&e),
    }
}

pub fn run_with<I, T>(args: I, settings: &Settings) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Output {
                code: 0,
                stdout: e.render().to_string(),
                stderr: String::new(),
            }
        }
        Err(e) => {
            return Output::failure(&CliError::Usage(e.render().to_string().trim_end().into()))
        }
    };
    let start = Instant::now();
    let verb = cli.command.name();
    let result = execute(&cli.command, settings, start);
    let mut out = match result {
        Ok(stdout) => Output {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Output::failure(&e),
    };
    if settings.verbose {
        out.stderr.push_str(&format!(
            "cremona {VERSION}: {verb} exited {} after {:.3} ms (entry cap {})\n",
            out.code,
            elapsed_ms(start),
            settings.max_entry
        ));
    }
    out
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Classify(_) => "classify",
            Command::Multidegree(_) => "multidegree",
            Command::Triangulate(_) => "triangulate",
            Command::Enumerate(_) => "enumerate",
            Command::Invert(_) => "invert",
            Command::Iterate(_) => "iterate",
            Command::Orbit(_) => "orbit",
            Command::Batch(_) => "batch",
        }
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn report<T: Serialize>(
    command: &str,
    input: serde_json::Value,
    result: T,
    start: Instant,
) -> String {
    let r = Report {
        command,
        input,
        result,
        elapsed_ms: elapsed_ms(start),
        version: VERSION,
    };
    serde_json::to_string(&r).expect("serializable report") + "\n"
}

/// Parses a matrix and enforces the entry cap.
pub fn parse_matrix(text: &str, settings: &Settings) -> Result<ExponentMatrix, CliError> {
    let m: ExponentMatrix = text.parse()?;
    settings.check_entries(&m)?;
    Ok(m)
}

/// Classification plus multidegree when the input defines a map.
pub fn classify_matrix(m: &ExponentMatrix) -> Result<ClassifyJson, CliError> {
    let c = classify(m);
    let md = match MonomialMap::from_unreduced(*m) {
        Ok(map) => Some(multidegree(&map)?.as_array()),
        Err(_) => None,
    };
    Ok(ClassifyJson::new(m, c, md))
}

fn monomial_map(text: &str, settings: &Settings) -> Result<MonomialMap, CliError> {
    Ok(MonomialMap::from_unreduced(parse_matrix(text, settings)?)?)
}

fn execute(command: &Command, settings: &Settings, start: Instant) -> Result<String, CliError> {
    let verb = command.name();
    match command {
        Command::Classify(a) => {
            let m = parse_matrix(&a.matrix, settings)?;
            let result = classify_matrix(&m)?;
            Ok(report(verb, json!({ "matrix": a.matrix }), result, start))
        }
        Command::Multidegree(a) => {
            let map = monomial_map(&a.matrix, settings)?;
            let det = map.matrix().determinant()?;
            let result = MultidegreeJson {
                delta: map.delta(),
                multidegree: multidegree(&map)?.as_array(),
                det,
                torus_degree: if det == 0 {
                    None
                } else {
                    Some(torus_degree(&map)?)
                },
            };
            Ok(report(verb, json!({ "matrix": a.matrix }), result, start))
        }
        Command::Triangulate(a) => {
            let map = monomial_map(&a.matrix.matrix, settings)?;
            let n = NewtonPolyhedron::new(map.matrix())?;
            let t = match &a.vertex {
                Some(v) => triangulate(&n, &v.parse::<LatticePoint>()?)?,
                None => triangulate_default(&n)?,
            };
            match a.format {
                CellFormat::Text => Ok(t.cells().iter().map(|c| format!("{c}\n")).collect()),
                CellFormat::Json => {
                    let result = TriangulationJson {
                        vertex: t.distinguished().to_string(),
                        cells: t.cells().iter().map(ToString::to_string).collect(),
                        multidegree: multidegree_from_vertex(&map, &t.distinguished())?.as_array(),
                    };
                    let input = json!({ "matrix": a.matrix.matrix, "vertex": a.vertex });
                    Ok(report(verb, input, result, start))
                }
            }
        }
        Command::Enumerate(a) => {
            let list = if a.orbits {
                enumerate_with_orbits(a.delta)?
            } else {
                enumerate_cremona(a.delta)?
            };
            if a.oracle {
                check_against_brute_force(a.delta)?;
            }
            match a.format {
                TableFormat::Json => {
                    let result: Vec<MatrixJson> = list.iter().map(matrix_json).collect();
                    let input = json!({ "delta": a.delta, "orbits": a.orbits, "oracle": a.oracle });
                    Ok(report(verb, input, result, start))
                }
                TableFormat::Csv => {
                    let mut w = csv::WriterBuilder::new()
                        .has_headers(false)
                        .from_writer(Vec::new());
                    for m in &list {
                        w.write_record(m.rows().iter().flatten().map(u64::to_string))
                            .map_err(|e| CliError::Internal(e.to_string()))?;
                    }
                    let bytes = w
                        .into_inner()
                        .map_err(|e| CliError::Internal(e.to_string()))?;
                    String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
                }
            }
        }
        Command::Invert(a) => {
            let map = monomial_map(&a.matrix, settings)?;
            let inv = inverse(&map)?;
            settings.check_entries(inv.matrix())?;
            let result = InverseJson {
                delta: inv.delta(),
                inverse: matrix_json(inv.matrix()),
            };
            Ok(report(verb, json!({ "matrix": a.matrix }), result, start))
        }
        Command::Iterate(a) => {
            let map = monomial_map(&a.matrix.matrix, settings)?;
            let mut iterates = Vec::new();
            let mut current = map;
            for k in 0..a.n {
                if k > 0 {
                    current = map.compose(&current)?;
                }
                settings.check_entries(current.matrix())?;
                iterates.push(current);
            }
            let result = IterationJson {
                degrees: iterates.iter().map(MonomialMap::delta).collect(),
                iterates: iterates.iter().map(|m| matrix_json(m.matrix())).collect(),
            };
            Ok(report(
                verb,
                json!({ "matrix": a.matrix.matrix, "n": a.n }),
                result,
                start,
            ))
        }
        Command::Orbit(a) => {
            let m = parse_matrix(&a.matrix, settings)?;
            let result = OrbitJson {
                canonical_form: matrix_json(&m.canonical_form()),
                orbit: orbit(&m).iter().map(matrix_json).collect(),
                stabilizer: stabilizer(&m).iter().map(ToString::to_string).collect(),
            };
            Ok(report(verb, json!({ "matrix": a.matrix }), result, start))
        }
        Command::Batch(a) => {
            let summary = run_batch_with(&a.input, &a.output, a.format, settings)?;
            let input = json!({
                "input": a.input.display().to_string(),
                "output": a.output.display().to_string(),
            });
            Ok(report(verb, input, summary, start))
        }
    }
}

fn check_against_brute_force(delta: u64) -> Result<(), CliError> {
    let listed: BTreeSet<ExponentMatrix> = enumerate_cremona(delta)?
        .iter()
        .map(ExponentMatrix::row_column_canonical_form)
        .collect();
    let brute: BTreeSet<ExponentMatrix> = brute_force_cremona(delta)?
        .iter()
        .map(ExponentMatrix::row_column_canonical_form)
        .collect();
    if listed == brute {
        Ok(())
    } else {
        Err(CliError::Internal(format!(
            "enumeration of degree {delta} disagrees with exhaustive search ({} vs {} classes)",
            listed.len(),
            brute.len()
        )))
    }
}
