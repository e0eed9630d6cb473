//! `saddle`: command-line front end for comparison-model saddlepoint
//! search. Reads plain-text matrix files, runs the library's solvers with
//! query instrumentation, and emits JSON results (1-based indices), plus a
//! seeded instance generator and a CSV benchmark harness.
//!
//! Exit codes: 0 success, 2 input error (bad file, bad arguments,
//! infeasible generator parameters), 3 internal invariant failure or a
//! failed benchmark budget.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

use saddle::select::{ceil_lg, lg_star};
use saddle::{
    find_psp, find_ssp, generate, locate_sp, matrix_to_string, oracle_scan, read_matrix,
    sp_value_assuming_exists, verify_psp, Algo, Entry, Family, MatrixView, OracleReport,
    SolveStats, SspOutcome,
};

#[derive(Parser)]
#[command(
    name = "saddle",
    version,
    about = "Find strict saddlepoints, pseudo-saddlepoints, and saddlepoint values of matrices \
             in the comparison model, counting entry queries"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether the matrix has a strict saddlepoint and locate it.
    Ssp {
        /// Matrix file (header `rows cols`, then rows of values).
        file: PathBuf,
        /// Algorithm selector: auto, baseline, simple, fast, or alt.
        #[arg(long, default_value = "auto", value_parser = parse_algo)]
        algo: Algo,
        /// Cross-check the outcome against the O(mn) oracle.
        #[arg(long)]
        verify: bool,
    },
    /// Compute a pseudo-saddlepoint entry.
    Psp {
        file: PathBuf,
        /// Algorithm selector (alt has no PSP pipeline and behaves as auto).
        #[arg(long, default_value = "auto", value_parser = parse_algo)]
        algo: Algo,
        /// Verify the entry against the O(mn) oracle.
        #[arg(long)]
        verify: bool,
    },
    /// The saddlepoint value, assuming the matrix has a saddlepoint.
    SpValue { file: PathBuf },
    /// List all saddlepoints of a known value reachable through the
    /// staircase column filter.
    SpLocate {
        file: PathBuf,
        /// The saddlepoint value (precondition: it is one).
        #[arg(long, allow_negative_numbers = true)]
        value: f64,
    },
    /// Run the staircase feasibility test for a probe value.
    TestValue {
        file: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        value: f64,
    },
    /// Full brute-force report: interval, PSP entries, SP entries, SSP.
    Oracle { file: PathBuf },
    /// Generate a deterministic instance file on standard output.
    Gen {
        /// planted-ssp, planted-sp, no-sp, random, or constant.
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Saddlepoint count for planted-sp (must be <= min(m, n)).
        #[arg(long)]
        multiplicity: Option<usize>,
    },
    /// Query-count benchmark over a grid of sizes, families, and
    /// algorithms; writes CSV and asserts per-algorithm query budgets.
    Bench {
        /// Square sizes, comma separated (e.g. 256,1024,4096).
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "random", value_parser = parse_family)]
        families: Vec<Family>,
        #[arg(long, value_delimiter = ',', default_value = "auto", value_parser = parse_algo)]
        algos: Vec<Algo>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// CSV report path.
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_algo(s: &str) -> Result<Algo, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e| format!("{e}"))
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> CliError {
        CliError { code: 2, message: message.into() }
    }

    fn internal(message: impl Into<String>) -> CliError {
        CliError { code: 3, message: message.into() }
    }
}

impl From<saddle::MatrixFileError> for CliError {
    fn from(e: saddle::MatrixFileError) -> CliError {
        CliError::input(e.to_string())
    }
}

impl From<saddle::GenerateError> for CliError {
    fn from(e: saddle::GenerateError) -> CliError {
        CliError::input(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::input(e.to_string())
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match std::panic::catch_unwind(|| run(cli.cmd)) {
        Ok(Ok(())) => 0,
        Ok(Err(e)) => {
            eprintln!("error: {}", e.message);
            e.code
        }
        Err(payload) => {
            let text = if let Some(s) = payload.downcast_ref::<&str>() {
                (*s).to_string()
            } else if let Some(s) = payload.downcast_ref::<String>() {
                s.clone()
            } else {
                "unknown panic".to_string()
            };
            eprintln!("internal invariant failure: {text}");
            3
        }
    };
    std::process::exit(code);
}

fn load(path: &PathBuf) -> Result<MatrixView, CliError> {
    let file = File::open(path)
        .map_err(|e| CliError::input(format!("cannot open {}: {e}", path.display())))?;
    let data = read_matrix(BufReader::new(file))
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    Ok(MatrixView::root(Arc::new(data)))
}

#[derive(Serialize)]
struct StatsJson {
    queries: u64,
    comparisons: u64,
    elapsed_ms: f64,
    algo: &'static str,
}

impl From<&SolveStats> for StatsJson {
    fn from(s: &SolveStats) -> StatsJson {
        StatsJson {
            queries: s.queries,
            comparisons: s.comparisons,
            elapsed_ms: s.elapsed.as_secs_f64() * 1000.0,
            algo: s.algo,
        }
    }
}

#[derive(Serialize)]
struct EntryJson {
    row: usize,
    col: usize,
    value: f64,
}

impl From<&Entry> for EntryJson {
    fn from(e: &Entry) -> EntryJson {
        // External output is 1-based.
        EntryJson { row: e.row + 1, col: e.col + 1, value: e.value.raw() }
    }
}

fn emit(value: &impl Serialize) -> Result<(), CliError> {
    let text = serde_json::to_string(value)
        .map_err(|e| CliError::internal(format!("serialization failed: {e}")))?;
    println!("{text}");
    Ok(())
}

fn run(cmd: Cmd) -> Result<(), CliError> {
    match cmd {
        Cmd::Ssp { file, algo, verify } => cmd_ssp(&file, algo, verify),
        Cmd::Psp { file, algo, verify } => cmd_psp(&file, algo, verify),
        Cmd::SpValue { file } => cmd_sp_value(&file),
        Cmd::SpLocate { file, value } => cmd_sp_locate(&file, value),
        Cmd::TestValue { file, value } => cmd_test_value(&file, value),
        Cmd::Oracle { file } => cmd_oracle(&file),
        Cmd::Gen { family, m, n, seed, multiplicity } => cmd_gen(family, m, n, seed, multiplicity),
        Cmd::Bench { sizes, families, algos, seed, out } => {
            cmd_bench(&sizes, &families, &algos, seed, &out)
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
enum SspJson {
    SspFound {
        row: usize,
        col: usize,
        value: f64,
        #[serde(flatten)]
        stats: StatsJson,
        #[serde(skip_serializing_if = "Option::is_none")]
        verified: Option<bool>,
    },
    NoSsp {
        #[serde(flatten)]
        stats: StatsJson,
        #[serde(skip_serializing_if = "Option::is_none")]
        verified: Option<bool>,
    },
}

fn cmd_ssp(file: &PathBuf, algo: Algo, verify: bool) -> Result<(), CliError> {
    let view = load(file)?;
    let (outcome, stats) = find_ssp(&view, algo);
    let verified = if verify {
        let oracle = oracle_scan(&view).ssp;
        let agree = match (&outcome, &oracle) {
            (SspOutcome::Found(e), Some(o)) => (e.row, e.col) == (o.row, o.col),
            (SspOutcome::Absent, None) => true,
            _ => false,
        };
        if !agree {
            return Err(CliError::internal(
                "solver outcome disagrees with the oracle".to_string(),
            ));
        }
        Some(true)
    } else {
        None
    };
    let json = match &outcome {
        SspOutcome::Found(e) => {
            let at = EntryJson::from(e);
            SspJson::SspFound {
                row: at.row,
                col: at.col,
                value: at.value,
                stats: StatsJson::from(&stats),
                verified,
            }
        }
        SspOutcome::Absent => SspJson::NoSsp { stats: StatsJson::from(&stats), verified },
    };
    emit(&json)
}

#[derive(Serialize)]
struct PspJson {
    row: usize,
    col: usize,
    value: f64,
    #[serde(flatten)]
    stats: StatsJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
}

fn cmd_psp(file: &PathBuf, algo: Algo, verify: bool) -> Result<(), CliError> {
    let view = load(file)?;
    let (entry, stats) = find_psp(&view, algo);
    let verified = if verify {
        if !verify_psp(&view, &entry) {
            return Err(CliError::internal("returned entry failed PSP verification".to_string()));
        }
        Some(true)
    } else {
        None
    };
    let at = EntryJson::from(&entry);
    emit(&PspJson {
        row: at.row,
        col: at.col,
        value: at.value,
        stats: StatsJson::from(&stats),
        verified,
    })
}

#[derive(Serialize)]
struct SpValueJson {
    value: f64,
    assumes_sp_exists: bool,
    #[serde(flatten)]
    stats: StatsJson,
}

fn cmd_sp_value(file: &PathBuf) -> Result<(), CliError> {
    let view = load(file)?;
    let (value, stats) = sp_value_assuming_exists(&view);
    emit(&SpValueJson {
        value: value.raw(),
        assumes_sp_exists: true,
        stats: StatsJson::from(&stats),
    })
}

#[derive(Serialize)]
struct SpLocateJson {
    value: f64,
    count: usize,
    entries: Vec<EntryJson>,
}

fn cmd_sp_locate(file: &PathBuf, value: f64) -> Result<(), CliError> {
    let view = load(file)?;
    let hits = locate_sp(&view, &view.probe(value));
    emit(&SpLocateJson {
        value,
        count: hits.len(),
        entries: hits.iter().map(EntryJson::from).collect(),
    })
}

#[derive(Serialize)]
struct TestValueJson {
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    row: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    col: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<f64>,
}

fn cmd_test_value(file: &PathBuf, value: f64) -> Result<(), CliError> {
    let view = load(file)?;
    use saddle::staircase::{test_value, SearchVerdict};
    let json = match test_value(&view, &view.probe(value)) {
        SearchVerdict::FoundSsp(e) => {
            let at = EntryJson::from(&e);
            TestValueJson {
                verdict: "found",
                row: Some(at.row),
                col: Some(at.col),
                value: Some(at.value),
            }
        }
        SearchVerdict::NoSsp => TestValueJson { verdict: "absent", row: None, col: None, value: None },
        SearchVerdict::SspGreater => {
            TestValueJson { verdict: "greater", row: None, col: None, value: None }
        }
        SearchVerdict::SspLess => {
            TestValueJson { verdict: "less", row: None, col: None, value: None }
        }
    };
    emit(&json)
}

#[derive(Serialize)]
struct OracleJson {
    c: f64,
    r: f64,
    psp_count: usize,
    psp_entries: Vec<EntryJson>,
    sp_count: usize,
    sp_entries: Vec<EntryJson>,
    ssp: Option<EntryJson>,
}

impl From<&OracleReport> for OracleJson {
    fn from(report: &OracleReport) -> OracleJson {
        OracleJson {
            c: report.interval.c.raw(),
            r: report.interval.r.raw(),
            psp_count: report.psp_entries.len(),
            psp_entries: report.psp_entries.iter().map(EntryJson::from).collect(),
            sp_count: report.sp_entries.len(),
            sp_entries: report.sp_entries.iter().map(EntryJson::from).collect(),
            ssp: report.ssp.as_ref().map(EntryJson::from),
        }
    }
}

fn cmd_oracle(file: &PathBuf) -> Result<(), CliError> {
    let view = load(file)?;
    emit(&OracleJson::from(&oracle_scan(&view)))
}

fn cmd_gen(
    family: Family,
    m: usize,
    n: usize,
    seed: u64,
    multiplicity: Option<usize>,
) -> Result<(), CliError> {
    let family = match (family, multiplicity) {
        (Family::PlantedSp { .. }, Some(k)) => Family::PlantedSp { multiplicity: k },
        (other, Some(_)) => {
            return Err(CliError::input(format!(
                "--multiplicity only applies to planted-sp, not {}",
                other.name()
            )))
        }
        (other, None) => other,
    };
    let inst = generate(family, m, n, seed)?;
    print!("{}", matrix_to_string(&inst.data));
    Ok(())
}

/// Operational per-algorithm query envelopes for square instances; the
/// summary flags any run that escapes them. Generous by design: they cover
/// the verification pass and the alternative path's capped fallback.
fn query_budget(algo: Algo, n: usize) -> u64 {
    let n64 = n as u64;
    let perimeter = 16 * n64;
    match algo {
        Algo::Baseline => perimeter,
        Algo::Simple => 2 * n64 * (1u64 << lg_star(n)) + perimeter,
        Algo::Auto | Algo::Fast => 2 * n64 * lg_star(n) as u64 + perimeter,
        Algo::Alternative => 64 * n64 * (ceil_lg(ceil_lg(n).max(1) as usize) as u64 + 1) + perimeter,
    }
}

fn cmd_bench(
    sizes: &[usize],
    families: &[Family],
    algos: &[Algo],
    seed: u64,
    out: &PathBuf,
) -> Result<(), CliError> {
    if sizes.is_empty() {
        return Err(CliError::input("--sizes needs at least one size".to_string()));
    }
    let mut csv = BufWriter::new(
        File::create(out)
            .map_err(|e| CliError::input(format!("cannot create {}: {e}", out.display())))?,
    );
    writeln!(csv, "algo,family,m,n,seed,queries,comparisons,elapsed_ns,outcome")?;
    let mut over_budget = Vec::new();
    for &n in sizes {
        for &family in families {
            let inst = generate(family, n, n, seed)?;
            for &algo in algos {
                let view = inst.view();
                let start = Instant::now();
                let (outcome, stats) = find_ssp(&view, algo);
                let elapsed_ns = start.elapsed().as_nanos();
                let outcome = match outcome {
                    SspOutcome::Found(e) => format!("ssp({};{})", e.row + 1, e.col + 1),
                    SspOutcome::Absent => "no-ssp".to_string(),
                };
                writeln!(
                    csv,
                    "{},{},{},{},{},{},{},{},{}",
                    algo.name(),
                    family.name(),
                    n,
                    n,
                    seed,
                    stats.queries,
                    stats.comparisons,
                    elapsed_ns,
                    outcome
                )?;
                let budget = query_budget(algo, n);
                let ok = stats.queries <= budget;
                println!(
                    "budget {} {} n={n}: {} queries <= {budget}: {}",
                    algo.name(),
                    family.name(),
                    stats.queries,
                    if ok { "OK" } else { "FAIL" }
                );
                if !ok {
                    over_budget.push(format!(
                        "{} on {} at n={n}: {} > {budget}",
                        algo.name(),
                        family.name(),
                        stats.queries
                    ));
                }
            }
        }
    }
    csv.flush()?;
    if over_budget.is_empty() {
        println!("all budgets within bounds; report written to {}", out.display());
        Ok(())
    } else {
        Err(CliError::internal(format!("query budgets exceeded: {}", over_budget.join("; "))))
    }
}
