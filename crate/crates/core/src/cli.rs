//! Command-line front end.
//!
//! Exit codes: `0` success or property holds, `1` property fails or the
//! predicate does not apply, `2` invalid input, `3` the mathematics failed
//! (a theorem violation or an internal inconsistency).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::census::{
    constrained_matrix_census, constrained_matrix_census_uncapped, enumerate_class,
    enumerate_class_uncapped, independent_class_count, random_member, verify_theorem_with, CensusError,
    PivotOutcome, VerifyOptions, CLASS_CAP, MATRIX_CAP,
};
use crate::extract::{extract, validate_class_member, ExtractError};
use crate::graph::BalancedBipartiteGraph;
use crate::hamilton::find_hamilton_cycle;
use crate::oracle::{
    check_second_assertion, es_predict, find_cycle_of_length, is_bipancyclic, Confirmation,
    NotApplicableReason, SecondAssertionOutcome, SizePrediction,
};
use crate::signed::sign_char;
use crate::witness::CycleWitness;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "bipancyclic",
    version,
    about = "Certified (2n-2)-cycles and class-wide checks for hamiltonian n/2-regular bipartite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report whether a graph is a hamiltonian n/2-regular graph of order 2n > 8
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Extract a certified cycle of length 2n-2
    Extract {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Cycle lengths present, or whether one given length is present
    Pancyclic {
        file: PathBuf,
        #[arg(long)]
        length: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Look for a (2n-2)-cycle omitting an adjacent pair and confirm bipancyclicity
    SecondAssertion {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate the class with a fixed Hamilton cycle
    Census {
        #[arg(long)]
        n: usize,
        /// Write every member as an edge-list file into this directory
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        allow_large: bool,
    },
    /// Sweep the first-row sign vectors of the rigid matrix structure
    MatrixCensus {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        allow_large: bool,
    },
    /// Generate a random class member
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Verify the theorem over every class member
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        allow_large: bool,
    },
}

#[derive(Debug)]
enum Fail {
    Invalid(String),
    Violation(String),
}

impl From<std::io::Error> for Fail {
    fn from(e: std::io::Error) -> Self {
        Fail::Invalid(e.to_string())
    }
}

impl From<CensusError> for Fail {
    fn from(e: CensusError) -> Self {
        Fail::Invalid(e.to_string())
    }
}

impl From<ExtractError> for Fail {
    fn from(e: ExtractError) -> Self {
        match e {
            ExtractError::TheoremViolation(_) => Fail::Violation(e.to_string()),
            other => Fail::Invalid(other.to_string()),
        }
    }
}

/// Parses `args` (including the program name) and runs one command.
/// Data goes to `out`, diagnostics to `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let text = e.to_string();
                    let line = text.lines().next().unwrap_or("invalid arguments");
                    let _ = writeln!(err, "{line}");
                    EXIT_INVALID
                }
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(Fail::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
        Err(Fail::Violation(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_VIOLATION
        }
    }
}

fn load(path: &Path) -> Result<BalancedBipartiteGraph, Fail> {
    let text = fs::read_to_string(path).map_err(|e| Fail::Invalid(format!("{}: {e}", path.display())))?;
    BalancedBipartiteGraph::parse_edge_list(&text).map_err(|e| Fail::Invalid(format!("{}: {e}", path.display())))
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Fail> {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    writeln!(out, "{text}")?;
    Ok(())
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn warn_if_large(err: &mut dyn Write, n: usize, cap: usize, allow_large: bool) {
    if allow_large && n > cap {
        let _ = writeln!(err, "warning: n = {n} is above the default cap of {cap}; this can take a very long time");
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Fail> {
    match command {
        Command::Check { file, json } => check(&load(&file)?, json, out, err),
        Command::Extract { file, json } => {
            let g = load(&file)?;
            let r = extract(&g)?;
            if json {
                writeln!(out, "{}", r.to_json())?;
            } else {
                let idx: Vec<String> = r.indices.iter().map(|i| i.to_string()).collect();
                writeln!(out, "method: {}", r.method.name())?;
                writeln!(out, "indices: {}", idx.join(" "))?;
                writeln!(out, "length: {}", r.witness.len())?;
                writeln!(out, "cycle: {}", r.witness)?;
                writeln!(out, "omitted: {} {}", r.omitted.0, r.omitted.1)?;
                writeln!(out, "omitted adjacent: {}", yes(r.omitted_adjacent))?;
            }
            Ok(EXIT_OK)
        }
        Command::Pancyclic { file, length, json } => pancyclic(&load(&file)?, length, json, out),
        Command::SecondAssertion { file, json } => {
            let g = load(&file)?;
            let c = check_second_assertion(&g)?;
            if json {
                emit_json(out, &c)?;
            } else {
                let outcome = match c.outcome {
                    SecondAssertionOutcome::BipancyclicConfirmed => "bipancyclic confirmed",
                    SecondAssertionOutcome::Inconclusive => "inconclusive",
                    SecondAssertionOutcome::Refuted => "refuted",
                };
                writeln!(out, "outcome: {outcome}")?;
                match (&c.report.pair, &c.report.witness) {
                    (Some((a, b)), Some(w)) => {
                        writeln!(out, "pair: {a} {b}")?;
                        writeln!(out, "witness: {w}")?;
                    }
                    _ => writeln!(out, "pair: none")?,
                }
                if let Some(size) = c.report.subgraph_size {
                    writeln!(out, "subgraph size: {size}")?;
                }
                if let Some(p) = &c.pancyclicity {
                    writeln!(out, "lengths present: {}", join(p.lengths_present.iter()))?;
                }
                let confirmed = match c.report.bipancyclic_confirmed {
                    Confirmation::Evaluated(b) => yes(b),
                    Confirmation::NotApplicable => "not applicable",
                };
                writeln!(out, "bipancyclic: {confirmed}")?;
            }
            Ok(match c.outcome {
                SecondAssertionOutcome::BipancyclicConfirmed => EXIT_OK,
                SecondAssertionOutcome::Inconclusive => EXIT_FALSE,
                SecondAssertionOutcome::Refuted => {
                    writeln!(err, "error: theorem violation: an adjacent pair is omitted but the graph is not bipancyclic")?;
                    EXIT_VIOLATION
                }
            })
        }
        Command::Census {
            n,
            out: dir,
            json,
            allow_large,
        } => census_cmd(n, dir.as_deref(), json, allow_large, out, err),
        Command::MatrixCensus { n, json, allow_large } => {
            let r = if allow_large {
                warn_if_large(err, n, MATRIX_CAP, true);
                constrained_matrix_census_uncapped(n)?
            } else {
                constrained_matrix_census(n)?
            };
            if json {
                emit_json(out, &r)?;
            } else {
                writeln!(out, "n: {}", r.n)?;
                writeln!(out, "swept: {}", r.swept)?;
                writeln!(out, "candidates: {}", r.candidates.len())?;
                for c in &r.candidates {
                    let row: String = c.first_row.iter().map(|&s| sign_char(s)).collect();
                    let pivot = match c.extraction {
                        PivotOutcome::Found { i0, k } => format!("i0={i0} k={k}"),
                        PivotOutcome::Failure => "failure".to_string(),
                    };
                    writeln!(out, "{row} line sums zero: {} pivot: {pivot}", yes(c.column_sums_ok))?;
                }
            }
            if r.violations() > 0 {
                return Err(Fail::Violation(format!(
                    "theorem violation: {} balanced candidates admit no pivot",
                    r.violations()
                )));
            }
            Ok(EXIT_OK)
        }
        Command::Gen { n, seed, output } => {
            let text = random_member(n, seed)?.to_edge_list();
            match output {
                Some(path) => fs::write(&path, text).map_err(|e| Fail::Invalid(format!("{}: {e}", path.display())))?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            n,
            jobs,
            json,
            allow_large,
        } => {
            warn_if_large(err, n, CLASS_CAP, allow_large);
            let s = verify_theorem_with(
                n,
                VerifyOptions {
                    jobs: jobs.max(1),
                    allow_large,
                },
            )?;
            if json {
                emit_json(out, &s)?;
            } else {
                let m = &s.methods;
                let t = &s.second_assertion;
                writeln!(out, "n: {}", s.n)?;
                writeln!(out, "members: {}", s.members)?;
                writeln!(out, "independent count: {}", s.independent_count)?;
                writeln!(
                    out,
                    "methods: condition1a={} condition1b={} condition2={} structural={}",
                    m.condition1a, m.condition1b, m.condition2, m.structural
                )?;
                writeln!(out, "oracle agreements: {}", s.oracle_agreements)?;
                writeln!(
                    out,
                    "second assertion: confirmed={} inconclusive={} refuted={}",
                    t.bipancyclic_confirmed, t.inconclusive, t.refuted
                )?;
                writeln!(out, "failures: {}", s.failures.len())?;
                for f in &s.failures {
                    writeln!(out, "  member {}: {}", f.member, f.reason)?;
                }
            }
            if s.is_clean() {
                Ok(EXIT_OK)
            } else {
                Err(Fail::Violation(format!(
                    "theorem violation: {} failing members, count agreement {}",
                    s.failures.len(),
                    yes(s.count_agrees)
                )))
            }
        }
    }
}

fn join<T: ToString>(items: impl Iterator<Item = T>) -> String {
    items.map(|t| t.to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct CheckReport {
    n: usize,
    order: usize,
    size: usize,
    half_regular: bool,
    hamiltonian: bool,
    member: bool,
}

fn check(g: &BalancedBipartiteGraph, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Fail> {
    let verdict = validate_class_member(g);
    let report = CheckReport {
        n: g.n(),
        order: g.order(),
        size: g.size(),
        half_regular: g.is_half_regular(),
        hamiltonian: find_hamilton_cycle(g).is_some(),
        member: verdict.is_ok(),
    };
    if json {
        emit_json(out, &report)?;
    } else {
        writeln!(out, "n: {}", report.n)?;
        writeln!(out, "order: {}", report.order)?;
        writeln!(out, "size: {}", report.size)?;
        writeln!(out, "half-regular: {}", yes(report.half_regular))?;
        writeln!(out, "hamiltonian: {}", yes(report.hamiltonian))?;
        writeln!(out, "class member: {}", yes(report.member))?;
    }
    match verdict {
        Ok(_) => Ok(EXIT_OK),
        Err(e) => {
            writeln!(err, "{e}")?;
            Ok(EXIT_INVALID)
        }
    }
}

#[derive(Serialize)]
struct LengthReport {
    length: usize,
    present: bool,
    witness: Option<CycleWitness>,
}

fn pancyclic(g: &BalancedBipartiteGraph, length: Option<usize>, json: bool, out: &mut dyn Write) -> Result<i32, Fail> {
    if let Some(length) = length {
        let witness = find_cycle_of_length(g, length);
        let present = witness.is_some();
        if json {
            emit_json(out, &LengthReport { length, present, witness })?;
        } else {
            writeln!(out, "cycle of length {length}: {}", yes(present))?;
            if let Some(w) = witness {
                writeln!(out, "witness: {w}")?;
            }
        }
        return Ok(if present { EXIT_OK } else { EXIT_FALSE });
    }
    let r = is_bipancyclic(g);
    if json {
        emit_json(out, &r)?;
    } else {
        writeln!(out, "lengths present: {}", join(r.lengths_present.iter()))?;
        writeln!(out, "bipancyclic: {}", yes(r.is_bipancyclic))?;
        let size_rule = match es_predict(g) {
            SizePrediction::PredictBipancyclic => "predicts bipancyclic",
            SizePrediction::NotApplicable(NotApplicableReason::NotHamiltonian) => "not applicable (not hamiltonian)",
            SizePrediction::NotApplicable(NotApplicableReason::SizeTooSmall) => "not applicable (size at most n^2/2)",
        };
        writeln!(out, "size criterion: {size_rule}")?;
    }
    Ok(if r.is_bipancyclic { EXIT_OK } else { EXIT_FALSE })
}

#[derive(Serialize)]
struct CensusReport {
    n: usize,
    members: u64,
    independent_count: u64,
    count_agrees: bool,
    files_written: Option<u64>,
}

fn census_cmd(
    n: usize,
    dir: Option<&Path>,
    json: bool,
    allow_large: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Fail> {
    let stream = if allow_large {
        warn_if_large(err, n, CLASS_CAP, true);
        enumerate_class_uncapped(n)?
    } else {
        enumerate_class(n)?
    };
    if let Some(dir) = dir {
        fs::create_dir_all(dir).map_err(|e| Fail::Invalid(format!("{}: {e}", dir.display())))?;
    }
    let mut members = 0u64;
    for g in stream {
        members += 1;
        if let Some(dir) = dir {
            let path = dir.join(format!("{members:08}.txt"));
            fs::write(&path, g.to_edge_list()).map_err(|e| Fail::Invalid(format!("{}: {e}", path.display())))?;
        }
    }
    let independent_count = independent_class_count(n)? as u64;
    let report = CensusReport {
        n,
        members,
        independent_count,
        count_agrees: members == independent_count,
        files_written: dir.map(|_| members),
    };
    if json {
        emit_json(out, &report)?;
    } else {
        writeln!(out, "n: {n}")?;
        writeln!(out, "members: {members}")?;
        writeln!(out, "independent count: {independent_count}")?;
        if let Some(dir) = dir {
            writeln!(out, "written: {members} files to {}", dir.display())?;
        }
    }
    if report.count_agrees {
        Ok(EXIT_OK)
    } else {
        Err(Fail::Violation(format!(
            "enumeration produced {members} members but the independent count is {independent_count}"
        )))
    }
}
