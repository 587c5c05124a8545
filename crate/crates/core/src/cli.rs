//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a predicate (`graphic`, `verify`) answers
//! no, 2 on malformed input or a violated precondition. Errors are a single
//! `error: CODE: message` line on the error stream.

use std::io::{Read, Write};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::elimination::{
    eliminate_with_order, hh_eliminate, is_graphic, Chooser, EliminationEnumerator,
    EliminationError, ExplicitValues, MaxFirst, MinPositive, DEFAULT_BUDGET,
};
use crate::realization::{hh_realize, independence_number, RealizationError, SimpleGraph};
use crate::sequence::{compare_dominance, conjugate, ferrers_render, normalize, DegreeSequence, SequenceError};
use crate::verify::{self, random_graphic_sequence, ScopeRequest, VerifyError};

/// Overrides the default enumeration budget.
pub const BUDGET_ENV: &str = "DEGSEQ_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "degseq", version, about = "Degree sequences, elimination orders and residues")]
struct Cli {
    /// Emit one JSON object with `input`, `result` and `meta` fields.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exit 0 if the sequence is graphic, 1 otherwise.
    Graphic {
        #[arg(allow_hyphen_values = true)]
        seq: String,
    },
    /// Residue (zeros left by Havel-Hakimi).
    Residue {
        #[arg(allow_hyphen_values = true)]
        seq: String,
    },
    /// Elimination sequence under an order: max, min, or values=v1,v2,...
    Eliminate {
        #[arg(allow_hyphen_values = true)]
        seq: String,
        #[arg(long, default_value = "max")]
        order: String,
        /// Also print every lay-off step.
        #[arg(long)]
        trace: bool,
    },
    /// Every elimination sequence reachable by some lay-off order.
    Enumerate {
        #[arg(allow_hyphen_values = true)]
        seq: String,
        /// Cap on memoized states (default from DEGSEQ_BUDGET or 1000000).
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Run a registered check, or `all`; `list` prints the registry.
    Verify {
        check: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Havel-Hakimi realization as an edge list.
    Realize {
        #[arg(allow_hyphen_values = true)]
        seq: String,
    },
    /// Independence number of the Havel-Hakimi realization, or of an edge-list file.
    Alpha {
        #[arg(allow_hyphen_values = true)]
        seq: Option<String>,
        /// Edge-list file ("-" for standard input) instead of a sequence.
        #[arg(long, conflicts_with = "seq")]
        graph: Option<String>,
    },
    /// Conjugate sequence.
    Conjugate {
        #[arg(allow_hyphen_values = true)]
        seq: String,
    },
    /// Ferrers diagram.
    Ferrers {
        #[arg(allow_hyphen_values = true)]
        seq: String,
    },
    /// Compare two sequences in the dominance order.
    Dominates {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// Degree sequence of a seeded G(n, p) sample.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug)]
struct CliError {
    code: &'static str,
    message: String,
}

impl CliError {
    fn new(code: &'static str, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }
}

impl From<SequenceError> for CliError {
    fn from(e: SequenceError) -> Self {
        let code = match e {
            SequenceError::NegativeEntry { .. } => "NEGATIVE_ENTRY",
            SequenceError::InvalidStep { .. } => "INVALID_STEP",
            SequenceError::NegativeResult { .. } | SequenceError::ReductionTooLong { .. } => "NEGATIVE_RESULT",
        };
        CliError::new(code, e.to_string())
    }
}

impl From<EliminationError> for CliError {
    fn from(e: EliminationError) -> Self {
        let code = match e {
            EliminationError::NotGraphic(_)
            | EliminationError::HeadTooLarge { .. }
            | EliminationError::NonGraphicWitness { .. } => "NOT_GRAPHIC",
            EliminationError::ValueAbsent { .. } | EliminationError::ChooserInvalid { .. } => "CHOOSER_INVALID",
            EliminationError::BudgetExceeded { .. } => "BUDGET_EXCEEDED",
        };
        CliError::new(code, e.to_string())
    }
}

impl From<RealizationError> for CliError {
    fn from(e: RealizationError) -> Self {
        let code = match e {
            RealizationError::NotGraphic(_) => "NOT_GRAPHIC",
            RealizationError::TooLarge { .. } => "TOO_LARGE",
            RealizationError::InvalidEdge { .. } | RealizationError::Parse(_) => "MALFORMED_INPUT",
        };
        CliError::new(code, e.to_string())
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::UnknownCheck(_) => CliError::new("UNKNOWN_CHECK", e.to_string()),
            VerifyError::TooLarge { .. } => CliError::new("TOO_LARGE", e.to_string()),
            VerifyError::InvalidProbability(_) => CliError::new("INVALID_ARGUMENT", e.to_string()),
            VerifyError::Elimination(inner) => inner.into(),
            VerifyError::Realization(inner) => inner.into(),
        }
    }
}

/// Parse space- or comma-separated non-negative integers.
pub fn parse_sequence(text: &str) -> Result<DegreeSequence, String> {
    let raw: Result<Vec<i64>, String> = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| format!("not an integer: {t:?}")))
        .collect();
    normalize(&raw?).map_err(|e| e.to_string())
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Io<'_> {
    fn read_arg(&mut self, arg: &str) -> Result<String, CliError> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        if self.stdin_used {
            return Err(CliError::new("MALFORMED_INPUT", "standard input requested twice"));
        }
        self.stdin_used = true;
        let mut buf = String::new();
        self.stdin
            .read_to_string(&mut buf)
            .map_err(|e| CliError::new("IO", e.to_string()))?;
        Ok(buf)
    }

    fn sequence(&mut self, arg: &str) -> Result<DegreeSequence, CliError> {
        let text = self.read_arg(arg)?;
        parse_sequence(&text).map_err(|m| {
            let code = if m.starts_with("negative") { "NEGATIVE_ENTRY" } else { "MALFORMED_INPUT" };
            CliError::new(code, m)
        })
    }
}

/// What a subcommand produced: text for humans, a JSON pair for machines.
struct Outcome {
    text: String,
    input: Value,
    result: Value,
    exit: i32,
}

fn spaced(values: &[u32]) -> String {
    values.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn default_budget() -> Result<usize, CliError> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::new("INVALID_ARGUMENT", format!("{BUDGET_ENV} is not a count: {v:?}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn parse_order(order: &str) -> Result<Box<dyn Chooser>, CliError> {
    match order {
        "max" => Ok(Box::new(MaxFirst)),
        "min" => Ok(Box::new(MinPositive)),
        other => {
            let list = other.strip_prefix("values=").ok_or_else(|| {
                CliError::new("INVALID_ARGUMENT", format!("unknown order {other:?}; use max, min or values=..."))
            })?;
            let values: Result<Vec<u32>, _> = list
                .split(',')
                .filter(|t| !t.is_empty())
                .map(|t| t.trim().parse::<u32>())
                .collect();
            let values = values.map_err(|_| CliError::new("MALFORMED_INPUT", format!("bad value list {list:?}")))?;
            Ok(Box::new(ExplicitValues::new(values)))
        }
    }
}

fn execute(command: Command, io: &mut Io<'_>) -> Result<Outcome, CliError> {
    let seq_input = |s: &DegreeSequence| json!({ "sequence": s });
    Ok(match command {
        Command::Graphic { seq } => {
            let s = io.sequence(&seq)?;
            let graphic = is_graphic(&s);
            Outcome {
                text: format!("{graphic}\n"),
                input: seq_input(&s),
                result: json!({ "graphic": graphic }),
                exit: if graphic { 0 } else { 1 },
            }
        }
        Command::Residue { seq } => {
            let s = io.sequence(&seq)?;
            let r = hh_eliminate(&s)?;
            Outcome {
                text: format!("{}\n", r.residue),
                input: seq_input(&s),
                result: json!({ "residue": r.residue, "depth": r.depth }),
                exit: 0,
            }
        }
        Command::Eliminate { seq, order, trace } => {
            let s = io.sequence(&seq)?;
            let mut chooser = parse_order(&order)?;
            let t = eliminate_with_order(&s, chooser.as_mut())?;
            let elim = t.elimination_sequence();
            let mut text = String::new();
            if trace {
                for step in &t.steps {
                    text.push_str(&format!("lay off {} -> {}\n", step.laid_off, step.result));
                }
            }
            text.push_str(&spaced(elim.as_slice()));
            text.push('\n');
            Outcome {
                text,
                input: json!({ "sequence": s, "order": order }),
                result: json!({
                    "elimination_sequence": elim,
                    "laid_off": t.laid_off(),
                    "steps": t.steps,
                }),
                exit: 0,
            }
        }
        Command::Enumerate { seq, budget } => {
            let s = io.sequence(&seq)?;
            let budget = match budget {
                Some(b) => b,
                None => default_budget()?,
            };
            let mut enumerator = EliminationEnumerator::new(budget);
            let all = enumerator.enumerate(&s)?;
            let text: String = all.iter().rev().map(|e| format!("{}\n", spaced(e.as_slice()))).collect();
            let list: Vec<&[u32]> = all.iter().rev().map(|e| e.as_slice()).collect();
            Outcome {
                text,
                input: json!({ "sequence": s, "budget": budget }),
                result: json!({ "count": all.len(), "states": enumerator.states(), "sequences": list }),
                exit: 0,
            }
        }
        Command::Verify { check, n, seed, samples, budget } => {
            if check == "list" {
                let text: String = verify::CHECKS.iter().map(|c| format!("{}\t{}\n", c.id, c.claim)).collect();
                let ids: Vec<&str> = verify::check_ids().collect();
                return Ok(Outcome { text, input: json!({ "check": "list" }), result: json!({ "checks": ids }), exit: 0 });
            }
            let budget = match budget {
                Some(b) => Some(b),
                None => Some(default_budget()?),
            };
            let req = ScopeRequest { max_len: n, samples, seed, budget };
            let ids: Vec<&str> = if check == "all" { verify::check_ids().collect() } else { vec![check.as_str()] };
            let mut reports = Vec::new();
            let mut text = String::new();
            for id in ids {
                let report = verify::run_check(id, &req)?;
                text.push_str(&format!(
                    "{} {}: instances={} skipped={} failures={}\n",
                    if report.pass { "PASS" } else { "FAIL" },
                    report.check_id,
                    report.instances,
                    report.skipped,
                    report.failures.len()
                ));
                for f in &report.failures {
                    text.push_str(&format!("  input {} expected {} actual {}\n", f.input, f.expected, f.actual));
                }
                reports.push(report);
            }
            let pass = reports.iter().all(|r| r.pass);
            let result = if reports.len() == 1 { json!(reports[0]) } else { json!(reports) };
            Outcome {
                text,
                input: json!({ "check": check, "n": n, "seed": seed, "samples": samples }),
                result,
                exit: if pass { 0 } else { 1 },
            }
        }
        Command::Realize { seq } => {
            let s = io.sequence(&seq)?;
            let g = hh_realize(&s)?;
            Outcome {
                text: g.to_edge_list(),
                input: seq_input(&s),
                result: json!({ "n": g.vertex_count(), "edges": g.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>() }),
                exit: 0,
            }
        }
        Command::Alpha { seq, graph } => {
            let (g, input) = match (seq, graph) {
                (_, Some(path)) => {
                    let text = if path == "-" {
                        io.read_arg("-")?
                    } else {
                        std::fs::read_to_string(&path).map_err(|e| CliError::new("IO", format!("{path}: {e}")))?
                    };
                    (SimpleGraph::parse_edge_list(&text)?, json!({ "graph": path }))
                }
                (Some(seq), None) => {
                    let s = io.sequence(&seq)?;
                    (hh_realize(&s)?, seq_input(&s))
                }
                (None, None) => return Err(CliError::new("MALFORMED_INPUT", "need a sequence or --graph")),
            };
            let alpha = independence_number(&g)?;
            Outcome { text: format!("{alpha}\n"), input, result: json!({ "alpha": alpha }), exit: 0 }
        }
        Command::Conjugate { seq } => {
            let s = io.sequence(&seq)?;
            let c = conjugate(&s);
            Outcome {
                text: format!("{}\n", spaced(c.as_slice())),
                input: seq_input(&s),
                result: json!({ "conjugate": c }),
                exit: 0,
            }
        }
        Command::Ferrers { seq } => {
            let s = io.sequence(&seq)?;
            let diagram = ferrers_render(&s);
            Outcome { text: diagram.clone(), input: seq_input(&s), result: json!({ "ferrers": diagram }), exit: 0 }
        }
        Command::Dominates { first, second } => {
            let a = io.sequence(&first)?;
            let b = io.sequence(&second)?;
            let verdict = compare_dominance(&a, &b);
            Outcome {
                text: format!("{verdict}\n"),
                input: json!({ "first": a, "second": b }),
                result: json!({ "verdict": verdict.to_string() }),
                exit: 0,
            }
        }
        Command::Random { n, p, seed } => {
            let s = random_graphic_sequence(n, p, seed)?;
            Outcome {
                text: format!("{}\n", spaced(s.as_slice())),
                input: json!({ "n": n, "p": p, "seed": seed }),
                result: json!({ "sequence": s }),
                exit: 0,
            }
        }
    })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Graphic { .. } => "graphic",
        Command::Residue { .. } => "residue",
        Command::Eliminate { .. } => "eliminate",
        Command::Enumerate { .. } => "enumerate",
        Command::Verify { .. } => "verify",
        Command::Realize { .. } => "realize",
        Command::Alpha { .. } => "alpha",
        Command::Conjugate { .. } => "conjugate",
        Command::Ferrers { .. } => "ferrers",
        Command::Dominates { .. } => "dominates",
        Command::Random { .. } => "random",
    }
}

/// Run one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let first = e.to_string().lines().next().unwrap_or("").trim_start_matches("error: ").to_string();
            let _ = writeln!(err, "error: USAGE: {first}");
            return 2;
        }
    };
    let name = command_name(&cli.command);
    let mut io = Io { stdin, stdin_used: false };
    match execute(cli.command, &mut io) {
        Ok(outcome) => {
            let written = if cli.json {
                let doc = json!({
                    "input": outcome.input,
                    "result": outcome.result,
                    "meta": { "command": name, "version": env!("CARGO_PKG_VERSION"), "exit": outcome.exit },
                });
                writeln!(out, "{}", serde_json::to_string(&doc).expect("json"))
            } else {
                write!(out, "{}", outcome.text)
            };
            if written.is_err() {
                return 2;
            }
            outcome.exit
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}: {}", e.code, e.message.replace('\n', " "));
            2
        }
    }
}
