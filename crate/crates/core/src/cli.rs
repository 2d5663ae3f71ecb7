//! Batch command-line front end. [`dispatch`] parses an argument vector,
//! runs one engine operation and returns the exit code with the text to print.
//!
//! Exit codes: 0 success, 1 domain error or a check that came out false,
//! 2 usage or malformed input, 3 size cap or budget exceeded.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::corpus;
use crate::error::{Error, Result};
use crate::lab;
use crate::matroid::{Matroid, MatroidExpr};
use crate::reduction::reduce_to_weakly_4_connected;
use crate::tangle::{breadth, enumerate_tangles, tangle_matroid, truncate_tangle, Tangle, TangleDocument};
use crate::SubsetMask;

#[derive(Parser, Debug)]
#[command(name = "tanglekit", version, about = "Tangles, tangle matroids and breadth of small matroids")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel scans.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for anything random. Defaults to a fixed value.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    verb: Verb,
}

/// A matroid: a JSON file path, inline JSON, or `corpus:NAME`.
#[derive(Args, Debug)]
struct Input {
    input: String,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Enumerate the tangles of a given order.
    Tangles {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        list_maximal_small: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Tangle matroid of each tangle of a given order.
    TangleMatroid {
        #[arg(long)]
        order: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Breadth of each tangle of a given order.
    Breadth {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Reduce to a weakly 4-connected minor keeping breadth.
    Reduce {
        #[arg(long)]
        order: usize,
        /// Write the trace of the first tangle as JSON.
        #[arg(long, value_name = "PATH")]
        trace: Option<String>,
        #[command(flatten)]
        input: Input,
    },
    /// One connectivity predicate.
    Check {
        #[command(flatten)]
        what: CheckWhat,
        #[command(flatten)]
        input: Input,
    },
    /// Whether a set of labels is k-connected.
    Kconn {
        #[arg(long, value_name = "LABELS")]
        set: String,
        #[arg(long)]
        order: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Run a property suite, or `all`.
    VerifySuite {
        suite: String,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Truncate each tangle of a given order.
    Truncate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        to: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Print an example matroid as JSON: u37, k4, critical:S or random:N,R,SEED.
    GenExample {
        name: String,
        /// Write to a file instead of stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<String>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct CheckWhat {
    #[arg(long)]
    weak4: bool,
    #[arg(long)]
    round: bool,
    #[arg(long, value_name = "SET")]
    titanic: Option<String>,
    #[arg(long, value_name = "SET")]
    solid: Option<String>,
    #[arg(long, value_name = "SET")]
    fully_closed: Option<String>,
    #[arg(long, value_name = "S0,S1,..")]
    svec: Option<String>,
}

struct Out {
    code: i32,
    text: String,
}

impl Out {
    fn ok(text: String) -> Out {
        Out { code: 0, text }
    }

    fn verdict(holds: bool, text: String) -> Out {
        Out { code: if holds { 0 } else { 1 }, text }
    }
}

/// Run one command. `argv[0]` is the program name.
pub fn dispatch<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    if let Some(t) = cli.threads {
        crate::limits::set_threads(t);
    }
    match run(&cli) {
        Ok(out) => (out.code, out.text),
        Err(e) => (exit_code(&e), format!("error: {e}\n")),
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Domain(_) | Error::Precondition(_) | Error::Internal { .. } => 1,
        Error::Structural(_) | Error::Parse(_) | Error::Io(_) => 2,
        Error::Resource { .. } => 3,
    }
}

fn load(input: &Input) -> Result<Matroid> {
    let s = input.input.trim();
    if let Some(name) = s.strip_prefix("corpus:") {
        return corpus::entry(name)
            .ok_or_else(|| Error::Structural(format!("no corpus entry named {name}")))?
            .build();
    }
    let text = if s.starts_with('{') {
        s.to_string()
    } else {
        std::fs::read_to_string(s).map_err(|e| Error::Io(format!("{s}: {e}")))?
    };
    MatroidExpr::from_json(&text)?.build()
}

fn parse_set(m: &Matroid, s: &str) -> Result<SubsetMask> {
    let labels: Vec<&str> = s.split(',').map(str::trim).filter(|l| !l.is_empty()).collect();
    m.mask_of(&labels)
}

fn show(m: &Matroid, a: SubsetMask) -> String {
    format!("{{{}}}", m.labels_of(a).join(","))
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn count(n: usize) -> String {
    format!("{n} tangle{} found", if n == 1 { "" } else { "s" })
}

fn run(cli: &Cli) -> Result<Out> {
    match &cli.verb {
        Verb::Tangles { order, list_maximal_small, input } => {
            let m = load(input)?;
            let ts = enumerate_tangles(&m, *order)?;
            if cli.json {
                let mut rows = Vec::new();
                for t in &ts {
                    rows.push(json!({ "tangle": t.to_json(), "breadth": breadth(t)?.value }));
                }
                return Ok(Out::ok(pretty(&json!({
                    "matroid": m.expr(), "order": order, "count": ts.len(), "tangles": rows,
                }))));
            }
            let mut s = format!("{}\n", count(ts.len()));
            for (i, t) in ts.iter().enumerate() {
                let b = breadth(t)?.value;
                writeln!(s, "tangle {}: breadth {b}, {} maximal small sets", i + 1, t.maximal_small().len()).unwrap();
                if *list_maximal_small {
                    for &h in t.maximal_small() {
                        writeln!(s, "  {}", show(&m, h)).unwrap();
                    }
                }
            }
            Ok(Out::ok(s))
        }
        Verb::TangleMatroid { order, input } => {
            let m = load(input)?;
            let ts = enumerate_tangles(&m, *order)?;
            let mut rows = Vec::new();
            let mut s = format!("{}\n", count(ts.len()));
            for (i, t) in ts.iter().enumerate() {
                let p = tangle_matroid(t)?;
                let p = p.matroid();
                rows.push(json!({ "tangle": t.to_json(), "tangle_matroid": p.expr() }));
                let hyps = p.hyperplanes()?;
                writeln!(s, "tangle {}: rank {}, {} hyperplanes", i + 1, p.full_rank(), hyps.len()).unwrap();
                for h in hyps {
                    writeln!(s, "  {}", show(p, h)).unwrap();
                }
            }
            if cli.json {
                return Ok(Out::ok(pretty(&json!({ "order": order, "tangle_matroids": rows }))));
            }
            Ok(Out::ok(s))
        }
        Verb::Breadth { order, witness, input } => {
            let m = load(input)?;
            let ts = enumerate_tangles(&m, *order)?;
            let mut rows = Vec::new();
            let mut s = format!("{}\n", count(ts.len()));
            for (i, t) in ts.iter().enumerate() {
                let b = breadth(t)?;
                rows.push(json!({ "breadth": b.value, "witness": m.labels_of(b.witness) }));
                write!(s, "tangle {}: breadth {}", i + 1, b.value).unwrap();
                if *witness {
                    write!(s, ", witness {}", show(&m, b.witness)).unwrap();
                }
                s.push('\n');
            }
            if cli.json {
                return Ok(Out::ok(pretty(&json!({ "order": order, "tangles": rows }))));
            }
            Ok(Out::ok(s))
        }
        Verb::Reduce { order, trace, input } => {
            let m = load(input)?;
            let ts = enumerate_tangles(&m, *order)?;
            if ts.is_empty() {
                return Err(Error::Domain(format!("no tangle of order {order}")));
            }
            let mut s = String::new();
            let mut rows = Vec::new();
            for (i, t) in ts.iter().enumerate() {
                let tr = reduce_to_weakly_4_connected(t)?;
                if i == 0 {
                    if let Some(path) = trace {
                        std::fs::write(path, pretty(&tr.to_json())).map_err(|e| Error::Io(format!("{path}: {e}")))?;
                    }
                }
                if ts.len() > 1 {
                    write!(s, "tangle {}: ", i + 1).unwrap();
                }
                if tr.steps.is_empty() {
                    writeln!(s, "already weakly 4-connected; breadth {}", tr.initial_breadth).unwrap();
                } else {
                    writeln!(
                        s,
                        "reduced in {} steps to a weakly 4-connected minor on {} elements; breadth {}",
                        tr.steps.len(),
                        tr.final_matroid.len(),
                        tr.initial_breadth
                    )
                    .unwrap();
                    for st in &tr.steps {
                        writeln!(s, "  {} ({})", st.removal, st.rule).unwrap();
                    }
                }
                rows.push(tr.to_json());
            }
            if cli.json {
                return Ok(Out::ok(pretty(&json!({ "order": order, "traces": rows }))));
            }
            Ok(Out::ok(s))
        }
        Verb::Check { what, input } => {
            let m = load(input)?;
            let (name, holds, witness) = if what.weak4 {
                let v = m.svec_violation(&[0, 1, 4])?;
                ("weak4", v.is_none(), v)
            } else if what.round {
                ("round", m.is_round()?, None)
            } else if let Some(set) = &what.titanic {
                ("titanic", m.is_titanic(parse_set(&m, set)?)?, None)
            } else if let Some(set) = &what.solid {
                ("solid", m.is_solid(parse_set(&m, set)?)?, None)
            } else if let Some(set) = &what.fully_closed {
                let a = parse_set(&m, set)?;
                ("fully-closed", m.is_fully_closed(a), None)
            } else if let Some(svec) = &what.svec {
                let sv = svec
                    .split(',')
                    .map(|x| x.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|e| Error::Parse(format!("--svec {svec}: {e}")))?;
                let v = m.svec_violation(&sv)?;
                ("svec", v.is_none(), v)
            } else {
                unreachable!("clap requires one check")
            };
            let text = if cli.json {
                pretty(&json!({ "check": name, "holds": holds, "witness": witness.map(|a| m.labels_of(a)) }))
            } else {
                match witness {
                    Some(a) => format!("{holds}\nviolating side {}\n", show(&m, a)),
                    None => format!("{holds}\n"),
                }
            };
            Ok(Out::verdict(holds, text))
        }
        Verb::Kconn { set, order, input } => {
            let m = load(input)?;
            let z = parse_set(&m, set)?;
            let v = m.k_connected_violation(z, *order)?;
            let text = if cli.json {
                pretty(&json!({ "holds": v.is_none(), "witness": v.map(|a| m.labels_of(a)) }))
            } else {
                match v {
                    Some(a) => format!("false\nviolating side {}\n", show(&m, a)),
                    None => "true\n".to_string(),
                }
            };
            Ok(Out::verdict(v.is_none(), text))
        }
        Verb::VerifySuite { suite, budget } => {
            let reports = if suite == "all" {
                lab::run_all(*budget)?
            } else {
                let s = lab::suite(suite).ok_or_else(|| Error::Structural(format!("unknown suite {suite}")))?;
                let mut sel = (s.selector)();
                if let Some(seed) = cli.seed {
                    sel.seed = seed;
                }
                vec![lab::run_suite(suite, &sel, *budget)?]
            };
            let passed = reports.iter().all(|r| r.passed());
            let text = if cli.json {
                let all: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
                pretty(&serde_json::Value::Array(all))
            } else {
                let mut s = String::new();
                for r in &reports {
                    writeln!(s, "{}", r.summary()).unwrap();
                    for f in &r.failures {
                        writeln!(s, "  {} [{}] {}", f.instance, f.fingerprint, f.witness).unwrap();
                    }
                }
                s
            };
            Ok(Out::verdict(passed, text))
        }
        Verb::Truncate { order, to, input } => {
            let m = load(input)?;
            let ts = enumerate_tangles(&m, *order)?;
            let tt: Vec<Tangle> = ts.iter().map(|t| truncate_tangle(t, *to)).collect::<Result<_>>()?;
            if cli.json {
                let docs: Vec<_> = tt.iter().map(TangleDocument::new).collect();
                return Ok(Out::ok(pretty(&json!({ "order": to, "tangles": docs }))));
            }
            let mut s = format!("{}\n", count(ts.len()));
            for (i, t) in tt.iter().enumerate() {
                writeln!(s, "tangle {}: order {} truncates to order {to}, breadth {}", i + 1, order, breadth(t)?.value).unwrap();
                for &h in t.maximal_small() {
                    writeln!(s, "  {}", show(&m, h)).unwrap();
                }
            }
            Ok(Out::ok(s))
        }
        Verb::GenExample { name, out } => {
            let m = example(name, cli.seed)?;
            let text = m.expr().to_json() + "\n";
            match out {
                Some(path) => {
                    std::fs::write(path, &text).map_err(|e| Error::Io(format!("{path}: {e}")))?;
                    Ok(Out::ok(format!("wrote {path}\n")))
                }
                None => Ok(Out::ok(text)),
            }
        }
    }
}

/// `u37`, `k4`, `critical:S`, `random:N,R[,SEED]` (a random binary matroid), or
/// any corpus entry name.
fn example(name: &str, seed: Option<u64>) -> Result<Matroid> {
    let bad = || Error::Structural(format!("unknown example {name}"));
    if let Some(s) = name.strip_prefix("critical:") {
        return corpus::breadth_critical_matroid(s.parse().map_err(|_| bad())?);
    }
    if let Some(args) = name.strip_prefix("random:") {
        let parts: Vec<u64> = args
            .split(',')
            .map(|x| x.trim().parse())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let (n, r, s) = match parts[..] {
            [n, r] => (n, r, seed.unwrap_or(lab::DEFAULT_SEED)),
            [n, r, s] => (n, r, s),
            _ => return Err(bad()),
        };
        return corpus::random_binary_matroid(n as usize, r as usize, s);
    }
    match name {
        "u37" => Ok(corpus::u37()),
        "k4" => Ok(corpus::k4()),
        _ => corpus::entry(name).ok_or_else(bad)?.build(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String) {
        dispatch(std::iter::once("tanglekit").chain(args.iter().copied()))
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&["tangles", "--order", "3", "corpus:k4"]).0, 0);
        assert_eq!(run(&["frobnicate"]).0, 2);
        assert_eq!(run(&["tangles", "corpus:k4"]).0, 2);
        assert_eq!(run(&["tangles", "--order", "3", "{\"kind\":\"nope\"}"]).0, 2);
        assert_eq!(run(&["check", "--weak4", "corpus:k4"]).0, 0);
        let (code, text) = run(&["check", "--svec", "0,1,1", "corpus:k4"]);
        assert_eq!(code, 1, "{text}");
        assert_eq!(run(&["reduce", "--order", "5", "corpus:k4"]).0, 1);
        assert_eq!(run(&["verify-suite", "nope"]).0, 2);
    }

    #[test]
    fn resource_cap_exits_three() {
        let big = MatroidExpr::uniform(3, 30).to_json();
        assert_eq!(run(&["tangles", "--order", "3", &big]).0, 3);
    }
}
