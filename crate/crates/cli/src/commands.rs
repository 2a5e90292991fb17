//! Subcommand execution. Every command yields a JSON value, a text
//! rendering and an exit code; the binary only prints.

use std::fmt::Write as _;

use clap::Parser;
use rootloop_core::pattern::weight_obstruction;
use rootloop_core::{
    classify_finite_type, compute_rooted_group, coset_set, enumerate_cluster_pattern,
    enumerate_rooted_loops, is_finite_type_in, isomorphic, pattern_dot, quiver_dot,
    ClassificationReport, ClusterPattern, CosetReport, EqualityMode, Evidence, FiniteTypeVerdict,
    GroupCaps, GroupError, GroupReport, InfiniteReason, IsoReport, LoopsReport, PatternReport,
    Seed, TraceReport, Verdict,
};
use serde::Serialize;
use serde_json::Value;

use crate::args::{Cli, Command, Format, QuiverArgs};
use crate::error::{CliError, EXIT_INFINITE, EXIT_OK, EXIT_UNKNOWN};
use crate::input::{load_quiver, parse_word, quiver_with_mutable};

/// Result of one command.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub code: i32,
    pub json: Value,
    pub text: String,
}

impl Report {
    fn new(code: i32, value: &impl Serialize, text: String) -> Self {
        Self {
            code,
            json: serde_json::to_value(value).expect("reports serialize"),
            text,
        }
    }

    fn raw(text: String) -> Self {
        Self {
            code: EXIT_OK,
            json: Value::String(text.clone()),
            text,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s =
                    serde_json::to_string_pretty(&self.json).expect("json values serialize");
                s.push('\n');
                s
            }
        }
    }
}

/// What the process prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (program name first) and runs it. `serve` is refused here;
/// the binary handles it.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: crate::error::EXIT_PARSE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok(r) => Output {
            code: r.code,
            stdout: r.render(cli.format),
            stderr: String::new(),
        },
        Err(e) => Output {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn root(q: &QuiverArgs) -> Result<Seed, CliError> {
    Ok(Seed::initial(&quiver_with_mutable(
        &q.quiver,
        q.mutable.as_deref(),
    )?))
}

pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let (mode, cap) = (cli.mode, cli.cap);
    match &cli.command {
        Command::Mutate { quiver, word } => mutate(quiver, word, mode),
        Command::Explore { quiver, dot } => explore(quiver, *dot, mode, cap),
        Command::Finite { quiver } => finite(quiver, mode, cap),
        Command::Classify { quiver } => classify(quiver, cap),
        Command::Loops {
            quiver,
            max_len,
            limit,
        } => loops(quiver, mode, *max_len, *limit),
        Command::Group {
            quiver,
            max_walk_len,
            max_elements,
        } => group(
            quiver,
            mode,
            GroupCaps {
                max_walk_len: *max_walk_len,
                max_elements: *max_elements,
                pattern_cap: cap,
            },
        ),
        Command::Cosets { quiver } => cosets(quiver, mode, cap),
        Command::Iso { quiver, other } => iso(quiver, other, cap),
        Command::ExportDot { quiver, pattern } => export_dot(quiver, *pattern, mode, cap),
        Command::Serve { .. } => Err(CliError::Parse("serve runs only from the binary".into())),
    }
}

fn mutate(q: &QuiverArgs, word: &str, mode: EqualityMode) -> Result<Report, CliError> {
    let root = root(q)?;
    let word = parse_word(word, &root.quiver)?;
    let trace = root.apply_word(&word)?;
    let r = TraceReport::new(&trace, mode);
    let mut t = String::new();
    let _ = writeln!(t, "word: {}", r.word);
    let _ = writeln!(t, "initial: {}", trace.initial());
    for (i, ((k, x), c)) in word
        .steps()
        .iter()
        .zip(&r.produced)
        .zip(&r.cancelled)
        .enumerate()
    {
        let mark = if *c { "  (cancelled)" } else { "" };
        let _ = writeln!(t, "step {}: mutate {} -> {x}{mark}", i + 1, k + 1);
    }
    let _ = writeln!(t, "final: {}", trace.last());
    let _ = writeln!(t, "cluster set: {{{}}}", r.cluster_set.join(", "));
    let _ = writeln!(t, "loop: {}", loop_text(&r.loop_status, mode));
    Ok(Report::new(EXIT_OK, &r, t))
}

fn loop_text(s: &rootloop_core::LoopStatus, mode: EqualityMode) -> String {
    match (&s.witness, s.strict) {
        (_, true) => "strict".to_string(),
        (Some(w), false) => format!("{mode}, witness {w}"),
        (None, false) => "none".to_string(),
    }
}

/// Whole-pattern commands need finite type; the weight test is cheap and
/// spares enumerating an infinite pattern up to the cap.
fn finite_pattern(root: &Seed, mode: EqualityMode, cap: usize) -> Result<ClusterPattern, CliError> {
    if let Some(reason) = weight_obstruction(&root.quiver, cap) {
        return Err(GroupError::Infinite(reason).into());
    }
    Ok(enumerate_cluster_pattern(root, mode, cap)?)
}

fn explore(q: &QuiverArgs, dot: bool, mode: EqualityMode, cap: usize) -> Result<Report, CliError> {
    let p = finite_pattern(&root(q)?, mode, cap)?;
    let code = if p.is_truncated() {
        EXIT_UNKNOWN
    } else {
        EXIT_OK
    };
    if dot {
        return Ok(Report {
            code,
            ..Report::raw(pattern_dot(&p))
        });
    }
    let r = PatternReport::from(&p);
    let mut t = String::new();
    let _ = writeln!(t, "mode: {mode}");
    let _ = writeln!(t, "nodes: {}", r.nodes.len());
    let _ = writeln!(t, "edges: {}", r.edges.len());
    let _ = writeln!(t, "variables: {}", r.variables.len());
    let _ = writeln!(t, "complete: {}", !r.truncated);
    for x in &r.variables {
        let _ = writeln!(t, "  {x}");
    }
    Ok(Report::new(code, &r, t))
}

/// Finite-type verdict as serialized by `finite`.
#[derive(Debug, Clone, Serialize)]
pub struct FiniteReport {
    pub verdict: Verdict,
    pub mode: EqualityMode,
    pub nodes: Option<usize>,
    pub variables: Option<usize>,
    pub reason: Option<InfiniteReason>,
    /// Where the decision came from.
    pub criterion: &'static str,
    pub explored: Option<usize>,
    pub frontier: Option<usize>,
}

const WEIGHT_CRITERION: &str =
    "external classification: a mutable edge of weight at least 4 in the mutation class";

fn finite(q: &QuiverArgs, mode: EqualityMode, cap: usize) -> Result<Report, CliError> {
    let v = is_finite_type_in(&root(q)?, mode, cap)?;
    let (r, code) = match &v {
        FiniteTypeVerdict::Finite(p) => (
            FiniteReport {
                verdict: Verdict::Finite,
                mode,
                nodes: Some(p.len()),
                variables: Some(p.variables().len()),
                reason: None,
                criterion: "complete cluster pattern",
                explored: None,
                frontier: None,
            },
            EXIT_OK,
        ),
        FiniteTypeVerdict::Infinite(reason) => (
            FiniteReport {
                verdict: Verdict::Infinite,
                mode,
                nodes: None,
                variables: None,
                reason: Some(reason.clone()),
                criterion: WEIGHT_CRITERION,
                explored: None,
                frontier: None,
            },
            EXIT_INFINITE,
        ),
        FiniteTypeVerdict::Unknown { explored, frontier } => (
            FiniteReport {
                verdict: Verdict::Unknown,
                mode,
                nodes: None,
                variables: None,
                reason: None,
                criterion: "pattern cap exhausted",
                explored: Some(*explored),
                frontier: Some(*frontier),
            },
            EXIT_UNKNOWN,
        ),
    };
    let mut t = format!("verdict: {}\n", v.label());
    match &v {
        FiniteTypeVerdict::Finite(p) => {
            let _ = writeln!(t, "nodes: {} ({mode})", p.len());
            let _ = writeln!(t, "variables: {}", p.variables().len());
        }
        FiniteTypeVerdict::Infinite(reason) => {
            let _ = writeln!(t, "obstruction: {reason}");
            let _ = writeln!(t, "criterion: {WEIGHT_CRITERION}");
        }
        FiniteTypeVerdict::Unknown { explored, frontier } => {
            let _ = writeln!(t, "explored: {explored}, frontier: {frontier}");
        }
    }
    Ok(Report::new(code, &r, t))
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Finite => EXIT_OK,
        Verdict::Infinite => EXIT_INFINITE,
        Verdict::Unknown => EXIT_UNKNOWN,
    }
}

fn classify(q: &QuiverArgs, cap: usize) -> Result<Report, CliError> {
    let r: ClassificationReport = classify_finite_type(&root(q)?, cap)?;
    let verdict = serde_json::to_value(r.verdict).expect("verdicts serialize");
    let mut t = format!("verdict: {}\n", verdict.as_str().unwrap_or_default());
    if let Some(label) = &r.dynkin_label {
        let _ = writeln!(t, "type: {label}");
    }
    match &r.evidence {
        Evidence::DynkinMember { node, quiver } => {
            let _ = writeln!(t, "evidence: pattern node {node} carries {quiver}");
        }
        Evidence::Obstruction { reason } => {
            let _ = writeln!(t, "evidence: {reason}");
        }
        Evidence::Inconclusive { explored, frontier } => {
            let _ = writeln!(
                t,
                "evidence: inconclusive after {explored} nodes, frontier {frontier}"
            );
        }
    }
    Ok(Report::new(verdict_code(r.verdict), &r, t))
}

fn loops(
    q: &QuiverArgs,
    mode: EqualityMode,
    max_len: usize,
    limit: usize,
) -> Result<Report, CliError> {
    let found = enumerate_rooted_loops(&root(q)?, mode, max_len, limit)?;
    let r = LoopsReport {
        mode,
        max_len,
        loops: found.iter().map(Into::into).collect(),
    };
    let mut t = format!(
        "rooted loops ({mode}, length <= {max_len}): {}\n",
        r.loops.len()
    );
    for l in &r.loops {
        let _ = writeln!(
            t,
            "  [{}] witness {} cluster set {{{}}}",
            l.word,
            l.witness,
            l.cluster_set.join(", ")
        );
    }
    Ok(Report::new(EXIT_OK, &r, t))
}

fn group(q: &QuiverArgs, mode: EqualityMode, caps: GroupCaps) -> Result<Report, CliError> {
    let g = compute_rooted_group(&root(q)?, mode, caps)?;
    let r = GroupReport::from(&g);
    let mut t = String::new();
    let _ = writeln!(t, "mode: {mode}");
    let _ = writeln!(t, "order: {}", r.order);
    let _ = writeln!(t, "converged: {}", r.converged);
    let _ = writeln!(t, "commutative: {}", r.commutative);
    let _ = writeln!(t, "group axioms: {}", r.group_axioms);
    for (i, e) in r.elements.iter().enumerate() {
        let word = if e.word.is_empty() {
            "identity".to_string()
        } else {
            format!("[{}]", e.word)
        };
        let _ = writeln!(
            t,
            "  {i}: {word} witness {} cluster set {{{}}}",
            e.witness,
            e.cluster_set.join(", ")
        );
    }
    if r.order <= 32 {
        let _ = writeln!(t, "cayley:");
        for row in &r.cayley {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            let _ = writeln!(t, "  {}", cells.join(" "));
        }
    }
    let code = if r.converged { EXIT_OK } else { EXIT_UNKNOWN };
    Ok(Report::new(code, &r, t))
}

fn cosets(q: &QuiverArgs, mode: EqualityMode, cap: usize) -> Result<Report, CliError> {
    let c = coset_set(&root(q)?, mode, cap)?;
    let r = CosetReport::new(mode, &c);
    let mut t = format!("cosets ({mode}): {}\ncomplete: {}\n", r.count, r.complete);
    for c in &r.cosets {
        let word = if c.word.is_empty() {
            "identity".to_string()
        } else {
            format!("[{}]", c.word)
        };
        let _ = writeln!(t, "  node {}: {word}", c.node);
    }
    let code = if r.complete { EXIT_OK } else { EXIT_UNKNOWN };
    Ok(Report::new(code, &r, t))
}

fn iso(q: &QuiverArgs, other: &str, cap: usize) -> Result<Report, CliError> {
    let s1 = root(q)?;
    let s2 = Seed::initial(&load_quiver(other)?);
    let r: IsoReport = isomorphic(&s1, &s2, cap)?;
    let route = serde_json::to_value(r.route).expect("routes serialize");
    let mut t = format!(
        "isomorphic: {}\nroute: {}\n",
        r.isomorphic,
        route.as_str().unwrap_or_default()
    );
    if let Some(w) = &r.witness {
        let _ = writeln!(
            t,
            "witness: node {} sigma {}{} quiver {}",
            w.node, w.sign, w.permutation, w.quiver
        );
    }
    if !r.mismatched.is_empty() {
        let _ = writeln!(t, "mismatched: {}", r.mismatched.join(", "));
    }
    let _ = writeln!(t, "routes agree: {}", r.routes_agree);
    Ok(Report::new(EXIT_OK, &r, t))
}

fn export_dot(
    q: &QuiverArgs,
    pattern: bool,
    mode: EqualityMode,
    cap: usize,
) -> Result<Report, CliError> {
    let root = root(q)?;
    if pattern {
        let p = finite_pattern(&root, mode, cap)?;
        let code = if p.is_truncated() {
            EXIT_UNKNOWN
        } else {
            EXIT_OK
        };
        Ok(Report {
            code,
            ..Report::raw(pattern_dot(&p))
        })
    } else {
        Ok(Report::raw(quiver_dot(&root.quiver)))
    }
}
