//! Command-line surface: argument definitions and command dispatch.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use mideal::classify::{find_lq_order, find_wpm_order, SearchCaps, Verdict};
use mideal::homology::{betti_table, regularity};
use mideal::{FieldSpec, MonomialIdeal};
use serde_json::json;
use thiserror::Error;

use crate::corpus::{parse_corpus, verify, SHIPPED};
use crate::enumerate::{run as run_suite, EnumOptions, Suite};
use crate::parse::{parse_ideal, ParseError};
use crate::report::{classify, Context, Options, Value, PROPERTY_KEYS};

#[derive(Debug, Parser)]
#[command(name = "mideal", version, about = "Monomial ideals, Stanley-Reisner complexes and certified classifiers")]
pub struct Cli {
    /// Number of variables (default: largest index used)
    #[arg(long, global = true)]
    pub vars: Option<usize>,
    /// Coefficient field: q or fpP for a prime P
    #[arg(long, global = true, default_value = "q")]
    pub field: FieldSpec,
    /// Machine-readable output
    #[arg(long, global = true)]
    pub json: bool,
    /// Include full certificate payloads
    #[arg(long, global = true)]
    pub certify: bool,
    /// Largest generator count for which a failed linear-quotients search counts as a refutation
    #[arg(long, global = true, default_value_t = SearchCaps::default().max_lq_gens)]
    pub max_orderings: usize,
    /// Largest facet count for which shellability is decided
    #[arg(long, global = true, default_value_t = SearchCaps::default().max_facets)]
    pub max_facets: usize,
    /// Largest variable count for which a failed variable-order search counts as a refutation
    #[arg(long, global = true, default_value_t = SearchCaps::default().max_wpm_vars)]
    pub max_wpm_vars: usize,
    /// Seed for randomized suites
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Report wall-clock time per property
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderKind {
    Wpm,
    Lq,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every property, with certificates and a consistency audit
    Classify { ideal: String },
    /// Squarefree Alexander dual
    Dual { ideal: String },
    /// Graded Betti table
    Betti { ideal: String },
    /// Castelnuovo-Mumford regularity
    Reg { ideal: String },
    /// A single property
    Check { property: String, ideal: String },
    /// Search a variable order (wpm) or generator order (lq)
    SearchOrder { kind: OrderKind, ideal: String },
    /// Check a corpus of expectations (default: the shipped corpus)
    VerifyPaper { path: Option<PathBuf> },
    /// Exhaustive check of one of the main results
    Enumerate {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        n: usize,
        /// Instances for the random duality suite
        #[arg(long, default_value_t = 500)]
        samples: usize,
        /// Also replay certificates, compare refutations with the reference
        /// search and check Betti tables
        #[arg(long)]
        audit: bool,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Cap(String),
    #[error("{0}")]
    Core(mideal::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl From<mideal::Error> for CliError {
    fn from(e: mideal::Error) -> Self {
        match e {
            mideal::Error::Cap { .. } => CliError::Cap(e.to_string()),
            other => CliError::Core(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Cap(_) => 2,
            _ => 1,
        }
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_AUDIT: i32 = 4;

/// What a command printed and how it should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, stderr: String::new(), code: EXIT_OK }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

impl Cli {
    fn options(&self) -> Options {
        Options {
            field: self.field,
            caps: SearchCaps {
                max_wpm_vars: self.max_wpm_vars,
                max_lq_gens: self.max_orderings,
                max_facets: self.max_facets,
                ..SearchCaps::default()
            },
            certify: self.certify,
            timings: self.timings,
        }
    }

    fn ideal(&self, text: &str) -> Result<MonomialIdeal, CliError> {
        Ok(parse_ideal(text, self.vars)?)
    }

    fn proper(&self, text: &str) -> Result<MonomialIdeal, CliError> {
        let i = self.ideal(text)?;
        if i.is_zero() || i.is_unit() {
            return Err(CliError::Usage(format!("`{text}` must be a nonzero proper ideal")));
        }
        Ok(i)
    }

    fn document(&self, ideal: &MonomialIdeal, key: &str, value: serde_json::Value) -> serde_json::Value {
        json!({
            "subject": ideal.to_string(),
            "n": ideal.nvars(),
            "field": self.field.to_string(),
            "properties": { key: value },
            "certificates": {},
            "audit": [],
            "timings": {},
        })
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let opts = cli.options();
    match &cli.command {
        Command::Classify { ideal } => {
            let i = cli.ideal(ideal)?;
            let report = classify(&i, opts);
            let stdout = if cli.json { pretty(&report.to_json()) } else { report.to_text() };
            let code = if !report.audit.is_empty() {
                EXIT_AUDIT
            } else if report.has_undecided() {
                EXIT_CAP
            } else {
                EXIT_OK
            };
            Ok(Output { stdout, stderr: String::new(), code })
        }
        Command::Dual { ideal } => {
            let i = cli.ideal(ideal)?;
            let d = i.alexander_dual()?;
            Ok(Output::ok(if cli.json {
                pretty(&cli.document(&i, "dual", json!(d.to_string())))
            } else {
                format!("{d}\n")
            }))
        }
        Command::Betti { ideal } => {
            let i = cli.proper(ideal)?;
            let b = betti_table(&i, cli.field)?;
            if cli.json {
                let entries: serde_json::Map<String, serde_json::Value> =
                    b.entries().map(|((p, q), v)| (format!("beta_{p}_{q}"), json!(v))).collect();
                let mut doc = cli.document(&i, "reg", json!(b.regularity().unwrap_or(0)));
                doc["properties"].as_object_mut().expect("object").extend(entries);
                Ok(Output::ok(pretty(&doc)))
            } else {
                Ok(Output::ok(b.to_string()))
            }
        }
        Command::Reg { ideal } => {
            let i = cli.proper(ideal)?;
            let r = regularity(&i, cli.field)?;
            Ok(Output::ok(if cli.json { pretty(&cli.document(&i, "reg", json!(r))) } else { format!("{r}\n") }))
        }
        Command::Check { property, ideal } => {
            if !PROPERTY_KEYS.contains(&property.as_str()) {
                return Err(CliError::Usage(format!(
                    "unknown property `{property}`; known: {}",
                    PROPERTY_KEYS.join(", ")
                )));
            }
            let i = cli.ideal(ideal)?;
            let mut cx = Context::new(&i, opts);
            let value =
                cx.property(property).ok_or_else(|| CliError::Usage(format!("`{property}` does not apply to {i}")))?;
            let cert = cx.certificate(property);
            let code = if matches!(value, Value::Undecided(_)) { EXIT_CAP } else { EXIT_OK };
            let stdout = if cli.json {
                let mut doc = cli.document(&i, property, value.to_json());
                if let Some(c) = &cert {
                    let mut m = json!({ "kind": c.kind, "summary": c.summary });
                    if let Some(v) = c.verified {
                        m["verified"] = json!(v);
                    }
                    if let Some(p) = &c.payload {
                        m["payload"] = p.clone();
                    }
                    doc["certificates"][property.as_str()] = m;
                }
                pretty(&doc)
            } else {
                match &cert {
                    Some(c) => format!("{value}\n{}: {}\n", c.kind, c.summary),
                    None => format!("{value}\n"),
                }
            };
            Ok(Output { stdout, stderr: String::new(), code })
        }
        Command::SearchOrder { kind, ideal } => {
            let i = cli.proper(ideal)?;
            let vars = i.vars().clone();
            let (found, text) = match kind {
                OrderKind::Wpm => match find_wpm_order(&i, &opts.caps)? {
                    Verdict::Holds(o) => (Some(true), o.display(&vars).to_string()),
                    Verdict::Fails(r) => (Some(false), format!("none: all {} variable orders fail", r.covered)),
                    Verdict::Undecided(u) => (None, format!("undecided: {} {} exceeds cap {}", u.what, u.got, u.cap)),
                },
                OrderKind::Lq => match find_lq_order(&i, &opts.caps)? {
                    Verdict::Holds(o) => {
                        (Some(true), o.iter().map(|g| g.display(&vars).to_string()).collect::<Vec<_>>().join(", "))
                    }
                    Verdict::Fails(r) => (Some(false), format!("none: all {} generator orders fail", r.covered)),
                    Verdict::Undecided(u) => (None, format!("undecided: {} {} exceeds cap {}", u.what, u.got, u.cap)),
                },
            };
            let key = match kind {
                OrderKind::Wpm => "wpm_order",
                OrderKind::Lq => "lq_order",
            };
            let stdout = if cli.json { pretty(&cli.document(&i, key, json!(text))) } else { format!("{text}\n") };
            Ok(Output { stdout, stderr: String::new(), code: if found.is_none() { EXIT_CAP } else { EXIT_OK } })
        }
        Command::VerifyPaper { path } => {
            let text = match path {
                Some(p) => std::fs::read_to_string(p)?,
                None => SHIPPED.to_string(),
            };
            let cases = parse_corpus(&text).map_err(|e| CliError::Usage(e.to_string()))?;
            let outcome = verify(&cases, opts).map_err(|e| CliError::Usage(e.to_string()))?;
            let mut stderr = String::new();
            for w in &outcome.warnings {
                stderr.push_str(&format!("warning: {w}\n"));
            }
            let stdout = if cli.json {
                let mismatches: Vec<serde_json::Value> = outcome
                    .mismatches
                    .iter()
                    .map(|m| json!({ "case": m.case, "key": m.key, "expected": m.expected, "got": m.got }))
                    .collect();
                pretty(&json!({ "cases": outcome.cases, "checks": outcome.checks, "mismatches": mismatches }))
            } else {
                let mut s = format!(
                    "cases: {}\nchecks: {}\nmismatches: {}\n",
                    outcome.cases,
                    outcome.checks,
                    outcome.mismatches.len()
                );
                for m in &outcome.mismatches {
                    s.push_str(&format!("  {}: {} expected {} got {}\n", m.case, m.key, m.expected, m.got));
                }
                s
            };
            let code = if outcome.mismatches.is_empty() { EXIT_OK } else { EXIT_MISMATCH };
            Ok(Output { stdout, stderr, code })
        }
        Command::Enumerate { theorem, n, samples, audit } => {
            let suite = Suite::parse(theorem).ok_or_else(|| {
                CliError::Usage(format!("unknown theorem `{theorem}`; expected 2.3, 2.6i, 2.6ii, 2.10 or duality"))
            })?;
            let eopts = EnumOptions {
                field: cli.field,
                caps: SearchCaps {
                    max_facets: cli.max_facets.max(EnumOptions::default().caps.max_facets),
                    ..opts.caps
                },
                seed: cli.seed,
                samples: *samples,
                audit: *audit,
            };
            let report = run_suite(suite, *n, eopts).map_err(CliError::Usage)?;
            let stdout = if cli.json { pretty(&report.to_json()) } else { report.to_text() };
            let unsound = report.soundness.as_ref().is_some_and(|s| !s.is_clean());
            let code = if !report.failures.is_empty() || unsound {
                EXIT_AUDIT
            } else if !report.undecided.is_empty() {
                EXIT_CAP
            } else {
                EXIT_OK
            };
            Ok(Output { stdout, stderr: String::new(), code })
        }
    }
}
