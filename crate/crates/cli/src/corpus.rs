//! Corpus files: one case per line,
//! `name: ideal ; key=value, key=value`, with `#` comments.
//!
//! Keys are report properties, plus `vars=N` (declared variable count),
//! `wpm_under[x3>x1>x2>x4]` (weak polymatroidality under a fixed order),
//! `colon[x2]` (the colon ideal by a variable) and
//! `colon_linear_resolution[x2]`. A value may itself contain commas; a
//! fragment without `=` continues the previous value.

use mideal::classify::{is_weakly_polymatroidal_under, VariableOrder};
use mideal::homology::has_linear_resolution;
use mideal::{Monomial, MonomialIdeal};
use thiserror::Error;

use crate::parse::parse_ideal;
use crate::report::{Context, Options, Value, PROPERTY_KEYS};

/// The corpus shipped with the binary.
pub const SHIPPED: &str = include_str!("../corpus/examples.txt");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("corpus line {line}: {msg}")]
pub struct CorpusError {
    pub line: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusCase {
    pub line: usize,
    pub name: String,
    pub ideal: String,
    pub vars: Option<usize>,
    pub expect: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub case: String,
    pub key: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub cases: usize,
    pub checks: usize,
    pub mismatches: Vec<Mismatch>,
    pub warnings: Vec<String>,
}

fn key_known(key: &str) -> bool {
    if PROPERTY_KEYS.contains(&key) {
        return true;
    }
    ["wpm_under[", "colon[", "colon_linear_resolution["].iter().any(|p| key.starts_with(p) && key.ends_with(']'))
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusCase>, CorpusError> {
    let mut cases = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fail = |msg: &str| CorpusError { line, msg: msg.to_string() };
        let (name, rest) = content.split_once(':').ok_or_else(|| fail("expected `name: ideal ; key=value`"))?;
        let (ideal, expectations) = rest.split_once(';').ok_or_else(|| fail("missing `;` before expectations"))?;
        let name = name.trim();
        if name.is_empty() {
            return Err(fail("empty case name"));
        }
        let mut expect: Vec<(String, String)> = Vec::new();
        for frag in expectations.split(',') {
            match frag.split_once('=') {
                Some((key, value)) => expect.push((key.trim().to_string(), value.trim().to_string())),
                None => match expect.last_mut() {
                    Some((_, value)) => {
                        value.push_str(", ");
                        value.push_str(frag.trim());
                    }
                    None if frag.trim().is_empty() => {}
                    None => return Err(fail("expectation without `=`")),
                },
            }
        }
        let mut vars = None;
        expect.retain(|(key, value)| {
            if key == "vars" {
                vars = Some(value.clone());
                false
            } else {
                true
            }
        });
        let vars = match vars {
            Some(v) => Some(v.parse::<usize>().map_err(|_| fail("vars must be a number"))?),
            None => None,
        };
        if let Some((key, _)) = expect.iter().find(|(key, _)| !key_known(key)) {
            return Err(fail(&format!("unknown key `{key}`")));
        }
        cases.push(CorpusCase { line, name: name.to_string(), ideal: ideal.trim().to_string(), vars, expect });
    }
    Ok(cases)
}

fn variable_index(ideal: &MonomialIdeal, name: &str) -> Option<usize> {
    ideal.vars().names().iter().position(|v| v == name.trim())
}

fn bracket(key: &str) -> (&str, &str) {
    match key.split_once('[') {
        Some((head, arg)) => (head, arg.trim_end_matches(']')),
        None => (key, ""),
    }
}

/// The value a case's key evaluates to, as text.
fn evaluate(cx: &mut Context, key: &str, field: mideal::FieldSpec) -> Result<String, String> {
    let ideal = cx.ideal;
    let (head, arg) = bracket(key);
    match head {
        "wpm_under" => {
            let order: Option<Vec<usize>> = arg.split('>').map(|v| variable_index(ideal, v)).collect();
            let order = order.ok_or_else(|| format!("unknown variable in {arg}"))?;
            let order = VariableOrder::new(order, ideal.nvars()).map_err(|e| e.to_string())?;
            is_weakly_polymatroidal_under(ideal, &order).map(|b| b.to_string()).map_err(|e| e.to_string())
        }
        "colon" | "colon_linear_resolution" => {
            let x = variable_index(ideal, arg).ok_or_else(|| format!("unknown variable {arg}"))?;
            let colon = ideal.colon(&Monomial::var(ideal.nvars(), x)).map_err(|e| e.to_string())?;
            if head == "colon" {
                Ok(colon.to_string())
            } else {
                has_linear_resolution(&colon, field).map(|b| b.to_string()).map_err(|e| e.to_string())
            }
        }
        _ => match cx.property(key) {
            Some(v @ Value::Undecided(_)) => Err(v.to_string()),
            Some(v) => Ok(v.to_string()),
            None => Err("not applicable".into()),
        },
    }
}

/// Ideal-valued keys compare as ideals, so generator order in the corpus
/// does not matter.
fn same(key: &str, expected: &str, got: &str, n: usize) -> bool {
    let (head, _) = bracket(key);
    if head == "dual" || head == "colon" {
        if let (Ok(a), Ok(b)) = (parse_ideal(expected, Some(n)), parse_ideal(got, Some(n))) {
            return a == b;
        }
    }
    expected == got
}

pub fn verify(cases: &[CorpusCase], opts: Options) -> Result<Outcome, CorpusError> {
    let mut out = Outcome { cases: cases.len(), ..Outcome::default() };
    if cases.is_empty() {
        out.warnings.push("corpus has no cases".into());
    }
    for case in cases {
        let ideal = parse_ideal(&case.ideal, case.vars)
            .map_err(|e| CorpusError { line: case.line, msg: format!("{}: {e}", case.name) })?;
        let mut cx = Context::new(&ideal, opts);
        for (key, expected) in &case.expect {
            out.checks += 1;
            let got = match evaluate(&mut cx, key, opts.field) {
                Ok(v) => v,
                Err(why) => format!("<{why}>"),
            };
            if !same(key, expected, &got, ideal.nvars()) {
                out.mismatches.push(Mismatch {
                    case: case.name.clone(),
                    key: key.clone(),
                    expected: expected.clone(),
                    got,
                });
            }
        }
    }
    Ok(out)
}
