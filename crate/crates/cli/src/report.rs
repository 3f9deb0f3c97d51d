//! Classification reports: every property of one ideal, the certificates
//! behind the positive answers, and a consistency audit across them.

use std::fmt::Write as _;
use std::sync::Arc;
use std::time::Instant;

use mideal::classify::{
    find_lq_order, find_wpm_order, is_chordal_complement_oracle, is_cohen_macaulay, is_matroidal, is_polymatroidal,
    is_sequentially_cm, is_shellable, is_vertex_decomposable, is_vertex_splittable, is_weakly_polymatroidal_under,
    verify_certificate, Certificate, DecompNode, DecompStep, GeneratorOrder, Refutation, SearchCaps, SplitNode,
    SplitStep, Subject, Undecided, VariableOrder, Verdict,
};
use mideal::homology::{betti_table, hilbert_numerator, is_componentwise_linear};
use mideal::{BettiTable, Error, FieldSpec, MonomialIdeal, SimplicialComplex, VarSubset};
use serde_json::{json, Map, Value as Json};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Options {
    pub field: FieldSpec,
    pub caps: SearchCaps,
    /// Include full certificate payloads.
    pub certify: bool,
    /// Record wall-clock time per property.
    pub timings: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Bool(bool),
    Int(u64),
    Text(String),
    /// Not decided within a resource cap.
    Undecided(String),
}

impl Value {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Value::Bool(b) => Some(*b),
            _ => None,
        }
    }

    pub fn to_json(&self) -> Json {
        match self {
            Value::Bool(b) => json!(b),
            Value::Int(i) => json!(i),
            Value::Text(s) => json!(s),
            Value::Undecided(why) => json!(format!("undecided: {why}")),
        }
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Bool(b) => write!(f, "{b}"),
            Value::Int(i) => write!(f, "{i}"),
            Value::Text(s) => f.write_str(s),
            Value::Undecided(why) => write!(f, "undecided: {why}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CertEntry {
    pub kind: &'static str,
    /// Replayed by `verify_certificate`; refutation notes are never replayed.
    pub verified: Option<bool>,
    pub summary: String,
    pub payload: Option<Json>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub subject: String,
    pub n: usize,
    pub field: FieldSpec,
    pub properties: Vec<(String, Value)>,
    pub certificates: Vec<(String, CertEntry)>,
    pub audit: Vec<String>,
    pub timings: Vec<(String, f64)>,
}

impl Report {
    pub fn get(&self, key: &str) -> Option<&Value> {
        self.properties.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn has_undecided(&self) -> bool {
        self.properties.iter().any(|(_, v)| matches!(v, Value::Undecided(_)))
    }

    pub fn to_json(&self) -> Json {
        let mut props = Map::new();
        for (k, v) in &self.properties {
            props.insert(k.clone(), v.to_json());
        }
        let mut certs = Map::new();
        for (k, c) in &self.certificates {
            let mut m = Map::new();
            m.insert("kind".into(), json!(c.kind));
            if let Some(v) = c.verified {
                m.insert("verified".into(), json!(v));
            }
            m.insert("summary".into(), json!(c.summary));
            if let Some(p) = &c.payload {
                m.insert("payload".into(), p.clone());
            }
            certs.insert(k.clone(), Json::Object(m));
        }
        let mut timings = Map::new();
        for (k, t) in &self.timings {
            timings.insert(k.clone(), json!(t));
        }
        json!({
            "subject": self.subject,
            "n": self.n,
            "field": self.field.to_string(),
            "properties": props,
            "certificates": certs,
            "audit": self.audit,
            "timings": timings,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "subject: {}", self.subject);
        let _ = writeln!(out, "n: {}", self.n);
        let _ = writeln!(out, "field: {}", self.field);
        out.push_str("properties:\n");
        for (k, v) in &self.properties {
            let _ = writeln!(out, "  {k}: {v}");
        }
        if !self.certificates.is_empty() {
            out.push_str("certificates:\n");
            for (k, c) in &self.certificates {
                let tag = match c.verified {
                    Some(true) => " [verified]",
                    Some(false) => " [REJECTED]",
                    None => "",
                };
                let _ = writeln!(out, "  {k}: {}{tag}: {}", c.kind, c.summary);
                if let Some(p) = &c.payload {
                    let _ = writeln!(out, "    {p}");
                }
            }
        }
        if self.audit.is_empty() {
            out.push_str("audit: ok\n");
        } else {
            out.push_str("audit:\n");
            for a in &self.audit {
                let _ = writeln!(out, "  {a}");
            }
        }
        if !self.timings.is_empty() {
            out.push_str("timings:\n");
            for (k, t) in &self.timings {
                let _ = writeln!(out, "  {k}: {t:.3} ms");
            }
        }
        out
    }
}

/// Every key `classify` can report, in report order.
pub const PROPERTY_KEYS: &[&str] = &[
    "squarefree",
    "gens",
    "deg",
    "polymatroidal",
    "matroidal",
    "weakly_polymatroidal",
    "wpm_order",
    "linear_quotients",
    "vertex_splittable",
    "vertex_splittable_polarized",
    "reg",
    "pd",
    "linear_resolution",
    "componentwise_linear",
    "complement_chordal",
    "facets",
    "dim",
    "pure",
    "dual",
    "reg_dual",
    "cohen_macaulay",
    "sequentially_cm",
    "shellable",
    "vertex_decomposable",
];

fn undecided(u: &Undecided) -> Value {
    Value::Undecided(format!("{} {} exceeds cap {}", u.what, u.got, u.cap))
}

fn verdict_value<W>(v: &Verdict<W>) -> Value {
    match v {
        Verdict::Holds(_) => Value::Bool(true),
        Verdict::Fails(_) => Value::Bool(false),
        Verdict::Undecided(u) => undecided(u),
    }
}

fn from_result<T>(r: &Result<T, Error>, f: impl FnOnce(&T) -> Value) -> Value {
    match r {
        Ok(t) => f(t),
        Err(Error::Cap { what, got, cap }) => Value::Undecided(format!("{what} {got} exceeds cap {cap}")),
        Err(e) => Value::Undecided(e.to_string()),
    }
}

/// Lazily computed facts about one ideal, shared by every property.
pub struct Context<'a> {
    pub ideal: &'a MonomialIdeal,
    opts: Options,
    wpm: Option<Verdict<VariableOrder>>,
    lq: Option<Verdict<GeneratorOrder>>,
    vs: Option<Verdict<Arc<SplitNode>>>,
    vs_pol: Option<(MonomialIdeal, Verdict<Arc<SplitNode>>)>,
    betti: Option<Result<BettiTable, Error>>,
    complex: Option<SimplicialComplex>,
    dual: Option<MonomialIdeal>,
    dual_betti: Option<Result<BettiTable, Error>>,
    shell: Option<Verdict<Vec<VarSubset>>>,
    vd: Option<Verdict<Arc<DecompNode>>>,
}

impl<'a> Context<'a> {
    pub fn new(ideal: &'a MonomialIdeal, opts: Options) -> Self {
        Context {
            ideal,
            opts,
            wpm: None,
            lq: None,
            vs: None,
            vs_pol: None,
            betti: None,
            complex: None,
            dual: None,
            dual_betti: None,
            shell: None,
            vd: None,
        }
    }

    fn proper(&self) -> bool {
        !self.ideal.is_zero() && !self.ideal.is_unit()
    }

    fn squarefree_proper(&self) -> bool {
        self.proper() && self.ideal.is_squarefree()
    }

    fn wpm(&mut self) -> &Verdict<VariableOrder> {
        let (i, caps) = (self.ideal, self.opts.caps);
        self.wpm.get_or_insert_with(|| find_wpm_order(i, &caps).expect("nonzero ideal"))
    }

    fn lq(&mut self) -> &Verdict<GeneratorOrder> {
        let (i, caps) = (self.ideal, self.opts.caps);
        self.lq.get_or_insert_with(|| find_lq_order(i, &caps).expect("nonzero ideal"))
    }

    fn vs(&mut self) -> &Verdict<Arc<SplitNode>> {
        let (i, caps) = (self.ideal, self.opts.caps);
        self.vs.get_or_insert_with(|| is_vertex_splittable(i, &caps).expect("infallible"))
    }

    fn vs_pol(&mut self) -> &(MonomialIdeal, Verdict<Arc<SplitNode>>) {
        let (i, caps) = (self.ideal, self.opts.caps);
        self.vs_pol.get_or_insert_with(|| {
            let p = i.polarize().expect("nonzero ideal");
            let v = is_vertex_splittable(&p, &caps).expect("infallible");
            (p, v)
        })
    }

    fn betti(&mut self) -> &Result<BettiTable, Error> {
        let (i, field) = (self.ideal, self.opts.field);
        self.betti.get_or_insert_with(|| betti_table(i, field))
    }

    fn complex(&mut self) -> &SimplicialComplex {
        let i = self.ideal;
        self.complex.get_or_insert_with(|| SimplicialComplex::stanley_reisner_complex(i).expect("squarefree"))
    }

    fn dual(&mut self) -> &MonomialIdeal {
        let i = self.ideal;
        self.dual.get_or_insert_with(|| i.alexander_dual().expect("squarefree"))
    }

    fn dual_betti(&mut self) -> &Result<BettiTable, Error> {
        let field = self.opts.field;
        let d = self.dual().clone();
        self.dual_betti.get_or_insert_with(|| betti_table(&d, field))
    }

    fn shell(&mut self) -> &Verdict<Vec<VarSubset>> {
        let caps = self.opts.caps;
        let cx = self.complex().clone();
        self.shell.get_or_insert_with(|| is_shellable(&cx, &caps).expect("proper ideal has facets"))
    }

    fn vd(&mut self) -> &Verdict<Arc<DecompNode>> {
        let caps = self.opts.caps;
        let cx = self.complex().clone();
        self.vd.get_or_insert_with(|| is_vertex_decomposable(&cx, &caps).expect("infallible"))
    }

    /// The value of one property, or `None` where it does not apply.
    pub fn property(&mut self, key: &str) -> Option<Value> {
        let i = self.ideal;
        let field = self.opts.field;
        match key {
            "squarefree" => return Some(Value::Bool(i.is_squarefree())),
            "gens" => return Some(Value::Int(i.num_gens() as u64)),
            _ => {}
        }
        if !self.proper() {
            return None;
        }
        let sqf = self.squarefree_proper();
        Some(match key {
            "deg" => Value::Int(i.max_degree().expect("proper") as u64),
            "polymatroidal" => Value::Bool(is_polymatroidal(i).expect("nonzero")),
            "matroidal" => Value::Bool(is_matroidal(i).expect("nonzero")),
            "weakly_polymatroidal" => verdict_value(self.wpm()),
            "wpm_order" => {
                let vars = i.vars().clone();
                match self.wpm() {
                    Verdict::Holds(o) => Value::Text(o.display(&vars).to_string()),
                    Verdict::Fails(_) => Value::Text("none".into()),
                    Verdict::Undecided(u) => undecided(u),
                }
            }
            "linear_quotients" => verdict_value(self.lq()),
            "vertex_splittable" => verdict_value(self.vs()),
            "vertex_splittable_polarized" if !i.is_squarefree() => verdict_value(&self.vs_pol().1),
            "reg" => from_result(self.betti(), |b| Value::Int(b.regularity().unwrap_or(0) as u64)),
            "pd" => from_result(self.betti(), |b| Value::Int(b.projective_dimension().unwrap_or(0) as u64)),
            "linear_resolution" => match i.single_degree() {
                None => Value::Bool(false),
                Some(d) => from_result(self.betti(), |b| Value::Bool(b.regularity() == Some(d as usize))),
            },
            "componentwise_linear" if sqf => from_result(&is_componentwise_linear(i, field), |b| Value::Bool(*b)),
            "complement_chordal" if sqf && i.single_degree() == Some(2) => {
                Value::Bool(is_chordal_complement_oracle(i).expect("quadratic"))
            }
            "facets" if sqf => Value::Int(self.complex().facets().len() as u64),
            "dim" if sqf => Value::Int(self.complex().dim().expect("nonvoid") as u64),
            "pure" if sqf => Value::Bool(self.complex().is_pure()),
            "dual" if sqf => Value::Text(self.dual().to_string()),
            "reg_dual" if sqf => from_result(self.dual_betti(), |b| Value::Int(b.regularity().unwrap_or(0) as u64)),
            "cohen_macaulay" if sqf => from_result(&is_cohen_macaulay(i, field), |b| Value::Bool(*b)),
            "sequentially_cm" if sqf => from_result(&is_sequentially_cm(i, field), |b| Value::Bool(*b)),
            "shellable" if sqf => verdict_value(self.shell()),
            "vertex_decomposable" if sqf => verdict_value(self.vd()),
            _ => return None,
        })
    }

    /// Certificate or refutation note behind a property, if it has one.
    pub fn certificate(&mut self, key: &str) -> Option<CertEntry> {
        if !self.proper() {
            return None;
        }
        let certify = self.opts.certify;
        let i = self.ideal;
        let vars = i.vars().clone();
        let sqf = self.squarefree_proper();
        match key {
            "weakly_polymatroidal" => match self.wpm().clone() {
                Verdict::Holds(o) => Some(replayed(
                    Certificate::WpmOrder(o.clone()),
                    Subject::Ideal(i),
                    o.display(&vars).to_string(),
                    certify.then(|| json!(o.as_slice().iter().map(|&k| vars.name(k)).collect::<Vec<_>>())),
                )),
                Verdict::Fails(r) => Some(refutation(&r, "variable orders")),
                Verdict::Undecided(_) => None,
            },
            "linear_quotients" => match self.lq().clone() {
                Verdict::Holds(o) => {
                    let names: Vec<String> = o.iter().map(|g| g.display(&vars).to_string()).collect();
                    Some(replayed(
                        Certificate::LqOrder(o),
                        Subject::Ideal(i),
                        names.join(", "),
                        certify.then(|| json!(names)),
                    ))
                }
                Verdict::Fails(r) => Some(refutation(&r, "generator orders")),
                Verdict::Undecided(_) => None,
            },
            "vertex_splittable" => match self.vs().clone() {
                Verdict::Holds(t) => Some(replayed(
                    Certificate::SplitTree(t.clone()),
                    Subject::Ideal(i),
                    split_summary(&t),
                    certify.then(|| split_json(&t)),
                )),
                Verdict::Fails(r) => Some(refutation(&r, "splittings")),
                Verdict::Undecided(_) => None,
            },
            "vertex_splittable_polarized" if !i.is_squarefree() => {
                let (p, v) = self.vs_pol().clone();
                match v {
                    Verdict::Holds(t) => Some(replayed(
                        Certificate::SplitTree(t.clone()),
                        Subject::Ideal(&p),
                        split_summary(&t),
                        certify.then(|| split_json(&t)),
                    )),
                    Verdict::Fails(r) => Some(refutation(&r, "splittings")),
                    Verdict::Undecided(_) => None,
                }
            }
            "shellable" if sqf => {
                let cx = self.complex().clone();
                match self.shell().clone() {
                    Verdict::Holds(o) => {
                        let faces: Vec<String> = o.iter().map(|f| f.display(&vars).to_string()).collect();
                        Some(replayed(
                            Certificate::ShellingOrder(o),
                            Subject::Complex(&cx),
                            faces.join(", "),
                            certify.then(|| json!(faces)),
                        ))
                    }
                    Verdict::Fails(r) => Some(refutation(&r, "facet orders")),
                    Verdict::Undecided(_) => None,
                }
            }
            "vertex_decomposable" if sqf => {
                let cx = self.complex().clone();
                match self.vd().clone() {
                    Verdict::Holds(t) => Some(replayed(
                        Certificate::DecompositionTree(t.clone()),
                        Subject::Complex(&cx),
                        decomp_summary(&t),
                        certify.then(|| decomp_json(&t)),
                    )),
                    Verdict::Fails(r) => Some(refutation(&r, "decompositions")),
                    Verdict::Undecided(_) => None,
                }
            }
            _ => None,
        }
    }
}

fn replayed(cert: Certificate, subject: Subject<'_>, summary: String, payload: Option<Json>) -> CertEntry {
    let verified = verify_certificate(&cert, subject).unwrap_or(false);
    CertEntry { kind: cert.kind(), verified: Some(verified), summary, payload }
}

fn refutation(r: &Refutation, what: &str) -> CertEntry {
    let summary = if r.covered > 0 {
        format!("all {} {what} fail; {} search states explored", r.covered, r.explored)
    } else {
        format!("exhaustive search over {what}; {} search states explored", r.explored)
    };
    CertEntry { kind: "refutation-note", verified: None, summary, payload: None }
}

fn split_nodes(t: &SplitNode) -> usize {
    match &t.step {
        SplitStep::Split { divided, rest, .. } => 1 + split_nodes(divided) + split_nodes(rest),
        _ => 1,
    }
}

fn split_summary(t: &SplitNode) -> String {
    let vars = t.ideal.vars();
    match &t.step {
        SplitStep::Split { vertex, divided, rest } => {
            format!("{}*({}) + ({}); {} nodes", vars.name(*vertex), divided.ideal, rest.ideal, split_nodes(t))
        }
        SplitStep::Zero => "zero ideal".into(),
        SplitStep::Unit => "unit ideal".into(),
        SplitStep::Principal => "principal".into(),
    }
}

fn split_json(t: &SplitNode) -> Json {
    let vars = t.ideal.vars();
    match &t.step {
        SplitStep::Split { vertex, divided, rest } => json!({
            "ideal": t.ideal.to_string(),
            "vertex": vars.name(*vertex),
            "divided": split_json(divided),
            "rest": split_json(rest),
        }),
        SplitStep::Zero => json!({ "ideal": t.ideal.to_string(), "base": "zero" }),
        SplitStep::Unit => json!({ "ideal": t.ideal.to_string(), "base": "unit" }),
        SplitStep::Principal => json!({ "ideal": t.ideal.to_string(), "base": "principal" }),
    }
}

fn decomp_nodes(t: &DecompNode) -> usize {
    match &t.step {
        DecompStep::Shed { link, deletion, .. } => 1 + decomp_nodes(link) + decomp_nodes(deletion),
        DecompStep::Simplex => 1,
    }
}

fn decomp_summary(t: &DecompNode) -> String {
    match &t.step {
        DecompStep::Shed { vertex, .. } => {
            format!("shed {} first; {} nodes", t.complex.vars().name(*vertex), decomp_nodes(t))
        }
        DecompStep::Simplex => "simplex".into(),
    }
}

fn decomp_json(t: &DecompNode) -> Json {
    match &t.step {
        DecompStep::Shed { vertex, link, deletion } => json!({
            "complex": t.complex.to_string(),
            "vertex": t.complex.vars().name(*vertex),
            "link": decomp_json(link),
            "deletion": decomp_json(deletion),
        }),
        DecompStep::Simplex => json!({ "complex": t.complex.to_string(), "base": "simplex" }),
    }
}

/// Runs every applicable property, collects certificates and audits the
/// results against each other.
pub fn classify(ideal: &MonomialIdeal, opts: Options) -> Report {
    let mut cx = Context::new(ideal, opts);
    let mut properties = Vec::new();
    let mut timings = Vec::new();
    for key in PROPERTY_KEYS {
        let start = Instant::now();
        if let Some(v) = cx.property(key) {
            properties.push((key.to_string(), v));
            if opts.timings {
                timings.push((key.to_string(), start.elapsed().as_secs_f64() * 1e3));
            }
        }
    }
    let mut certificates = Vec::new();
    for key in PROPERTY_KEYS {
        if let Some(c) = cx.certificate(key) {
            certificates.push((key.to_string(), c));
        }
    }
    let mut report = Report {
        subject: ideal.to_string(),
        n: ideal.nvars(),
        field: opts.field,
        properties,
        certificates,
        audit: Vec::new(),
        timings,
    };
    report.audit = audit(&mut cx, &report);
    report
}

/// Implication chains, duality bridges and the known equivalences,
/// checked on one report. Undecided values are skipped.
fn audit(cx: &mut Context, report: &Report) -> Vec<String> {
    let mut out = Vec::new();
    let b = |k: &str| report.get(k).and_then(Value::as_bool);
    let int = |k: &str| match report.get(k) {
        Some(Value::Int(v)) => Some(*v),
        _ => None,
    };
    let ideal = cx.ideal;
    let sqf = ideal.is_squarefree();
    let nvars = ideal.nvars();

    for (k, c) in &report.certificates {
        if c.verified == Some(false) {
            out.push(format!("certificate for {k} failed to replay"));
        }
    }
    if !cx.proper() {
        return out;
    }

    let vs = b("vertex_splittable");
    let lq = b("linear_quotients");
    let wpm = b("weakly_polymatroidal");
    implies(&mut out, "vertex splittable => linear quotients", vs, lq);
    if sqf {
        implies(&mut out, "linear quotients => componentwise linear", lq, b("componentwise_linear"));
        implies(&mut out, "weakly polymatroidal => vertex splittable", wpm, vs);
        implies(&mut out, "matroidal => vertex splittable", b("matroidal"), vs);
    } else {
        implies(&mut out, "vertex splittable => polarization splittable", vs, b("vertex_splittable_polarized"));
    }
    if b("polymatroidal") == Some(true)
        && !is_weakly_polymatroidal_under(ideal, &VariableOrder::identity(nvars)).unwrap_or(false)
    {
        out.push("polymatroidal ideal fails the weak exchange under x1>...>xn".into());
    }
    if lq == Some(true) {
        if let (Some(r), Some(d)) = (int("reg"), int("deg")) {
            if ideal.single_degree().is_some() && r != d {
                out.push(format!("linear quotients but reg {r} != deg {d}"));
            }
        }
        implies(
            &mut out,
            "linear quotients in one degree => linear resolution",
            ideal.single_degree().map(|_| true),
            b("linear_resolution"),
        );
    }
    if let (Some(r), Some(d)) = (int("reg"), int("deg")) {
        if r < d {
            out.push(format!("reg {r} below deg {d}"));
        }
    }

    if let Ok(betti) = cx.betti().clone() {
        for d in 0..=ideal.max_degree().unwrap_or(0) as usize + 1 {
            let count = ideal.gens().iter().filter(|g| g.degree() as usize == d).count() as u64;
            if betti.get(0, d) != count {
                out.push(format!("beta_0,{d} = {} but {count} generators of degree {d}", betti.get(0, d)));
            }
        }
        if let Ok(h) = hilbert_numerator(ideal) {
            if h != betti.quotient_euler_coefficients() {
                out.push("Euler characteristic of the Betti table differs from the Hilbert numerator".into());
            }
        }
    }

    // degree-two equivalences
    let deg = int("deg");
    let lin = b("linear_resolution");
    if sqf && deg.is_some_and(|d| d <= 2) {
        equal(&mut out, "weakly polymatroidal / splittable / linear quotients", &[wpm, vs, lq]);
    }
    if ideal.single_degree() == Some(2) {
        if sqf {
            equal(&mut out, "degree-two four-way equivalence", &[wpm, vs, lq, lin, b("complement_chordal")]);
        } else {
            equal(&mut out, "degree-two equivalence with squares", &[wpm, b("vertex_splittable_polarized"), lq, lin]);
        }
    }

    if sqf {
        let vd = b("vertex_decomposable");
        let shell = b("shellable");
        let scm = b("sequentially_cm");
        implies(&mut out, "vertex decomposable => shellable", vd, shell);
        implies(&mut out, "shellable => sequentially Cohen-Macaulay", shell, scm);
        implies(&mut out, "Cohen-Macaulay => sequentially Cohen-Macaulay", b("cohen_macaulay"), scm);
        implies(&mut out, "Cohen-Macaulay => pure", b("cohen_macaulay"), b("pure"));

        let dual = cx.dual().clone();
        let caps = cx.opts.caps;
        let dual_vs = is_vertex_splittable(&dual, &caps).ok().and_then(|v| v.decided());
        let dual_lq = find_lq_order(&dual, &caps).ok().and_then(|v| v.decided());
        equal(&mut out, "vertex decomposable vs dual vertex splittable", &[vd, dual_vs]);
        equal(&mut out, "shellable vs dual linear quotients", &[shell, dual_lq]);
        if let Ok(dual_betti) = cx.dual_betti().clone() {
            let d = dual.single_degree();
            let dual_lin = Some(d.is_some() && dual_betti.regularity() == d.map(|d| d as usize));
            equal(&mut out, "Cohen-Macaulay vs dual linear resolution", &[b("cohen_macaulay"), dual_lin]);
        }

        let supports = ideal.supports();
        if supports.len() <= 3 {
            implies(&mut out, "at most three generators => vertex decomposable", Some(true), vd);
        }
        let all = VarSubset::full(nvars);
        let pairwise_cover =
            supports.iter().enumerate().all(|(a, s)| supports[a + 1..].iter().all(|t| s.union(*t) == all));
        if supports.len() > 1 && pairwise_cover {
            implies(&mut out, "pairwise covering supports => vertex decomposable", Some(true), vd);
        }
        if b("matroidal") == Some(true) {
            equal(&mut out, "matroidal: sequentially CM / shellable / vertex decomposable", &[scm, shell, vd]);
        }
    }
    out
}

fn implies(out: &mut Vec<String>, name: &str, a: Option<bool>, c: Option<bool>) {
    if a == Some(true) && c == Some(false) {
        out.push(format!("implication violated: {name}"));
    }
}

fn equal(out: &mut Vec<String>, name: &str, values: &[Option<bool>]) {
    let decided: Vec<bool> = values.iter().flatten().copied().collect();
    if decided.len() == values.len() && decided.windows(2).any(|w| w[0] != w[1]) {
        out.push(format!("equivalence violated: {name} {decided:?}"));
    }
}
