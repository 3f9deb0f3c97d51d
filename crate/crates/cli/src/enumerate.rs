//! Exhaustive instance families with the equivalences asserted on them.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use mideal::classify::{
    find_lq_order, find_wpm_order, is_chordal_complement_oracle, is_matroidal, is_sequentially_cm, is_shellable,
    is_vertex_decomposable, is_vertex_splittable, SearchCaps, Verdict,
};
use mideal::homology::has_linear_resolution;
use mideal::{FieldSpec, Monomial, MonomialIdeal, SimplicialComplex, VarSubset, VariableSet};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::soundness::Soundness;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Squarefree ideals with at most three generators are vertex
    /// decomposable.
    ThreeGenerators,
    /// Squarefree ideals whose supports pairwise cover all variables are
    /// vertex decomposable.
    PairwiseCover,
    /// Quadratic ideals: weakly polymatroidal, splittable, linear quotients
    /// and linear resolution agree.
    Quadratic,
    /// Matroidal ideals: sequentially CM, shellable and vertex
    /// decomposable agree.
    Matroidal,
    /// Random squarefree ideals: complex recursions agree with the dual
    /// ideal searches.
    Duality,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Suite> {
        Some(match s {
            "2.6i" => Suite::ThreeGenerators,
            "2.6ii" => Suite::PairwiseCover,
            "2.10" => Suite::Quadratic,
            "2.3" => Suite::Matroidal,
            "duality" => Suite::Duality,
            _ => return None,
        })
    }

    pub fn id(self) -> &'static str {
        match self {
            Suite::ThreeGenerators => "2.6i",
            Suite::PairwiseCover => "2.6ii",
            Suite::Quadratic => "2.10",
            Suite::Matroidal => "2.3",
            Suite::Duality => "duality",
        }
    }

    /// Largest `n` the suite accepts.
    pub fn max_n(self) -> usize {
        match self {
            Suite::ThreeGenerators => 6,
            Suite::PairwiseCover | Suite::Quadratic | Suite::Matroidal | Suite::Duality => 7,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumOptions {
    pub field: FieldSpec,
    pub caps: SearchCaps,
    pub seed: u64,
    /// Instances drawn by the random suite.
    pub samples: usize,
    /// Replay every witness, compare small refutations with the reference
    /// search and check every Betti table.
    pub audit: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            field: FieldSpec::Rationals,
            caps: SearchCaps { max_facets: 24, ..SearchCaps::default() },
            seed: 0,
            samples: 500,
            audit: false,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EnumReport {
    pub theorem: String,
    pub n: usize,
    /// Instances generated before deduplication.
    pub generated: usize,
    /// Instances checked after deduplication up to relabeling.
    pub checked: usize,
    pub failures: Vec<String>,
    pub undecided: Vec<String>,
    /// Named counters, e.g. how many instances were positive.
    pub counts: Vec<(String, usize)>,
    /// Present when the suite ran with `audit`.
    pub soundness: Option<Soundness>,
}

impl EnumReport {
    fn count(&mut self, key: &str) {
        match self.counts.iter_mut().find(|(k, _)| k == key) {
            Some((_, v)) => *v += 1,
            None => self.counts.push((key.to_string(), 1)),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "theorem: {}", self.theorem);
        let _ = writeln!(out, "n: {}", self.n);
        let _ = writeln!(out, "generated: {}", self.generated);
        let _ = writeln!(out, "checked: {}", self.checked);
        for (k, v) in &self.counts {
            let _ = writeln!(out, "{k}: {v}");
        }
        let _ = writeln!(out, "undecided: {}", self.undecided.len());
        for u in &self.undecided {
            let _ = writeln!(out, "  {u}");
        }
        let _ = writeln!(out, "failures: {}", self.failures.len());
        for f in &self.failures {
            let _ = writeln!(out, "  {f}");
        }
        if let Some(s) = &self.soundness {
            let _ = writeln!(out, "audit: {}", s.summary());
            for issue in &s.issues {
                let _ = writeln!(out, "  {issue}");
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let counts: serde_json::Map<String, serde_json::Value> =
            self.counts.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        let mut doc = json!({
            "theorem": self.theorem,
            "n": self.n,
            "generated": self.generated,
            "checked": self.checked,
            "counts": counts,
            "undecided": self.undecided,
            "failures": self.failures,
        });
        if let Some(s) = &self.soundness {
            doc["audit"] = json!({
                "tables": s.tables,
                "cones": s.cones,
                "certificates": s.certificates,
                "refutations": s.refutations,
                "issues": s.issues,
            });
        }
        doc
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    mideal::classify::reference::permutations(n)
}

fn permute_mask(mask: u64, perm: &[usize]) -> u64 {
    perm.iter().enumerate().fold(0, |acc, (to, &from)| acc | ((mask >> from & 1) << to))
}

/// Smallest relabeling of a family of squarefree supports, as a sorted key.
fn canonical_supports(sets: &[u64], perms: &[Vec<usize>]) -> Vec<u64> {
    perms
        .iter()
        .map(|p| {
            let mut v: Vec<u64> = sets.iter().map(|&s| permute_mask(s, p)).collect();
            v.sort_unstable();
            v
        })
        .min()
        .unwrap_or_default()
}

/// Smallest relabeling of a list of exponent vectors.
fn canonical_exponents(gens: &[Monomial], perms: &[Vec<usize>]) -> Vec<Vec<u32>> {
    perms
        .iter()
        .map(|p| {
            let mut v: Vec<Vec<u32>> = gens.iter().map(|g| g.permuted(p).exponents().to_vec()).collect();
            v.sort_unstable();
            v
        })
        .min()
        .unwrap_or_default()
}

fn is_antichain(sets: &[u64]) -> bool {
    sets.iter().enumerate().all(|(a, &s)| sets.iter().enumerate().all(|(b, &t)| a == b || s & !t != 0))
}

fn squarefree(n: usize, sets: &[u64]) -> MonomialIdeal {
    let vars = VariableSet::standard(n).expect("n within range");
    MonomialIdeal::from_supports(vars, &sets.iter().map(|&s| VarSubset(s)).collect::<Vec<_>>())
}

fn verdict<W>(report: &mut EnumReport, what: &str, ideal: &MonomialIdeal, v: &Verdict<W>) -> Option<bool> {
    let d = v.decided();
    if d.is_none() {
        report.undecided.push(format!("{what} for {ideal}"));
    }
    d
}

pub fn run(suite: Suite, n: usize, opts: EnumOptions) -> Result<EnumReport, String> {
    if n == 0 || n > suite.max_n() {
        return Err(format!("--n must be between 1 and {} for {}", suite.max_n(), suite.id()));
    }
    let mut report = EnumReport {
        theorem: suite.id().to_string(),
        n,
        soundness: opts.audit.then(Soundness::default),
        ..EnumReport::default()
    };
    match suite {
        Suite::ThreeGenerators => three_generators(n, opts, &mut report),
        Suite::PairwiseCover => pairwise_cover(n, opts, &mut report),
        Suite::Quadratic => quadratic(n, opts, &mut report),
        Suite::Matroidal => matroidal(n, opts, &mut report),
        Suite::Duality => duality(n, opts, &mut report),
    }
    Ok(report)
}

fn check_vd(n: usize, sets: &[u64], opts: EnumOptions, report: &mut EnumReport) {
    let ideal = squarefree(n, sets);
    let cx = SimplicialComplex::stanley_reisner_complex(&ideal).expect("squarefree");
    let v = is_vertex_decomposable(&cx, &opts.caps).expect("infallible");
    if let Some(s) = report.soundness.as_mut() {
        s.decomposition(&cx, &v);
        s.homology(&ideal, opts.field);
    }
    match verdict(report, "vertex decomposability", &ideal, &v) {
        Some(true) => report.count("vertex decomposable"),
        Some(false) => report.failures.push(format!("not vertex decomposable: {ideal}")),
        None => {}
    }
}

fn three_generators(n: usize, opts: EnumOptions, report: &mut EnumReport) {
    let perms = permutations(n);
    let subsets: Vec<u64> = (1..1u64 << n).collect();
    let mut seen = BTreeSet::new();
    let mut families: Vec<Vec<u64>> = Vec::new();
    for a in 0..subsets.len() {
        families.push(vec![subsets[a]]);
        for b in a + 1..subsets.len() {
            families.push(vec![subsets[a], subsets[b]]);
            for c in b + 1..subsets.len() {
                families.push(vec![subsets[a], subsets[b], subsets[c]]);
            }
        }
    }
    for f in families {
        if !is_antichain(&f) {
            continue;
        }
        report.generated += 1;
        if !seen.insert(canonical_supports(&f, &perms)) {
            continue;
        }
        report.checked += 1;
        check_vd(n, &f, opts, report);
    }
}

/// Families whose complements are pairwise disjoint and nonempty: the
/// supports then pairwise cover all variables and form an antichain.
fn pairwise_cover(n: usize, opts: EnumOptions, report: &mut EnumReport) {
    let perms = permutations(n);
    let full = (1u64 << n) - 1;
    let mut seen = BTreeSet::new();
    // label[v] = 0 for "in every support", k for "missing from support k"
    let mut labels = vec![0usize; n];
    loop {
        let blocks = labels.iter().copied().max().unwrap_or(0);
        // restricted growth: block k appears only after block k - 1
        let growth = labels.iter().try_fold(0usize, |top, &l| if l <= top + 1 { Some(top.max(l)) } else { None });
        if growth.is_some() && blocks >= 1 {
            let sets: Vec<u64> = (1..=blocks)
                .map(|k| full & !labels.iter().enumerate().filter(|(_, &l)| l == k).fold(0u64, |a, (v, _)| a | 1 << v))
                .collect();
            let sets: Vec<u64> = sets.into_iter().filter(|&s| s != 0).collect();
            if !sets.is_empty() {
                report.generated += 1;
                if seen.insert(canonical_supports(&sets, &perms)) {
                    report.checked += 1;
                    check_vd(n, &sets, opts, report);
                }
            }
        }
        // next labeling in base n + 1
        let mut k = 0;
        while k < n && labels[k] == n {
            labels[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        labels[k] += 1;
    }
}

struct QuadraticOutcome {
    wpm: Option<bool>,
    vs: Option<bool>,
    lq: Option<bool>,
    lin: Option<bool>,
}

fn quadratic_predicates(ideal: &MonomialIdeal, opts: EnumOptions, report: &mut EnumReport) -> QuadraticOutcome {
    let wpm = find_wpm_order(ideal, &opts.caps).expect("nonzero");
    let lq = find_lq_order(ideal, &opts.caps).expect("nonzero");
    let split_target = ideal.polarize().expect("nonzero");
    let vs = is_vertex_splittable(&split_target, &opts.caps).expect("infallible");
    if let Some(s) = report.soundness.as_mut() {
        s.wpm(ideal, &wpm);
        s.linear_quotients(ideal, &lq);
        s.split(&split_target, &vs);
        s.homology(ideal, opts.field);
    }
    QuadraticOutcome {
        wpm: verdict(report, "weakly polymatroidal order", ideal, &wpm),
        vs: verdict(report, "splitting", ideal, &vs),
        lq: verdict(report, "linear quotients order", ideal, &lq),
        lin: match has_linear_resolution(ideal, opts.field) {
            Ok(b) => Some(b),
            Err(e) => {
                report.undecided.push(format!("linear resolution for {ideal}: {e}"));
                None
            }
        },
    }
}

fn agree(values: &[Option<bool>]) -> Option<bool> {
    let first = values[0]?;
    for v in values {
        if (*v)? != first {
            return Some(false);
        }
    }
    Some(true)
}

fn quadratic(n: usize, opts: EnumOptions, report: &mut EnumReport) {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let perms = permutations(n);

    // graphs: edge ideals, deduplicated up to isomorphism
    let mut seen = BTreeSet::new();
    for mask in 1u64..1 << pairs.len() {
        let sets: Vec<u64> =
            (0..pairs.len()).filter(|k| mask >> k & 1 == 1).map(|k| 1 << pairs[k].0 | 1 << pairs[k].1).collect();
        report.generated += 1;
        if !seen.insert(canonical_supports(&sets, &perms)) {
            continue;
        }
        report.checked += 1;
        report.count("graphs");
        let ideal = squarefree(n, &sets);
        let q = quadratic_predicates(&ideal, opts, report);
        let chordal = Some(is_chordal_complement_oracle(&ideal).expect("edge ideal"));
        match agree(&[q.wpm, q.vs, q.lq, q.lin, chordal]) {
            Some(true) => {
                if q.lin == Some(true) {
                    report.count("graphs with linear resolution");
                }
            }
            Some(false) => report.failures.push(format!(
                "edge ideal {ideal}: wpm {:?} split {:?} lq {:?} linear {:?} chordal complement {:?}",
                q.wpm, q.vs, q.lq, q.lin, chordal
            )),
            None => {}
        }
    }

    // squarefree, degree at most two: some variables plus edges
    let m = n.min(5);
    let pairs_m: Vec<(usize, usize)> = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect();
    let perms_m = permutations(m);
    let mut seen = BTreeSet::new();
    for lin_mask in 1u64..1 << m {
        for mask in 1u64..1 << pairs_m.len() {
            let mut sets: Vec<u64> = (0..m).filter(|v| lin_mask >> v & 1 == 1).map(|v| 1 << v).collect();
            sets.extend(
                (0..pairs_m.len()).filter(|k| mask >> k & 1 == 1).map(|k| 1 << pairs_m[k].0 | 1 << pairs_m[k].1),
            );
            let ideal = squarefree(m, &sets);
            if ideal.single_degree().is_some() {
                continue;
            }
            report.generated += 1;
            if !seen
                .insert(canonical_supports(&ideal.supports().iter().map(|s| s.bits()).collect::<Vec<_>>(), &perms_m))
            {
                continue;
            }
            report.checked += 1;
            report.count("mixed degree ideals");
            let q = quadratic_predicates(&ideal, opts, report);
            if agree(&[q.wpm, q.vs, q.lq]) == Some(false) {
                report.failures.push(format!("mixed degree {ideal}: wpm {:?} split {:?} lq {:?}", q.wpm, q.vs, q.lq));
            }
        }
    }

    // single degree two with squares, on at most four variables
    let m = n.min(4);
    let pairs_m: Vec<(usize, usize)> = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect();
    let perms_m = permutations(m);
    let vars = VariableSet::standard(m).expect("small");
    let mut seen = BTreeSet::new();
    for sq_mask in 1u64..1 << m {
        for mask in 0u64..1 << pairs_m.len() {
            let mut gens: Vec<Monomial> =
                (0..m).filter(|v| sq_mask >> v & 1 == 1).map(|v| Monomial::var(m, v).times_var(v)).collect();
            gens.extend(
                (0..pairs_m.len())
                    .filter(|k| mask >> k & 1 == 1)
                    .map(|k| Monomial::from_subset(m, VarSubset::from_indices([pairs_m[k].0, pairs_m[k].1]))),
            );
            let ideal = MonomialIdeal::minimalize(vars.clone(), gens).expect("matching counts");
            report.generated += 1;
            if !seen.insert(canonical_exponents(ideal.gens(), &perms_m)) {
                continue;
            }
            report.checked += 1;
            report.count("ideals with squares");
            let q = quadratic_predicates(&ideal, opts, report);
            if agree(&[q.wpm, q.vs, q.lq, q.lin]) == Some(false) {
                report.failures.push(format!(
                    "with squares {ideal}: wpm {:?} polarization splits {:?} lq {:?} linear {:?}",
                    q.wpm, q.vs, q.lq, q.lin
                ));
            }
            let literal = is_vertex_splittable(&ideal, &opts.caps).expect("infallible");
            if let Some(s) = report.soundness.as_mut() {
                s.split(&ideal, &literal);
            }
            let literal = literal.decided();
            if literal.is_some() && q.vs.is_some() && literal != q.vs {
                report.count("literal splitting disagrees with polarization");
            }
        }
    }
}

/// All matroids on at most `min(n, 5)` elements as basis families, plus
/// uniform and transversal matroids up to `n` elements; deduplicated.
fn matroid_families(n: usize) -> Vec<(usize, Vec<u64>)> {
    let mut out = Vec::new();
    let small = n.min(5);
    for m in 1..=small {
        // antichains of one cardinality with the exchange property
        for r in 1..=m {
            let level: Vec<u64> = (1u64..1 << m).filter(|s| s.count_ones() as usize == r).collect();
            for mask in 1u64..1 << level.len() {
                let sets: Vec<u64> = (0..level.len()).filter(|k| mask >> k & 1 == 1).map(|k| level[k]).collect();
                out.push((m, sets));
            }
        }
    }
    for m in small + 1..=n {
        for r in 1..=m {
            out.push((m, (1u64..1 << m).filter(|s| s.count_ones() as usize == r).collect()));
        }
        // transversal: one variable from each block of a partition into two
        for split in 1..m {
            let a: Vec<u64> = (0..split).map(|v| 1 << v).collect();
            let b: Vec<u64> = (split..m).map(|v| 1 << v).collect();
            out.push((m, a.iter().flat_map(|x| b.iter().map(move |y| x | y)).collect()));
        }
    }
    out
}

fn matroidal(n: usize, opts: EnumOptions, report: &mut EnumReport) {
    let mut seen = BTreeSet::new();
    let perms: Vec<Vec<Vec<usize>>> = (0..=n).map(permutations).collect();
    for (m, sets) in matroid_families(n) {
        let ideal = squarefree(m, &sets);
        if !is_matroidal(&ideal).expect("nonzero") {
            continue;
        }
        report.generated += 1;
        if !seen.insert((m, canonical_supports(&sets, &perms[m]))) {
            continue;
        }
        report.checked += 1;
        let cx = SimplicialComplex::stanley_reisner_complex(&ideal).expect("squarefree");
        let scm = match is_sequentially_cm(&ideal, opts.field) {
            Ok(b) => Some(b),
            Err(e) => {
                report.undecided.push(format!("sequentially CM for {ideal}: {e}"));
                None
            }
        };
        let shell = is_shellable(&cx, &opts.caps).expect("nonvoid");
        let vd = is_vertex_decomposable(&cx, &opts.caps).expect("infallible");
        if let Some(s) = report.soundness.as_mut() {
            s.shelling(&cx, &shell);
            s.decomposition(&cx, &vd);
            s.homology(&ideal, opts.field);
            s.homology(&ideal.alexander_dual().expect("squarefree"), opts.field);
        }
        let shell = verdict(report, "shellability", &ideal, &shell);
        let vd = verdict(report, "vertex decomposability", &ideal, &vd);
        match agree(&[scm, shell, vd]) {
            Some(true) if scm == Some(true) => report.count("all three hold"),
            Some(true) => report.count("all three fail"),
            Some(false) => report
                .failures
                .push(format!("matroidal {ideal}: sequentially CM {scm:?} shellable {shell:?} decomposable {vd:?}")),
            None => {}
        }
    }
}

fn duality(n: usize, opts: EnumOptions, report: &mut EnumReport) {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.samples {
        let m = if rng.gen_bool(0.25) { rng.gen_range(1..=n) } else { rng.gen_range(n.min(4)..=n) };
        let k = rng.gen_range(1..=2 * m);
        // mostly edges and triangles: those give the non-decomposable cases
        let faces: Vec<u64> = (0..k)
            .map(|_| {
                let size = if m < 2 || rng.gen_bool(0.1) {
                    rng.gen_range(1..=m)
                } else if rng.gen_bool(0.7) {
                    2
                } else {
                    m.min(3)
                };
                sample(&mut rng, m, size).iter().fold(0u64, |acc, v| acc | 1 << v)
            })
            .collect();
        let ideal = squarefree(m, &faces);
        report.generated += 1;
        report.checked += 1;
        let dual = ideal.alexander_dual().expect("squarefree");
        let cx = SimplicialComplex::stanley_reisner_complex(&ideal).expect("squarefree");
        let vd = is_vertex_decomposable(&cx, &opts.caps).unwrap();
        let vs = is_vertex_splittable(&dual, &opts.caps).unwrap();
        let shell = is_shellable(&cx, &opts.caps).unwrap();
        let lq = find_lq_order(&dual, &opts.caps).unwrap();
        if let Some(s) = report.soundness.as_mut() {
            s.decomposition(&cx, &vd);
            s.split(&dual, &vs);
            s.shelling(&cx, &shell);
            s.linear_quotients(&dual, &lq);
            s.homology(&ideal, opts.field);
            s.homology(&dual, opts.field);
        }
        let vd = verdict(report, "vertex decomposability", &ideal, &vd);
        let vs = verdict(report, "dual splitting", &ideal, &vs);
        if agree(&[vd, vs]) == Some(false) {
            report.failures.push(format!("{ideal}: decomposable {vd:?} but dual splittable {vs:?}"));
        }
        let shell = verdict(report, "shellability", &ideal, &shell);
        let lq = verdict(report, "dual linear quotients", &ideal, &lq);
        if agree(&[shell, lq]) == Some(false) {
            report.failures.push(format!("{ideal}: shellable {shell:?} but dual linear quotients {lq:?}"));
        }
        if vd == Some(true) {
            report.count("vertex decomposable");
        }
        if shell == Some(true) {
            report.count("shellable");
        }
    }
}
