//! Independent re-checks of search results and Betti tables: every witness
//! is replayed, every refutation on a small instance is compared with the
//! exhaustive reference search, and every Betti table is checked against
//! the Hilbert numerator, the generator degrees and the pruned cones.

use std::sync::Arc;

use mideal::classify::{
    reference, verify_certificate, Certificate, DecompNode, GeneratorOrder, SplitNode, Subject, VariableOrder, Verdict,
};
use mideal::homology::{betti_table, hilbert_numerator, is_cone, reduced_homology_dims, skipped_subsets};
use mideal::{FieldSpec, MonomialIdeal, SimplicialComplex, VarSubset};

/// Refutations are compared with the reference only up to this many variables.
pub const REFERENCE_VARS: usize = 5;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Soundness {
    pub tables: usize,
    pub cones: usize,
    pub certificates: usize,
    pub refutations: usize,
    pub issues: Vec<String>,
}

impl Soundness {
    pub fn is_clean(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn merge(&mut self, other: Soundness) {
        self.tables += other.tables;
        self.cones += other.cones;
        self.certificates += other.certificates;
        self.refutations += other.refutations;
        self.issues.extend(other.issues);
    }

    pub fn summary(&self) -> String {
        format!(
            "{} tables, {} cones, {} certificates, {} refutations, {} issues",
            self.tables,
            self.cones,
            self.certificates,
            self.refutations,
            self.issues.len()
        )
    }

    fn replay(&mut self, cert: Certificate, subject: Subject<'_>, label: &str) {
        self.certificates += 1;
        match verify_certificate(&cert, subject) {
            Ok(true) => {}
            Ok(false) => self.issues.push(format!("{} for {label} does not replay", cert.kind())),
            Err(e) => self.issues.push(format!("{} for {label}: {e}", cert.kind())),
        }
    }

    fn compare(&mut self, what: &str, label: &str, reference: impl FnOnce() -> bool) {
        self.refutations += 1;
        if reference() {
            self.issues.push(format!("{what} refuted for {label} but the reference finds one"));
        }
    }

    pub fn split(&mut self, ideal: &MonomialIdeal, v: &Verdict<Arc<SplitNode>>) {
        match v {
            Verdict::Holds(t) => {
                self.replay(Certificate::SplitTree(t.clone()), Subject::Ideal(ideal), &ideal.to_string())
            }
            Verdict::Fails(_) if ideal.nvars() <= REFERENCE_VARS => {
                self.compare("splitting", &ideal.to_string(), || reference::vertex_splittable(ideal))
            }
            _ => {}
        }
    }

    pub fn decomposition(&mut self, cx: &SimplicialComplex, v: &Verdict<Arc<DecompNode>>) {
        let label = || cx.stanley_reisner_ideal().to_string();
        match v {
            Verdict::Holds(t) => self.replay(Certificate::DecompositionTree(t.clone()), Subject::Complex(cx), &label()),
            Verdict::Fails(_) if cx.nvars() <= REFERENCE_VARS => {
                self.compare("decomposition", &label(), || reference::vertex_decomposable(cx))
            }
            _ => {}
        }
    }

    pub fn shelling(&mut self, cx: &SimplicialComplex, v: &Verdict<Vec<VarSubset>>) {
        let label = || cx.stanley_reisner_ideal().to_string();
        match v {
            Verdict::Holds(o) => self.replay(Certificate::ShellingOrder(o.clone()), Subject::Complex(cx), &label()),
            Verdict::Fails(_) if cx.nvars() <= REFERENCE_VARS && cx.facets().len() <= reference::MAX_ITEMS => {
                self.compare("shelling order", &label(), || reference::shellable(cx))
            }
            _ => {}
        }
    }

    pub fn linear_quotients(&mut self, ideal: &MonomialIdeal, v: &Verdict<GeneratorOrder>) {
        match v {
            Verdict::Holds(o) => {
                self.replay(Certificate::LqOrder(o.clone()), Subject::Ideal(ideal), &ideal.to_string())
            }
            Verdict::Fails(_) if ideal.nvars() <= REFERENCE_VARS && ideal.num_gens() <= reference::MAX_ITEMS => {
                self.compare("linear quotients order", &ideal.to_string(), || reference::lq_order_exists(ideal))
            }
            _ => {}
        }
    }

    pub fn wpm(&mut self, ideal: &MonomialIdeal, v: &Verdict<VariableOrder>) {
        match v {
            Verdict::Holds(o) => {
                self.replay(Certificate::WpmOrder(o.clone()), Subject::Ideal(ideal), &ideal.to_string())
            }
            Verdict::Fails(_) if ideal.nvars() <= REFERENCE_VARS => {
                self.compare("variable order", &ideal.to_string(), || reference::wpm_order_exists(ideal))
            }
            _ => {}
        }
    }

    /// Euler identity, first Betti numbers, and acyclicity of every cone
    /// the Hochster sum skipped.
    pub fn homology(&mut self, ideal: &MonomialIdeal, field: FieldSpec) {
        if ideal.is_zero() || ideal.is_unit() {
            return;
        }
        let table = match betti_table(ideal, field) {
            Ok(t) => t,
            Err(e) => {
                self.issues.push(format!("betti table of {ideal}: {e}"));
                return;
            }
        };
        self.tables += 1;
        match hilbert_numerator(ideal) {
            Ok(h) if h == table.quotient_euler_coefficients() => {}
            Ok(_) => self.issues.push(format!("Euler identity fails for {ideal}")),
            Err(e) => self.issues.push(format!("hilbert numerator of {ideal}: {e}")),
        }
        for j in 0..=ideal.gens().iter().map(|g| g.degree() as usize).max().unwrap_or(0) + 1 {
            let count = ideal.gens().iter().filter(|g| g.degree() as usize == j).count() as u64;
            if table.get(0, j) != count {
                self.issues.push(format!("beta_0,{j} of {ideal} is {} not {count}", table.get(0, j)));
            }
        }
        let pol = ideal.polarize().expect("nonzero");
        let delta = SimplicialComplex::stanley_reisner_complex(&pol).expect("squarefree");
        for w in skipped_subsets(&pol) {
            let sub = delta.induced(w);
            self.cones += 1;
            let acyclic = reduced_homology_dims(&sub, field).map(|h| h.is_acyclic()).unwrap_or(false);
            if !is_cone(&sub) || !acyclic {
                self.issues.push(format!("skipped subcomplex of {ideal} is not an acyclic cone"));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;
    use mideal::classify::{find_wpm_order, is_vertex_splittable, SearchCaps};

    #[test]
    fn clean_on_a_path() {
        let i = parse_ideal("x1*x2, x2*x3, x3*x4", None).unwrap();
        let mut s = Soundness::default();
        s.split(&i, &is_vertex_splittable(&i, &SearchCaps::default()).unwrap());
        s.wpm(&i, &find_wpm_order(&i, &SearchCaps::default()).unwrap());
        s.homology(&i, FieldSpec::Rationals);
        assert!(s.is_clean(), "{:?}", s.issues);
        assert_eq!(s.certificates, 2);
        assert_eq!(s.tables, 1);
    }

    #[test]
    fn flags_a_false_refutation() {
        let i = parse_ideal("x1*x2, x2*x3", None).unwrap();
        let mut s = Soundness::default();
        s.wpm(&i, &Verdict::Fails(mideal::classify::Refutation { explored: 0, covered: 6 }));
        assert_eq!(s.refutations, 1);
        assert!(!s.is_clean());
    }
}
