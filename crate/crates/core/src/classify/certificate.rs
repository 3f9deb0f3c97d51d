use std::sync::Arc;

use super::decomp::{DecompNode, DecompStep};
use super::lq::{has_linear_quotients_under, GeneratorOrder};
use super::shell::is_shelling_order;
use super::split::{SplitNode, SplitStep};
use super::wpm::{is_weakly_polymatroidal_under, VariableOrder};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::vars::VarSubset;

/// A replayable witness for a positive answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    SplitTree(Arc<SplitNode>),
    DecompositionTree(Arc<DecompNode>),
    ShellingOrder(Vec<VarSubset>),
    LqOrder(GeneratorOrder),
    WpmOrder(VariableOrder),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::SplitTree(_) => "split-tree",
            Certificate::DecompositionTree(_) => "decomposition-tree",
            Certificate::ShellingOrder(_) => "shelling-order",
            Certificate::LqOrder(_) => "lq-order",
            Certificate::WpmOrder(_) => "wpm-order",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum Subject<'a> {
    Ideal(&'a MonomialIdeal),
    Complex(&'a SimplicialComplex),
}

impl Subject<'_> {
    fn kind(&self) -> &'static str {
        match self {
            Subject::Ideal(_) => "monomial ideal",
            Subject::Complex(_) => "simplicial complex",
        }
    }
}

/// Replays a certificate against the definitions, without any search.
pub fn verify_certificate(cert: &Certificate, subject: Subject<'_>) -> Result<bool> {
    let mismatch = || Error::KindMismatch { cert: cert.kind(), subject: subject.kind() };
    match (cert, subject) {
        (Certificate::SplitTree(root), Subject::Ideal(i)) => Ok(root.ideal == *i && verify_split_tree(root)),
        (Certificate::DecompositionTree(root), Subject::Complex(c)) => {
            Ok(root.complex == *c && verify_decomposition_tree(root))
        }
        (Certificate::ShellingOrder(order), Subject::Complex(c)) => {
            let mut sorted = order.clone();
            sorted.sort_by(VarSubset::canonical_cmp);
            if sorted != c.facets() {
                return Err(Error::MalformedCertificate("shelling order is not a permutation of the facets".into()));
            }
            Ok(is_shelling_order(order))
        }
        (Certificate::LqOrder(order), Subject::Ideal(i)) => match has_linear_quotients_under(i, order) {
            Err(Error::NotAPermutation(_)) => {
                Err(Error::MalformedCertificate("order is not a permutation of the generators".into()))
            }
            other => other,
        },
        (Certificate::WpmOrder(order), Subject::Ideal(i)) => {
            if order.as_slice().len() != i.nvars() {
                return Err(Error::MalformedCertificate("variable order has the wrong length".into()));
            }
            is_weakly_polymatroidal_under(i, order)
        }
        _ => Err(mismatch()),
    }
}

fn verify_split_tree(root: &Arc<SplitNode>) -> bool {
    let mut stack: Vec<&SplitNode> = vec![root];
    while let Some(node) = stack.pop() {
        let ideal = &node.ideal;
        let ok = match &node.step {
            SplitStep::Zero => ideal.is_zero(),
            SplitStep::Unit => ideal.is_unit(),
            SplitStep::Principal => ideal.is_principal(),
            SplitStep::Split { vertex, divided, rest } => {
                stack.push(divided);
                stack.push(rest);
                split_equation_holds(ideal, *vertex, &divided.ideal, &rest.ideal)
            }
        };
        if !ok {
            return false;
        }
    }
    true
}

/// `I = x I_1 + I_2` with `I_1, I_2` free of `x`, `I_2 ⊆ I_1` and
/// `G(I) = G(x I_1) ⊔ G(I_2)`.
fn split_equation_holds(ideal: &MonomialIdeal, x: usize, i1: &MonomialIdeal, i2: &MonomialIdeal) -> bool {
    let n = ideal.nvars();
    if x >= n || i1.nvars() != n || i2.nvars() != n {
        return false;
    }
    if i1.support().contains(x) || i2.support().contains(x) || i1.is_zero() {
        return false;
    }
    let lifted: Vec<Monomial> = i1.gens().iter().map(|g| g.times_var(x)).collect();
    if lifted.iter().any(|g| i2.gens().contains(g)) {
        return false;
    }
    let mut union: Vec<Monomial> = lifted.into_iter().chain(i2.gens().iter().cloned()).collect();
    union.sort();
    union == ideal.gens() && i2.is_contained_in(i1)
}

fn verify_decomposition_tree(root: &Arc<DecompNode>) -> bool {
    let mut stack: Vec<&DecompNode> = vec![root];
    while let Some(node) = stack.pop() {
        let cx = &node.complex;
        let ok = match &node.step {
            DecompStep::Simplex => cx.is_simplex(),
            DecompStep::Shed { vertex, link, deletion } => {
                stack.push(link);
                stack.push(deletion);
                let v = VarSubset::singleton(*vertex);
                cx.vertices().contains(*vertex)
                    && link.complex == cx.link(v)
                    && deletion.complex == cx.deletion(v)
                    && deletion.complex.facets().iter().all(|f| !link.complex.contains_face(*f))
            }
        };
        if !ok {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{find_lq_order, find_wpm_order, is_vertex_decomposable, is_vertex_splittable, SearchCaps};
    use crate::vars::VariableSet;

    fn s(ix: &[usize]) -> VarSubset {
        VarSubset::from_indices(ix.iter().map(|i| i - 1))
    }

    fn sq(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        let vars = VariableSet::standard(n).unwrap();
        MonomialIdeal::from_supports(vars, &gens.iter().map(|g| s(g)).collect::<Vec<_>>())
    }

    #[test]
    fn split_certificate_replays() {
        let i = sq(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        let node = is_vertex_splittable(&i, &SearchCaps::default()).unwrap().witness().unwrap().clone();
        assert!(verify_certificate(&Certificate::SplitTree(node), Subject::Ideal(&i)).unwrap());
    }

    #[test]
    fn tampered_split_is_rejected() {
        let i = sq(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        let node = is_vertex_splittable(&i, &SearchCaps::default()).unwrap().witness().unwrap().clone();
        let SplitStep::Split { divided, rest, .. } = node.step.clone() else { panic!() };
        let wrong = Arc::new(SplitNode { ideal: i.clone(), step: SplitStep::Split { vertex: 0, divided, rest } });
        assert!(!verify_certificate(&Certificate::SplitTree(wrong), Subject::Ideal(&i)).unwrap());
    }

    #[test]
    fn bad_shelling_order_is_rejected() {
        let vars = VariableSet::standard(4).unwrap();
        let cx = SimplicialComplex::from_facets(vars, vec![s(&[1, 3]), s(&[2, 4])]).unwrap();
        let cert = Certificate::ShellingOrder(vec![s(&[2, 4]), s(&[1, 3])]);
        assert!(!verify_certificate(&cert, Subject::Complex(&cx)).unwrap());
        let partial = Certificate::ShellingOrder(vec![s(&[2, 4])]);
        assert!(verify_certificate(&partial, Subject::Complex(&cx)).is_err());
    }

    #[test]
    fn lq_and_wpm_orders_replay() {
        let i = sq(6, &[&[1, 3], &[1, 4], &[1, 6], &[2, 3], &[2, 4], &[3, 5], &[4, 5], &[4, 6], &[5, 6]]);
        let caps = SearchCaps::default();
        let lq = find_lq_order(&i, &caps).unwrap().witness().unwrap().clone();
        assert!(verify_certificate(&Certificate::LqOrder(lq), Subject::Ideal(&i)).unwrap());
        let wpm = find_wpm_order(&i, &caps).unwrap().witness().unwrap().clone();
        assert!(verify_certificate(&Certificate::WpmOrder(wpm), Subject::Ideal(&i)).unwrap());
    }

    #[test]
    fn decomposition_tree_replays() {
        let i = sq(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        let cx = SimplicialComplex::stanley_reisner_complex(&i).unwrap();
        let node = is_vertex_decomposable(&cx, &SearchCaps::default()).unwrap().witness().unwrap().clone();
        let cert = Certificate::DecompositionTree(node);
        assert!(verify_certificate(&cert, Subject::Complex(&cx)).unwrap());
        assert!(matches!(verify_certificate(&cert, Subject::Ideal(&i)), Err(Error::KindMismatch { .. })));
    }
}
