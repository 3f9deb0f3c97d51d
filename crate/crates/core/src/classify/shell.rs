//! Shellability in the non-pure sense: facets `F_1, ..., F_s` such that for
//! all `i < j` there are `x ∈ F_j ∖ F_i` and `l < j` with
//! `F_j ∖ F_l = {x}`.

use super::order_search::{search_order, OrderSearch};
use super::{factorial, Refutation, SearchCaps, Undecided, Verdict};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vars::VarSubset;

/// Checks the shelling condition on an explicit facet sequence.
pub fn is_shelling_order(order: &[VarSubset]) -> bool {
    (1..order.len()).all(|j| {
        let fj = order[j];
        (0..j).all(|i| {
            fj.difference(order[i]).iter().any(|x| (0..j).any(|l| fj.difference(order[l]) == VarSubset::singleton(x)))
        })
    })
}

pub fn is_shellable(cx: &SimplicialComplex, caps: &SearchCaps) -> Result<Verdict<Vec<VarSubset>>> {
    if cx.is_void() {
        return Err(Error::VoidComplex);
    }
    let facets = cx.facets();
    let s = facets.len();
    if s > caps.max_facets || s > 64 {
        return Ok(Verdict::Undecided(Undecided { what: "facets", got: s, cap: caps.max_facets.min(64) }));
    }
    // diff[j][i] = F_j ∖ F_i
    let diff: Vec<Vec<u64>> =
        facets.iter().map(|fj| facets.iter().map(|fi| fj.difference(*fi).bits()).collect()).collect();
    let admissible = |set: u64, j: usize| {
        let row = &diff[j];
        let members = || (0..s).filter(move |&i| set >> i & 1 == 1);
        let singles = members().filter(|&l| row[l].count_ones() == 1).fold(0u64, |acc, l| acc | row[l]);
        members().all(|i| row[i] & singles != 0)
    };
    Ok(match search_order(s, caps.max_nodes, admissible) {
        OrderSearch::Found(idx) => Verdict::Holds(idx.into_iter().map(|k| facets[k]).collect()),
        OrderSearch::Exhausted { explored } => Verdict::Fails(Refutation { explored, covered: factorial(s) }),
        OrderSearch::OutOfBudget => Verdict::Undecided(Undecided {
            what: "shelling search nodes",
            got: caps.max_nodes as usize,
            cap: caps.max_nodes as usize,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vars::VariableSet;

    fn s(ix: &[usize]) -> VarSubset {
        VarSubset::from_indices(ix.iter().map(|i| i - 1))
    }

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let vars = VariableSet::standard(n).unwrap();
        SimplicialComplex::from_facets(vars, facets.iter().map(|f| s(f)).collect()).unwrap()
    }

    #[test]
    fn simplex_is_shellable() {
        assert!(is_shellable(&cx(3, &[&[1, 2, 3]]), &SearchCaps::default()).unwrap().holds());
    }

    #[test]
    fn disjoint_edges_are_not_shellable() {
        assert!(!is_shelling_order(&[s(&[1, 3]), s(&[2, 4])]));
        assert!(!is_shelling_order(&[s(&[2, 4]), s(&[1, 3])]));
        assert!(is_shellable(&cx(4, &[&[1, 3], &[2, 4]]), &SearchCaps::default()).unwrap().fails());
    }

    #[test]
    fn path_in_listed_order() {
        assert!(is_shelling_order(&[s(&[1, 2]), s(&[2, 3]), s(&[3, 4])]));
        assert!(!is_shelling_order(&[s(&[1, 2]), s(&[3, 4]), s(&[2, 3])]));
    }

    #[test]
    fn non_pure_example() {
        // an edge with an isolated vertex: shellable only with the edge first
        assert!(is_shelling_order(&[s(&[1, 2]), s(&[3])]));
        assert!(!is_shelling_order(&[s(&[3]), s(&[1, 2])]));
        assert!(is_shellable(&cx(3, &[&[1, 2], &[3]]), &SearchCaps::default()).unwrap().holds());
    }

    #[test]
    fn void_is_rejected() {
        let vars = VariableSet::standard(2).unwrap();
        assert_eq!(is_shellable(&SimplicialComplex::void(vars), &SearchCaps::default()), Err(Error::VoidComplex));
    }
}
