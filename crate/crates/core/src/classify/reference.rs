//! Exhaustive reference deciders with no pruning and no memoization.
//!
//! These enumerate every permutation (or every recursion branch) straight
//! from the definitions and are only meant for small instances, as a check
//! on the pruned searches.

use std::collections::BTreeSet;

use super::lq::has_linear_quotients_under;
use super::shell::is_shelling_order;
use super::wpm::{is_weakly_polymatroidal_under, VariableOrder};
use crate::complex::SimplicialComplex;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Largest item count the permutation-based references accept.
pub const MAX_ITEMS: usize = 8;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    assert!(n <= MAX_ITEMS, "reference enumeration is limited to {MAX_ITEMS} items");
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

pub fn wpm_order_exists(ideal: &MonomialIdeal) -> bool {
    permutations(ideal.nvars()).into_iter().any(|p| {
        let ord = VariableOrder::new(p, ideal.nvars()).unwrap();
        is_weakly_polymatroidal_under(ideal, &ord).unwrap()
    })
}

/// Number of variable orders under which the ideal is weakly
/// polymatroidal.
pub fn wpm_order_count(ideal: &MonomialIdeal) -> usize {
    permutations(ideal.nvars())
        .into_iter()
        .filter(|p| {
            let ord = VariableOrder::new(p.clone(), ideal.nvars()).unwrap();
            is_weakly_polymatroidal_under(ideal, &ord).unwrap()
        })
        .count()
}

pub fn lq_order_exists(ideal: &MonomialIdeal) -> bool {
    let gens = ideal.gens();
    permutations(gens.len()).into_iter().any(|p| {
        let order: Vec<Monomial> = p.iter().map(|&k| gens[k].clone()).collect();
        has_linear_quotients_under(ideal, &order).unwrap()
    })
}

pub fn shellable(cx: &SimplicialComplex) -> bool {
    let facets = cx.facets();
    permutations(facets.len()).into_iter().any(|p| is_shelling_order(&p.iter().map(|&k| facets[k]).collect::<Vec<_>>()))
}

/// Vertex decomposability on the explicit set of faces.
pub fn vertex_decomposable(cx: &SimplicialComplex) -> bool {
    let faces: BTreeSet<u64> = cx.faces_by_size().into_iter().flatten().map(|f| f.bits()).collect();
    vd_faces(&faces)
}

fn facets_of(faces: &BTreeSet<u64>) -> Vec<u64> {
    faces.iter().copied().filter(|&f| !faces.iter().any(|&g| g != f && f & !g == 0)).collect()
}

fn vd_faces(faces: &BTreeSet<u64>) -> bool {
    let facets = facets_of(faces);
    if facets.len() <= 1 {
        return true;
    }
    let vertices = facets.iter().fold(0u64, |a, f| a | f);
    (0..64).filter(|x| vertices >> x & 1 == 1).any(|x| {
        let bit = 1u64 << x;
        let link: BTreeSet<u64> =
            faces.iter().copied().filter(|&a| a & bit == 0 && faces.contains(&(a | bit))).collect();
        let del: BTreeSet<u64> = faces.iter().copied().filter(|&a| a & bit == 0).collect();
        let shedding = facets_of(&del).iter().all(|f| !link.contains(f));
        shedding && vd_faces(&link) && vd_faces(&del)
    })
}

/// Vertex splittability by trying every variable at every level.
pub fn vertex_splittable(ideal: &MonomialIdeal) -> bool {
    if ideal.is_zero() || ideal.is_unit() || ideal.is_principal() {
        return true;
    }
    let vars = ideal.vars().clone();
    (0..ideal.nvars()).any(|x| {
        let divisible: Vec<Monomial> = ideal.gens().iter().filter(|g| g.exp(x) > 0).cloned().collect();
        let quotients: Option<Vec<Monomial>> = divisible.iter().map(|g| g.div_var(x)).collect();
        let Ok(i1) = MonomialIdeal::minimalize(vars.clone(), quotients.unwrap()) else { return false };
        let rest: Vec<Monomial> = ideal.gens().iter().filter(|g| g.exp(x) == 0).cloned().collect();
        let Ok(i2) = MonomialIdeal::minimalize(vars.clone(), rest) else { return false };
        let Ok(x_i1) = MonomialIdeal::minimalize(vars.clone(), i1.gens().iter().map(|g| g.times_var(x)).collect())
        else {
            return false;
        };
        let disjoint = x_i1.gens().iter().all(|g| !i2.gens().contains(g));
        let mut union: Vec<Monomial> = x_i1.gens().iter().chain(i2.gens()).cloned().collect();
        union.sort();
        !i1.is_zero()
            && !i1.support().contains(x)
            && !i2.support().contains(x)
            && disjoint
            && union == ideal.gens()
            && i2.is_contained_in(&i1)
            && vertex_splittable(&i1)
            && vertex_splittable(&i2)
    })
}
