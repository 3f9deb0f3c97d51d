use super::order_search::{search_order, OrderSearch};
use super::{factorial, Refutation, SearchCaps, Undecided, Verdict};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// An ordering of the minimal generators of one ideal.
pub type GeneratorOrder = Vec<Monomial>;

/// Checks that every colon `(u_1, ..., u_{j-1}) : u_j` is generated by
/// variables, computing each colon ideal explicitly.
pub fn has_linear_quotients_under(ideal: &MonomialIdeal, order: &[Monomial]) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let mut sorted = order.to_vec();
    sorted.sort();
    if sorted != ideal.gens() {
        return Err(Error::NotAPermutation("the minimal generators"));
    }
    for j in 1..order.len() {
        let earlier = MonomialIdeal::minimalize(ideal.vars().clone(), order[..j].to_vec())?;
        let colon = earlier.colon(&order[j])?;
        if colon.gens().iter().any(|g| g.degree() != 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches for a linear-quotients order of `G(I)`.
///
/// Adding `g` after a set `S` is admissible iff every `u / gcd(u, g)` with
/// `u ∈ S` is divisible by a variable that itself occurs as some
/// `w / gcd(w, g)`, `w ∈ S`.
pub fn find_lq_order(ideal: &MonomialIdeal, caps: &SearchCaps) -> Result<Verdict<GeneratorOrder>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let gens = ideal.gens();
    let s = gens.len();
    if s > 64 {
        return Ok(Verdict::Undecided(Undecided { what: "generators for order search", got: s, cap: 64 }));
    }
    // quot[g][u] = (support mask, degree) of u / gcd(u, g)
    let quot: Vec<Vec<(u64, u32)>> = gens
        .iter()
        .map(|g| {
            gens.iter()
                .map(|u| {
                    let q = u.colon(g);
                    (q.support().bits(), q.degree())
                })
                .collect()
        })
        .collect();
    let admissible = |set: u64, g: usize| {
        let row = &quot[g];
        let members = || (0..s).filter(move |&u| set >> u & 1 == 1);
        let linear = members().filter(|&u| row[u].1 == 1).fold(0u64, |acc, u| acc | row[u].0);
        members().all(|u| row[u].0 & linear != 0)
    };
    let budget = if s > caps.max_lq_gens { caps.max_nodes.min(1 << caps.max_lq_gens.min(40)) } else { caps.max_nodes };
    Ok(match search_order(s, budget, admissible) {
        OrderSearch::Found(idx) => Verdict::Holds(idx.into_iter().map(|k| gens[k].clone()).collect()),
        OrderSearch::Exhausted { .. } if s > caps.max_lq_gens => {
            Verdict::Undecided(Undecided { what: "generators for order search", got: s, cap: caps.max_lq_gens })
        }
        OrderSearch::Exhausted { explored } => Verdict::Fails(Refutation { explored, covered: factorial(s) }),
        OrderSearch::OutOfBudget => {
            Verdict::Undecided(Undecided { what: "order search nodes", got: budget as usize, cap: budget as usize })
        }
    })
}
