//! Weak polymatroidality relative to a variable order, and the search for
//! an order under which it holds.
//!
//! Under the order `x_{σ(0)} > x_{σ(1)} > ...`, a pair `u, v ∈ G(I)` whose
//! exponents first differ at position `t` with `u` larger there needs a
//! variable `x_j` at a later position with `x_j | v` and
//! `x_{σ(t)} (v / x_j) ∈ I`. The later positions are exactly the variables
//! not among `σ(0..=t)`, so the requirement is settled as soon as the prefix
//! up to `t` is fixed. The search prunes on that.

use std::fmt;

use super::{factorial, Refutation, SearchCaps, Undecided, Verdict};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::vars::{VarSubset, VariableSet};

/// A permutation of the variables; position 0 is the greatest variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableOrder(Vec<usize>);

impl VariableOrder {
    pub fn new(order: Vec<usize>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n];
        if order.len() != n {
            return Err(Error::NotAPermutation("the variables"));
        }
        for &i in &order {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::NotAPermutation("the variables"));
            }
        }
        Ok(VariableOrder(order))
    }

    pub fn identity(n: usize) -> Self {
        VariableOrder((0..n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn display<'a>(&'a self, vars: &'a VariableSet) -> impl fmt::Display + 'a {
        struct D<'a>(&'a [usize], &'a VariableSet);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                for (k, &i) in self.0.iter().enumerate() {
                    if k > 0 {
                        f.write_str(">")?;
                    }
                    f.write_str(self.1.name(i))?;
                }
                Ok(())
            }
        }
        D(&self.0, vars)
    }
}

/// Whether `big` (greater at variable `top`) and `small` fail the exchange:
/// no variable outside `fixed` divides `small` with
/// `x_top (small / x_j) ∈ I`. `fixed` includes `top` and every variable
/// ranked above it.
fn exchange_fails(ideal: &MonomialIdeal, small: &Monomial, top: usize, fixed: VarSubset) -> bool {
    let lifted = small.times_var(top);
    !small.support().difference(fixed).iter().any(|j| ideal.contains(&lifted.div_var(j).expect("x_j divides")))
}

/// The position in `order` where `u` and `v` first differ.
fn first_difference(order: &[usize], u: &Monomial, v: &Monomial) -> Option<usize> {
    order.iter().position(|&i| u.exp(i) != v.exp(i))
}

/// Whether the pair `u, v` of generators violates weak polymatroidality
/// under `order`.
pub fn pair_violates(ideal: &MonomialIdeal, order: &VariableOrder, u: &Monomial, v: &Monomial) -> bool {
    let ord = order.as_slice();
    let Some(t) = first_difference(ord, u, v) else {
        return false;
    };
    let top = ord[t];
    let small = if u.exp(top) > v.exp(top) { v } else { u };
    let fixed = VarSubset::from_indices(ord[..=t].iter().copied());
    exchange_fails(ideal, small, top, fixed)
}

pub fn is_weakly_polymatroidal_under(ideal: &MonomialIdeal, order: &VariableOrder) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if order.as_slice().len() != ideal.nvars() {
        return Err(Error::NotAPermutation("the variables"));
    }
    let gens = ideal.gens();
    for (a, u) in gens.iter().enumerate() {
        for v in &gens[a + 1..] {
            if pair_violates(ideal, order, u, v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Searches for a variable order making the ideal weakly polymatroidal.
///
/// With at most `caps.max_wpm_vars` variables the search is complete and a
/// failure refutes all `n!` orders; above the cap only a found order counts.
pub fn find_wpm_order(ideal: &MonomialIdeal, caps: &SearchCaps) -> Result<Verdict<VariableOrder>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = ideal.nvars();
    let gens = ideal.gens();
    let pairs: Vec<(usize, usize)> = (0..gens.len()).flat_map(|a| (a + 1..gens.len()).map(move |b| (a, b))).collect();
    let mut search = WpmSearch { ideal, n, prefix: Vec::new(), explored: 0, covered: 0, max_nodes: caps.max_nodes };
    let found = search.extend(VarSubset::EMPTY, &pairs);
    match found {
        Some(true) => Ok(Verdict::Holds(VariableOrder(search.prefix))),
        _ if n > caps.max_wpm_vars => {
            Ok(Verdict::Undecided(Undecided { what: "variables for order search", got: n, cap: caps.max_wpm_vars }))
        }
        Some(false) => Ok(Verdict::Fails(Refutation { explored: search.explored, covered: search.covered })),
        None => Ok(Verdict::Undecided(Undecided {
            what: "order search nodes",
            got: search.explored as usize,
            cap: caps.max_nodes as usize,
        })),
    }
}

struct WpmSearch<'a> {
    ideal: &'a MonomialIdeal,
    n: usize,
    prefix: Vec<usize>,
    explored: u64,
    covered: u128,
    max_nodes: u64,
}

impl WpmSearch<'_> {
    /// `tied` holds the generator pairs agreeing on every placed variable.
    fn extend(&mut self, placed: VarSubset, tied: &[(usize, usize)]) -> Option<bool> {
        if self.prefix.len() == self.n || tied.is_empty() {
            // any completion works
            self.prefix.extend((0..self.n).filter(|&i| !placed.contains(i)));
            return Some(true);
        }
        self.explored += 1;
        if self.explored > self.max_nodes {
            return None;
        }
        let gens = self.ideal.gens();
        for y in 0..self.n {
            if placed.contains(y) {
                continue;
            }
            let fixed = placed.with(y);
            let mut still_tied = Vec::with_capacity(tied.len());
            let mut violated = false;
            for &(a, b) in tied {
                let (ea, eb) = (gens[a].exp(y), gens[b].exp(y));
                if ea == eb {
                    still_tied.push((a, b));
                    continue;
                }
                let small = if ea > eb { &gens[b] } else { &gens[a] };
                if exchange_fails(self.ideal, small, y, fixed) {
                    violated = true;
                    break;
                }
            }
            if violated {
                self.covered = self.covered.saturating_add(factorial(self.n - self.prefix.len() - 1));
                continue;
            }
            self.prefix.push(y);
            if self.extend(fixed, &still_tied)? {
                return Some(true);
            }
            self.prefix.pop();
        }
        Some(false)
    }
}
