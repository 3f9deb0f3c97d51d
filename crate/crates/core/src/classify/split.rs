//! Vertex splittable ideals.
//!
//! An ideal is vertex splittable if it is zero, the unit ideal or principal,
//! or if for some variable `x` it splits as `I = x I_1 + I_2` with `I_1`,
//! `I_2` vertex splittable ideals not involving `x`, `I_2 ⊆ I_1`, and
//! `G(I) = G(x I_1) ⊔ G(I_2)`.
//!
//! The disjoint-union condition pins the split down once `x` is chosen:
//! `G(x I_1)` must be the generators divisible by `x` and `G(I_2)` the rest.
//! So `x` qualifies only if it divides those generators exactly once.

use std::collections::HashMap;
use std::sync::Arc;

use super::{SearchCaps, Undecided, Verdict};
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitNode {
    pub ideal: MonomialIdeal,
    pub step: SplitStep,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitStep {
    Zero,
    Unit,
    Principal,
    /// `ideal = x_vertex · divided.ideal + rest.ideal`
    Split {
        vertex: usize,
        divided: Arc<SplitNode>,
        rest: Arc<SplitNode>,
    },
}

/// The candidate split of `ideal` at variable `x`, if `x` divides some
/// generator and only to the first power. Returns `(I_1, I_2)`.
pub(crate) fn split_at(ideal: &MonomialIdeal, x: usize) -> Option<(MonomialIdeal, MonomialIdeal)> {
    let (with, without): (Vec<&Monomial>, Vec<&Monomial>) = ideal.gens().iter().partition(|g| g.exp(x) > 0);
    if with.is_empty() || with.iter().any(|g| g.exp(x) > 1) {
        return None;
    }
    let vars = ideal.vars().clone();
    let divided = MonomialIdeal::from_checked(vars.clone(), with.iter().map(|g| g.div_var(x).unwrap()).collect());
    let rest = MonomialIdeal::from_checked(vars, without.into_iter().cloned().collect());
    Some((divided, rest))
}

pub fn is_vertex_splittable(ideal: &MonomialIdeal, caps: &SearchCaps) -> Result<Verdict<Arc<SplitNode>>> {
    let mut search = SplitSearch { memo: HashMap::new(), explored: 0, max_nodes: caps.max_nodes };
    Ok(match search.solve(ideal) {
        Some(Some(node)) => Verdict::Holds(node),
        Some(None) => Verdict::Fails(super::Refutation { explored: search.explored, covered: 0 }),
        None => Verdict::Undecided(Undecided {
            what: "splitting search nodes",
            got: search.explored as usize,
            cap: caps.max_nodes as usize,
        }),
    })
}

struct SplitSearch {
    memo: HashMap<Vec<Monomial>, Option<Arc<SplitNode>>>,
    explored: u64,
    max_nodes: u64,
}

impl SplitSearch {
    /// Outer `None`: out of budget.
    fn solve(&mut self, ideal: &MonomialIdeal) -> Option<Option<Arc<SplitNode>>> {
        let base = if ideal.is_zero() {
            Some(SplitStep::Zero)
        } else if ideal.is_unit() {
            Some(SplitStep::Unit)
        } else if ideal.is_principal() {
            Some(SplitStep::Principal)
        } else {
            None
        };
        if let Some(step) = base {
            return Some(Some(Arc::new(SplitNode { ideal: ideal.clone(), step })));
        }
        if let Some(hit) = self.memo.get(ideal.gens()) {
            return Some(hit.clone());
        }
        self.explored += 1;
        if self.explored > self.max_nodes {
            return None;
        }
        let mut found = None;
        for x in ideal.support().iter() {
            let Some((divided, rest)) = split_at(ideal, x) else { continue };
            if !rest.is_contained_in(&divided) {
                continue;
            }
            let Some(d) = self.solve(&divided)? else { continue };
            let Some(r) = self.solve(&rest)? else { continue };
            found = Some(Arc::new(SplitNode {
                ideal: ideal.clone(),
                step: SplitStep::Split { vertex: x, divided: d, rest: r },
            }));
            break;
        }
        self.memo.insert(ideal.gens().to_vec(), found.clone());
        Some(found)
    }
}
