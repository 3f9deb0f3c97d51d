//! Depth-first search for an ordering of items in which every item is
//! admissible after the set of items preceding it.
//!
//! Admissibility depends only on the set of earlier items, never on their
//! order, so a prefix set that failed once fails forever and is memoized.
//! The first item is unconstrained.

use std::collections::HashSet;

pub(crate) enum OrderSearch {
    Found(Vec<usize>),
    Exhausted { explored: u64 },
    OutOfBudget,
}

pub(crate) fn search_order(count: usize, max_nodes: u64, admissible: impl Fn(u64, usize) -> bool) -> OrderSearch {
    assert!(count <= 64);
    let full = if count == 64 { u64::MAX } else { (1u64 << count) - 1 };
    let mut st = State { full, count, max_nodes, explored: 0, failed: HashSet::new(), order: Vec::new() };
    match st.extend(0, &admissible) {
        Some(true) => OrderSearch::Found(st.order),
        Some(false) => OrderSearch::Exhausted { explored: st.explored },
        None => OrderSearch::OutOfBudget,
    }
}

struct State {
    full: u64,
    count: usize,
    max_nodes: u64,
    explored: u64,
    failed: HashSet<u64>,
    order: Vec<usize>,
}

impl State {
    /// `Some(true)` when `order` was completed, `None` when out of budget.
    fn extend(&mut self, set: u64, admissible: &impl Fn(u64, usize) -> bool) -> Option<bool> {
        if set == self.full {
            return Some(true);
        }
        self.explored += 1;
        if self.explored > self.max_nodes {
            return None;
        }
        for g in 0..self.count {
            if set >> g & 1 == 1 {
                continue;
            }
            let next = set | 1u64 << g;
            if self.failed.contains(&next) || (set != 0 && !admissible(set, g)) {
                continue;
            }
            self.order.push(g);
            if self.extend(next, admissible)? {
                return Some(true);
            }
            self.order.pop();
        }
        self.failed.insert(set);
        Some(false)
    }
}
