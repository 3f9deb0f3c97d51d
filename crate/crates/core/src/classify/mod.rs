//! Certified decision procedures.
//!
//! Every search returns a [`Verdict`]: a witness that can be replayed by
//! [`verify_certificate`], a refutation recording how much of the search
//! space was exhausted, or an explicit undecided outcome when a resource cap
//! was reached.

mod certificate;
mod chordal;
mod decomp;
mod duality;
mod lq;
mod order_search;
mod polymatroid;
pub mod reference;
mod shell;
mod split;
mod wpm;

pub use certificate::{verify_certificate, Certificate, Subject};
pub use chordal::{complement_is_chordal, is_chordal, is_chordal_complement_oracle};
pub use decomp::{is_shedding_vertex, is_vertex_decomposable, DecompNode, DecompStep};
pub use duality::{is_cohen_macaulay, is_sequentially_cm};
pub use lq::{find_lq_order, has_linear_quotients_under, GeneratorOrder};
pub use polymatroid::{is_matroidal, is_polymatroidal};
pub use shell::{is_shellable, is_shelling_order};
pub use split::{is_vertex_splittable, SplitNode, SplitStep};
pub use wpm::{find_wpm_order, is_weakly_polymatroidal_under, pair_violates, VariableOrder};

/// Limits for the exponential searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchCaps {
    /// Variable count up to which `find_wpm_order` may refute.
    pub max_wpm_vars: usize,
    /// Generator count up to which `find_lq_order` may refute.
    pub max_lq_gens: usize,
    /// Facet count up to which `is_shellable` may refute.
    pub max_facets: usize,
    /// Search states visited before giving up.
    pub max_nodes: u64,
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps { max_wpm_vars: 9, max_lq_gens: 20, max_facets: 12, max_nodes: 2_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refutation {
    /// Search states expanded.
    pub explored: u64,
    /// Complete candidates (orders) ruled out, saturating.
    pub covered: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Undecided {
    pub what: &'static str,
    pub got: usize,
    pub cap: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds(W),
    Fails(Refutation),
    Undecided(Undecided),
}

impl<W> Verdict<W> {
    /// `Some(true)`, `Some(false)`, or `None` when undecided.
    pub fn decided(&self) -> Option<bool> {
        match self {
            Verdict::Holds(_) => Some(true),
            Verdict::Fails(_) => Some(false),
            Verdict::Undecided(_) => None,
        }
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds(_))
    }

    pub fn fails(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds(w) => Some(w),
            _ => None,
        }
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> Verdict<V> {
        match self {
            Verdict::Holds(w) => Verdict::Holds(f(w)),
            Verdict::Fails(r) => Verdict::Fails(r),
            Verdict::Undecided(u) => Verdict::Undecided(u),
        }
    }
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k)).unwrap_or(u128::MAX)
}
