//! Variable sets and subsets of variables.
//!
//! Variables are addressed by zero-based index internally and displayed with
//! one-based labels (`x1`, `x2`, ...). A [`VarSubset`] is a bitmask over the
//! indices, so at most [`MAX_VARS`] variables can be represented.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub const MAX_VARS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableSet {
    names: Vec<String>,
}

impl VariableSet {
    /// Standard variables `x1..xn`.
    pub fn standard(n: usize) -> Result<Arc<Self>> {
        Self::named((1..=n).map(|i| format!("x{i}")).collect())
    }

    pub fn named(names: Vec<String>) -> Result<Arc<Self>> {
        if names.is_empty() || names.iter().any(|s| s.is_empty()) {
            return Err(Error::BadVariableNames);
        }
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables { max: MAX_VARS, got: names.len() });
        }
        let mut sorted: Vec<&String> = names.iter().collect();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != names.len() {
            return Err(Error::BadVariableNames);
        }
        Ok(Arc::new(VariableSet { names }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// True when the labels are exactly `x1..xn`.
    pub fn is_standard(&self) -> bool {
        self.names.iter().enumerate().all(|(i, s)| *s == format!("x{}", i + 1))
    }

    pub fn all(&self) -> VarSubset {
        VarSubset::full(self.len())
    }
}

/// A subset of variable indices, stored as a bitmask.
///
/// Doubles as a face of a simplicial complex, the support of a monomial and
/// the generator set of a monomial prime ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VarSubset(pub u64);

impl VarSubset {
    pub const EMPTY: VarSubset = VarSubset(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VarSubset(u64::MAX)
        } else {
            VarSubset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        VarSubset(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VarSubset(it.into_iter().fold(0, |m, i| m | (1u64 << i)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn is_subset(self, other: VarSubset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VarSubset) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(self, other: VarSubset) -> Self {
        VarSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSubset) -> Self {
        VarSubset(self.0 & other.0)
    }

    pub fn difference(self, other: VarSubset) -> Self {
        VarSubset(self.0 & !other.0)
    }

    pub fn with(self, i: usize) -> Self {
        VarSubset(self.0 | 1u64 << i)
    }

    pub fn without(self, i: usize) -> Self {
        VarSubset(self.0 & !(1u64 << i))
    }

    /// Member indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    pub fn max_index(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Canonical facet order: by size, then lexicographically on the sorted
    /// member lists.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }

    pub fn display<'a>(&self, vars: &'a VariableSet) -> SubsetDisplay<'a> {
        SubsetDisplay { set: *self, vars }
    }
}

pub struct SubsetDisplay<'a> {
    set: VarSubset,
    vars: &'a VariableSet,
}

impl fmt::Display for SubsetDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.set.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str(self.vars.name(i))?;
        }
        f.write_str("}")
    }
}

/// Keeps only the inclusion-maximal sets, canonically sorted.
pub fn maximal_sets(mut sets: Vec<VarSubset>) -> Vec<VarSubset> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    sets.dedup();
    let mut kept: Vec<VarSubset> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_by(VarSubset::canonical_cmp);
    kept
}

/// Keeps only the inclusion-minimal sets, canonically sorted.
pub fn minimal_sets(mut sets: Vec<VarSubset>) -> Vec<VarSubset> {
    sets.sort_by_key(|s| s.len());
    sets.dedup();
    let mut kept: Vec<VarSubset> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort_by(VarSubset::canonical_cmp);
    kept
}

/// Minimal transversals of a family of sets inside `ground`: the
/// inclusion-minimal subsets meeting every member. A family containing the
/// empty set has no transversal; the empty family has the single transversal
/// `{}`.
pub fn minimal_transversals(family: &[VarSubset]) -> Vec<VarSubset> {
    let mut family: Vec<VarSubset> = minimal_sets(family.to_vec());
    family.sort_by_key(|s| s.len());
    let mut current = vec![VarSubset::EMPTY];
    for &edge in &family {
        let mut next = Vec::with_capacity(current.len() * 2);
        for &t in &current {
            if t.intersects(edge) {
                next.push(t);
            } else {
                next.extend(edge.iter().map(|i| t.with(i)));
            }
        }
        current = minimal_sets(next);
        if current.is_empty() {
            break;
        }
    }
    current
}
