//! Simplicial complexes given by their facets, and the Stanley-Reisner
//! correspondence with squarefree monomial ideals.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::vars::{maximal_sets, minimal_transversals, VarSubset, VariableSet};

/// A simplicial complex on the vertex set of a [`VariableSet`].
///
/// The void complex (no faces at all) has no facets; the irrelevant complex
/// `{∅}` has the single facet `∅`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vars: Arc<VariableSet>,
    facets: Vec<VarSubset>,
}

impl SimplicialComplex {
    pub fn from_facets(vars: Arc<VariableSet>, facets: Vec<VarSubset>) -> Result<Self> {
        let ground = vars.all();
        if let Some(bad) = facets.iter().find(|f| !f.is_subset(ground)) {
            let i = bad.difference(ground).iter().next().unwrap_or(0);
            return Err(Error::VariableOutOfRange(i + 1));
        }
        Ok(Self::from_checked(vars, facets))
    }

    pub(crate) fn from_checked(vars: Arc<VariableSet>, facets: Vec<VarSubset>) -> Self {
        SimplicialComplex { vars, facets: maximal_sets(facets) }
    }

    pub fn void(vars: Arc<VariableSet>) -> Self {
        SimplicialComplex { vars, facets: Vec::new() }
    }

    pub fn irrelevant(vars: Arc<VariableSet>) -> Self {
        SimplicialComplex { vars, facets: vec![VarSubset::EMPTY] }
    }

    pub fn full_simplex(vars: Arc<VariableSet>) -> Self {
        let all = vars.all();
        SimplicialComplex { vars, facets: vec![all] }
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn facets(&self) -> &[VarSubset] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// At most one facet. The void complex counts as a simplex here.
    pub fn is_simplex(&self) -> bool {
        self.facets.len() <= 1
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Dimension, with `None` for the void complex and `-1` for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    /// Vertices lying in some face.
    pub fn vertices(&self) -> VarSubset {
        self.facets.iter().fold(VarSubset::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn contains_face(&self, face: VarSubset) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// The complex whose Stanley-Reisner ideal is the squarefree ideal `ideal`:
    /// all vertex sets containing no generator support.
    pub fn stanley_reisner_complex(ideal: &MonomialIdeal) -> Result<Self> {
        ideal.require_squarefree()?;
        let mut facets = vec![ideal.vars().all()];
        for s in ideal.supports() {
            let mut next = Vec::with_capacity(facets.len() + s.len());
            for f in facets {
                if s.is_subset(f) {
                    next.extend(s.iter().map(|v| f.without(v)));
                } else {
                    next.push(f);
                }
            }
            facets = maximal_sets(next);
        }
        Ok(SimplicialComplex { vars: ideal.vars().clone(), facets })
    }

    /// `I_Δ`, generated by the minimal non-faces.
    pub fn stanley_reisner_ideal(&self) -> MonomialIdeal {
        let all = self.vars.all();
        let complements: Vec<VarSubset> = self.facets.iter().map(|f| all.difference(*f)).collect();
        MonomialIdeal::from_supports(self.vars.clone(), &minimal_transversals(&complements))
    }

    /// `Δ^∨ = { V∖A : A ∉ Δ }`.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        let all = self.vars.all();
        let nonfaces = self.stanley_reisner_ideal().supports();
        Self::from_checked(self.vars.clone(), nonfaces.iter().map(|a| all.difference(*a)).collect())
    }

    /// `del_Δ(F) = { A ∈ Δ : A ∩ F = ∅ }`.
    pub fn deletion(&self, face: VarSubset) -> SimplicialComplex {
        Self::from_checked(self.vars.clone(), self.facets.iter().map(|g| g.difference(face)).collect())
    }

    /// `lk_Δ(F) = { A ∈ Δ : A ∩ F = ∅, A ∪ F ∈ Δ }`; void when `F ∉ Δ`.
    pub fn link(&self, face: VarSubset) -> SimplicialComplex {
        Self::from_checked(
            self.vars.clone(),
            self.facets.iter().filter(|g| face.is_subset(**g)).map(|g| g.difference(face)).collect(),
        )
    }

    /// The induced subcomplex `Δ_W = { A ∈ Δ : A ⊆ W }`.
    pub fn induced(&self, w: VarSubset) -> SimplicialComplex {
        Self::from_checked(self.vars.clone(), self.facets.iter().map(|g| g.intersection(w)).collect())
    }

    /// All faces grouped by cardinality: entry `k` holds the faces with `k`
    /// vertices, each group in increasing bitmask order.
    pub fn faces_by_size(&self) -> Vec<Vec<VarSubset>> {
        let Some(top) = self.facets.iter().map(|f| f.len()).max() else {
            return Vec::new();
        };
        let mut seen: HashSet<u64> = HashSet::new();
        for f in &self.facets {
            // enumerate all submasks of f
            let mut sub = f.0;
            loop {
                seen.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f.0;
            }
        }
        let mut groups = vec![Vec::new(); top + 1];
        for s in seen {
            groups[s.count_ones() as usize].push(VarSubset(s));
        }
        for g in &mut groups {
            g.sort_by_key(|s| s.0);
        }
        groups
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (k, face) in self.facets.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", face.display(&self.vars))?;
        }
        f.write_str(">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(ix: &[usize]) -> VarSubset {
        VarSubset::from_indices(ix.iter().map(|i| i - 1))
    }

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let vars = VariableSet::standard(n).unwrap();
        SimplicialComplex::from_facets(vars, facets.iter().map(|f| s(f)).collect()).unwrap()
    }

    fn sq(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        let vars = VariableSet::standard(n).unwrap();
        MonomialIdeal::from_supports(vars, &gens.iter().map(|g| s(g)).collect::<Vec<_>>())
    }

    #[test]
    fn four_cycle_complex() {
        let i = sq(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        let d = SimplicialComplex::stanley_reisner_complex(&i).unwrap();
        assert_eq!(d, cx(4, &[&[1, 3], &[2, 4]]));
        assert_eq!(d.stanley_reisner_ideal(), i);
    }

    #[test]
    fn conventions_for_zero_unit_and_maximal_ideal() {
        let vars = VariableSet::standard(3).unwrap();
        let z = MonomialIdeal::zero(vars.clone());
        let u = MonomialIdeal::unit(vars.clone());
        let m = sq(3, &[&[1], &[2], &[3]]);
        assert_eq!(
            SimplicialComplex::stanley_reisner_complex(&z).unwrap(),
            SimplicialComplex::full_simplex(vars.clone())
        );
        assert_eq!(SimplicialComplex::stanley_reisner_complex(&u).unwrap(), SimplicialComplex::void(vars.clone()));
        assert_eq!(
            SimplicialComplex::stanley_reisner_complex(&m).unwrap(),
            SimplicialComplex::irrelevant(vars.clone())
        );
        assert_eq!(SimplicialComplex::void(vars.clone()).stanley_reisner_ideal(), u);
        assert_eq!(SimplicialComplex::irrelevant(vars.clone()).stanley_reisner_ideal(), m);
        assert_eq!(SimplicialComplex::full_simplex(vars).stanley_reisner_ideal(), z);
    }

    #[test]
    fn link_and_deletion() {
        let d = cx(4, &[&[1, 3], &[2, 4]]);
        assert_eq!(d.link(s(&[1])), cx(4, &[&[3]]));
        assert_eq!(d.deletion(s(&[1])), cx(4, &[&[3], &[2, 4]]));
        assert_eq!(d.link(VarSubset::EMPTY), d);
        assert!(d.link(s(&[1, 2])).is_void());
        assert_eq!(cx(2, &[&[1, 2]]).deletion(s(&[1])), cx(2, &[&[2]]));
    }

    #[test]
    fn faces_of_hollow_triangle() {
        let d = cx(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let sizes: Vec<usize> = d.faces_by_size().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 3, 3]);
        assert!(SimplicialComplex::void(VariableSet::standard(2).unwrap()).faces_by_size().is_empty());
    }

    #[test]
    fn rejects_out_of_range_vertex() {
        let vars = VariableSet::standard(2).unwrap();
        assert!(SimplicialComplex::from_facets(vars, vec![VarSubset::singleton(2)]).is_err());
    }
}
