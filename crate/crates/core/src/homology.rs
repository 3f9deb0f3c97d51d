//! Reduced simplicial homology and graded Betti numbers via Hochster's
//! formula.
//!
//! For a squarefree ideal `I = I_Δ`,
//!
//! ```text
//! β_{i,j}(I) = Σ_{W ⊆ V, |W| = j} dim H̃_{j-i-2}(Δ_W; K)
//! ```
//!
//! Non-squarefree ideals are polarized first, which preserves the graded
//! Betti numbers. Only vertex sets `W` that are unions of generator supports
//! are visited: for any other `W` some vertex of `W` lies in no minimal
//! non-face inside `W`, so `Δ_W` is a cone and contributes nothing.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::{rank, FieldSpec, SparseRow};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::vars::VarSubset;

pub const DEFAULT_MAX_HOMOLOGY_VERTICES: usize = 16;
pub const DEFAULT_MAX_HILBERT_GENS: usize = 20;

/// Dimensions of reduced homology `H̃_k(Δ; K)` for `k ≥ -1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyProfile {
    pub field: FieldSpec,
    /// `dims[k + 1] = dim H̃_k`
    dims: Vec<usize>,
}

impl HomologyProfile {
    pub fn get(&self, k: isize) -> usize {
        if k < -1 {
            return 0;
        }
        self.dims.get((k + 1) as usize).copied().unwrap_or(0)
    }

    /// `(k, dim H̃_k)` for every nonzero group.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.dims.iter().enumerate().filter(|(_, &d)| d > 0).map(|(i, &d)| (i as isize - 1, d))
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }
}

pub fn reduced_homology_dims(cx: &SimplicialComplex, field: FieldSpec) -> Result<HomologyProfile> {
    reduced_homology_dims_capped(cx, field, DEFAULT_MAX_HOMOLOGY_VERTICES)
}

pub fn reduced_homology_dims_capped(
    cx: &SimplicialComplex,
    field: FieldSpec,
    max_vertices: usize,
) -> Result<HomologyProfile> {
    let nv = cx.vertices().len();
    if nv > max_vertices {
        return Err(Error::Cap { what: "homology vertices", got: nv, cap: max_vertices });
    }
    Ok(homology_unchecked(cx, field))
}

fn homology_unchecked(cx: &SimplicialComplex, field: FieldSpec) -> HomologyProfile {
    if cx.is_void() {
        return HomologyProfile { field, dims: Vec::new() };
    }
    // a cone is acyclic
    if cx.facets().len() == 1 && !cx.facets()[0].is_empty() {
        return HomologyProfile { field, dims: Vec::new() };
    }
    let groups = cx.faces_by_size();
    // ranks[k] = rank of the boundary map from k-vertex faces to (k-1)-vertex faces
    let mut ranks = vec![0usize; groups.len() + 1];
    for k in 1..groups.len() {
        let index: std::collections::HashMap<u64, usize> =
            groups[k - 1].iter().enumerate().map(|(i, f)| (f.0, i)).collect();
        let rows: Vec<SparseRow> = groups[k]
            .iter()
            .map(|face| {
                let mut row: SparseRow = face
                    .iter()
                    .enumerate()
                    .map(|(pos, v)| {
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        (index[&face.without(v).0], sign)
                    })
                    .collect();
                row.sort_by_key(|e| e.0);
                row
            })
            .collect();
        ranks[k] = rank(field, &rows);
    }
    let dims = (0..groups.len()).map(|k| groups[k].len() - ranks[k] - ranks[k + 1]).collect();
    HomologyProfile { field, dims }
}

/// Graded Betti numbers `β_{i,j}` of an ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub field: FieldSpec,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((i, j), β_{i,j})` in increasing order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// `max { j - i : β_{i,j} ≠ 0 }`.
    pub fn regularity(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, j)| j - i).max()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Coefficients of `Σ_{i,j} (-1)^i β_{i,j}(R/I) t^j`, where
    /// `β_{0,0}(R/I) = 1` and `β_{i+1,j}(R/I) = β_{i,j}(I)`.
    pub fn quotient_euler_coefficients(&self) -> Vec<i64> {
        let top = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut c = vec![0i64; top + 1];
        c[0] = 1;
        for (&(i, j), &b) in &self.entries {
            let sign = if i % 2 == 0 { -1 } else { 1 };
            c[j] += sign * b as i64;
        }
        trim(c)
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (Some(pd), Some(reg)) = (self.projective_dimension(), self.regularity()) else {
            return writeln!(f, "(zero table)");
        };
        let low = self.entries.keys().map(|&(i, j)| j - i).min().unwrap_or(0);
        let cell = |v: u64| if v == 0 { ".".to_string() } else { v.to_string() };
        let width = self.entries.values().map(|v| v.to_string().len()).max().unwrap_or(1).max(pd.to_string().len());
        write!(f, "{:>7}", "")?;
        for i in 0..=pd {
            write!(f, " {:>width$}", i)?;
        }
        writeln!(f)?;
        write!(f, "{:>7}", "total:")?;
        for i in 0..=pd {
            let t: u64 = self.entries.iter().filter(|(k, _)| k.0 == i).map(|(_, v)| v).sum();
            write!(f, " {:>width$}", t)?;
        }
        writeln!(f)?;
        for r in low..=reg {
            write!(f, "{:>7}", format!("{r}:"))?;
            for i in 0..=pd {
                write!(f, " {:>width$}", cell(self.get(i, i + r)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BettiOptions {
    /// Visit only unions of generator supports.
    pub prune: bool,
    /// Cap on the number of variables after polarization.
    pub max_vertices: usize,
}

impl Default for BettiOptions {
    fn default() -> Self {
        BettiOptions { prune: true, max_vertices: DEFAULT_MAX_HOMOLOGY_VERTICES }
    }
}

pub fn betti_table(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    betti_table_with(ideal, field, BettiOptions::default())
}

pub fn betti_table_with(ideal: &MonomialIdeal, field: FieldSpec, opts: BettiOptions) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let pol = ideal.polarize()?;
    let n = pol.nvars();
    if n > opts.max_vertices {
        return Err(Error::Cap { what: "variables after polarization", got: n, cap: opts.max_vertices });
    }
    let delta = SimplicialComplex::stanley_reisner_complex(&pol)?;
    let subsets = if opts.prune { support_unions(&pol) } else { all_nonempty_subsets(n) };
    let contributions: Vec<((usize, usize), u64)> = subsets
        .par_iter()
        .flat_map_iter(|&w| {
            let j = w.len();
            let h = homology_unchecked(&delta.induced(w), field);
            h.nonzero()
                .filter_map(move |(k, d)| {
                    let i = j as isize - k - 2;
                    (i >= 0).then_some(((i as usize, j), d as u64))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let mut entries = BTreeMap::new();
    for (key, d) in contributions {
        *entries.entry(key).or_insert(0) += d;
    }
    Ok(BettiTable { field, entries })
}

/// Nonempty vertex sets that are unions of generator supports of a
/// squarefree ideal.
pub fn support_unions(ideal: &MonomialIdeal) -> Vec<VarSubset> {
    let supports = ideal.supports();
    all_nonempty_subsets(ideal.nvars())
        .into_iter()
        .filter(|&w| {
            let covered = supports.iter().filter(|s| s.is_subset(w)).fold(VarSubset::EMPTY, |a, s| a.union(*s));
            covered == w
        })
        .collect()
}

/// Vertex sets skipped by the pruned Hochster sum.
pub fn skipped_subsets(ideal: &MonomialIdeal) -> Vec<VarSubset> {
    let used: std::collections::HashSet<VarSubset> = support_unions(ideal).into_iter().collect();
    all_nonempty_subsets(ideal.nvars()).into_iter().filter(|w| !used.contains(w)).collect()
}

/// Some vertex lies in every facet.
pub fn is_cone(cx: &SimplicialComplex) -> bool {
    match cx.facets().split_first() {
        None => false,
        Some((first, rest)) => !rest.iter().fold(*first, |acc, f| acc.intersection(*f)).is_empty(),
    }
}

fn all_nonempty_subsets(n: usize) -> Vec<VarSubset> {
    (1u64..(1u64 << n)).map(VarSubset).collect()
}

pub fn regularity(ideal: &MonomialIdeal, field: FieldSpec) -> Result<u32> {
    Ok(betti_table(ideal, field)?.regularity().unwrap_or(0) as u32)
}

/// Generated in a single degree `d` with regularity `d`. Mixed-degree ideals
/// are reported as not having a linear resolution.
pub fn has_linear_resolution(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let Some(d) = ideal.single_degree() else {
        return Ok(false);
    };
    Ok(regularity(ideal, field)? == d)
}

/// A squarefree ideal is componentwise linear iff each `I_[j]` is zero or
/// has a linear resolution. The zero and unit ideals are free and count as
/// componentwise linear.
pub fn is_componentwise_linear(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    ideal.require_squarefree()?;
    if ideal.is_zero() || ideal.is_unit() {
        return Ok(true);
    }
    let lo = ideal.min_degree()? as usize;
    for j in lo..=ideal.nvars() {
        let comp = ideal.squarefree_component(j)?;
        if !comp.is_zero() && !has_linear_resolution(&comp, field)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn hilbert_numerator(ideal: &MonomialIdeal) -> Result<Vec<i64>> {
    hilbert_numerator_capped(ideal, DEFAULT_MAX_HILBERT_GENS)
}

/// `Σ_{S ⊆ G(I)} (-1)^|S| t^{deg lcm(S)}`, the numerator of the Hilbert
/// series of `R/I`, by inclusion-exclusion over generator subsets.
pub fn hilbert_numerator_capped(ideal: &MonomialIdeal, max_gens: usize) -> Result<Vec<i64>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let gens = ideal.gens();
    if gens.len() > max_gens {
        return Err(Error::Cap { what: "generators for inclusion-exclusion", got: gens.len(), cap: max_gens });
    }
    let top: u32 = ideal.vars().all().iter().map(|i| gens.iter().map(|g| g.exp(i)).max().unwrap_or(0)).sum();
    let mut coeffs = vec![0i64; top as usize + 1];
    fn walk(gens: &[Monomial], start: usize, lcm: &Monomial, size: usize, coeffs: &mut [i64]) {
        let sign = if size.is_multiple_of(2) { 1 } else { -1 };
        coeffs[lcm.degree() as usize] += sign;
        for k in start..gens.len() {
            walk(gens, k + 1, &lcm.lcm(&gens[k]), size + 1, coeffs);
        }
    }
    walk(gens, 0, &Monomial::one(ideal.nvars()), 0, &mut coeffs);
    Ok(trim(coeffs))
}

fn trim(mut c: Vec<i64>) -> Vec<i64> {
    while c.len() > 1 && *c.last().unwrap() == 0 {
        c.pop();
    }
    c
}
