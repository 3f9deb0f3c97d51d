//! Monomial ideals in canonical form.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::vars::{minimal_transversals, VarSubset, VariableSet};

/// A monomial ideal, stored by its minimal generating set `G(I)`.
///
/// Generators are kept in the canonical [`Monomial`] order, so two ideals are
/// equal exactly when their representations are equal. The zero ideal has no
/// generators; the unit ideal has the single generator `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    vars: Arc<VariableSet>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, reducing to the minimal
    /// generating set.
    pub fn minimalize(vars: Arc<VariableSet>, gens: Vec<Monomial>) -> Result<Self> {
        let n = vars.len();
        if let Some(bad) = gens.iter().find(|g| g.nvars() != n) {
            return Err(Error::VarCountMismatch { expected: n, got: bad.nvars() });
        }
        Ok(Self::from_checked(vars, gens))
    }

    pub(crate) fn from_checked(vars: Arc<VariableSet>, mut gens: Vec<Monomial>) -> Self {
        gens.sort();
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            // divisors of g sort strictly before it
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        MonomialIdeal { vars, gens: kept }
    }

    pub fn zero(vars: Arc<VariableSet>) -> Self {
        MonomialIdeal { vars, gens: Vec::new() }
    }

    pub fn unit(vars: Arc<VariableSet>) -> Self {
        let n = vars.len();
        MonomialIdeal { vars, gens: vec![Monomial::one(n)] }
    }

    /// Squarefree ideal generated by `x_F` for each `F` in `faces`.
    pub fn from_supports(vars: Arc<VariableSet>, faces: &[VarSubset]) -> Self {
        let n = vars.len();
        Self::from_checked(vars, faces.iter().map(|&f| Monomial::from_subset(n, f)).collect())
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `self ⊆ other`.
    pub fn is_contained_in(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn supports(&self) -> Vec<VarSubset> {
        self.gens.iter().map(Monomial::support).collect()
    }

    /// Union of the generator supports.
    pub fn support(&self) -> VarSubset {
        self.gens.iter().fold(VarSubset::EMPTY, |acc, g| acc.union(g.support()))
    }

    /// The common degree of all generators, if there is one.
    pub fn single_degree(&self) -> Option<u32> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn min_degree(&self) -> Result<u32> {
        self.gens.iter().map(Monomial::degree).min().ok_or(Error::ZeroIdeal)
    }

    /// `deg(I)`: the largest degree of a minimal generator.
    pub fn max_degree(&self) -> Result<u32> {
        self.gens.iter().map(Monomial::degree).max().ok_or(Error::ZeroIdeal)
    }

    pub fn require_squarefree(&self) -> Result<()> {
        if self.is_squarefree() {
            Ok(())
        } else {
            Err(Error::NotSquarefree)
        }
    }

    /// `(I : m)`, generated by `u / gcd(u, m)` for `u` in `G(I)`.
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.nvars() != self.nvars() {
            return Err(Error::VarCountMismatch { expected: self.nvars(), got: m.nvars() });
        }
        Ok(Self::from_checked(self.vars.clone(), self.gens.iter().map(|u| u.colon(m)).collect()))
    }

    /// Inclusion-minimal vertex covers of the generator supports; these are
    /// the generator sets of the minimal primes of a squarefree ideal.
    pub fn minimal_primes(&self) -> Result<Vec<VarSubset>> {
        self.require_squarefree()?;
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        Ok(minimal_transversals(&self.supports()))
    }

    /// The squarefree Alexander dual `I^∨`, generated by `x_P` for the
    /// minimal primes `P` of `I`. The zero and unit ideals are dual to each
    /// other.
    pub fn alexander_dual(&self) -> Result<MonomialIdeal> {
        self.require_squarefree()?;
        if self.is_zero() {
            return Ok(Self::unit(self.vars.clone()));
        }
        if self.is_unit() {
            return Ok(Self::zero(self.vars.clone()));
        }
        Ok(Self::from_supports(self.vars.clone(), &self.minimal_primes()?))
    }

    /// Ideal generated by the squarefree monomials of degree `j` lying in a
    /// squarefree ideal, written `I_[j]`.
    pub fn squarefree_component(&self, j: usize) -> Result<MonomialIdeal> {
        self.require_squarefree()?;
        let n = self.nvars();
        let supports = self.supports();
        let mut gens = Vec::new();
        if j <= n {
            for_each_subset_of_size(n, j, |s| {
                if supports.iter().any(|g| g.is_subset(s)) {
                    gens.push(Monomial::from_subset(n, s));
                }
            });
        }
        Ok(Self::from_checked(self.vars.clone(), gens))
    }

    /// Standard polarization: `x_i^k` becomes `x_i` times `k - 1` fresh
    /// variables. The fresh copies of `x_i` are named `y{i}`, `y{i}_2`, ...
    /// and are appended after the original variables. Squarefree ideals are
    /// returned unchanged.
    pub fn polarize(&self) -> Result<MonomialIdeal> {
        if self.is_squarefree() {
            return Ok(self.clone());
        }
        let n = self.nvars();
        let max_exp: Vec<u32> = (0..n).map(|i| self.gens.iter().map(|g| g.exp(i)).max().unwrap_or(0)).collect();
        let mut names: Vec<String> = self.vars.names().to_vec();
        // offset[i][c] = index of copy c+2 of variable i
        let mut offset: Vec<Vec<usize>> = vec![Vec::new(); n];
        for i in 0..n {
            for c in 2..=max_exp[i] {
                offset[i].push(names.len());
                let base = self.vars.name(i).trim_start_matches('x');
                names.push(if c == 2 { format!("y{base}") } else { format!("y{base}_{}", c - 1) });
            }
        }
        let vars = VariableSet::named(names)?;
        let total = vars.len();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = vec![0u32; total];
                for i in 0..n {
                    let a = g.exp(i) as usize;
                    if a > 0 {
                        e[i] = 1;
                        for &k in &offset[i][..a - 1] {
                            e[k] = 1;
                        }
                    }
                }
                Monomial::from_exponents(e)
            })
            .collect();
        Ok(Self::from_checked(vars, gens))
    }

    /// Renames variables: variable `p` of the result is variable `perm[p]`
    /// of `self`. Names stay positional.
    pub fn permute_vars(&self, perm: &[usize]) -> MonomialIdeal {
        Self::from_checked(self.vars.clone(), self.gens.iter().map(|g| g.permuted(perm)).collect())
    }

    /// The same generators over a different variable set of equal size.
    pub fn with_vars(&self, vars: Arc<VariableSet>) -> Result<MonomialIdeal> {
        if vars.len() != self.nvars() {
            return Err(Error::VarCountMismatch { expected: self.nvars(), got: vars.len() });
        }
        Ok(MonomialIdeal { vars, gens: self.gens.clone() })
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(&self.vars))?;
        }
        Ok(())
    }
}

/// Calls `f` on every `j`-element subset of `{0..n}`.
pub fn for_each_subset_of_size(n: usize, j: usize, mut f: impl FnMut(VarSubset)) {
    if j > n {
        return;
    }
    if j == 0 {
        f(VarSubset::EMPTY);
        return;
    }
    // Gosper's hack
    let mut s: u64 = if j == 64 { u64::MAX } else { (1u64 << j) - 1 };
    let limit: u128 = 1u128 << n;
    while (s as u128) < limit {
        f(VarSubset(s));
        let c = s & s.wrapping_neg();
        let r = s.wrapping_add(c);
        if r == 0 {
            break;
        }
        s = (((r ^ s) >> 2) / c) | r;
    }
}
