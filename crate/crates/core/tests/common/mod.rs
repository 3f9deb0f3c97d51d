#![allow(dead_code)]

use std::sync::Arc;

use mideal::{Monomial, MonomialIdeal, SimplicialComplex, VarSubset, VariableSet};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn vars(n: usize) -> Arc<VariableSet> {
    VariableSet::standard(n).unwrap()
}

/// One-based index lists to a subset.
pub fn set(ix: &[usize]) -> VarSubset {
    VarSubset::from_indices(ix.iter().map(|i| i - 1))
}

pub fn sq(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
    MonomialIdeal::from_supports(vars(n), &gens.iter().map(|g| set(g)).collect::<Vec<_>>())
}

pub fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::minimalize(vars(n), gens.iter().map(|e| Monomial::from_exponents(e.to_vec())).collect()).unwrap()
}

pub fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
    SimplicialComplex::from_facets(vars(n), facets.iter().map(|f| set(f)).collect()).unwrap()
}

pub fn random_monomial(rng: &mut ChaCha8Rng, n: usize, max_exp: u32) -> Monomial {
    Monomial::from_exponents((0..n).map(|_| rng.gen_range(0..=max_exp)).collect())
}

/// A nonzero proper squarefree ideal with up to `max_gens` generators.
pub fn random_squarefree(rng: &mut ChaCha8Rng, n: usize, max_gens: usize) -> MonomialIdeal {
    loop {
        let k = rng.gen_range(1..=max_gens);
        let faces: Vec<VarSubset> = (0..k).map(|_| VarSubset(rng.gen_range(1..(1u64 << n)))).collect();
        let i = MonomialIdeal::from_supports(vars(n), &faces);
        if !i.is_zero() && !i.is_unit() {
            return i;
        }
    }
}

/// A nonzero proper ideal, not necessarily squarefree.
pub fn random_ideal(rng: &mut ChaCha8Rng, n: usize, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    loop {
        let k = rng.gen_range(1..=max_gens);
        let gens = (0..k).map(|_| random_monomial(rng, n, max_exp)).collect();
        let i = MonomialIdeal::minimalize(vars(n), gens).unwrap();
        if !i.is_zero() && !i.is_unit() {
            return i;
        }
    }
}

/// Every monomial in `n` variables of total degree at most `d`.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for e in &out {
            let used: u32 = e.iter().sum();
            for a in 0..=(d - used) {
                let mut f: Vec<u32> = e.clone();
                f.push(a);
                next.push(f);
            }
        }
        out = next;
    }
    out.into_iter().map(Monomial::from_exponents).collect()
}

pub const EXAMPLE_291: &[&[usize]] = &[&[1, 3], &[1, 4], &[1, 6], &[2, 3], &[2, 4], &[3, 5], &[4, 5], &[4, 6], &[5, 6]];

pub const EXAMPLE_212: &[&[usize]] = &[
    &[1, 2, 3],
    &[1, 2, 4],
    &[1, 2, 5],
    &[1, 2, 6],
    &[1, 4, 5],
    &[1, 5, 6],
    &[2, 3, 4],
    &[3, 4, 5],
    &[3, 4, 6],
    &[3, 5, 6],
    &[4, 5, 6],
];

pub const EXAMPLE_212_DUAL: &[&[usize]] = &[
    &[1, 3, 4],
    &[1, 3, 5],
    &[1, 3, 6],
    &[1, 4, 5],
    &[1, 4, 6],
    &[2, 3, 5],
    &[2, 4, 5],
    &[2, 4, 6],
    &[2, 5, 6],
    &[3, 4, 5, 6],
];
