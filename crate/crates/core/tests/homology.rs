mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::*;
use mideal::homology::{
    betti_table, betti_table_with, hilbert_numerator, is_cone, reduced_homology_dims, regularity, skipped_subsets,
    BettiOptions,
};
use mideal::{FieldSpec, Monomial, MonomialIdeal, SimplicialComplex, VarSubset};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const Q: FieldSpec = FieldSpec::Rationals;

/// Betti numbers from the upper Koszul complexes
/// `K^b = { F ⊆ supp(b) : x^b / x^F ∈ I }`, with `β_{i,b} = dim H̃_{i-1}(K^b)`,
/// over every `b` in the lcm lattice. Works on the ideal itself, with no
/// polarization.
fn koszul_betti(i: &MonomialIdeal, field: FieldSpec) -> BTreeMap<(usize, usize), u64> {
    let n = i.nvars();
    let gens = i.gens();
    let mut lattice: BTreeSet<Monomial> = BTreeSet::new();
    for mask in 1u64..1 << gens.len() {
        let l = (0..gens.len()).filter(|k| mask >> k & 1 == 1).fold(Monomial::one(n), |acc, k| acc.lcm(&gens[k]));
        lattice.insert(l);
    }
    let mut out = BTreeMap::new();
    for b in lattice {
        let supp = b.support();
        let faces: Vec<VarSubset> = (0..1u64 << n)
            .map(VarSubset)
            .filter(|f| f.is_subset(supp))
            .filter(|f| {
                let xf = Monomial::from_subset(n, *f);
                i.contains(&b.checked_div(&xf).unwrap())
            })
            .collect();
        let facets: Vec<VarSubset> =
            faces.iter().copied().filter(|f| !faces.iter().any(|g| g != f && f.is_subset(*g))).collect();
        let k = SimplicialComplex::from_facets(i.vars().clone(), facets).unwrap();
        let h = reduced_homology_dims(&k, field).unwrap();
        for (deg, d) in h.nonzero() {
            let idx = (deg + 1) as usize;
            *out.entry((idx, b.degree() as usize)).or_insert(0) += d as u64;
        }
    }
    out
}

fn table(i: &MonomialIdeal, field: FieldSpec) -> BTreeMap<(usize, usize), u64> {
    betti_table(i, field).unwrap().entries().collect()
}

#[test]
fn hochster_agrees_with_koszul_complexes() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..80 {
        let n = rng.gen_range(1..=5);
        let i = random_squarefree(&mut rng, n, 6);
        assert_eq!(table(&i, Q), koszul_betti(&i, Q), "{i}");
    }
}

#[test]
fn polarized_betti_agrees_with_koszul_complexes() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut checked = 0;
    while checked < 40 {
        let n = rng.gen_range(1..=3);
        let i = random_ideal(&mut rng, n, 4, 3);
        if i.polarize().unwrap().nvars() > 12 {
            continue;
        }
        assert_eq!(table(&i, Q), koszul_betti(&i, Q), "{i}");
        checked += 1;
    }
}

#[test]
fn euler_characteristic_matches_hilbert_numerator() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut checked = 0;
    while checked < 100 {
        let n = rng.gen_range(1..=5);
        let i = if rng.gen_bool(0.5) { random_squarefree(&mut rng, n, 8) } else { random_ideal(&mut rng, n, 6, 2) };
        if i.polarize().unwrap().nvars() > 12 {
            continue;
        }
        let b = betti_table(&i, Q).unwrap();
        assert_eq!(b.quotient_euler_coefficients(), hilbert_numerator(&i).unwrap(), "{i}");
        checked += 1;
    }
}

#[test]
fn pruning_skips_only_acyclic_cones() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..40 {
        let n = rng.gen_range(1..=6);
        let i = random_squarefree(&mut rng, n, 6);
        let full = betti_table_with(&i, Q, BettiOptions { prune: false, ..Default::default() }).unwrap();
        assert_eq!(full, betti_table(&i, Q).unwrap(), "{i}");
        let delta = SimplicialComplex::stanley_reisner_complex(&i).unwrap();
        for w in skipped_subsets(&i) {
            let sub = delta.induced(w);
            assert!(is_cone(&sub), "{i}: induced on {:?} is not a cone", w);
            assert!(reduced_homology_dims(&sub, Q).unwrap().is_acyclic());
        }
    }
}

#[test]
fn first_betti_number_counts_generators() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..60 {
        let n = rng.gen_range(1..=6);
        let i = random_squarefree(&mut rng, n, 7);
        let b = betti_table(&i, Q).unwrap();
        for j in 0..=n {
            let count = i.gens().iter().filter(|g| g.degree() as usize == j).count() as u64;
            assert_eq!(b.get(0, j), count, "{i}");
        }
        assert!(regularity(&i, Q).unwrap() >= i.max_degree().unwrap());
    }
}

#[test]
fn field_changes_only_matter_with_torsion() {
    // the six-vertex triangulation of the real projective plane
    let rp2 = cx(
        6,
        &[
            &[1, 2, 3],
            &[1, 3, 4],
            &[1, 4, 5],
            &[1, 5, 6],
            &[1, 2, 6],
            &[2, 3, 5],
            &[3, 4, 6],
            &[2, 4, 5],
            &[3, 5, 6],
            &[2, 4, 6],
        ],
    );
    let i = rp2.stanley_reisner_ideal();
    let q = betti_table(&i, Q).unwrap();
    let f2 = betti_table(&i, FieldSpec::prime(2).unwrap()).unwrap();
    let f3 = betti_table(&i, FieldSpec::prime(3).unwrap()).unwrap();
    assert_eq!(q, {
        let mut t = f3.clone();
        t.field = Q;
        t
    });
    assert_ne!(q.entries().collect::<Vec<_>>(), f2.entries().collect::<Vec<_>>());
    assert_eq!(reduced_homology_dims(&rp2, FieldSpec::prime(2).unwrap()).unwrap().get(2), 1);
    assert!(reduced_homology_dims(&rp2, Q).unwrap().is_acyclic());
}

#[test]
fn worked_example_regularities() {
    assert_eq!(regularity(&sq(6, EXAMPLE_291), Q).unwrap(), 2);
    let c4 = sq(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
    assert_eq!(regularity(&c4, Q).unwrap(), 2);
    assert_eq!(regularity(&c4.alexander_dual().unwrap(), Q).unwrap(), 3);
    assert_eq!(regularity(&sq(6, EXAMPLE_212), Q).unwrap(), 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cones_are_acyclic(n in 2usize..=6, raw in prop::collection::vec(1u64..64, 1..6), apex in 0usize..6) {
        let apex = apex % n;
        let mask = (1u64 << n) - 1;
        let facets: Vec<VarSubset> = raw.iter().map(|f| VarSubset(f & mask).with(apex)).collect();
        let keep: Vec<VarSubset> =
            facets.iter().copied().filter(|f| !facets.iter().any(|g| g != f && f.is_subset(*g))).collect();
        let mut keep = keep;
        keep.sort_by(VarSubset::canonical_cmp);
        keep.dedup();
        let c = mideal::SimplicialComplex::from_facets(vars(n), keep).unwrap();
        prop_assert!(is_cone(&c));
        prop_assert!(reduced_homology_dims(&c, Q).unwrap().is_acyclic());
        prop_assert!(reduced_homology_dims(&c, FieldSpec::prime(2).unwrap()).unwrap().is_acyclic());
    }
}
