use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Single degree plus the exchange property: whenever
/// `deg_{x_i}(u) > deg_{x_i}(v)` there is `j` with
/// `deg_{x_j}(u) < deg_{x_j}(v)` and `x_j (u / x_i) ∈ G(I)`.
pub fn is_polymatroidal(ideal: &MonomialIdeal) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.single_degree().is_none() {
        return Ok(false);
    }
    let gens: HashSet<&Monomial> = ideal.gens().iter().collect();
    let n = ideal.nvars();
    for u in ideal.gens() {
        for v in ideal.gens() {
            for i in 0..n {
                if u.exp(i) <= v.exp(i) {
                    continue;
                }
                let reduced = u.div_var(i).expect("exponent is positive");
                let exchanged = (0..n).any(|j| u.exp(j) < v.exp(j) && gens.contains(&reduced.times_var(j)));
                if !exchanged {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

pub fn is_matroidal(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(is_polymatroidal(ideal)? && ideal.is_squarefree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vars::{VarSubset, VariableSet};

    fn sq(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        let vars = VariableSet::standard(n).unwrap();
        let faces: Vec<VarSubset> = gens.iter().map(|g| VarSubset::from_indices(g.iter().map(|i| i - 1))).collect();
        MonomialIdeal::from_supports(vars, &faces)
    }

    #[test]
    fn transversal_product_is_matroidal() {
        let i = sq(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        assert!(is_polymatroidal(&i).unwrap());
        assert!(is_matroidal(&i).unwrap());
    }

    #[test]
    fn path_ideal_is_not_matroidal() {
        let i = sq(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        assert!(!is_polymatroidal(&i).unwrap());
        assert!(!is_matroidal(&i).unwrap());
    }

    #[test]
    fn squarefree_veronese() {
        let i = sq(4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4]]);
        assert!(is_matroidal(&i).unwrap());
    }

    #[test]
    fn veronese_with_squares_is_polymatroidal_only() {
        let vars = VariableSet::standard(2).unwrap();
        let gens = [[2, 0], [1, 1], [0, 2]].iter().map(|e| Monomial::from_exponents(e.to_vec())).collect();
        let i = MonomialIdeal::minimalize(vars, gens).unwrap();
        assert!(is_polymatroidal(&i).unwrap());
        assert!(!is_matroidal(&i).unwrap());
    }

    #[test]
    fn mixed_degree_and_zero() {
        assert!(!is_polymatroidal(&sq(3, &[&[1], &[2, 3]])).unwrap());
        let vars = VariableSet::standard(2).unwrap();
        assert_eq!(is_polymatroidal(&MonomialIdeal::zero(vars)), Err(Error::ZeroIdeal));
    }
}
