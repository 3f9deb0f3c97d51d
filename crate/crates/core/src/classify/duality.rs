//! Cohen-Macaulay properties through the Alexander dual: `R/I` is
//! Cohen-Macaulay iff `I^∨` has a linear resolution, and sequentially
//! Cohen-Macaulay iff `I^∨` is componentwise linear.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homology::{has_linear_resolution, is_componentwise_linear};
use crate::ideal::MonomialIdeal;

fn proper_squarefree(ideal: &MonomialIdeal) -> Result<()> {
    ideal.require_squarefree()?;
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(())
}

pub fn is_cohen_macaulay(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    proper_squarefree(ideal)?;
    has_linear_resolution(&ideal.alexander_dual()?, field)
}

pub fn is_sequentially_cm(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    proper_squarefree(ideal)?;
    is_componentwise_linear(&ideal.alexander_dual()?, field)
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

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn four_cycle_is_not_cm() {
        let i = sq(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        assert!(!is_cohen_macaulay(&i, Q).unwrap());
        assert!(!is_sequentially_cm(&i, Q).unwrap());
    }

    #[test]
    fn principal_and_triangle_boundary() {
        assert!(is_cohen_macaulay(&sq(2, &[&[1, 2]]), Q).unwrap());
        assert!(is_cohen_macaulay(&sq(3, &[&[1, 2, 3]]), Q).unwrap());
    }

    #[test]
    fn path_is_sequentially_cm() {
        assert!(is_sequentially_cm(&sq(4, &[&[1, 2], &[2, 3], &[3, 4]]), Q).unwrap());
    }

    #[test]
    fn rejects_zero() {
        let vars = VariableSet::standard(2).unwrap();
        assert_eq!(is_cohen_macaulay(&MonomialIdeal::zero(vars), Q), Err(Error::ZeroIdeal));
    }
}
