use affine_permutation::AffinePermutation;
use combinatorics_core::{partitions_of, Tabloid};
use dars::{forward, inverse, validate, DarsTuple};

use crate::asymptotic::ptabloid_oracle;
use crate::OracleError;

/// Largest |λ| tried when looking for a witness.
pub const DEFAULT_WITNESS_BOUND: usize = 12;

/// An affine permutation whose P̄ is `t`: the inverse of the first valid tuple
/// (t, Q̄, λ, 2), with λ by increasing size and Q̄ over tabloids of the same shape.
pub fn witness_for(t: &Tabloid, bound: usize) -> Result<AffinePermutation, OracleError> {
    let shape = t.shape();
    let qs = Tabloid::all_of_shape(&shape);
    for k in 0..=bound {
        for lambda in partitions_of(k) {
            for q in &qs {
                let tuple = DarsTuple::new(t.clone(), q.clone(), lambda.clone(), 2);
                if validate(&tuple).is_valid() {
                    return Ok(inverse(&tuple)?);
                }
            }
        }
    }
    Err(OracleError::NoWitness { tabloid: t.to_string(), bound })
}

pub fn evacuate_tabloid(t: &Tabloid) -> Result<Tabloid, OracleError> {
    evacuate_tabloid_with_bound(t, DEFAULT_WITNESS_BOUND)
}

/// evac(P̄(w)) = P̄(r(w)) for any witness w of `t`.
pub fn evacuate_tabloid_with_bound(t: &Tabloid, bound: usize) -> Result<Tabloid, OracleError> {
    let w = witness_for(t, bound)?;
    ptabloid_oracle(&w.dynkin_reflection())
}

fn index_zero(w: &AffinePermutation) -> Result<(), OracleError> {
    match w.index() {
        0 => Ok(()),
        i => Err(OracleError::NonzeroIndex(i)),
    }
}

/// Same right cell iff same P̄. Both must have index 0.
pub fn same_right_cell(u: &AffinePermutation, w: &AffinePermutation) -> Result<bool, OracleError> {
    index_zero(u)?;
    index_zero(w)?;
    Ok(forward(u)?.pbar == forward(w)?.pbar)
}

/// Same left cell iff same Q̄. Both must have index 0.
pub fn same_left_cell(u: &AffinePermutation, w: &AffinePermutation) -> Result<bool, OracleError> {
    index_zero(u)?;
    index_zero(w)?;
    Ok(forward(u)?.qbar == forward(w)?.qbar)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_row_is_fixed() {
        for n in 2..=5 {
            assert_eq!(evacuate_tabloid(&Tabloid::single_row(n)).unwrap(), Tabloid::single_row(n));
        }
    }

    #[test]
    fn worked_example_evacuation() {
        let w: AffinePermutation = "10,3,-3,12".parse().unwrap();
        let t = forward(&w).unwrap().pbar;
        assert_eq!(evacuate_tabloid(&t).unwrap(), ptabloid_oracle(&w.dynkin_reflection()).unwrap());
    }

    #[test]
    fn cells_need_index_zero() {
        let w: AffinePermutation = "10,3,-3,12".parse().unwrap();
        assert_eq!(same_right_cell(&w, &w), Err(OracleError::NonzeroIndex(3)));
        let id = AffinePermutation::identity(3).unwrap();
        assert_eq!(same_left_cell(&id, &id), Ok(true));
    }
}
