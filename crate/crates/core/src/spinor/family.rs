use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::Vector;
use crate::quadform::{QuadraticSpace, Subspace};

use super::factorization::MatrixFactorization;

/// Which graded half of a module the probe `v_1 ... v_k` annihilates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum HalfKilled {
    Even,
    Odd,
    None,
}

impl HalfKilled {
    pub fn from_pattern((kills_even, kills_odd): (bool, bool)) -> HalfKilled {
        match (kills_even, kills_odd) {
            (true, false) => HalfKilled::Even,
            (false, true) => HalfKilled::Odd,
            _ => HalfKilled::None,
        }
    }
}

/// The partners `v_1, ..., v_k` of the hyperbolic pairs in a normal form adapted to
/// `W`, followed by a basis of a complement of `W ∩ K` in `K`; their product is
/// the probe element.
pub fn standard_probe(space: &QuadraticSpace, w: &Subspace) -> Result<Vec<Vector>> {
    Ok(probe_of(&space.standardize(w)?))
}

fn probe_of(form: &crate::quadform::StandardForm) -> Vec<Vector> {
    form.pairs
        .iter()
        .map(|(u, _)| u.clone())
        .chain(form.radical_rest.iter().cloned())
        .collect()
}

/// Which half the probe kills on a module whose `pi(W)` is maximal in an
/// even-dimensional `V/K`.
pub fn family_indicator(mf: &MatrixFactorization) -> Result<HalfKilled> {
    let meta = mf
        .meta()
        .ok_or_else(|| Error::Precondition("factorization does not come from an ideal".into()))?;
    let space = mf.space();
    let rank = space.rank();
    if rank % 2 == 1 {
        return Err(Error::Precondition(format!("dim V/K = {rank} is odd")));
    }
    let form = space.standardize(&meta.w)?;
    if !form.pi_w_maximal {
        return Err(Error::NotMaximal(format!(
            "dim pi(W) = {} < {}",
            form.w_pairs,
            rank / 2
        )));
    }
    Ok(HalfKilled::from_pattern(mf.annihilation_pattern(&probe_of(&form))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;
    use crate::spinor::IdealModule;

    #[test]
    fn indicators() {
        let qs = QuadraticSpace::from_polynomial(4, &[(0, 1, int(1))]).unwrap();
        let i = IdealModule::build(&qs, &Subspace::coordinate(4, &[1, 2])).unwrap();
        assert_eq!(family_indicator(&i.factorization()).unwrap(), HalfKilled::Odd);
        assert_eq!(family_indicator(&i.shift().factorization()).unwrap(), HalfKilled::Even);

        let h2 = QuadraticSpace::hyperbolic(1, 0).unwrap();
        let i = IdealModule::build(&h2, &Subspace::coordinate(2, &[1])).unwrap();
        assert_eq!(family_indicator(&i.factorization()).unwrap(), HalfKilled::Even);
    }

    #[test]
    fn preconditions() {
        let h6 = QuadraticSpace::hyperbolic(3, 0).unwrap();
        let i = IdealModule::build(&h6, &Subspace::coordinate(6, &[3])).unwrap();
        assert!(matches!(family_indicator(&i.factorization()), Err(Error::NotMaximal(_))));
        assert!(family_indicator(&i.factorization().dual()).is_err());
    }
}
