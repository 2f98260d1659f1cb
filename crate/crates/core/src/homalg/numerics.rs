use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{monomial_count, MonomialMap, Rat, UniPoly};
use crate::spinor::MatrixFactorization;

/// Default twist window for cohomology tables.
pub const WINDOW: (i64, i64) = (-6, 6);

#[derive(Debug, Clone, Serialize)]
pub struct SheafNumerics {
    pub n: usize,
    pub size: usize,
    /// Hilbert polynomial of `coker phi` on `P^{n-1}`.
    pub hilbert: String,
    #[serde(skip)]
    pub hilbert_poly: UniPoly,
    pub torsion: bool,
    pub rank: Option<Rat>,
    pub degree: Option<Rat>,
    pub slope: Option<Rat>,
    pub chi_at_zero: Rat,
}

fn factorial(k: usize) -> Rat {
    (1..=k as i64).fold(Rat::one(), |acc, i| acc * Rat::from(i))
}

/// `N [C(t+n-1, n-1) - C(t+n-2, n-1)]`, from the resolution
/// `0 -> O(-1)^N -> O^N -> S -> 0`.
pub fn hilbert_polynomial(n: usize, size: usize) -> UniPoly {
    let m = n - 1;
    let p = UniPoly::binomial(m as i64, m).sub(&UniPoly::binomial(m as i64 - 1, m));
    p.scale(&Rat::from(size as i64))
}

/// `chi(O_Q(t)) = C(t+n-1, n-1) - C(t+n-3, n-1)` for a quadric hypersurface.
pub fn quadric_hilbert_polynomial(n: usize) -> UniPoly {
    let m = n - 1;
    UniPoly::binomial(m as i64, m).sub(&UniPoly::binomial(m as i64 - 2, m))
}

/// Rank, degree and slope read off against `chi(O_Q(t))`: with `d = dim Q`,
/// `chi(E(t)) = rank chi(O_Q(t)) + deg E t^{d-1}/(d-1)! + ...` and `deg Q = 2`.
pub fn sheaf_numerics(mf: &MatrixFactorization) -> SheafNumerics {
    let n = mf.n();
    let size = mf.size();
    let hilbert_poly = hilbert_polynomial(n, size);
    let chi_at_zero = hilbert_poly.eval(&Rat::zero());
    let torsion = size == 1 || n < 3;
    let (rank, degree, slope) = if torsion {
        (None, None, None)
    } else {
        let d = n - 2;
        let chi_o = quadric_hilbert_polynomial(n);
        let rank = hilbert_poly.coeff(d) * factorial(d) / Rat::from(2);
        let c = chi_o.coeff(d - 1) * factorial(d - 1);
        let degree = hilbert_poly.coeff(d - 1) * factorial(d - 1) - c * &rank;
        let slope = &degree / &rank;
        (Some(rank), Some(degree), Some(slope))
    };
    SheafNumerics {
        n,
        size,
        hilbert: hilbert_poly.to_string(),
        hilbert_poly,
        torsion,
        rank,
        degree,
        slope,
        chi_at_zero,
    }
}

fn rank_at(lm: &crate::exactalg::LinMat, t: i64) -> Result<usize> {
    if t <= 0 {
        return Ok(0);
    }
    Ok(MonomialMap::new(lm, t)?.rank())
}

/// Dimensions `(coker, ker)` of `H^j(phi)` on `H^j(O(t-1)^N) -> H^j(O(t)^N)` for
/// `j` in `{0, n-1}`; all other cohomology of line bundles on `P^{n-1}` vanishes.
fn cohomology_of_phi(mf: &MatrixFactorization, j: usize, t: i64) -> Result<(usize, usize)> {
    let n = mf.n();
    let size = mf.size();
    let m = n - 1;
    if j == 0 {
        let domain = size * monomial_count(n, t - 1);
        let target = size * monomial_count(n, t);
        let r = rank_at(mf.phi(), t)?;
        Ok((target - r, domain - r))
    } else if j == m {
        // Serre duality: H^m(O(d)) is dual to H^0(O(-d-n)), and H^m(phi) is
        // dual to multiplication by the transpose from degree -t-n to -t-n+1.
        let domain = size * monomial_count(n, 1 - t - n as i64);
        let target = size * monomial_count(n, -t - n as i64);
        let r = rank_at(&mf.phi().transpose(), 1 - t - n as i64)?;
        Ok((target - r, domain - r))
    } else {
        Ok((0, 0))
    }
}

/// `h^i(S(t))` for `S = coker phi`, via the long exact sequence of the resolution.
pub fn cohomology_dim(mf: &MatrixFactorization, i: usize, t: i64) -> Result<usize> {
    cohomology_dim_in(mf, i, t, WINDOW)
}

pub fn cohomology_dim_in(mf: &MatrixFactorization, i: usize, t: i64, window: (i64, i64)) -> Result<usize> {
    if t < window.0 || t > window.1 {
        return Err(Error::OutOfWindow(t, window.0, window.1));
    }
    let n = mf.n();
    if n < 2 || i > n - 2 {
        return Err(Error::Precondition(format!(
            "cohomological index {i} outside 0..={}",
            n.saturating_sub(2)
        )));
    }
    let (coker, _) = cohomology_of_phi(mf, i, t)?;
    let (_, ker) = cohomology_of_phi(mf, i + 1, t)?;
    Ok(coker + ker)
}

#[derive(Debug, Clone, Serialize)]
pub struct CohomologyRow {
    pub t: i64,
    pub h: Vec<usize>,
    pub euler: i64,
    pub hilbert: Rat,
}

impl CohomologyRow {
    pub fn consistent(&self) -> bool {
        Rat::from(self.euler) == self.hilbert
    }

    /// `h^i = 0` for `0 < i < dim Q`.
    pub fn intermediate_vanish(&self) -> bool {
        let k = self.h.len();
        k < 3 || self.h[1..k - 1].iter().all(|&x| x == 0)
    }
}

pub fn cohomology_table(mf: &MatrixFactorization, window: (i64, i64)) -> Result<Vec<CohomologyRow>> {
    let n = mf.n();
    let hilbert = hilbert_polynomial(n, mf.size());
    (window.0..=window.1)
        .map(|t| {
            let h = (0..=n - 2)
                .map(|i| cohomology_dim_in(mf, i, t, window))
                .collect::<Result<Vec<_>>>()?;
            let euler = h
                .iter()
                .enumerate()
                .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
                .sum();
            Ok(CohomologyRow { t, h, euler, hilbert: hilbert.eval(&Rat::from(t)) })
        })
        .collect()
}

/// Interpolate `h^0(S(t))` for `t = 1..=n` and compare with the closed form; for
/// `t >= 1` the higher cohomology vanishes, so these values lie on the Hilbert polynomial.
pub fn hilbert_cross_check(mf: &MatrixFactorization) -> Result<bool> {
    let n = mf.n();
    let window = (1, n as i64);
    let points = (1..=n as i64)
        .map(|t| Ok((Rat::from(t), Rat::from(cohomology_dim_in(mf, 0, t, window)? as i64))))
        .collect::<Result<Vec<_>>>()?;
    Ok(UniPoly::interpolate(&points) == hilbert_polynomial(n, mf.size()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;
    use crate::quadform::{QuadraticSpace, Subspace};
    use crate::spinor::IdealModule;

    fn mf(space: &QuadraticSpace, idx: &[usize]) -> MatrixFactorization {
        IdealModule::build(space, &Subspace::coordinate(space.dim(), idx)).unwrap().factorization()
    }

    #[test]
    fn numerics_of_fixtures() {
        let h6 = QuadraticSpace::hyperbolic(3, 0).unwrap();
        let s = sheaf_numerics(&mf(&h6, &[3, 4, 5]));
        assert_eq!((s.rank.clone(), s.degree.clone(), s.slope.clone()), (Some(int(2)), Some(int(2)), Some(int(1))));
        assert_eq!(s.chi_at_zero, int(4));
        let qs = QuadraticSpace::from_polynomial(4, &[(0, 1, int(1))]).unwrap();
        let s = sheaf_numerics(&mf(&qs, &[1, 2]));
        assert_eq!((s.rank, s.slope), (Some(int(1)), Some(int(1))));
        let h2 = QuadraticSpace::hyperbolic(1, 0).unwrap();
        assert!(sheaf_numerics(&mf(&h2, &[1])).torsion);
    }

    #[test]
    fn cohomology() {
        let h6 = QuadraticSpace::hyperbolic(3, 0).unwrap();
        let s = mf(&h6, &[3, 4, 5]);
        assert_eq!(cohomology_dim(&s, 0, 0).unwrap(), 4);
        assert!(matches!(cohomology_dim(&s, 0, 7), Err(Error::OutOfWindow(7, -6, 6))));
        for row in cohomology_table(&s, (-5, 5)).unwrap() {
            assert!(row.consistent(), "{row:?}");
            assert!(row.intermediate_vanish(), "{row:?}");
        }
        assert!(hilbert_cross_check(&s).unwrap());
    }
}
