//! Deterministic family of quadratic spaces and isotropic subspaces covering every
//! dimension, rank and isotropic profile up to a bound.

use crate::error::Result;
use crate::exactalg::{int, Mat, Rat, Vector};
use crate::quadform::{QuadraticSpace, Subspace};

#[derive(Debug, Clone)]
pub struct GridCase {
    pub label: String,
    pub n: usize,
    pub rank: usize,
    /// Hyperbolic directions of `W`, i.e. `dim pi(W)`.
    pub a: usize,
    /// `dim W ∩ K`.
    pub b: usize,
    pub space: QuadraticSpace,
    pub w: Subspace,
}

/// Unit upper triangular matrix with small entries, so the grid does not only
/// exercise coordinate-aligned forms.
fn scramble(n: usize) -> Mat {
    let mut t = Mat::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            t[(i, j)] = int(((i + 2 * j) % 3) as i64 - 1);
        }
    }
    t
}

/// The standard form `x_0 x_k + ... + x_{k-1} x_{2k-1} (+ x_{2k}^2)` of rank `r`
/// with `n - r` radical directions, in coordinates changed by [`scramble`].
pub fn grid_case(n: usize, rank: usize, a: usize, b: usize) -> Result<GridCase> {
    let k = rank / 2;
    let mut terms: Vec<(usize, usize, Rat)> = (0..k).map(|i| (i, k + i, int(1))).collect();
    if rank % 2 == 1 {
        terms.push((2 * k, 2 * k, int(1)));
    }
    let standard = QuadraticSpace::from_polynomial(n, &terms)?;
    let t = scramble(n);
    let t_inv = t.inverse()?.expect("unit triangular");
    let gram = t.transpose().mul(standard.gram()).mul(&t);
    let space = QuadraticSpace::new(gram)?;
    let w_std: Vec<usize> = (0..a).map(|i| k + i).chain((0..b).map(|j| rank + j)).collect();
    let basis: Vec<Vector> = w_std
        .iter()
        .map(|&i| t_inv.mul_vec(&crate::exactalg::unit_vector(n, i)))
        .collect();
    let w = Subspace::new(n, basis)?;
    Ok(GridCase { label: format!("G{n}-r{rank}-a{a}-b{b}"), n, rank, a, b, space, w })
}

/// All cases with `2 <= rank <= n <= max_n` and nonzero isotropic `W`.
pub fn grid(max_n: usize) -> Result<Vec<GridCase>> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for rank in 2..=n {
            for a in 0..=rank / 2 {
                for b in 0..=n - rank {
                    if a + b > 0 {
                        out.push(grid_case(n, rank, a, b)?);
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cases_are_isotropic_with_expected_profile() {
        for case in grid(5).unwrap() {
            assert_eq!(case.space.rank(), case.rank, "{}", case.label);
            assert!(case.space.check_isotropic(&case.w).unwrap(), "{}", case.label);
            let wk = case.w.intersect(&case.space.radical());
            assert_eq!(wk.dim(), case.b, "{}", case.label);
            assert_eq!(case.w.dim(), case.a + case.b);
        }
    }

    #[test]
    fn grid_size() {
        // n = 2: rank 2 with a = 1
        assert_eq!(grid(2).unwrap().len(), 1);
        // n = 3: rank 2 (a,b) in {0,1}^2 minus (0,0); rank 3 with a = 1
        assert_eq!(grid(3).unwrap().len(), 1 + 3 + 1);
    }
}
