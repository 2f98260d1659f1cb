use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{is_zero_vector, LinMat, Mat, QuadMat, Rat, Vector};
use crate::quadform::{QuadraticSpace, Subspace};

/// Where a factorization came from, when it came from an ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleMeta {
    pub w: Subspace,
    pub shift: bool,
}

/// A pair `(phi, psi)` of `N x N` matrices of linear forms. When it comes from an
/// ideal, `phi(v)` is left multiplication by `v` from `I_ev` to `I_odd`; `S` is the
/// cokernel of `phi` and `T` that of `psi`.
///
/// Viewed as a graded Clifford module on `Q^N (+) Q^N` (even slot first), a vector
/// `v` acts by the block matrix `[[0, psi(v)], [phi(v), 0]]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixFactorization {
    space: QuadraticSpace,
    phi: LinMat,
    psi: LinMat,
    meta: Option<ModuleMeta>,
}

impl MatrixFactorization {
    pub fn new(space: QuadraticSpace, phi: LinMat, psi: LinMat) -> Result<Self> {
        let n = space.dim();
        let size = phi.rows();
        for m in [&phi, &psi] {
            if m.n() != n || m.rows() != size || m.cols() != size {
                return Err(Error::Dimension(format!(
                    "expected {size}x{size} matrices of linear forms in {n} variables"
                )));
            }
        }
        Ok(MatrixFactorization { space, phi, psi, meta: None })
    }

    pub(crate) fn from_parts(space: QuadraticSpace, phi: Vec<Mat>, psi: Vec<Mat>, meta: Option<ModuleMeta>) -> Self {
        let phi = LinMat::new(phi).expect("uniform shapes");
        let psi = LinMat::new(psi).expect("uniform shapes");
        MatrixFactorization { space, phi, psi, meta }
    }

    pub fn space(&self) -> &QuadraticSpace {
        &self.space
    }

    pub fn phi(&self) -> &LinMat {
        &self.phi
    }

    pub fn psi(&self) -> &LinMat {
        &self.psi
    }

    pub fn meta(&self) -> Option<&ModuleMeta> {
        self.meta.as_ref()
    }

    pub fn size(&self) -> usize {
        self.phi.rows()
    }

    pub fn n(&self) -> usize {
        self.space.dim()
    }

    /// The pair `(psi, phi)`, i.e. the factorization of the shifted module.
    pub fn shifted(&self) -> MatrixFactorization {
        MatrixFactorization {
            space: self.space.clone(),
            phi: self.psi.clone(),
            psi: self.phi.clone(),
            meta: self.meta.as_ref().map(|m| ModuleMeta { w: m.w.clone(), shift: !m.shift }),
        }
    }

    /// `(phi^T, psi^T)`: the cokernel of `phi^T` represents `S^*(1)`.
    pub fn dual(&self) -> MatrixFactorization {
        MatrixFactorization {
            space: self.space.clone(),
            phi: self.phi.transpose(),
            psi: self.psi.transpose(),
            meta: None,
        }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &MatrixFactorization) -> Result<MatrixFactorization> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(MatrixFactorization {
            space: self.space.clone(),
            phi: self.phi.block_diag(&other.phi),
            psi: self.psi.block_diag(&other.psi),
            meta: None,
        })
    }

    /// First monomial `x_i x_j` where `phi psi` or `psi phi` differs from `q * Id`,
    /// tagged with which product failed.
    pub fn identity_defect(&self) -> Option<(&'static str, usize, usize)> {
        let target = QuadMat::scalar_form(self.space.gram(), self.size());
        if let Some((i, j)) = self.phi.product(&self.psi).first_difference(&target) {
            return Some(("phi*psi", i, j));
        }
        if let Some((i, j)) = self.psi.product(&self.phi).first_difference(&target) {
            return Some(("psi*phi", i, j));
        }
        None
    }

    pub fn identity_holds(&self) -> bool {
        self.identity_defect().is_none()
    }

    /// Action of `v` on the graded module, a `2N x 2N` matrix.
    pub fn action(&self, v: &[Rat]) -> Mat {
        let n = self.size();
        let mut m = Mat::zeros(2 * n, 2 * n);
        m.set_block(0, n, &self.psi.eval(v));
        m.set_block(n, 0, &self.phi.eval(v));
        m
    }

    /// Action of the product `v_1 ... v_k`.
    pub fn element_action(&self, vectors: &[Vector]) -> Mat {
        vectors
            .iter()
            .fold(Mat::identity(2 * self.size()), |acc, v| acc.mul(&self.action(v)))
    }

    /// `(kills even slot, kills odd slot)` for the product `v_1 ... v_k`.
    pub fn annihilation_pattern(&self, vectors: &[Vector]) -> (bool, bool) {
        let n = self.size();
        let m = self.element_action(vectors);
        (m.block(0, 0, 2 * n, n).is_zero(), m.block(0, n, 2 * n, n).is_zero())
    }

    /// `(rank phi(v), N - rank phi(v))` at a point `v` of the quadric.
    pub fn fiber_rank(&self, v: &[Rat]) -> Result<(usize, usize)> {
        let q = self.space.evaluate(v, None)?;
        if is_zero_vector(v) {
            return Err(Error::ZeroVector);
        }
        if !q.is_zero() {
            return Err(Error::NotOnQuadric(q.to_string()));
        }
        let r = self.phi.eval(v).rank();
        Ok((r, self.size() - r))
    }

    /// `{v : phi(v) = psi(v) = 0}`, the vectors annihilating the module.
    pub fn intersection_with_radical(&self) -> Subspace {
        let n = self.n();
        let size = self.size();
        let mut rows = Vec::with_capacity(2 * size * size);
        for m in [&self.phi, &self.psi] {
            for r in 0..size {
                for c in 0..size {
                    let row: Vector = m.coeff().iter().map(|k| k[(r, c)].clone()).collect();
                    if !is_zero_vector(&row) {
                        rows.push(row);
                    }
                }
            }
        }
        if rows.is_empty() {
            return Subspace::full(n);
        }
        let kernel = Mat::from_rows(rows).expect("rectangular").kernel();
        Subspace::span(n, &kernel)
    }

    /// Left and right changes of basis: `(A phi B^{-1}, B psi A^{-1})` given invertible `A`, `B`.
    pub fn transform(&self, a: &Mat, b: &Mat) -> Result<MatrixFactorization> {
        let a_inv = a.inverse()?.ok_or_else(|| Error::Precondition("A is singular".into()))?;
        let b_inv = b.inverse()?.ok_or_else(|| Error::Precondition("B is singular".into()))?;
        Ok(MatrixFactorization {
            space: self.space.clone(),
            phi: self.phi.sandwich(a, &b_inv),
            psi: self.psi.sandwich(b, &a_inv),
            meta: None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, unit_vector};
    use crate::spinor::IdealModule;

    fn qs() -> QuadraticSpace {
        QuadraticSpace::from_polynomial(4, &[(0, 1, int(1))]).unwrap()
    }

    #[test]
    fn h2_factorization() {
        let space = QuadraticSpace::hyperbolic(1, 0).unwrap();
        let mf = IdealModule::build(&space, &Subspace::coordinate(2, &[1])).unwrap().factorization();
        assert_eq!(mf.phi().render(), "[x1]");
        assert_eq!(mf.psi().render(), "[x0]");
        assert!(mf.identity_holds());
        assert_eq!(mf.dual().phi().render(), "[x1]");
        assert_eq!(mf.dual().dual(), MatrixFactorization { meta: None, ..mf.clone() });
    }

    #[test]
    fn identity_for_fixtures() {
        let mf = IdealModule::build(&qs(), &Subspace::coordinate(4, &[1, 2])).unwrap().factorization();
        assert_eq!(mf.size(), 2);
        assert!(mf.identity_holds());
        let h6 = QuadraticSpace::hyperbolic(3, 0).unwrap();
        let mf = IdealModule::build(&h6, &Subspace::coordinate(6, &[3, 4, 5])).unwrap().factorization();
        assert!(mf.identity_holds() && mf.dual().identity_holds());
        assert!(mf.direct_sum(&mf.shifted()).unwrap().identity_holds());
    }

    #[test]
    fn fiber_ranks() {
        let mf = IdealModule::build(&qs(), &Subspace::coordinate(4, &[1, 2])).unwrap().factorization();
        assert_eq!(mf.fiber_rank(&unit_vector(4, 2)).unwrap().1, 2);
        assert_eq!(mf.fiber_rank(&unit_vector(4, 1)).unwrap().1, 1);
        assert!(matches!(mf.fiber_rank(&[int(1), int(1), int(0), int(0)]), Err(Error::NotOnQuadric(_))));
        assert!(matches!(mf.fiber_rank(&vec![int(0); 4]), Err(Error::ZeroVector)));
        let h6 = QuadraticSpace::hyperbolic(3, 0).unwrap();
        let mf = IdealModule::build(&h6, &Subspace::coordinate(6, &[3, 4, 5])).unwrap().factorization();
        assert_eq!(mf.fiber_rank(&unit_vector(6, 0)).unwrap().1, 2);
    }

    #[test]
    fn radical_intersections() {
        let mf = IdealModule::build(&qs(), &Subspace::coordinate(4, &[1, 2])).unwrap().factorization();
        assert!(mf.intersection_with_radical().same_as(&Subspace::coordinate(4, &[2])));
        let c5 = QuadraticSpace::from_polynomial(5, &[(0, 2, int(1)), (1, 3, int(1))]).unwrap();
        let mf = IdealModule::build(&c5, &Subspace::coordinate(5, &[2, 4])).unwrap().factorization();
        assert!(mf.intersection_with_radical().same_as(&Subspace::coordinate(5, &[4])));
    }

    #[test]
    fn perturbed_pair_is_detected() {
        let mf = IdealModule::build(&qs(), &Subspace::coordinate(4, &[1, 2])).unwrap().factorization();
        let mut phi = mf.phi().clone();
        let m = &mut phi.coeff_mut()[0];
        let r = (0..2).find(|&r| (0..2).any(|c| !m[(r, c)].is_zero())).unwrap();
        let c = (0..2).find(|&c| !m[(r, c)].is_zero()).unwrap();
        m[(r, c)] = -m[(r, c)].clone();
        let bad = MatrixFactorization::new(qs(), phi, mf.psi().clone()).unwrap();
        assert!(bad.identity_defect().is_some());
    }
}
