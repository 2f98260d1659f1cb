use std::sync::Arc;

use crate::clifford::{CliffordAlgebra, CliffordElement, Parity, SpanCoords};
use crate::error::{Error, Result};
use crate::exactalg::{Mat, Rat, Vector};
use crate::quadform::{QuadraticSpace, Subspace};

use super::factorization::{MatrixFactorization, ModuleMeta};

/// The graded left ideal `I = Cl * w_1 ... w_m`, optionally shifted.
///
/// Bases are the reduced echelon forms of the even and odd parts of all
/// products `(monomial) * w_1 ... w_m`, so they do not depend on the order in
/// which the products are enumerated.
#[derive(Debug, Clone)]
pub struct IdealModule {
    alg: Arc<CliffordAlgebra>,
    w: Subspace,
    generator: CliffordElement,
    halves: [Vec<CliffordElement>; 2],
    coords: [Arc<SpanCoords>; 2],
    shift: bool,
}

fn index(p: Parity) -> usize {
    match p {
        Parity::Even => 0,
        Parity::Odd => 1,
    }
}

impl IdealModule {
    pub fn build(space: &QuadraticSpace, w: &Subspace) -> Result<Self> {
        let alg = CliffordAlgebra::new(space.clone())?;
        IdealModule::new(&alg, w)
    }

    pub fn new(alg: &Arc<CliffordAlgebra>, w: &Subspace) -> Result<Self> {
        if w.is_zero() {
            return Err(Error::ZeroSubspace);
        }
        IdealModule::with_generator_of(alg, w)
    }

    /// Also accepts `W = 0`, giving the free module `Cl` itself.
    pub(crate) fn with_generator_of(alg: &Arc<CliffordAlgebra>, w: &Subspace) -> Result<Self> {
        alg.space().require_isotropic(w)?;
        let generator = CliffordElement::product_of_vectors(alg, w.basis());
        IdealModule::from_generator(alg, w.clone(), generator)
    }

    fn from_generator(alg: &Arc<CliffordAlgebra>, w: Subspace, generator: CliffordElement) -> Result<Self> {
        let mut rows: [Vec<Vector>; 2] = [Vec::new(), Vec::new()];
        for mask in 0..alg.size() as u32 {
            let x = generator.left_mul_monomial(mask);
            if x.is_zero() {
                continue;
            }
            let p = x.parity().expect("products with a homogeneous generator are homogeneous");
            rows[index(p)].push(x.to_dense());
        }
        let halves: [Vec<CliffordElement>; 2] = rows.map(|r| {
            if r.is_empty() {
                return Vec::new();
            }
            Mat::from_rows(r)
                .expect("rows of equal length")
                .rref_rows()
                .iter()
                .map(|row| CliffordElement::from_dense(alg, row))
                .collect()
        });
        let expected = 1usize << (alg.n() - w.dim()).saturating_sub(1);
        if halves[0].len() != expected || halves[1].len() != expected {
            return Err(Error::Precondition(format!(
                "ideal halves have dimensions {} and {}, expected {expected}",
                halves[0].len(),
                halves[1].len()
            )));
        }
        let coords = [
            Arc::new(SpanCoords::new(alg, &halves[0])?),
            Arc::new(SpanCoords::new(alg, &halves[1])?),
        ];
        Ok(IdealModule { alg: alg.clone(), w, generator, halves, coords, shift: false })
    }

    /// `I[1]`: the two halves interchanged.
    pub fn shift(&self) -> IdealModule {
        let mut out = self.clone();
        out.shift = !out.shift;
        out
    }

    pub fn shifted_by(&self, k: usize) -> IdealModule {
        if k % 2 == 1 {
            self.shift()
        } else {
            self.clone()
        }
    }

    pub fn is_shifted(&self) -> bool {
        self.shift
    }

    pub fn algebra(&self) -> &Arc<CliffordAlgebra> {
        &self.alg
    }

    pub fn space(&self) -> &QuadraticSpace {
        self.alg.space()
    }

    pub fn w(&self) -> &Subspace {
        &self.w
    }

    pub fn generator(&self) -> &CliffordElement {
        &self.generator
    }

    /// `N = dim I_ev = dim I_odd`.
    pub fn size(&self) -> usize {
        self.halves[0].len()
    }

    fn slot_index(&self, slot: Parity) -> usize {
        index(if self.shift { slot.flip() } else { slot })
    }

    /// Basis of the half sitting in the given slot (`I_odd` in the even slot of `I[1]`).
    pub fn basis(&self, slot: Parity) -> &[CliffordElement] {
        &self.halves[self.slot_index(slot)]
    }

    pub fn ev_basis(&self) -> &[CliffordElement] {
        self.basis(Parity::Even)
    }

    pub fn odd_basis(&self) -> &[CliffordElement] {
        self.basis(Parity::Odd)
    }

    /// Coordinates of `x` in the given slot, `None` if it is not there.
    pub fn coordinates(&self, slot: Parity, x: &CliffordElement) -> Option<Vector> {
        self.coords[self.slot_index(slot)].coordinates(x)
    }

    /// The element of the given slot with these coordinates.
    pub fn element(&self, slot: Parity, coords: &[Rat]) -> CliffordElement {
        let mut out = CliffordElement::zero(&self.alg);
        for (c, b) in coords.iter().zip(self.basis(slot)) {
            if !c.is_zero() {
                out = out.add(&b.scale(c)).expect("same algebra");
            }
        }
        out
    }

    pub fn contains(&self, x: &CliffordElement) -> bool {
        let (ev, odd) = x.grade_parts();
        let p = |e: &CliffordElement, par: Parity| e.is_zero() || self.coords[index(par)].coordinates(e).is_some();
        p(&ev, Parity::Even) && p(&odd, Parity::Odd)
    }

    /// Matrix of `xi -> v xi` from the given slot to the other one.
    pub fn action_matrix(&self, v: &[Rat], from: Parity) -> Result<Mat> {
        let n = self.size();
        let mut cols = Vec::with_capacity(n);
        for xi in self.basis(from) {
            let image = xi.left_mul_vector(v);
            let c = self
                .coordinates(from.flip(), &image)
                .ok_or_else(|| Error::NotInSpan(format!("v * ({xi}) = {image}")))?;
            cols.push(c);
        }
        Ok(Mat::from_columns(n, &cols))
    }

    /// Matrix of a map `I -> target` given on elements, from slot `from` of `self`
    /// into slot `to` of `target`.
    pub fn map_matrix(
        &self,
        from: Parity,
        target: &IdealModule,
        to: Parity,
        f: impl Fn(&CliffordElement) -> Result<CliffordElement>,
    ) -> Result<Mat> {
        let mut cols = Vec::new();
        for xi in self.basis(from) {
            let image = f(xi)?;
            let c = target
                .coordinates(to, &image)
                .ok_or_else(|| Error::NotInSpan(format!("image of {xi} is {image}")))?;
            cols.push(c);
        }
        Ok(Mat::from_columns(target.size(), &cols))
    }

    /// `phi(e_j)` is left multiplication by `e_j` from the even slot to the odd one,
    /// `psi(e_j)` the other way.
    pub fn factorization(&self) -> MatrixFactorization {
        let n = self.alg.n();
        let mut phi = Vec::with_capacity(n);
        let mut psi = Vec::with_capacity(n);
        for j in 0..n {
            let e = crate::exactalg::unit_vector(n, j);
            phi.push(self.action_matrix(&e, Parity::Even).expect("ideal is a left ideal"));
            psi.push(self.action_matrix(&e, Parity::Odd).expect("ideal is a left ideal"));
        }
        let meta = ModuleMeta { w: self.w.clone(), shift: self.shift };
        MatrixFactorization::from_parts(self.space().clone(), phi, psi, Some(meta))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    #[test]
    fn h2_bases() {
        let space = QuadraticSpace::hyperbolic(1, 0).unwrap();
        let i = IdealModule::build(&space, &Subspace::coordinate(2, &[1])).unwrap();
        assert_eq!(i.size(), 1);
        assert_eq!(i.ev_basis()[0].to_string(), "e0e1");
        assert_eq!(i.odd_basis()[0].to_string(), "e1");
        let s = i.shift();
        assert_eq!(s.ev_basis()[0].to_string(), "e1");
        assert!(!s.shift().is_shifted());
    }

    #[test]
    fn sizes() {
        let h6 = QuadraticSpace::hyperbolic(3, 0).unwrap();
        assert_eq!(IdealModule::build(&h6, &Subspace::coordinate(6, &[3, 4, 5])).unwrap().size(), 4);
        assert_eq!(IdealModule::build(&h6, &Subspace::coordinate(6, &[3])).unwrap().size(), 16);
        let qs = QuadraticSpace::from_polynomial(4, &[(0, 1, int(1))]).unwrap();
        assert_eq!(IdealModule::build(&qs, &Subspace::coordinate(4, &[1, 2])).unwrap().size(), 2);
    }

    #[test]
    fn rejects_bad_subspaces() {
        let h6 = QuadraticSpace::hyperbolic(3, 0).unwrap();
        assert!(matches!(IdealModule::build(&h6, &Subspace::zero(6)), Err(Error::ZeroSubspace)));
        assert!(matches!(
            IdealModule::build(&h6, &Subspace::coordinate(6, &[0, 3])),
            Err(Error::NotIsotropic(..))
        ));
    }

    #[test]
    fn generator_scales_with_basis_change() {
        let h6 = QuadraticSpace::hyperbolic(3, 0).unwrap();
        let a = IdealModule::build(&h6, &Subspace::coordinate(6, &[3, 4, 5])).unwrap();
        let other = Subspace::new(
            6,
            vec![
                vec![int(0), int(0), int(0), int(1), int(1), int(0)],
                vec![int(0), int(0), int(0), int(0), int(2), int(0)],
                vec![int(0), int(0), int(0), int(0), int(0), int(1)],
            ],
        )
        .unwrap();
        let b = IdealModule::build(&h6, &other).unwrap();
        assert_eq!(b.generator(), &a.generator().scale(&int(2)));
        assert_eq!(a.ev_basis(), b.ev_basis());
        assert_eq!(a.odd_basis(), b.odd_basis());
        assert!(a.contains(a.generator()));
    }
}
