//! The Clifford algebra `Cl(V, q)` on a fixed basis `e_0, ..., e_{n-1}`, with an
//! arbitrary (not necessarily orthogonal) Gram matrix.
//!
//! Monomials are bitmasks; bit `i` stands for `e_i`, factors in ascending order.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactalg::{Mat, Rat, Vector};
use crate::quadform::{QuadraticSpace, Subspace};

/// Largest supported dimension; the algebra has `2^n` monomials.
pub const MAX_DIM: usize = 12;

type Terms = BTreeMap<u32, Rat>;

pub struct CliffordAlgebra {
    space: QuadraticSpace,
    n: usize,
    /// `left[i][mask]` is `e_i * e_mask` in normal form.
    left: Vec<Vec<Vec<(u32, Rat)>>>,
}

impl fmt::Debug for CliffordAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CliffordAlgebra").field("n", &self.n).finish()
    }
}

impl CliffordAlgebra {
    pub fn new(space: QuadraticSpace) -> Result<Arc<Self>> {
        let n = space.dim();
        if n > MAX_DIM {
            return Err(Error::Dimension(format!("Clifford algebra of dimension 2^{n} is too large")));
        }
        let g = space.gram().clone();
        let size = 1usize << n;
        let two = Rat::from(2);
        let mut left: Vec<Vec<Vec<(u32, Rat)>>> = vec![vec![Vec::new(); size]; n];
        // Masks in increasing order: `rest` is always smaller than `mask`.
        for mask in 0..size as u32 {
            for i in 0..n {
                let bit = 1u32 << i;
                let terms = if mask == 0 {
                    vec![(bit, Rat::one())]
                } else {
                    let j = mask.trailing_zeros() as usize;
                    let rest = mask & !(1u32 << j);
                    if i < j {
                        vec![(mask | bit, Rat::one())]
                    } else if i == j {
                        scaled(&[(rest, Rat::one())], &g[(i, i)])
                    } else {
                        // e_i e_j R = 2b(i,j) R - e_j (e_i R); e_i R only involves indices > j
                        let mut acc: Terms = BTreeMap::new();
                        let bij = &g[(i, j)] * &two;
                        if !bij.is_zero() {
                            acc.insert(rest, bij);
                        }
                        for (m, c) in &left[i][rest as usize] {
                            debug_assert!(m & ((1u32 << (j + 1)) - 1) == 0);
                            accumulate(&mut acc, m | (1u32 << j), &-c);
                        }
                        acc.into_iter().collect()
                    }
                };
                left[i][mask as usize] = terms;
            }
        }
        Ok(Arc::new(CliffordAlgebra { space, n, left }))
    }

    pub fn space(&self) -> &QuadraticSpace {
        &self.space
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of basis monomials, `2^n`.
    pub fn size(&self) -> usize {
        1 << self.n
    }

    pub fn top_mask(&self) -> u32 {
        ((1u64 << self.n) - 1) as u32
    }
}

fn scaled(terms: &[(u32, Rat)], c: &Rat) -> Vec<(u32, Rat)> {
    if c.is_zero() {
        return Vec::new();
    }
    terms.iter().map(|(m, x)| (*m, x * c)).collect()
}

fn accumulate(acc: &mut Terms, mask: u32, c: &Rat) {
    if c.is_zero() {
        return;
    }
    let entry = acc.entry(mask).or_insert_with(Rat::zero);
    *entry += c;
    if entry.is_zero() {
        acc.remove(&mask);
    }
}

/// Parity of a monomial or homogeneous element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_mask(mask: u32) -> Parity {
        Parity::of(mask.count_ones() as usize)
    }

    pub fn of(k: usize) -> Parity {
        if k % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// An element of `Cl(V, q)`.
#[derive(Clone)]
pub struct CliffordElement {
    alg: Arc<CliffordAlgebra>,
    terms: Terms,
}

impl PartialEq for CliffordElement {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.alg, &other.alg) && self.terms == other.terms
    }
}

impl Eq for CliffordElement {}

fn same_algebra(a: &Arc<CliffordAlgebra>, b: &Arc<CliffordAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || a.space == b.space
}

impl CliffordElement {
    pub fn zero(alg: &Arc<CliffordAlgebra>) -> Self {
        CliffordElement { alg: alg.clone(), terms: BTreeMap::new() }
    }

    pub fn scalar(alg: &Arc<CliffordAlgebra>, c: Rat) -> Self {
        CliffordElement::monomial(alg, 0, c)
    }

    pub fn one(alg: &Arc<CliffordAlgebra>) -> Self {
        CliffordElement::scalar(alg, Rat::one())
    }

    pub fn monomial(alg: &Arc<CliffordAlgebra>, mask: u32, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mask, c);
        }
        CliffordElement { alg: alg.clone(), terms }
    }

    /// `e_{i1} e_{i2} ...` with indices given in any order.
    pub fn basis_product(alg: &Arc<CliffordAlgebra>, indices: &[usize]) -> Self {
        indices
            .iter()
            .rev()
            .fold(CliffordElement::one(alg), |acc, &i| acc.left_mul_basis(i))
    }

    pub fn vector(alg: &Arc<CliffordAlgebra>, v: &[Rat]) -> Self {
        assert_eq!(v.len(), alg.n, "vector length");
        let terms = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (1u32 << i, c.clone()))
            .collect();
        CliffordElement { alg: alg.clone(), terms }
    }

    /// Product `v_1 v_2 ... v_k` of vectors, left to right.
    pub fn product_of_vectors(alg: &Arc<CliffordAlgebra>, vectors: &[Vector]) -> Self {
        vectors
            .iter()
            .rev()
            .fold(CliffordElement::one(alg), |acc, v| acc.left_mul_vector(v))
    }

    pub fn from_dense(alg: &Arc<CliffordAlgebra>, coeffs: &[Rat]) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m as u32, c.clone()))
            .collect();
        CliffordElement { alg: alg.clone(), terms }
    }

    pub fn algebra(&self) -> &Arc<CliffordAlgebra> {
        &self.alg
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rat)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coefficient(&self, mask: u32) -> Rat {
        self.terms.get(&mask).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficients indexed by mask, length `2^n`.
    pub fn to_dense(&self) -> Vector {
        let mut out = vec![Rat::zero(); self.alg.size()];
        for (m, c) in &self.terms {
            out[*m as usize] = c.clone();
        }
        out
    }

    fn check(&self, other: &CliffordElement) -> Result<()> {
        if same_algebra(&self.alg, &other.alg) {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    pub fn add(&self, other: &CliffordElement) -> Result<CliffordElement> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, *m, c);
        }
        Ok(CliffordElement { alg: self.alg.clone(), terms })
    }

    pub fn sub(&self, other: &CliffordElement) -> Result<CliffordElement> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> CliffordElement {
        if c.is_zero() {
            return CliffordElement::zero(&self.alg);
        }
        let terms = self.terms.iter().map(|(m, x)| (*m, x * c)).collect();
        CliffordElement { alg: self.alg.clone(), terms }
    }

    pub fn neg(&self) -> CliffordElement {
        self.scale(&Rat::from(-1))
    }

    /// `e_i * self`
    pub fn left_mul_basis(&self, i: usize) -> CliffordElement {
        let table = &self.alg.left[i];
        let mut acc = BTreeMap::new();
        for (m, c) in &self.terms {
            for (m2, c2) in &table[*m as usize] {
                accumulate(&mut acc, *m2, &(c * c2));
            }
        }
        CliffordElement { alg: self.alg.clone(), terms: acc }
    }

    /// `v * self` for a vector `v`.
    pub fn left_mul_vector(&self, v: &[Rat]) -> CliffordElement {
        let mut acc = BTreeMap::new();
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            let table = &self.alg.left[i];
            for (m, c) in &self.terms {
                let c = c * vi;
                for (m2, c2) in &table[*m as usize] {
                    accumulate(&mut acc, *m2, &(&c * c2));
                }
            }
        }
        CliffordElement { alg: self.alg.clone(), terms: acc }
    }

    /// `e_mask * self`
    pub fn left_mul_monomial(&self, mask: u32) -> CliffordElement {
        let mut out = self.clone();
        for i in (0..self.alg.n).rev() {
            if mask & (1 << i) != 0 {
                out = out.left_mul_basis(i);
            }
        }
        out
    }

    pub fn mul(&self, other: &CliffordElement) -> Result<CliffordElement> {
        self.check(other)?;
        let mut acc = BTreeMap::new();
        for (m, c) in &self.terms {
            for (m2, c2) in &other.left_mul_monomial(*m).terms {
                accumulate(&mut acc, *m2, &(c * c2));
            }
        }
        Ok(CliffordElement { alg: self.alg.clone(), terms: acc })
    }

    /// `(even part, odd part)`
    pub fn grade_parts(&self) -> (CliffordElement, CliffordElement) {
        (self.grade_part(Parity::Even), self.grade_part(Parity::Odd))
    }

    pub fn grade_part(&self, parity: Parity) -> CliffordElement {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| Parity::of_mask(**m) == parity)
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        CliffordElement { alg: self.alg.clone(), terms }
    }

    /// `Some(parity)` when homogeneous and nonzero.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|m| Parity::of_mask(*m));
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// The anti-automorphism reversing products of vectors.
    pub fn transpose(&self) -> CliffordElement {
        let mut acc = BTreeMap::new();
        for (m, c) in &self.terms {
            // e_{j1} ... e_{jk} reversed: e_{jk} ... e_{j1}
            let mut x = CliffordElement::one(&self.alg);
            for i in 0..self.alg.n {
                if m & (1 << i) != 0 {
                    x = x.left_mul_basis(i);
                }
            }
            for (m2, c2) in &x.terms {
                accumulate(&mut acc, *m2, &(c * c2));
            }
        }
        CliffordElement { alg: self.alg.clone(), terms: acc }
    }

    /// Coefficient of the top monomial `e_0 e_1 ... e_{n-1}`.
    pub fn trace(&self) -> Rat {
        self.coefficient(self.alg.top_mask())
    }
}

/// `tr(a)`, or `tr(a b)` when `b` is given.
pub fn trace_form(a: &CliffordElement, b: Option<&CliffordElement>) -> Result<Rat> {
    match b {
        None => Ok(a.trace()),
        Some(b) => Ok(a.mul(b)?.trace()),
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<u32> = self.terms.keys().copied().collect();
        keys.sort_by_key(|m| (m.count_ones(), monomial_indices(*m)));
        for (pos, m) in keys.iter().enumerate() {
            let c = &self.terms[m];
            let neg = c.is_negative();
            let mag = c.abs();
            if pos == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let name = monomial_name(*m);
            if *m == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{mag} {name}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub fn monomial_indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask & (1 << i) != 0).collect()
}

/// `"e0e3"`, or `"1"` for the empty monomial.
pub fn monomial_name(mask: u32) -> String {
    if mask == 0 {
        return "1".into();
    }
    monomial_indices(mask).iter().map(|i| format!("e{i}")).collect()
}

/// Coordinates with respect to a fixed linearly independent family of elements.
#[derive(Debug, Clone)]
pub struct SpanCoords {
    alg: Arc<CliffordAlgebra>,
    /// Reduced echelon rows spanning the family.
    rref: Vec<Vector>,
    pivots: Vec<usize>,
    /// Converts echelon coordinates to coordinates in the original family.
    to_family: Mat,
}

impl SpanCoords {
    pub fn new(alg: &Arc<CliffordAlgebra>, family: &[CliffordElement]) -> Result<Self> {
        let size = alg.size();
        let rows: Vec<Vector> = family.iter().map(CliffordElement::to_dense).collect();
        let rref = if rows.is_empty() { Vec::new() } else { Mat::from_rows(rows.clone())?.rref_rows() };
        if rref.len() != family.len() {
            return Err(Error::Dependent);
        }
        let pivots: Vec<usize> = rref
            .iter()
            .map(|r| r.iter().position(|c| !c.is_zero()).expect("nonzero echelon row"))
            .collect();
        // family[i] = sum_r C[i][r] rref[r]; C[i][r] is family[i] at pivot r
        let k = family.len();
        let c = Mat::from_vec(k, k, rows.iter().flat_map(|row| pivots.iter().map(move |&p| row[p].clone())).collect())?;
        let to_family = if k == 0 {
            Mat::zeros(0, 0)
        } else {
            c.inverse()?.expect("independent family")
        };
        debug_assert!(rref.iter().all(|r| r.len() == size));
        Ok(SpanCoords { alg: alg.clone(), rref, pivots, to_family })
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Coordinates of `x` in the family, or `None` when `x` leaves the span.
    pub fn coordinates(&self, x: &CliffordElement) -> Option<Vector> {
        let dense = x.to_dense();
        let c: Vector = self.pivots.iter().map(|&p| dense[p].clone()).collect();
        let mut rebuilt = vec![Rat::zero(); self.alg.size()];
        for (ci, row) in c.iter().zip(&self.rref) {
            if ci.is_zero() {
                continue;
            }
            for (slot, r) in rebuilt.iter_mut().zip(row) {
                if !r.is_zero() {
                    *slot += ci * r;
                }
            }
        }
        if rebuilt != dense {
            return None;
        }
        if c.is_empty() {
            return Some(c);
        }
        // row vector c times to_family
        Some(self.to_family.transpose().mul_vec(&c))
    }
}

/// Matrix of `xi -> v xi` from `span(domain)` to `span(codomain)`.
pub fn left_action_matrix(v: &[Rat], domain: &[CliffordElement], codomain: &[CliffordElement]) -> Result<Mat> {
    let alg = match domain.first().or(codomain.first()) {
        Some(x) => x.algebra().clone(),
        None => return Ok(Mat::zeros(0, 0)),
    };
    let coords = SpanCoords::new(&alg, codomain)?;
    let mut cols = Vec::with_capacity(domain.len());
    for xi in domain {
        let image = xi.left_mul_vector(v);
        let c = coords
            .coordinates(&image)
            .ok_or_else(|| Error::NotInSpan(format!("v * ({xi}) = {image}")))?;
        cols.push(c);
    }
    Ok(Mat::from_columns(codomain.len(), &cols))
}

/// `v - (2 b(v, u) / q(u)) u`, which equals `-u v u^{-1}` in the Clifford algebra.
pub fn reflect(space: &QuadraticSpace, u: &[Rat], v: &[Rat]) -> Result<Vector> {
    let qu = space.q(u);
    if qu.is_zero() {
        return Err(Error::NotAnisotropic);
    }
    let t = &(&space.b(v, u) * &Rat::from(2)) / &qu;
    Ok(v.iter().zip(u).map(|(a, b)| a - &(&t * b)).collect())
}

/// Product of anisotropic vectors, a unit of the Clifford algebra.
#[derive(Debug, Clone)]
pub struct GroupElement {
    factors: Vec<Vector>,
    element: CliffordElement,
}

impl GroupElement {
    pub fn new(alg: &Arc<CliffordAlgebra>, factors: Vec<Vector>) -> Result<Self> {
        for u in &factors {
            if u.len() != alg.n() {
                return Err(Error::Dimension("group factor of wrong length".into()));
            }
            if alg.space().q(u).is_zero() {
                return Err(Error::NotAnisotropic);
            }
        }
        let element = CliffordElement::product_of_vectors(alg, &factors);
        Ok(GroupElement { factors, element })
    }

    pub fn factors(&self) -> &[Vector] {
        &self.factors
    }

    pub fn as_element(&self) -> &CliffordElement {
        &self.element
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.factors.len())
    }

    /// `Π q(u_i)`, so that `g^T g = norm`.
    pub fn norm(&self) -> Rat {
        let space = self.element.algebra().space();
        self.factors.iter().map(|u| space.q(u)).product()
    }

    pub fn inverse(&self) -> CliffordElement {
        self.element.transpose().scale(&self.norm().recip())
    }

    /// `g . v = u_1 . (u_2 . ( ... (u_k . v)))`, which equals `(-1)^k g v g^{-1}`.
    pub fn act(&self, v: &[Rat]) -> Result<Vector> {
        let space = self.element.algebra().space();
        let mut out = v.to_vec();
        for u in self.factors.iter().rev() {
            out = reflect(space, u, &out)?;
        }
        Ok(out)
    }

    /// `g v g^{-1}` computed inside the algebra.
    pub fn conjugate(&self, v: &[Rat]) -> Result<CliffordElement> {
        let alg = self.element.algebra();
        self.element.mul(&CliffordElement::vector(alg, v))?.mul(&self.inverse())
    }
}

/// `g W g^{-1}`: the image of `W` under the reflection action.
pub fn conjugate_subspace(g: &GroupElement, w: &Subspace) -> Result<Subspace> {
    let images = w.basis().iter().map(|v| g.act(v)).collect::<Result<Vec<_>>>()?;
    Subspace::new(w.ambient(), images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat, unit_vector, vec_add};

    fn h6() -> Arc<CliffordAlgebra> {
        CliffordAlgebra::new(QuadraticSpace::hyperbolic(3, 0).unwrap()).unwrap()
    }

    fn e(alg: &Arc<CliffordAlgebra>, i: usize) -> CliffordElement {
        CliffordElement::basis_product(alg, &[i])
    }

    #[test]
    fn relations_in_h6() {
        let a = h6();
        assert!(e(&a, 3).mul(&e(&a, 3)).unwrap().is_zero());
        let anti = e(&a, 0).mul(&e(&a, 3)).unwrap().add(&e(&a, 3).mul(&e(&a, 0)).unwrap()).unwrap();
        assert_eq!(anti, CliffordElement::one(&a));
        let x = CliffordElement::basis_product(&a, &[0, 3]);
        assert_eq!(x.mul(&x).unwrap(), x);
    }

    #[test]
    fn grading() {
        let a = h6();
        let (ev, od) = CliffordElement::one(&a).grade_parts();
        assert_eq!((ev, od.is_zero()), (CliffordElement::one(&a), true));
        let x = e(&a, 0).add(&CliffordElement::basis_product(&a, &[0, 3])).unwrap();
        let (ev, od) = x.grade_parts();
        assert_eq!(ev, CliffordElement::basis_product(&a, &[0, 3]));
        assert_eq!(od, e(&a, 0));
        let t = CliffordElement::basis_product(&a, &[0, 1, 2]);
        assert_eq!(t.parity(), Some(Parity::Odd));
    }

    #[test]
    fn transposes() {
        let a = h6();
        assert_eq!(e(&a, 4).transpose(), e(&a, 4));
        let x = CliffordElement::basis_product(&a, &[0, 3]);
        let expected = CliffordElement::one(&a).sub(&x).unwrap();
        assert_eq!(x.transpose(), expected);
        let y = CliffordElement::basis_product(&a, &[3, 4, 5]);
        assert_eq!(y.transpose(), y.neg());
    }

    #[test]
    fn traces() {
        let a = h6();
        assert!(CliffordElement::one(&a).trace().is_zero());
        assert_eq!(CliffordElement::basis_product(&a, &[0, 1, 2, 3, 4, 5]).trace(), int(1));
        let basis: Vec<CliffordElement> =
            (0..64u32).map(|m| CliffordElement::monomial(&a, m, int(1))).collect();
        let mut rows = Vec::new();
        for x in &basis {
            rows.push(basis.iter().map(|y| trace_form(x, Some(y)).unwrap()).collect());
        }
        assert_eq!(Mat::from_rows(rows).unwrap().rank(), 64);
    }

    #[test]
    fn left_action_in_h2() {
        let space = QuadraticSpace::hyperbolic(1, 0).unwrap();
        let a = CliffordAlgebra::new(space).unwrap();
        let dom = [CliffordElement::basis_product(&a, &[0, 1])];
        let cod = [e(&a, 1)];
        let m0 = left_action_matrix(&unit_vector(2, 0), &dom, &cod).unwrap();
        assert!(m0.is_zero());
        let m1 = left_action_matrix(&unit_vector(2, 1), &dom, &cod).unwrap();
        assert_eq!(m1, Mat::from_i64(&[&[1]]));
        let zero = left_action_matrix(&[int(0), int(0)], &dom, &cod).unwrap();
        assert!(zero.is_zero());
        // e0 e0e1 = 0 but e1 applied to e1 leaves the even span
        assert!(left_action_matrix(&unit_vector(2, 0), &cod, &cod).is_err());
    }

    #[test]
    fn reflections() {
        let s = QuadraticSpace::hyperbolic(3, 0).unwrap();
        let u = vec_add(&unit_vector(6, 0), &unit_vector(6, 3));
        assert_eq!(reflect(&s, &u, &unit_vector(6, 0)).unwrap(), vec_scale_neg(&unit_vector(6, 3)));
        assert_eq!(reflect(&s, &u, &u).unwrap(), vec_scale_neg(&u));
        assert_eq!(reflect(&s, &u, &unit_vector(6, 1)).unwrap(), unit_vector(6, 1));
        assert!(reflect(&s, &unit_vector(6, 0), &u).is_err());
    }

    fn vec_scale_neg(v: &[Rat]) -> Vector {
        v.iter().map(|x| -x).collect()
    }

    #[test]
    fn group_elements() {
        let a = h6();
        let u1 = vec_add(&unit_vector(6, 0), &unit_vector(6, 3));
        let u2 = vec_add(&unit_vector(6, 1), &unit_vector(6, 4));
        let g = GroupElement::new(&a, vec![u1.clone(), u2.clone()]).unwrap();
        let w = Subspace::coordinate(6, &[3, 4, 5]);
        let w2 = conjugate_subspace(&g, &w).unwrap();
        assert!(w2.same_as(&Subspace::coordinate(6, &[0, 1, 5])));
        let gtg = g.as_element().transpose().mul(g.as_element()).unwrap();
        assert_eq!(gtg, CliffordElement::one(&a));
        for i in 0..6 {
            let v = unit_vector(6, i);
            let conj = g.conjugate(&v).unwrap();
            assert_eq!(conj, CliffordElement::vector(&a, &g.act(&v).unwrap()));
        }
        let id = GroupElement::new(&a, vec![]).unwrap();
        assert!(conjugate_subspace(&id, &w).unwrap().same_as(&w));

        let scaled = vec![int(2), int(0), int(0), int(1), int(0), int(0)];
        let h = GroupElement::new(&a, vec![scaled.clone()]).unwrap();
        assert_eq!(h.norm(), int(2));
        let v = unit_vector(6, 0);
        assert_eq!(h.conjugate(&v).unwrap().neg(), CliffordElement::vector(&a, &h.act(&v).unwrap()));
        assert_eq!(h.inverse().mul(h.as_element()).unwrap(), CliffordElement::one(&a));
        assert!(matches!(GroupElement::new(&a, vec![unit_vector(6, 0)]), Err(Error::NotAnisotropic)));
    }

    #[test]
    fn display() {
        let a = h6();
        let x = CliffordElement::one(&a)
            .sub(&CliffordElement::basis_product(&a, &[0, 3]).scale(&rat(3, 2)))
            .unwrap();
        assert_eq!(x.to_string(), "1 - 3/2 e0e3");
        assert_eq!(CliffordElement::zero(&a).to_string(), "0");
        assert_eq!(CliffordElement::basis_product(&a, &[3, 0]).to_string(), "1 - e0e3");
    }
}
