//! Quadratic and bilinear form bookkeeping.
//!
//! Convention: `q(v) = b(v, v)`, so the monomial `x0 x3` in `q` corresponds to
//! the Gram entries `b(e0, e3) = b(e3, e0) = 1/2`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{combine, dot, is_zero_vector, unit_vector, vec_scale, vec_sub, Mat, Rat, Vector};

/// A finite-dimensional rational vector space with a symmetric bilinear form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadraticSpace {
    n: usize,
    gram: Mat,
}

/// Linearly independent vectors spanning a subspace of `Q^ambient`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl QuadraticSpace {
    /// A space whose form has rank at least 2.
    pub fn new(gram: Mat) -> Result<Self> {
        let space = QuadraticSpace::with_any_rank(gram)?;
        let rank = space.rank();
        if rank < 2 {
            return Err(Error::RankTooSmall(rank));
        }
        Ok(space)
    }

    /// Any symmetric form, including degenerate ones of rank < 2 (used for subspaces).
    pub fn with_any_rank(gram: Mat) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::Dimension(format!(
                "gram matrix is {}x{}",
                gram.rows(),
                gram.cols()
            )));
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(QuadraticSpace { n: gram.rows(), gram })
    }

    /// Build from the monomial coefficients of `q`: each `(i, j, c)` adds `c * x_i * x_j`.
    pub fn from_polynomial(n: usize, terms: &[(usize, usize, Rat)]) -> Result<Self> {
        let mut gram = Mat::zeros(n, n);
        for (i, j, c) in terms {
            if *i >= n || *j >= n {
                return Err(Error::Dimension(format!("variable index out of range for n = {n}")));
            }
            if i == j {
                gram[(*i, *i)] += c;
            } else {
                let h = c * &Rat::half();
                gram[(*i, *j)] += &h;
                gram[(*j, *i)] += &h;
            }
        }
        QuadraticSpace::new(gram)
    }

    /// Standard split form `x_0 x_k + x_1 x_{k+1} + ... + x_{k-1} x_{2k-1}`, padded
    /// with `extra` radical coordinates.
    pub fn hyperbolic(k: usize, extra: usize) -> Result<Self> {
        let terms: Vec<_> = (0..k).map(|i| (i, k + i, Rat::one())).collect();
        QuadraticSpace::from_polynomial(2 * k + extra, &terms)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn gram(&self) -> &Mat {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.rank()
    }

    pub fn b(&self, v: &[Rat], w: &[Rat]) -> Rat {
        dot(v, &self.gram.mul_vec(w))
    }

    pub fn q(&self, v: &[Rat]) -> Rat {
        self.b(v, v)
    }

    /// `b(v, w)`, or `q(v)` when `w` is `None`.
    pub fn evaluate(&self, v: &[Rat], w: Option<&[Rat]>) -> Result<Rat> {
        let w = w.unwrap_or(v);
        if v.len() != self.n || w.len() != self.n {
            return Err(Error::Dimension(format!(
                "vectors of length {} and {} in a space of dimension {}",
                v.len(),
                w.len(),
                self.n
            )));
        }
        Ok(self.b(v, w))
    }

    /// The radical `K`, kernel of the Gram matrix.
    pub fn radical(&self) -> Subspace {
        Subspace { ambient: self.n, basis: self.gram.kernel() }
    }

    pub fn check_isotropic(&self, w: &Subspace) -> Result<bool> {
        Ok(self.isotropy_witness(w)?.is_none())
    }

    pub(crate) fn isotropy_witness(&self, w: &Subspace) -> Result<Option<(usize, usize, Rat)>> {
        if w.ambient != self.n {
            return Err(Error::Dimension(format!(
                "subspace of Q^{} in a space of dimension {}",
                w.ambient, self.n
            )));
        }
        for (i, a) in w.basis.iter().enumerate() {
            for (j, c) in w.basis.iter().enumerate().skip(i) {
                let v = self.b(a, c);
                if !v.is_zero() {
                    return Ok(Some((i, j, v)));
                }
            }
        }
        Ok(None)
    }

    pub fn require_isotropic(&self, w: &Subspace) -> Result<()> {
        match self.isotropy_witness(w)? {
            Some((i, j, v)) => Err(Error::NotIsotropic(i, j, v.to_string())),
            None => Ok(()),
        }
    }

    /// The form restricted to a subspace, written in the subspace's basis.
    pub fn restrict(&self, u: &Subspace) -> QuadraticSpace {
        let m = u.as_mat();
        let gram = m.transpose().mul(&self.gram).mul(&m);
        QuadraticSpace { n: u.dim(), gram }
    }

    pub fn quotient(&self, modded: &Subspace) -> Result<QuotientSpace> {
        QuotientSpace::new(self, modded)
    }

    /// Witt-style normal form adapted to an isotropic subspace.
    pub fn standardize(&self, w: &Subspace) -> Result<StandardForm> {
        StandardForm::new(self, w)
    }

    /// Maximal isotropic dimension: `floor(rank / 2) + dim K` (over an algebraically
    /// closed field; over Q the split part may be smaller).
    pub fn witt_bound(&self) -> usize {
        self.rank() / 2 + (self.n - self.rank())
    }

    /// `x` and `y` span a line; return a point `x + t y` on the quadric when the
    /// quadratic `q(x) + 2t b(x,y) + t^2 q(y)` has a rational root.
    pub fn isotropic_on_line(&self, x: &[Rat], y: &[Rat]) -> Option<Vector> {
        let qx = self.q(x);
        if qx.is_zero() && !is_zero_vector(x) {
            return Some(x.to_vec());
        }
        let qy = self.q(y);
        let bxy = self.b(x, y);
        if qy.is_zero() {
            if bxy.is_zero() {
                return None;
            }
            // linear: qx + 2 t bxy = 0
            let t = -(&qx / &(&bxy * &Rat::from(2)));
            let p = combine(self.n, &[Rat::one(), t], &[x.to_vec(), y.to_vec()]);
            return (!is_zero_vector(&p)).then_some(p);
        }
        let disc = &bxy * &bxy - &qx * &qy;
        let root = disc.sqrt()?;
        let t = (-&bxy + root) / qy;
        let p = combine(self.n, &[Rat::one(), t], &[x.to_vec(), y.to_vec()]);
        (!is_zero_vector(&p)).then_some(p)
    }
}

impl Subspace {
    /// Subspace with the given basis; fails if the vectors are dependent.
    pub fn new(ambient: usize, basis: Vec<Vector>) -> Result<Self> {
        if basis.iter().any(|v| v.len() != ambient) {
            return Err(Error::Dimension(format!("basis vector not in Q^{ambient}")));
        }
        if Mat::from_columns(ambient, &basis).rank() != basis.len() {
            return Err(Error::Dependent);
        }
        Ok(Subspace { ambient, basis })
    }

    /// Span of arbitrary vectors, keeping the first independent ones in order.
    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        let mut basis: Vec<Vector> = Vec::new();
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector not in Q^{ambient}");
            let mut cand = basis.clone();
            cand.push(v.clone());
            if Mat::from_columns(ambient, &cand).rank() == cand.len() {
                basis = cand;
            }
        }
        Subspace { ambient, basis }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: (0..ambient).map(|i| unit_vector(ambient, i)).collect() }
    }

    /// Span of standard basis vectors `e_i`.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        Subspace::new(ambient, indices.iter().map(|&i| unit_vector(ambient, i)).collect())
            .expect("distinct coordinate vectors")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Columns are the basis vectors.
    pub fn as_mat(&self) -> Mat {
        Mat::from_columns(self.ambient, &self.basis)
    }

    /// Coordinates of `v` in this basis, `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vector> {
        if self.basis.is_empty() {
            return is_zero_vector(v).then(Vec::new);
        }
        let sol = self.as_mat().solve(v).ok()??;
        Some(sol.particular)
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        v.len() == self.ambient && self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &all)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // a*self = b*other  <=>  [self | -other] (a, b) = 0
        let m = self.as_mat().hstack(&other.as_mat().neg());
        let vectors: Vec<Vector> = m
            .kernel()
            .iter()
            .map(|k| combine(self.ambient, &k[..self.dim()], &self.basis))
            .collect();
        Subspace::span(self.ambient, &vectors)
    }

    /// Extend this basis with vectors from `pool` until it spans `target_dim` dimensions.
    pub fn extend_with(&self, pool: &[Vector]) -> Subspace {
        let mut all = self.basis.clone();
        all.extend(pool.iter().cloned());
        Subspace::span(self.ambient, &all)
    }

    /// Vectors from `pool` completing this basis to a basis of `self + span(pool)`.
    pub fn complement_from(&self, pool: &[Vector]) -> Vec<Vector> {
        self.extend_with(pool).basis[self.dim()..].to_vec()
    }
}

/// `V / modded` for a subspace of the radical, with a chosen section.
#[derive(Debug, Clone, Serialize)]
pub struct QuotientSpace {
    pub modded: Subspace,
    /// `n x (n - d)` matrix embedding quotient coordinates back into `V`.
    pub section: Mat,
    pub space: QuadraticSpace,
    /// Inverse of `[section | modded]`; its first `n - d` rows give the projection.
    coords: Mat,
}

impl QuotientSpace {
    fn new(source: &QuadraticSpace, modded: &Subspace) -> Result<Self> {
        let n = source.dim();
        if modded.ambient() != n {
            return Err(Error::Dimension("modded subspace in a different ambient space".into()));
        }
        if modded.basis().iter().any(|u| !is_zero_vector(&source.gram().mul_vec(u))) {
            return Err(Error::NotInRadical);
        }
        let units: Vec<Vector> = (0..n).map(|i| unit_vector(n, i)).collect();
        let complement = modded.complement_from(&units);
        let section = Mat::from_columns(n, &complement);
        let full = section.hstack(&modded.as_mat());
        let coords = full.inverse()?.expect("complement completes a basis");
        let gram = section.transpose().mul(source.gram()).mul(&section);
        Ok(QuotientSpace {
            modded: modded.clone(),
            section,
            space: QuadraticSpace::with_any_rank(gram)?,
            coords,
        })
    }

    pub fn dim(&self) -> usize {
        self.section.cols()
    }

    pub fn project(&self, v: &[Rat]) -> Vector {
        let c = self.coords.mul_vec(v);
        c[..self.dim()].to_vec()
    }

    pub fn lift(&self, v: &[Rat]) -> Vector {
        self.section.mul_vec(v)
    }

    pub fn project_subspace(&self, w: &Subspace) -> Subspace {
        let images: Vec<Vector> = w.basis().iter().map(|v| self.project(v)).collect();
        Subspace::span(self.dim(), &images)
    }
}

/// Basis of `V` in which `q = c x0^2 + Σ x_i x_{k+i}` (the square term only in odd
/// rank) and `W` is spanned by trailing hyperbolic vectors plus radical vectors.
#[derive(Debug, Clone, Serialize)]
pub struct StandardForm {
    /// `(v0, c)` with `q(v0) = c != 0`, present iff the rank is odd.
    pub anisotropic: Option<(Vector, Rat)>,
    /// Hyperbolic pairs `(u_i, w_i)` with `q(u_i) = q(w_i) = 0`, `b(u_i, w_i) = 1/2`.
    /// The first `w_pairs` of them have `w_i` in `W`.
    pub pairs: Vec<(Vector, Vector)>,
    pub w_pairs: usize,
    pub radical_in_w: Vec<Vector>,
    pub radical_rest: Vec<Vector>,
    pub pi_w_maximal: bool,
}

impl StandardForm {
    fn new(space: &QuadraticSpace, w: &Subspace) -> Result<Self> {
        let n = space.dim();
        space.require_isotropic(w)?;
        let k_space = space.radical();
        let wk = w.intersect(&k_space);
        let rank = space.rank();
        let w0 = wk.complement_from(w.basis());
        let half = Rat::half();

        let mut pairs: Vec<(Vector, Vector)> = Vec::new();
        for (i, wi) in w0.iter().enumerate() {
            // b(u, w_j) = δ_ij / 2, b(u, u_j) = 0 for the earlier partners
            let mut rows: Vec<Vector> = w0.iter().map(|wj| space.gram().mul_vec(wj)).collect();
            let mut rhs: Vector =
                (0..w0.len()).map(|j| if i == j { half.clone() } else { Rat::zero() }).collect();
            for (uj, _) in &pairs {
                rows.push(space.gram().mul_vec(uj));
                rhs.push(Rat::zero());
            }
            let sol = Mat::from_rows(rows)?.solve(&rhs)?.ok_or_else(|| {
                Error::StandardizationUnavailable("no dual partner for an isotropic vector".into())
            })?;
            let u = sol.particular;
            let u = vec_sub(&u, &vec_scale(wi, &space.q(&u)));
            pairs.push((u, wi.clone()));
        }
        let w_pairs = pairs.len();

        let mut anisotropic = None;
        loop {
            let used: Vec<Vector> = pairs.iter().flat_map(|(u, w)| [u.clone(), w.clone()]).collect();
            let complement = orthogonal_complement(space, &used);
            let nondeg = k_space.complement_from(complement.basis());
            match nondeg.len() {
                0 => break,
                1 => {
                    let z = nondeg[0].clone();
                    let c = space.q(&z);
                    anisotropic = Some((z, c));
                    break;
                }
                _ => {
                    let Some(x) = find_isotropic(space, &nondeg) else {
                        return Err(Error::StandardizationUnavailable(format!(
                            "no rational isotropic vector found in a {}-dimensional anisotropic-looking block",
                            nondeg.len()
                        )));
                    };
                    // partner inside the complement: b(y, x) = 1/2
                    let gx = space.gram().mul_vec(&x);
                    let row: Vector = nondeg.iter().map(|c| dot(&gx, c)).collect();
                    let sol = Mat::from_rows(vec![row])?
                        .solve(&[half.clone()])?
                        .ok_or_else(|| Error::StandardizationUnavailable("degenerate block".into()))?;
                    let y = combine(n, &sol.particular, &nondeg);
                    let y = vec_sub(&y, &vec_scale(&x, &space.q(&y)));
                    pairs.push((x, y));
                }
            }
        }

        let radical_in_w = wk.basis().to_vec();
        let radical_rest = wk.complement_from(k_space.basis());
        let form = StandardForm {
            anisotropic,
            pairs,
            w_pairs,
            radical_in_w,
            radical_rest,
            pi_w_maximal: w_pairs == rank / 2,
        };
        debug_assert!(form.verify(space));
        Ok(form)
    }

    pub fn k(&self) -> usize {
        self.pairs.len()
    }

    /// Ordered basis: `[v0], u_1..u_k, w_1..w_k, radical ∩ W, rest of radical`.
    pub fn basis(&self) -> Vec<Vector> {
        let mut out = Vec::new();
        if let Some((z, _)) = &self.anisotropic {
            out.push(z.clone());
        }
        out.extend(self.pairs.iter().map(|(u, _)| u.clone()));
        out.extend(self.pairs.iter().map(|(_, w)| w.clone()));
        out.extend(self.radical_in_w.iter().cloned());
        out.extend(self.radical_rest.iter().cloned());
        out
    }

    /// Columns are the new basis vectors.
    pub fn change_of_basis(&self, n: usize) -> Mat {
        Mat::from_columns(n, &self.basis())
    }

    /// Vectors spanning `W` in this basis: the `w_i` lying in `W`, then radical ones.
    pub fn w_basis(&self) -> Vec<Vector> {
        let mut out: Vec<Vector> = self.pairs[..self.w_pairs].iter().map(|(_, w)| w.clone()).collect();
        out.extend(self.radical_in_w.iter().cloned());
        out
    }

    /// The Gram matrix the normal form claims, in the new basis.
    pub fn expected_gram(&self) -> Mat {
        let k = self.k();
        let off = usize::from(self.anisotropic.is_some());
        let n = off + 2 * k + self.radical_in_w.len() + self.radical_rest.len();
        let mut g = Mat::zeros(n, n);
        if let Some((_, c)) = &self.anisotropic {
            g[(0, 0)] = c.clone();
        }
        for i in 0..k {
            g[(off + i, off + k + i)] = Rat::half();
            g[(off + k + i, off + i)] = Rat::half();
        }
        g
    }

    /// Re-evaluate the form on every pair of output vectors.
    pub fn verify(&self, space: &QuadraticSpace) -> bool {
        let p = self.change_of_basis(space.dim());
        p.is_square()
            && p.rank() == space.dim()
            && p.transpose().mul(space.gram()).mul(&p) == self.expected_gram()
    }
}

/// `{x : b(x, v) = 0 for all v in vectors}`
pub fn orthogonal_complement(space: &QuadraticSpace, vectors: &[Vector]) -> Subspace {
    let n = space.dim();
    if vectors.is_empty() {
        return Subspace::full(n);
    }
    let rows: Vec<Vector> = vectors.iter().map(|v| space.gram().mul_vec(v)).collect();
    let m = Mat::from_rows(rows).expect("rectangular");
    Subspace::span(n, &m.kernel())
}

/// Deterministic bounded search for a rational isotropic vector in `span(block)`:
/// basis vectors, then rational roots on lines through pairs of small combinations.
fn find_isotropic(space: &QuadraticSpace, block: &[Vector]) -> Option<Vector> {
    let n = space.dim();
    for v in block {
        if space.q(v).is_zero() {
            return Some(v.clone());
        }
    }
    let d = block.len();
    let mut candidates: Vec<Vector> = block.to_vec();
    // small integer combinations with coefficients in [-2, 2]
    let mut coeffs = vec![-2i64; d];
    loop {
        if coeffs.iter().any(|&c| c != 0) {
            let cs: Vec<Rat> = coeffs.iter().map(|&c| Rat::from(c)).collect();
            candidates.push(combine(n, &cs, block));
        }
        let mut i = 0;
        while i < d {
            coeffs[i] += 1;
            if coeffs[i] <= 2 {
                break;
            }
            coeffs[i] = -2;
            i += 1;
        }
        if i == d || candidates.len() > 400 {
            break;
        }
    }
    for (a, x) in candidates.iter().enumerate() {
        for y in candidates.iter().skip(a + 1) {
            if let Some(p) = space.isotropic_on_line(x, y) {
                return Some(p);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    fn h6() -> QuadraticSpace {
        QuadraticSpace::hyperbolic(3, 0).unwrap()
    }

    fn qs() -> QuadraticSpace {
        QuadraticSpace::from_polynomial(4, &[(0, 1, int(1))]).unwrap()
    }

    fn c5() -> QuadraticSpace {
        QuadraticSpace::from_polynomial(5, &[(0, 2, int(1)), (1, 3, int(1))]).unwrap()
    }

    fn e(n: usize, i: usize) -> Vector {
        unit_vector(n, i)
    }

    #[test]
    fn evaluate_examples() {
        let s = h6();
        assert_eq!(s.evaluate(&e(6, 0), Some(&e(6, 3))).unwrap(), rat(1, 2));
        assert_eq!(s.evaluate(&vec![int(0); 6], None).unwrap(), int(0));
        let v = crate::exactalg::vec_add(&e(6, 0), &e(6, 3));
        assert_eq!(s.evaluate(&v, None).unwrap(), int(1));
        assert!(s.evaluate(&e(5, 0), None).is_err());
    }

    #[test]
    fn rejects_bad_grams() {
        let g = Mat::from_rows(vec![vec![int(0), int(1)], vec![int(0), int(0)]]).unwrap();
        assert!(matches!(QuadraticSpace::new(g), Err(Error::NotSymmetric)));
        let g = Mat::from_rows(vec![vec![int(1), int(0)], vec![int(0), int(0)]]).unwrap();
        assert!(matches!(QuadraticSpace::new(g), Err(Error::RankTooSmall(1))));
    }

    #[test]
    fn radicals() {
        assert!(h6().radical().is_zero());
        assert!(qs().radical().same_as(&Subspace::coordinate(4, &[2, 3])));
        assert!(c5().radical().same_as(&Subspace::coordinate(5, &[4])));
    }

    #[test]
    fn isotropy() {
        assert!(h6().check_isotropic(&Subspace::coordinate(6, &[3, 4, 5])).unwrap());
        assert!(!h6().check_isotropic(&Subspace::coordinate(6, &[0, 3])).unwrap());
        assert!(qs().check_isotropic(&Subspace::coordinate(4, &[1, 2])).unwrap());
        assert!(h6().check_isotropic(&Subspace::coordinate(4, &[1])).is_err());
    }

    #[test]
    fn quotients() {
        let s = qs();
        let quo = s.quotient(&s.radical()).unwrap();
        assert_eq!(quo.dim(), 2);
        assert_eq!(quo.space.rank(), 2);
        assert_eq!(quo.space.gram(), QuadraticSpace::hyperbolic(1, 0).unwrap().gram());

        let h = h6();
        let same = h.quotient(&Subspace::zero(6)).unwrap();
        assert_eq!(same.space.gram(), h.gram());

        let c = c5();
        let quo = c.quotient(&Subspace::coordinate(5, &[4])).unwrap();
        assert_eq!((quo.dim(), quo.space.rank()), (4, 4));

        assert!(matches!(h.quotient(&Subspace::coordinate(6, &[0])), Err(Error::NotInRadical)));
    }

    #[test]
    fn quotient_section_respects_forms() {
        let c = c5();
        let quo = c.quotient(&Subspace::coordinate(5, &[4])).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let (a, b) = (e(4, i), e(4, j));
                assert_eq!(quo.space.b(&a, &b), c.b(&quo.lift(&a), &quo.lift(&b)));
            }
            assert_eq!(quo.project(&quo.lift(&e(4, i))), e(4, i));
        }
    }

    #[test]
    fn standardize_examples() {
        let h = h6();
        let f = h.standardize(&Subspace::coordinate(6, &[3, 4, 5])).unwrap();
        assert_eq!(f.change_of_basis(6), Mat::identity(6));
        assert!(f.pi_w_maximal && f.anisotropic.is_none());

        let s = qs();
        let f = s.standardize(&Subspace::coordinate(4, &[1, 2])).unwrap();
        assert_eq!(f.change_of_basis(4), Mat::identity(4));
        assert_eq!(f.w_basis(), vec![e(4, 1), e(4, 2)]);
        assert!(f.verify(&s));

        let c = c5();
        let f = c.standardize(&Subspace::coordinate(5, &[2, 4])).unwrap();
        assert_eq!(f.pairs, vec![(e(5, 0), e(5, 2)), (e(5, 1), e(5, 3))]);
        assert_eq!(f.radical_in_w, vec![e(5, 4)]);
        assert!(!f.pi_w_maximal);
        assert!(f.verify(&c));
    }

    #[test]
    fn standardize_odd_rank() {
        // q = 3 x0^2 + x1 x3 + x2 x4, W = span(e3, e4)
        let s = QuadraticSpace::from_polynomial(5, &[(0, 0, int(3)), (1, 3, int(1)), (2, 4, int(1))])
            .unwrap();
        let f = s.standardize(&Subspace::coordinate(5, &[3, 4])).unwrap();
        assert_eq!(f.anisotropic, Some((e(5, 0), int(3))));
        assert!(f.pi_w_maximal && f.verify(&s));
    }

    #[test]
    fn standardize_reports_rational_obstruction() {
        // x0^2 + x1^2 + x2^2 + x3 x4: the anisotropic block has no rational isotropic vector
        let s = QuadraticSpace::from_polynomial(
            5,
            &[(0, 0, int(1)), (1, 1, int(1)), (2, 2, int(1)), (3, 4, int(1))],
        )
        .unwrap();
        let r = s.standardize(&Subspace::coordinate(5, &[3]));
        assert!(matches!(r, Err(Error::StandardizationUnavailable(_))));
    }

    #[test]
    fn subspace_operations() {
        let a = Subspace::coordinate(4, &[0, 1]);
        let b = Subspace::span(4, &[vec![int(1), int(1), int(1), int(0)], e(4, 2)]);
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&vec![int(1), int(1), int(0), int(0)]));
        assert_eq!(a.sum(&b).dim(), 3);
        assert!(matches!(Subspace::new(2, vec![e(2, 0), e(2, 0)]), Err(Error::Dependent)));
    }

    #[test]
    fn rational_points_on_lines() {
        let s = h6();
        let x = crate::exactalg::vec_add(&e(6, 0), &e(6, 3));
        let y = vec_sub(&e(6, 0), &e(6, 3));
        let p = s.isotropic_on_line(&x, &y).unwrap();
        assert!(!is_zero_vector(&p));
        assert!(s.isotropic_on_line(&x, &e(6, 1)).is_none());
        assert!(s.q(&p).is_zero());
    }
}
