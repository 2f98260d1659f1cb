use std::fmt;
use std::ops::{Index, IndexMut};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::echelon::{integer_row, Echelon};
use super::rat::Rat;
use crate::error::{Error, Result};

/// Column vector of rationals.
pub type Vector = Vec<Rat>;

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// Affine solution set of `a * x = target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vector,
    pub kernel: Vec<Vector>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn scalar(n: usize, value: &Rat) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = value.clone();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rat>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Mat { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        Ok(Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Matrix whose columns are the given vectors (all of length `height`).
    pub fn from_columns(height: usize, columns: &[Vector]) -> Self {
        let mut m = Mat::zeros(height, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), height, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&v| Rat::from(v)).collect()).collect())
            .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rat] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.col(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|v| !v.is_zero()).count()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!(self.shape(), other.shape(), "matrix sum shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!(self.shape(), other.shape(), "matrix difference shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Rat) -> Mat {
        let data = self.data.iter().map(|a| a * s).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Mat {
        self.scale(&Rat::from(-1))
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: &Rat, other: &Mat) {
        assert_eq!(self.shape(), other.shape());
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += s * b;
            }
        }
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let mut out = Mat::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..other.cols {
                out[(r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        out
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diag(&self, other: &Mat) -> Mat {
        let mut out = Mat::zeros(self.rows + other.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, self.cols, other);
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Mat) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self[(r0 + r, c0 + c)] = block[(r, c)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        let mut out = Mat::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out[(r, c)] = self[(r0 + r, c0 + c)].clone();
            }
        }
        out
    }

    pub(crate) fn echelon(&self) -> Echelon {
        let rows = (0..self.rows)
            .map(|r| integer_row(self.row(r).iter().cloned().enumerate()))
            .collect();
        Echelon::new(rows, self.cols)
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Rank and a kernel basis in reduced echelon-normal form.
    pub fn rank_kernel(&self) -> (usize, Vec<Vector>) {
        let e = self.echelon();
        (e.rank(), e.kernel())
    }

    pub fn kernel(&self) -> Vec<Vector> {
        self.echelon().kernel()
    }

    /// Basis of the row space in reduced row echelon form.
    pub fn rref_rows(&self) -> Vec<Vector> {
        self.echelon().rref_rows()
    }

    /// Full affine solution set of `self * x = target`, or `None` when inconsistent.
    pub fn solve(&self, target: &[Rat]) -> Result<Option<Solution>> {
        if target.len() != self.rows {
            return Err(Error::Dimension(format!(
                "target of length {} for a {}x{} system",
                target.len(),
                self.rows,
                self.cols
            )));
        }
        let n = self.cols;
        let rows = (0..self.rows)
            .map(|r| {
                integer_row(
                    self.row(r)
                        .iter()
                        .cloned()
                        .enumerate()
                        .chain(std::iter::once((n, target[r].clone()))),
                )
            })
            .collect();
        let aug = Echelon::new(rows, n + 1);
        if aug.pivot_cols().last() == Some(&n) {
            return Ok(None);
        }
        // The augmented kernel vector (y, 1) has a*y + target = 0, so x = -y.
        let kernel_aug = aug.kernel();
        let mut particular = vec![Rat::zero(); n];
        let mut kernel = Vec::new();
        for v in kernel_aug {
            if v[n].is_zero() {
                kernel.push(v[..n].to_vec());
            } else {
                particular = v[..n].iter().map(|x| -x).collect();
            }
        }
        Ok(Some(Solution { particular, kernel }))
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Result<Option<Mat>> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "inverse of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mat::identity(n);
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[(r, c)].is_zero()) else {
                return Ok(None);
            };
            a.swap_rows(c, p);
            inv.swap_rows(c, p);
            let lead = a[(c, c)].recip();
            a.scale_row(c, &lead);
            inv.scale_row(c, &lead);
            for r in 0..n {
                if r == c || a[(r, c)].is_zero() {
                    continue;
                }
                let f = a[(r, c)].clone();
                a.sub_row_multiple(r, c, &f);
                inv.sub_row_multiple(r, c, &f);
            }
        }
        Ok(Some(inv))
    }

    /// Determinant by fraction-free (Bareiss) elimination on the integer-scaled rows.
    pub fn det(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        use num_bigint::BigInt;
        use num_traits::{One, Zero};
        let n = self.rows;
        let mut scale = Rat::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for r in 0..n {
            let mut lcm = BigInt::one();
            for v in self.row(r) {
                lcm = num_integer::Integer::lcm(&lcm, v.denom());
            }
            scale = scale * Rat::from(lcm.clone());
            a.push(self.row(r).iter().map(|v| v.numer() * (&lcm / v.denom())).collect());
        }
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(Rat::zero());
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let det = if n == 0 { BigInt::one() } else { a[n - 1][n - 1].clone() };
        Ok(Rat::from(det * sign) / scale)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: &Rat) {
        for c in 0..self.cols {
            let v = &self[(r, c)] * s;
            self[(r, c)] = v;
        }
    }

    fn sub_row_multiple(&mut self, dst: usize, src: usize, f: &Rat) {
        for c in 0..self.cols {
            let s = &self[(src, c)];
            if !s.is_zero() {
                let v = &self[(dst, c)] - f * s;
                self[(dst, c)] = v;
            }
        }
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for Mat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.row_vecs().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Mat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Rat>>::deserialize(deserializer)?;
        Mat::from_rows(rows).map_err(D::Error::custom)
    }
}

/// Dot product of two vectors.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).map(|(x, y)| x * y).sum()
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

pub fn is_zero_vector(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_zero)
}

pub fn vec_add(a: &[Rat], b: &[Rat]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rat], b: &[Rat]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Rat], s: &Rat) -> Vector {
    a.iter().map(|x| x * s).collect()
}

/// `Σ coeffs[i] * vectors[i]`
pub fn combine(len: usize, coeffs: &[Rat], vectors: &[Vector]) -> Vector {
    let mut out = vec![Rat::zero(); len];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o += c * x;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat::int;

    #[test]
    fn rank_kernel_examples() {
        let (r, k) = Mat::identity(3).rank_kernel();
        assert_eq!((r, k.len()), (3, 0));

        let (r, k) = Mat::zeros(2, 2).rank_kernel();
        assert_eq!(r, 0);
        assert_eq!(k, vec![vec![int(1), int(0)], vec![int(0), int(1)]]);

        let (r, k) = Mat::from_i64(&[&[1, 2], &[2, 4]]).rank_kernel();
        assert_eq!(r, 1);
        assert_eq!(k, vec![vec![int(-2), int(1)]]);
    }

    #[test]
    fn solve_examples() {
        let t = vec![int(5), int(-3)];
        let s = Mat::identity(2).solve(&t).unwrap().unwrap();
        assert_eq!(s.particular, t);
        assert!(s.kernel.is_empty());

        assert_eq!(Mat::zeros(2, 2).solve(&[int(1), int(0)]).unwrap(), None);

        let s = Mat::from_i64(&[&[1, 1], &[0, 0]]).solve(&[int(3), int(0)]).unwrap().unwrap();
        assert_eq!(s.particular, vec![int(3), int(0)]);
        assert_eq!(s.kernel, vec![vec![int(-1), int(1)]]);

        assert!(Mat::identity(2).solve(&[int(1)]).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Mat::identity(3).inverse().unwrap(), Some(Mat::identity(3)));
        let swap = Mat::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(swap.inverse().unwrap(), Some(swap.clone()));
        assert_eq!(Mat::from_i64(&[&[1, 1], &[1, 1]]).inverse().unwrap(), None);
        assert!(Mat::zeros(2, 3).inverse().is_err());
    }

    #[test]
    fn determinant() {
        let m = Mat::from_i64(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]);
        // 2*(3-2) - 0 + 1*(1-3) = 0
        assert_eq!(m.det().unwrap(), int(0));
        let m = Mat::from_i64(&[&[0, 2], &[3, 1]]);
        assert_eq!(m.det().unwrap(), int(-6));
        let h = Mat::from_rows(vec![
            vec![int(1), Rat::new(1, 2)],
            vec![Rat::new(1, 2), Rat::new(1, 3)],
        ])
        .unwrap();
        assert_eq!(h.det().unwrap(), Rat::new(1, 12));
    }

    #[test]
    fn json_round_trip() {
        let m = Mat::from_rows(vec![vec![int(1), Rat::new(-1, 2)], vec![int(0), int(7)]]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"[[1,"-1/2"],[0,7]]"#);
        assert_eq!(serde_json::from_str::<Mat>(&s).unwrap(), m);
        assert!(serde_json::from_str::<Mat>("[[1],[1,2]]").is_err());
    }
}
