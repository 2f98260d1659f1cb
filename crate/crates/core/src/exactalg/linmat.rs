use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::echelon::{integer_row, Echelon};
use super::mat::Mat;
use super::rat::Rat;
use crate::error::{Error, Result};

/// Matrix of linear forms `M(x) = Σ x_i * coeff[i]` on an `n`-dimensional space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinMat {
    n: usize,
    rows: usize,
    cols: usize,
    coeff: Vec<Mat>,
}

/// Matrix of quadratic forms, stored as the coefficient of `x_i x_j` for `i <= j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadMat {
    n: usize,
    rows: usize,
    cols: usize,
    coeff: HashMap<(usize, usize), Mat>,
}

impl LinMat {
    pub fn new(coeff: Vec<Mat>) -> Result<Self> {
        let n = coeff.len();
        let (rows, cols) = coeff.first().map(Mat::shape).unwrap_or((0, 0));
        if coeff.iter().any(|m| m.shape() != (rows, cols)) {
            return Err(Error::Dimension("linear-form coefficients of differing shape".into()));
        }
        Ok(LinMat { n, rows, cols, coeff })
    }

    pub fn zeros(n: usize, rows: usize, cols: usize) -> Self {
        LinMat { n, rows, cols, coeff: vec![Mat::zeros(rows, cols); n] }
    }

    /// Parse a matrix of linear forms written with integer coefficient rows:
    /// each entry is a slice of `n` coefficients.
    pub fn from_entries(n: usize, entries: &[Vec<Vec<i64>>]) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        let mut coeff = vec![Mat::zeros(rows, cols); n];
        for (r, row) in entries.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension("ragged linear-form matrix".into()));
            }
            for (c, form) in row.iter().enumerate() {
                if form.len() != n {
                    return Err(Error::Dimension("linear form of wrong length".into()));
                }
                for (i, &a) in form.iter().enumerate() {
                    coeff[i][(r, c)] = Rat::from(a);
                }
            }
        }
        Ok(LinMat { n, rows, cols, coeff })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn coeff(&self) -> &[Mat] {
        &self.coeff
    }

    pub fn coeff_mut(&mut self) -> &mut [Mat] {
        &mut self.coeff
    }

    pub fn eval(&self, v: &[Rat]) -> Mat {
        assert_eq!(v.len(), self.n, "evaluation point of wrong length");
        let mut out = Mat::zeros(self.rows, self.cols);
        for (x, c) in v.iter().zip(&self.coeff) {
            out.add_scaled(x, c);
        }
        out
    }

    pub fn transpose(&self) -> LinMat {
        LinMat {
            n: self.n,
            rows: self.cols,
            cols: self.rows,
            coeff: self.coeff.iter().map(Mat::transpose).collect(),
        }
    }

    pub fn block_diag(&self, other: &LinMat) -> LinMat {
        assert_eq!(self.n, other.n);
        LinMat {
            n: self.n,
            rows: self.rows + other.rows,
            cols: self.cols + other.cols,
            coeff: self.coeff.iter().zip(&other.coeff).map(|(a, b)| a.block_diag(b)).collect(),
        }
    }

    /// `left * self * right` for constant matrices.
    pub fn sandwich(&self, left: &Mat, right: &Mat) -> LinMat {
        let coeff: Vec<Mat> = self.coeff.iter().map(|c| left.mul(c).mul(right)).collect();
        LinMat { n: self.n, rows: left.rows(), cols: right.cols(), coeff }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.iter().all(Mat::is_zero)
    }

    /// Polynomial product of two linear-form matrices.
    pub fn product(&self, other: &LinMat) -> QuadMat {
        assert_eq!(self.n, other.n);
        assert_eq!(self.cols, other.rows, "linear-form product shape mismatch");
        let mut coeff = HashMap::new();
        for i in 0..self.n {
            for j in i..self.n {
                let mut m = self.coeff[i].mul(&other.coeff[j]);
                if i != j {
                    m = m.add(&self.coeff[j].mul(&other.coeff[i]));
                }
                coeff.insert((i, j), m);
            }
        }
        QuadMat { n: self.n, rows: self.rows, cols: other.cols, coeff }
    }

    /// Human-readable rendering, e.g. `[x1, -x0; 0, x2 + 1/2 x3]`.
    pub fn render(&self) -> String {
        let mut out = String::from("[");
        for r in 0..self.rows {
            if r > 0 {
                out.push_str("; ");
            }
            for c in 0..self.cols {
                if c > 0 {
                    out.push_str(", ");
                }
                let coeffs: Vec<Rat> = self.coeff.iter().map(|m| m[(r, c)].clone()).collect();
                out.push_str(&render_form(&coeffs));
            }
        }
        out.push(']');
        out
    }
}

pub fn render_form(coeffs: &[Rat]) -> String {
    let mut s = String::new();
    for (i, a) in coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let neg = a.is_negative();
        let mag = a.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            let _ = write!(s, "{mag} ");
        }
        let _ = write!(s, "x{i}");
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

impl QuadMat {
    /// `q * Id_size` where `q(x) = Σ gram_ij x_i x_j`.
    pub fn scalar_form(gram: &Mat, size: usize) -> QuadMat {
        let n = gram.rows();
        let mut coeff = HashMap::new();
        for i in 0..n {
            for j in i..n {
                let c = if i == j { gram[(i, i)].clone() } else { &gram[(i, j)] + &gram[(j, i)] };
                coeff.insert((i, j), Mat::scalar(size, &c));
            }
        }
        QuadMat { n, rows: size, cols: size, coeff }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn coefficient(&self, i: usize, j: usize) -> &Mat {
        let key = if i <= j { (i, j) } else { (j, i) };
        &self.coeff[&key]
    }

    /// First monomial `(i, j)` where the two quadratic matrices differ.
    pub fn first_difference(&self, other: &QuadMat) -> Option<(usize, usize)> {
        if self.n != other.n || self.shape() != other.shape() {
            return Some((0, 0));
        }
        (0..self.n)
            .flat_map(|i| (i..self.n).map(move |j| (i, j)))
            .find(|&(i, j)| self.coefficient(i, j) != other.coefficient(i, j))
    }
}

/// Exponent vectors of all degree-`d` monomials in `n` variables, in descending
/// lexicographic order (`x0^d` first).
pub fn monomials(n: usize, d: usize) -> Vec<Vec<u32>> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, d as u32, &mut Vec::new(), &mut out);
    out
}

/// `C(d + n - 1, n - 1)`, the number of degree-`d` monomials in `n` variables.
pub fn monomial_count(n: usize, d: i64) -> usize {
    if d < 0 || n == 0 {
        return usize::from(d == 0 && n == 0);
    }
    let d = d as u128;
    let k = (n - 1) as u128;
    let mut c: u128 = 1;
    for i in 1..=k {
        c = c * (d + i) / i;
    }
    c as usize
}

/// Sparse matrix of the multiplication map `(degree t-1 forms)^cols -> (degree t forms)^rows`
/// given by a matrix of linear forms.
#[derive(Debug, Clone)]
pub struct MonomialMap {
    pub rows: usize,
    pub cols: usize,
    /// One entry list per column (domain basis element): `(row, value)`.
    pub columns: Vec<Vec<(usize, Rat)>>,
}

impl MonomialMap {
    pub fn new(lm: &LinMat, t: i64) -> Result<Self> {
        if t <= 0 {
            return Err(Error::Precondition(format!(
                "monomial multiplication needs target degree t >= 1, got {t}"
            )));
        }
        let t = t as usize;
        let n = lm.n();
        let target = monomials(n, t);
        let source = monomials(n, t - 1);
        let index: HashMap<&[u32], usize> =
            target.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
        let nt = target.len();
        let ns = source.len();
        let mut columns = Vec::with_capacity(lm.cols() * ns);
        let mut shifted = vec![0u32; n];
        for c in 0..lm.cols() {
            for m in &source {
                let mut col: Vec<(usize, Rat)> = Vec::new();
                for (i, coeff) in lm.coeff().iter().enumerate() {
                    shifted.copy_from_slice(m);
                    shifted[i] += 1;
                    let ti = index[shifted.as_slice()];
                    for r in 0..lm.rows() {
                        let a = &coeff[(r, c)];
                        if !a.is_zero() {
                            col.push((r * nt + ti, a.clone()));
                        }
                    }
                }
                columns.push(col);
            }
        }
        Ok(MonomialMap { rows: lm.rows() * nt, cols: lm.cols() * ns, columns })
    }

    pub fn to_mat(&self) -> Mat {
        let mut m = Mat::zeros(self.rows, self.cols);
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                m[(*r, c)] += v;
            }
        }
        m
    }

    /// Rank, computed on the transpose (columns become sparse rows).
    pub fn rank(&self) -> usize {
        let rows = self.columns.iter().map(|col| integer_row(col.iter().cloned())).collect();
        Echelon::new(rows, self.rows).rank()
    }
}

/// Dense form of [`MonomialMap`]; rows are indexed `(matrix row, target monomial)`,
/// columns `(matrix column, source monomial)`, both block-major.
pub fn monomial_multiplication_matrix(lm: &LinMat, t: i64) -> Result<Mat> {
    Ok(MonomialMap::new(lm, t)?.to_mat())
}
