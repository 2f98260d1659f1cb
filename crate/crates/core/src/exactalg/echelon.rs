//! Fraction-free row echelon form over the integers.
//!
//! Rational rows are scaled to primitive integer rows. Elimination
//! combines two rows by the cross-multiplication `p*r - a*pivot` (with the
//! common factor of `p` and `a` removed first) and then divides the result by
//! its content, so entries stay as small as the row space allows. Rows are
//! bucketed by leading column, which keeps the work proportional to the
//! actual fill instead of the dense size.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::Rat;

/// Sparse integer row: strictly increasing column indices, nonzero entries.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Scale a sparse rational row to a primitive integer row with positive lead.
pub fn integer_row(entries: impl IntoIterator<Item = (usize, Rat)>) -> SparseRow {
    let mut items: Vec<(usize, Rat)> = entries.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    items.sort_by_key(|(c, _)| *c);
    let mut lcm = BigInt::one();
    for (_, v) in &items {
        lcm = lcm.lcm(v.denom());
    }
    let row: SparseRow = items
        .into_iter()
        .map(|(c, v)| (c, v.numer() * (&lcm / v.denom())))
        .collect();
    normalize(row)
}

fn normalize(mut row: SparseRow) -> SparseRow {
    if row.is_empty() {
        return row;
    }
    let mut g = BigInt::zero();
    for (_, v) in &row {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if row[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
    row
}

/// `r <- (p/g)*r - (a/g)*pivot` where `p`, `a` are the leads; eliminates the lead of `r`.
fn eliminate(r: &SparseRow, pivot: &SparseRow) -> SparseRow {
    let p = &pivot[0].1;
    let a = &r[0].1;
    let g = p.gcd(a);
    let pf = p / &g;
    let af = a / &g;
    let mut out = Vec::with_capacity(r.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < r.len() || j < pivot.len() {
        let ci = r.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = pivot.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ci < cj {
            out.push((ci, &pf * &r[i].1));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(&af * &pivot[j].1)));
            j += 1;
        } else {
            let v = &pf * &r[i].1 - &af * &pivot[j].1;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    normalize(out)
}

/// Row echelon form: pivot rows sorted by strictly increasing lead column.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub ncols: usize,
    pub rows: Vec<SparseRow>,
}

impl Echelon {
    pub fn new(rows: Vec<SparseRow>, ncols: usize) -> Self {
        let mut buckets: Vec<Vec<SparseRow>> = vec![Vec::new(); ncols];
        for row in rows {
            if let Some(&(c, _)) = row.first() {
                assert!(c < ncols, "column index out of range");
                buckets[c].push(row);
            }
        }
        let mut pivots = Vec::new();
        for c in 0..ncols {
            let bucket = std::mem::take(&mut buckets[c]);
            if bucket.is_empty() {
                continue;
            }
            // shortest row as pivot, first one on ties
            let best = bucket
                .iter()
                .enumerate()
                .min_by_key(|(i, r)| (r.len(), *i))
                .map(|(i, _)| i)
                .unwrap();
            let mut bucket = bucket;
            let pivot = bucket.swap_remove(best);
            for r in bucket {
                let reduced = eliminate(&r, &pivot);
                if let Some(&(lead, _)) = reduced.first() {
                    buckets[lead].push(reduced);
                }
            }
            pivots.push(pivot);
        }
        Echelon { ncols, rows: pivots }
    }

    pub fn from_rat_rows<'a>(rows: impl IntoIterator<Item = &'a [Rat]>, ncols: usize) -> Self {
        let sparse = rows
            .into_iter()
            .map(|r| integer_row(r.iter().cloned().enumerate()))
            .collect();
        Echelon::new(sparse, ncols)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_cols(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    /// Solve the echelon system for the pivot variables, given values of the free
    /// variables and a right-hand side per pivot row.
    fn back_substitute(&self, x: &mut [Rat], rhs: &[Rat]) {
        for (k, row) in self.rows.iter().enumerate().rev() {
            let (c, lead) = &row[0];
            let mut acc = rhs[k].clone();
            for (j, v) in &row[1..] {
                if !x[*j].is_zero() {
                    acc -= Rat::from(v.clone()) * &x[*j];
                }
            }
            x[*c] = acc / Rat::from(lead.clone());
        }
    }

    /// Kernel basis in reduced normal form: one vector per free column, with a 1 in
    /// that column and 0 in every other free column.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let pivots = self.pivot_cols();
        let mut is_pivot = vec![false; self.ncols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let zeros = vec![Rat::zero(); self.rows.len()];
        (0..self.ncols)
            .filter(|c| !is_pivot[*c])
            .map(|f| {
                let mut x = vec![Rat::zero(); self.ncols];
                x[f] = Rat::one();
                self.back_substitute(&mut x, &zeros);
                x
            })
            .collect()
    }

    /// Fully reduced row basis (pivot entries 1, zeros above and below each pivot).
    pub fn rref_rows(&self) -> Vec<Vec<Rat>> {
        let pivots = self.pivot_cols();
        let mut reduced: Vec<Vec<Rat>> = self
            .rows
            .iter()
            .map(|r| {
                let mut dense = vec![Rat::zero(); self.ncols];
                for (c, v) in r {
                    dense[*c] = Rat::from(v.clone());
                }
                dense
            })
            .collect();
        for k in (0..reduced.len()).rev() {
            let c = pivots[k];
            let lead = reduced[k][c].clone();
            for v in reduced[k].iter_mut() {
                if !v.is_zero() {
                    *v = &*v / &lead;
                }
            }
            let pivot_row = reduced[k].clone();
            for row in reduced.iter_mut().take(k) {
                let f = row[c].clone();
                if f.is_zero() {
                    continue;
                }
                for (dst, src) in row.iter_mut().zip(&pivot_row) {
                    if !src.is_zero() {
                        *dst -= &f * src;
                    }
                }
            }
        }
        reduced
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat::{int, rat};

    #[test]
    fn integer_row_clears_denominators() {
        let r = integer_row(vec![(0, rat(-1, 2)), (3, rat(1, 3)), (1, int(0))]);
        assert_eq!(r, vec![(0, BigInt::from(3)), (3, BigInt::from(-2))]);
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = [vec![int(1), int(2)], vec![int(2), int(4)]];
        let e = Echelon::from_rat_rows(rows.iter().map(|r| r.as_slice()), 2);
        assert_eq!(e.rank(), 1);
        assert_eq!(e.kernel(), vec![vec![int(-2), int(1)]]);
    }

    #[test]
    fn rref_is_reduced() {
        let rows = [
            vec![int(2), int(4), int(1)],
            vec![int(1), int(2), int(3)],
            vec![int(0), int(0), int(5)],
        ];
        let e = Echelon::from_rat_rows(rows.iter().map(|r| r.as_slice()), 3);
        assert_eq!(e.rref_rows(), vec![vec![int(1), int(2), int(0)], vec![int(0), int(0), int(1)]]);
    }
}
