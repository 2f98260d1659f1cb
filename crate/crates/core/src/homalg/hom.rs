use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{integer_row, Echelon, LinMat, Mat, Rat, SparseRow};
use crate::spinor::MatrixFactorization;

/// Basis of `Hom(a, b)`: pairs `(A, B)` with `A` on the odd slots and `B` on the
/// even slots, such that `A phi_a(v) = phi_b(v) B` for every `v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedHom {
    source_size: usize,
    target_size: usize,
    basis: Vec<(Mat, Mat)>,
}

impl GradedHom {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[(Mat, Mat)] {
        &self.basis
    }

    pub fn source_size(&self) -> usize {
        self.source_size
    }

    pub fn target_size(&self) -> usize {
        self.target_size
    }

    /// `Σ c_i (A_i, B_i)`
    pub fn combination(&self, coeffs: &[Rat]) -> (Mat, Mat) {
        let mut a = Mat::zeros(self.target_size, self.source_size);
        let mut b = Mat::zeros(self.target_size, self.source_size);
        for (c, (ai, bi)) in coeffs.iter().zip(&self.basis) {
            a.add_scaled(c, ai);
            b.add_scaled(c, bi);
        }
        (a, b)
    }
}

fn sparse_coeffs(lm: &LinMat) -> Vec<Vec<(usize, usize, Rat)>> {
    lm.coeff()
        .iter()
        .map(|m| {
            let mut out = Vec::new();
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    if !m[(r, c)].is_zero() {
                        out.push((r, c, m[(r, c)].clone()));
                    }
                }
            }
            out
        })
        .collect()
}

/// Rows of `X M_src(e_j) - M_tgt(e_j) Y = 0` for all `j`, where `X` and `Y` are
/// `t x s` unknown blocks at the given offsets.
fn intertwining_rows(
    src: &LinMat,
    tgt: &LinMat,
    s: usize,
    t: usize,
    x_off: usize,
    y_off: usize,
    rows: &mut Vec<SparseRow>,
) {
    let src_sparse = sparse_coeffs(src);
    let tgt_sparse = sparse_coeffs(tgt);
    for (ms, mt) in src_sparse.iter().zip(&tgt_sparse) {
        // equation (r, c): Σ_k X[r][k] Ms[k][c] - Σ_k Mt[r][k] Y[k][c]
        let mut eqs: std::collections::BTreeMap<(usize, usize), Vec<(usize, Rat)>> = Default::default();
        for (k, c, val) in ms {
            for r in 0..t {
                eqs.entry((r, *c)).or_default().push((x_off + r * s + k, val.clone()));
            }
        }
        for (r, k, val) in mt {
            for c in 0..s {
                eqs.entry((*r, c)).or_default().push((y_off + k * s + c, -val));
            }
        }
        for (_, entries) in eqs {
            let row = integer_row(entries);
            if !row.is_empty() {
                rows.push(row);
            }
        }
    }
}

fn check_pair(a: &MatrixFactorization, b: &MatrixFactorization) -> Result<()> {
    if a.space() != b.space() {
        return Err(Error::SpaceMismatch);
    }
    Ok(())
}

fn kernel_to_pairs(kernel: Vec<Vec<Rat>>, s: usize, t: usize) -> Vec<(Mat, Mat)> {
    let block = s * t;
    kernel
        .into_iter()
        .map(|v| {
            let a = Mat::from_vec(t, s, v[..block].to_vec()).expect("block size");
            let b = Mat::from_vec(t, s, v[block..].to_vec()).expect("block size");
            (a, b)
        })
        .collect()
}

/// Solve `A phi_a = phi_b B` over all coefficient matrices.
pub fn hom_space(a: &MatrixFactorization, b: &MatrixFactorization) -> Result<GradedHom> {
    check_pair(a, b)?;
    let (s, t) = (a.size(), b.size());
    let mut rows = Vec::new();
    intertwining_rows(a.phi(), b.phi(), s, t, 0, s * t, &mut rows);
    let kernel = Echelon::new(rows, 2 * s * t).kernel();
    Ok(GradedHom { source_size: s, target_size: t, basis: kernel_to_pairs(kernel, s, t) })
}

/// Dimension of graded module maps, using both `phi` and `psi` equations
/// (`f_odd(v xi) = v f_ev(xi)` and `f_ev(v eta) = v f_odd(eta)`).
pub fn module_hom_dim(a: &MatrixFactorization, b: &MatrixFactorization) -> Result<usize> {
    check_pair(a, b)?;
    let (s, t) = (a.size(), b.size());
    let mut rows = Vec::new();
    intertwining_rows(a.phi(), b.phi(), s, t, 0, s * t, &mut rows);
    intertwining_rows(a.psi(), b.psi(), s, t, s * t, 0, &mut rows);
    let e = Echelon::new(rows, 2 * s * t);
    Ok(2 * s * t - e.rank())
}

/// `psi_b(v) A = B psi_a(v)` for every basis pair.
pub fn companion_identity_holds(a: &MatrixFactorization, b: &MatrixFactorization, hom: &GradedHom) -> bool {
    hom.basis().iter().all(|(ma, mb)| {
        b.psi()
            .coeff()
            .iter()
            .zip(a.psi().coeff())
            .all(|(pb, pa)| pb.mul(ma) == mb.mul(pa))
    })
}

/// `B` is determined by `A`: the stacked `phi_b(e_j)` have full column rank.
pub fn b_is_unique(b: &MatrixFactorization) -> bool {
    let stacked = b
        .phi()
        .coeff()
        .iter()
        .skip(1)
        .fold(b.phi().coeff()[0].clone(), |acc, m| acc.vstack(m));
    stacked.rank() == b.size()
}
