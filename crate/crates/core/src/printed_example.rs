//! The explicit 4x4 factorization of `x0 x3 + x1 x4 + x2 x5` and a certificate that
//! the ideal construction reproduces it up to equivalence.

use serde::Serialize;

use crate::error::Result;
use crate::exactalg::{int, LinMat, Mat, Rat};
use crate::homalg::{is_isomorphic, IsoVerdict};
use crate::quadform::{QuadraticSpace, Subspace};
use crate::spinor::{IdealModule, MatrixFactorization};

fn form(terms: &[(usize, i64)]) -> Vec<i64> {
    let mut v = vec![0; 6];
    for &(i, c) in terms {
        v[i] = c;
    }
    v
}

/// The two printed matrices of linear forms in `x0, ..., x5`.
pub fn printed_matrices() -> (LinMat, LinMat) {
    let z = || form(&[]);
    let x = |i: usize| form(&[(i, 1)]);
    let nx = |i: usize| form(&[(i, -1)]);
    let m1 = vec![
        vec![x(3), x(4), x(5), z()],
        vec![nx(1), x(0), z(), x(5)],
        vec![nx(2), z(), x(0), nx(4)],
        vec![z(), nx(2), x(1), x(3)],
    ];
    let m2 = vec![
        vec![x(0), nx(4), nx(5), z()],
        vec![x(1), x(3), z(), nx(5)],
        vec![x(2), z(), x(3), x(4)],
        vec![z(), x(2), nx(1), x(0)],
    ];
    (
        LinMat::from_entries(6, &m1).expect("4x4 forms"),
        LinMat::from_entries(6, &m2).expect("4x4 forms"),
    )
}

pub fn printed_space() -> QuadraticSpace {
    QuadraticSpace::from_polynomial(6, &[(0, 3, int(1)), (1, 4, int(1)), (2, 5, int(1))]).expect("form")
}

#[derive(Debug, Clone, Serialize)]
pub struct ExampleCertificate {
    /// `M1 M2 = M2 M1 = q Id`.
    pub identity_holds: bool,
    pub equivalent: bool,
    /// The printed pair matched `(psi, phi)` rather than `(phi, psi)`.
    pub roles_swapped: bool,
    /// `A phi = M B` with `M` the printed matrix playing the role of `phi`.
    pub a: Option<Mat>,
    pub b: Option<Mat>,
    pub det_a: Option<Rat>,
    pub det_b: Option<Rat>,
    pub constructed_phi: String,
    pub constructed_psi: String,
    pub detail: String,
}

/// Compare the ideal factorization of `W = span(e3, e4, e5)` with `(m1, m2)`.
pub fn certify(m1: &LinMat, m2: &LinMat, seed: u64) -> Result<ExampleCertificate> {
    let space = printed_space();
    let ours = IdealModule::build(&space, &Subspace::coordinate(6, &[3, 4, 5]))?.factorization();
    let mut cert = ExampleCertificate {
        identity_holds: false,
        equivalent: false,
        roles_swapped: false,
        a: None,
        b: None,
        det_a: None,
        det_b: None,
        constructed_phi: ours.phi().render(),
        constructed_psi: ours.psi().render(),
        detail: String::new(),
    };
    let printed = MatrixFactorization::new(space, m1.clone(), m2.clone())?;
    if let Some((which, i, j)) = printed.identity_defect() {
        cert.detail = format!("printed pair is not a factorization: {which} differs from q Id at x{i} x{j}");
        return Ok(cert);
    }
    cert.identity_holds = true;
    for (target, swapped) in [(printed.clone(), false), (printed.shifted(), true)] {
        match is_isomorphic(&ours, &target, seed)? {
            IsoVerdict::Iso { a, b, det_a, det_b, found_by } => {
                cert.equivalent = true;
                cert.roles_swapped = swapped;
                cert.a = Some(a);
                cert.b = Some(b);
                cert.det_a = Some(det_a);
                cert.det_b = Some(det_b);
                cert.detail = format!("invertible pair found by {found_by}");
                return Ok(cert);
            }
            other => {
                if !cert.detail.is_empty() {
                    cert.detail.push_str("; ");
                }
                cert.detail.push_str(&format!("{}: {other:?}", if swapped { "swapped" } else { "direct" }));
            }
        }
    }
    Ok(cert)
}
