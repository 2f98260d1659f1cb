use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::exactalg::{Mat, Rat, Vector};
use crate::spinor::{standard_probe, MatrixFactorization};

use super::hom::{hom_space, GradedHom};

pub const DEFAULT_SEED: u64 = 0x5eed;
/// Random trials after the deterministic sweeps.
pub const RANDOM_TRIALS: usize = 24;
/// Coefficients of random combinations are drawn from `[-RANGE, RANGE]`.
pub const RANGE: i64 = 7;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IsoVerdict {
    /// `A phi_a = phi_b B` with `det A`, `det B` nonzero.
    Iso { a: Mat, b: Mat, det_a: Rat, det_b: Rat, found_by: String },
    NotIso { reason: String },
    Undecided { reason: String },
}

impl IsoVerdict {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoVerdict::Iso { .. })
    }

    pub fn is_not_iso(&self) -> bool {
        matches!(self, IsoVerdict::NotIso { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            IsoVerdict::Iso { .. } => "ISO",
            IsoVerdict::NotIso { .. } => "NOT_ISO",
            IsoVerdict::Undecided { .. } => "UNDECIDED",
        }
    }
}

fn not_iso(reason: impl Into<String>) -> IsoVerdict {
    IsoVerdict::NotIso { reason: reason.into() }
}

/// Annihilation patterns of probe elements built from either side's `W`. A module
/// isomorphism commutes with the Clifford action, so differing patterns certify
/// non-isomorphism over any field.
fn probe_obstruction(a: &MatrixFactorization, b: &MatrixFactorization) -> Option<String> {
    for meta in [a.meta(), b.meta()].into_iter().flatten() {
        let Ok(probe) = standard_probe(a.space(), &meta.w) else { continue };
        if probe.is_empty() {
            continue;
        }
        let (pa, pb) = (a.annihilation_pattern(&probe), b.annihilation_pattern(&probe));
        if pa != pb {
            return Some(format!(
                "probe of length {} kills (even, odd) = {pa:?} on one side and {pb:?} on the other",
                probe.len()
            ));
        }
    }
    None
}

fn try_pair(hom: &GradedHom, coeffs: &[Rat], label: &str) -> Result<Option<IsoVerdict>> {
    let (a, b) = hom.combination(coeffs);
    let det_a = a.det()?;
    if det_a.is_zero() {
        return Ok(None);
    }
    let det_b = b.det()?;
    if det_b.is_zero() {
        return Ok(None);
    }
    Ok(Some(IsoVerdict::Iso { a, b, det_a, det_b, found_by: label.to_string() }))
}

/// Decide whether two factorizations (graded modules) are isomorphic.
pub fn is_isomorphic(a: &MatrixFactorization, b: &MatrixFactorization, seed: u64) -> Result<IsoVerdict> {
    if a.space() != b.space() {
        return Err(crate::Error::SpaceMismatch);
    }
    if a.size() != b.size() {
        return Ok(not_iso(format!("sizes {} and {} differ", a.size(), b.size())));
    }
    let (ka, kb) = (a.intersection_with_radical(), b.intersection_with_radical());
    if !ka.same_as(&kb) {
        return Ok(not_iso(format!(
            "V ∩ Ann differ (dimensions {} and {})",
            ka.dim(),
            kb.dim()
        )));
    }
    if let Some(reason) = probe_obstruction(a, b) {
        return Ok(not_iso(reason));
    }
    let hom = hom_space(a, b)?;
    if hom.dim() == 0 {
        return Ok(not_iso("Hom(a, b) = 0"));
    }
    if hom_space(b, a)?.dim() == 0 {
        return Ok(not_iso("Hom(b, a) = 0"));
    }
    let d = hom.dim();
    for i in 0..d {
        let mut c = vec![Rat::zero(); d];
        c[i] = Rat::one();
        if let Some(v) = try_pair(&hom, &c, &format!("basis element {i}"))? {
            return Ok(v);
        }
    }
    if d <= 3 {
        for code in 0..3usize.pow(d as u32) {
            let mut c: Vector = Vec::with_capacity(d);
            let mut x = code;
            for _ in 0..d {
                c.push(Rat::from(x as i64 % 3 - 1));
                x /= 3;
            }
            if c.iter().filter(|v| !v.is_zero()).count() < 2 {
                continue;
            }
            if let Some(v) = try_pair(&hom, &c, &format!("sign combination {c:?}"))? {
                return Ok(v);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..RANDOM_TRIALS {
        let c: Vector = (0..d).map(|_| Rat::from(rng.gen_range(-RANGE..=RANGE))).collect();
        if let Some(v) = try_pair(&hom, &c, &format!("random trial {trial} (seed {seed})"))? {
            return Ok(v);
        }
    }
    // det A is a polynomial of degree N in the coefficients; if it were not
    // identically zero, a random point of [-R, R]^d would be a root with
    // probability at most N / (2R + 1) per trial.
    Ok(IsoVerdict::Undecided {
        reason: format!(
            "no invertible pair among {d}-dimensional Hom after {RANDOM_TRIALS} random trials; \
             each trial misses a nonvanishing determinant with probability <= {}/{}",
            a.size(),
            2 * RANGE + 1
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;
    use crate::quadform::{QuadraticSpace, Subspace};
    use crate::spinor::IdealModule;

    fn mf(space: &QuadraticSpace, idx: &[usize]) -> MatrixFactorization {
        IdealModule::build(space, &Subspace::coordinate(space.dim(), idx)).unwrap().factorization()
    }

    #[test]
    fn shift_examples() {
        let h6 = QuadraticSpace::hyperbolic(3, 0).unwrap();
        let s = mf(&h6, &[3]);
        let v = is_isomorphic(&s, &s.shifted(), DEFAULT_SEED).unwrap();
        assert!(v.is_iso(), "{v:?}");
        let s = mf(&h6, &[3, 4, 5]);
        assert!(is_isomorphic(&s, &s.shifted(), DEFAULT_SEED).unwrap().is_not_iso());
        assert!(is_isomorphic(&s, &s, DEFAULT_SEED).unwrap().is_iso());
    }

    #[test]
    fn radical_obstruction() {
        let qs = QuadraticSpace::from_polynomial(4, &[(0, 1, int(1))]).unwrap();
        let a = mf(&qs, &[1, 2]);
        let b = mf(&qs, &[1, 3]);
        let v = is_isomorphic(&a, &b, DEFAULT_SEED).unwrap();
        assert!(matches!(&v, IsoVerdict::NotIso { reason } if reason.contains("Ann")));
        assert!(is_isomorphic(&a, &a.shifted(), DEFAULT_SEED).unwrap().is_not_iso());
    }
}
