use serde::Serialize;

use crate::clifford::{CliffordAlgebra, CliffordElement, Parity};
use crate::error::{Error, Result};
use crate::exactalg::{Mat, Rat, Vector};
use crate::homalg::hom_space;
use crate::quadform::{QuadraticSpace, Subspace};

use super::ideal::IdealModule;

/// `0 -> I -> I' --(. w)--> I[1] -> 0` for `W = W' + span(w)`.
#[derive(Debug, Clone)]
pub struct FlagSequence {
    /// The ideal of `W`.
    pub inner: IdealModule,
    /// The ideal of `W'`.
    pub outer: IdealModule,
    pub connecting_vector: Vector,
    /// Inclusion `I -> I'`, even and odd slots.
    pub inclusion: [Mat; 2],
    /// Right multiplication by `w`, `I' -> I[1]`, even and odd slots.
    pub quotient: [Mat; 2],
    pub verdict: FlagVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlagVerdict {
    pub inclusion_injective: bool,
    pub quotient_surjective: bool,
    pub composition_zero: bool,
    pub exact: bool,
    /// `W ∩ K = W' ∩ K`
    pub split_by_radical: bool,
    /// A Clifford-linear section of `I' -> I[1]` exists.
    pub split_by_module: bool,
    pub section_search_dim: usize,
}

impl FlagVerdict {
    pub fn agree(&self) -> bool {
        self.split_by_radical == self.split_by_module
    }
}

/// Build and verify the flag sequence for `W'` and `w ∉ W'`.
pub fn flag_sequence(space: &QuadraticSpace, w_prime: &Subspace, w: &[Rat]) -> Result<FlagSequence> {
    if w.len() != space.dim() || w_prime.ambient() != space.dim() {
        return Err(Error::Dimension("flag data in a different ambient space".into()));
    }
    if w_prime.contains(w) {
        return Err(Error::InvalidFlag("connecting vector lies in W'".into()));
    }
    let mut basis = w_prime.basis().to_vec();
    basis.push(w.to_vec());
    let w_full = Subspace::new(space.dim(), basis)?;
    space.require_isotropic(&w_full)?;
    let alg = CliffordAlgebra::new(space.clone())?;
    let inner = IdealModule::new(&alg, &w_full)?;
    let outer = IdealModule::with_generator_of(&alg, w_prime)?;
    let wel = CliffordElement::vector(&alg, w);

    let slots = [Parity::Even, Parity::Odd];
    let inclusion = slots.map(|p| inner.map_matrix(p, &outer, p, |x| Ok(x.clone())));
    let quotient = slots.map(|p| outer.map_matrix(p, &inner, p.flip(), |x| x.mul(&wel)));
    let [inc_ev, inc_odd] = inclusion;
    let [quo_ev, quo_odd] = quotient;
    let inclusion = [inc_ev?, inc_odd?];
    let quotient = [quo_ev?, quo_odd?];

    let n = inner.size();
    let inclusion_injective = inclusion.iter().all(|m| m.rank() == n);
    let quotient_surjective = quotient.iter().all(|m| m.rank() == n);
    let composition_zero = (0..2).all(|i| quotient[i].mul(&inclusion[i]).is_zero());
    let exact = inclusion_injective && quotient_surjective && composition_zero && outer.size() == 2 * n;

    let k = space.radical();
    let split_by_radical = w_full.intersect(&k).same_as(&w_prime.intersect(&k));

    // Σ c_i (R_ev B_i, R_odd A_i) = (Id, Id) over Hom(I[1], I')
    let hom = hom_space(&inner.shift().factorization(), &outer.factorization())?;
    let section_search_dim = hom.dim();
    let split_by_module = if hom.dim() == 0 {
        false
    } else {
        let flat = |m: &Mat| m.entries().to_vec();
        let cols: Vec<Vector> = hom
            .basis()
            .iter()
            .map(|(a, b)| {
                let mut col = flat(&quotient[0].mul(b));
                col.extend(flat(&quotient[1].mul(a)));
                col
            })
            .collect();
        let mut target = flat(&Mat::identity(n));
        target.extend(flat(&Mat::identity(n)));
        Mat::from_columns(target.len(), &cols).solve(&target)?.is_some()
    };

    Ok(FlagSequence {
        inner,
        outer,
        connecting_vector: w.to_vec(),
        inclusion,
        quotient,
        verdict: FlagVerdict {
            inclusion_injective,
            quotient_surjective,
            composition_zero,
            exact,
            split_by_radical,
            split_by_module,
            section_search_dim,
        },
    })
}

/// The flag obtained by dropping `w` from `W`: `W'` is spanned by `W`'s basis
/// vectors completing `w` to a basis of `W`, excluding `w` itself.
pub fn drop_vector(w: &Subspace, drop: &[Rat]) -> Result<Subspace> {
    if !w.contains(drop) {
        return Err(Error::InvalidFlag("dropped vector is not in W".into()));
    }
    let start = Subspace::new(w.ambient(), vec![drop.to_vec()]).map_err(|_| Error::ZeroVector)?;
    let rest = start.complement_from(w.basis());
    Subspace::new(w.ambient(), rest)
}
