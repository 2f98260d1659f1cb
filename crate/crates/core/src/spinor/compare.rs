//! Explicit module maps comparing ideals: restriction to a subspace, pullback
//! along a cone projection, and the action of group elements.

use std::sync::Arc;

use serde::Serialize;

use crate::clifford::{conjugate_subspace, CliffordAlgebra, CliffordElement, GroupElement, Parity};
use crate::error::{Error, Result};
use crate::exactalg::{unit_vector, vec_scale, Mat, Rat, Vector};
use crate::quadform::{QuadraticSpace, Subspace};

use super::ideal::IdealModule;

/// Result of checking that an explicit map `source -> target` is a graded module
/// isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapCheck {
    pub bijective: bool,
    pub commutes: bool,
}

impl MapCheck {
    pub fn holds(&self) -> bool {
        self.bijective && self.commutes
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RestrictionKind {
    /// `S' ≅ S|Q'`
    MatchesS,
    /// `S' ≅ T|Q'`
    MatchesT,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictionVerdict {
    pub codim_u: usize,
    pub dim_w_cap_u: usize,
    /// `W ∩ U = 0`: the restricted module is the free module `Cl(U)`.
    pub reduces_to_free: bool,
    pub kind: RestrictionKind,
    pub map: MapCheck,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConeVerdict {
    pub dim_u: usize,
    /// `p^* S' ≅ S` off the vertex when `dim U` is even, `≅ T` when odd.
    pub kind: RestrictionKind,
    pub map: MapCheck,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivarianceVerdict {
    pub factors: usize,
    pub odd: bool,
    /// Right multiplication by `g^{-1}` is a module isomorphism `I -> I'` (or `I'[1]`).
    pub right_multiplication: MapCheck,
    /// Left multiplication by `g` intertwines `phi(v)` with `phi(g v g^{-1})`.
    pub left_multiplication: MapCheck,
    /// Conjugation `xi -> g xi g^{-1}` intertwines `phi(v)` with `phi'(g v g^{-1})`.
    pub conjugation: MapCheck,
}

impl EquivarianceVerdict {
    pub fn holds(&self) -> bool {
        self.right_multiplication.holds() && self.left_multiplication.holds() && self.conjugation.holds()
    }
}

fn square_invertible(maps: &[Mat; 2], size: usize) -> bool {
    maps.iter().all(|m| m.is_square() && m.rows() == size && m.rank() == size)
}

fn build_maps(
    source: &IdealModule,
    target: &IdealModule,
    f: impl Fn(&CliffordElement) -> Result<CliffordElement>,
) -> Result<[Mat; 2]> {
    Ok([
        source.map_matrix(Parity::Even, target, Parity::Even, &f)?,
        source.map_matrix(Parity::Odd, target, Parity::Odd, &f)?,
    ])
}

/// Checks `L_target(v_target) F = F L_source(v_source)` on both slots for each pair.
fn intertwines(
    source: &IdealModule,
    target: &IdealModule,
    maps: &[Mat; 2],
    pairs: &[(Vector, Vector)],
) -> Result<bool> {
    for (vs, vt) in pairs {
        for (k, slot) in [Parity::Even, Parity::Odd].into_iter().enumerate() {
            let lhs = target.action_matrix(vt, slot)?.mul(&maps[k]);
            let rhs = maps[1 - k].mul(&source.action_matrix(vs, slot)?);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Image of a Clifford element under the algebra map induced by a linear map
/// sending basis vector `i` to `images[i]` (which must preserve the forms).
fn push_forward(x: &CliffordElement, target: &Arc<CliffordAlgebra>, images: &[Vector]) -> CliffordElement {
    let mut out = CliffordElement::zero(target);
    for (mask, c) in x.terms() {
        let factors: Vec<Vector> =
            (0..images.len()).filter(|i| mask & (1 << i) != 0).map(|i| images[i].clone()).collect();
        let term = CliffordElement::product_of_vectors(target, &factors).scale(c);
        out = out.add(&term).expect("same algebra");
    }
    out
}

/// Compare `I` over `V` with the ideal `I'` of `W ∩ U` over `(U, q|U)` through
/// `xi' -> xi' * w_{l+1} ... w_m`, which should be an isomorphism `I' -> I[codim U]`
/// of `Cl(U)`-modules.
pub fn restrict_compare(module: &IdealModule, u: &Subspace) -> Result<RestrictionVerdict> {
    let space = module.space();
    let n = space.dim();
    let w = module.w();
    if u.ambient() != n {
        return Err(Error::Dimension("U in a different ambient space".into()));
    }
    if u.sum(w).dim() != n {
        return Err(Error::NotTransverse(format!("dim(U + W) = {} < {n}", u.sum(w).dim())));
    }
    let wu = w.intersect(u);
    let tail = wu.complement_from(w.basis());
    let codim = n - u.dim();
    debug_assert_eq!(tail.len(), codim);

    let restricted = QuadraticSpace::with_any_rank(space.restrict(u).gram().clone())?;
    let alg_u = CliffordAlgebra::new(restricted)?;
    let wu_coords: Vec<Vector> = wu
        .basis()
        .iter()
        .map(|v| u.coordinates(v).expect("W ∩ U lies in U"))
        .collect();
    let small = IdealModule::with_generator_of(&alg_u, &Subspace::new(u.dim(), wu_coords)?)?;

    let alg = module.algebra();
    let tail_el = CliffordElement::product_of_vectors(alg, &tail);
    let target = module.shifted_by(codim);
    let maps = build_maps(&small, &target, |x| push_forward(x, alg, u.basis()).mul(&tail_el))?;
    let bijective = small.size() == target.size() && square_invertible(&maps, target.size());
    let pairs: Vec<(Vector, Vector)> =
        (0..u.dim()).map(|j| (unit_vector(u.dim(), j), u.basis()[j].clone())).collect();
    let commutes = intertwines(&small, &target, &maps, &pairs)?;
    Ok(RestrictionVerdict {
        codim_u: codim,
        dim_w_cap_u: wu.dim(),
        reduces_to_free: wu.is_zero(),
        kind: if codim % 2 == 0 { RestrictionKind::MatchesS } else { RestrictionKind::MatchesT },
        map: MapCheck { bijective, commutes },
    })
}

/// Compare `I` over `V` with the ideal `I'` of `pi(W)` over `V/U` (a `Cl(V)`-module
/// through `Cl(V) -> Cl(V/U)`) through `xi' -> s(xi') u_1 ... u_d`, which should be an
/// isomorphism `I' -> I[dim U]`.
pub fn cone_compare(module: &IdealModule, u: &Subspace) -> Result<ConeVerdict> {
    let space = module.space();
    let w = module.w();
    let wk = w.intersect(&space.radical());
    if !wk.contains_subspace(u) {
        return Err(Error::Precondition("U is not contained in W ∩ K".into()));
    }
    let quotient = space.quotient(u)?;
    let alg_bar = CliffordAlgebra::new(quotient.space.clone())?;
    let w_bar = quotient.project_subspace(w);
    let small = IdealModule::with_generator_of(&alg_bar, &w_bar)?;

    let alg = module.algebra();
    let d = u.dim();
    let u_el = CliffordElement::product_of_vectors(alg, u.basis());
    let target = module.shifted_by(d);
    let section = quotient.section.columns();
    let maps = build_maps(&small, &target, |x| push_forward(x, alg, &section).mul(&u_el))?;
    let bijective = small.size() == target.size() && square_invertible(&maps, target.size());
    let pairs: Vec<(Vector, Vector)> = (0..space.dim())
        .map(|j| {
            let e = unit_vector(space.dim(), j);
            (quotient.project(&e), e)
        })
        .collect();
    let commutes = intertwines(&small, &target, &maps, &pairs)?;
    Ok(ConeVerdict {
        dim_u: d,
        kind: if d % 2 == 0 { RestrictionKind::MatchesS } else { RestrictionKind::MatchesT },
        map: MapCheck { bijective, commutes },
    })
}

/// Verify that `g` carries `I` (for `W`) to the ideal `I'` of `g W g^{-1}`, shifted
/// when `g` has an odd number of factors.
pub fn equivariance_check(module: &IdealModule, g: &GroupElement) -> Result<EquivarianceVerdict> {
    let alg = module.algebra();
    let n = alg.n();
    let k = g.factors().len();
    let sign = if k % 2 == 0 { Rat::one() } else { Rat::from(-1) };
    let w_image = conjugate_subspace(g, module.w())?;
    let image = IdealModule::new(alg, &w_image)?;
    let image = if module.is_shifted() { image.shift() } else { image };
    let g_el = g.as_element().clone();
    let g_inv = g.inverse();
    let basis: Vec<Vector> = (0..n).map(|j| unit_vector(n, j)).collect();
    // g v g^{-1} = (-1)^k g.v
    let conj: Vec<Vector> =
        basis.iter().map(|v| Ok(vec_scale(&g.act(v)?, &sign))).collect::<Result<_>>()?;

    let check = |source: &IdealModule,
                 target: &IdealModule,
                 f: &dyn Fn(&CliffordElement) -> Result<CliffordElement>,
                 pairs: &[(Vector, Vector)]|
     -> Result<MapCheck> {
        let maps = build_maps(source, target, f)?;
        let bijective = square_invertible(&maps, target.size());
        Ok(MapCheck { bijective, commutes: intertwines(source, target, &maps, pairs)? })
    };

    let same: Vec<(Vector, Vector)> = basis.iter().map(|v| (v.clone(), v.clone())).collect();
    let moved: Vec<(Vector, Vector)> = basis.iter().cloned().zip(conj.iter().cloned()).collect();

    let right = check(module, &image.shifted_by(k), &|x| x.mul(&g_inv), &same)?;
    let left = check(module, &module.shifted_by(k), &|x| g_el.mul(x), &moved)?;
    let conjugation = check(module, &image, &|x| g_el.mul(x)?.mul(&g_inv), &moved)?;
    Ok(EquivarianceVerdict {
        factors: k,
        odd: k % 2 == 1,
        right_multiplication: right,
        left_multiplication: left,
        conjugation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, vec_add};

    fn h6_module() -> IdealModule {
        let h6 = QuadraticSpace::hyperbolic(3, 0).unwrap();
        IdealModule::build(&h6, &Subspace::coordinate(6, &[3, 4, 5])).unwrap()
    }

    #[test]
    fn hyperplane_restriction() {
        let i = h6_module();
        let v = restrict_compare(&i, &Subspace::coordinate(6, &[0, 1, 2, 3, 4])).unwrap();
        assert!(v.map.holds());
        assert_eq!((v.codim_u, v.kind.clone()), (1, RestrictionKind::MatchesT));
        let v = restrict_compare(&i, &Subspace::full(6)).unwrap();
        assert!(v.map.holds() && v.kind == RestrictionKind::MatchesS);
        let v = restrict_compare(&i, &Subspace::coordinate(6, &[0, 1, 2])).unwrap();
        assert!(v.map.holds() && v.reduces_to_free && v.codim_u == 3);
        assert!(matches!(
            restrict_compare(&i, &Subspace::coordinate(6, &[0, 1, 3, 4])),
            Err(Error::NotTransverse(_))
        ));
    }

    #[test]
    fn cone_comparison() {
        let c5 = QuadraticSpace::from_polynomial(5, &[(0, 2, int(1)), (1, 3, int(1))]).unwrap();
        let i = IdealModule::build(&c5, &Subspace::coordinate(5, &[2, 4])).unwrap();
        let v = cone_compare(&i, &Subspace::coordinate(5, &[4])).unwrap();
        assert!(v.map.holds());
        assert_eq!(v.kind, RestrictionKind::MatchesT);
        let v = cone_compare(&i, &Subspace::zero(5)).unwrap();
        assert!(v.map.holds() && v.kind == RestrictionKind::MatchesS);
        assert!(cone_compare(&i, &Subspace::coordinate(5, &[2])).is_err());
    }

    #[test]
    fn group_action() {
        let i = h6_module();
        let alg = i.algebra().clone();
        let u1 = vec_add(&unit_vector(6, 0), &unit_vector(6, 3));
        let u2 = vec_add(&unit_vector(6, 1), &unit_vector(6, 4));
        for factors in [vec![], vec![u1.clone(), u2], vec![u1]] {
            let g = GroupElement::new(&alg, factors).unwrap();
            let v = equivariance_check(&i, &g).unwrap();
            assert!(v.holds(), "{v:?}");
        }
    }
}
