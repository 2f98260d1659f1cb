use serde::Serialize;

use crate::clifford::{CliffordElement, Parity};
use crate::error::{Error, Result};
use crate::exactalg::{is_zero_vector, unit_vector, Mat, Rat, Vector};
use crate::spinor::{IdealModule, MatrixFactorization};

use super::hom::hom_space;

/// Incrementally maintained reduced basis of a subspace of `Q^n`.
#[derive(Debug, Clone, Default)]
struct ReducedSpan {
    rows: Vec<(usize, Vector)>,
}

impl ReducedSpan {
    fn reduce(&self, v: &[Rat]) -> Vector {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        v
    }

    /// Add `v`; returns the reduced new row when `v` was outside the span.
    fn insert(&mut self, v: &[Rat]) -> Option<Vector> {
        let mut r = self.reduce(v);
        let p = r.iter().position(|x| !x.is_zero())?;
        let inv = r[p].recip();
        for x in r.iter_mut() {
            *x *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        self.rows.push((p, r.clone()));
        Some(r)
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    fn basis(&self) -> Vec<Vector> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }
}

/// Smallest graded submodule containing the homogeneous parts of a seed.
#[derive(Debug, Clone, Serialize)]
pub struct Closure {
    pub ev_dim: usize,
    pub odd_dim: usize,
    /// Bases in slot coordinates.
    pub ev_basis: Vec<Vector>,
    pub odd_basis: Vec<Vector>,
    pub module_size: usize,
}

impl Closure {
    pub fn dim(&self) -> usize {
        self.ev_dim + self.odd_dim
    }

    pub fn is_proper(&self) -> bool {
        self.dim() > 0 && self.dim() < 2 * self.module_size
    }

    pub fn is_everything(&self) -> bool {
        self.dim() == 2 * self.module_size
    }
}

/// Closure of `(ev, odd)` coordinate vectors under the Clifford action of a factorization.
pub fn closure_of_coordinates(mf: &MatrixFactorization, ev: &[Rat], odd: &[Rat]) -> Closure {
    let n = mf.n();
    let phi: Vec<Mat> = mf.phi().coeff().to_vec();
    let psi: Vec<Mat> = mf.psi().coeff().to_vec();
    let mut spans = [ReducedSpan::default(), ReducedSpan::default()];
    let mut queue: Vec<(usize, Vector)> = Vec::new();
    for (slot, v) in [(0, ev), (1, odd)] {
        if let Some(r) = spans[slot].insert(v) {
            queue.push((slot, r));
        }
    }
    while let Some((slot, v)) = queue.pop() {
        let maps = if slot == 0 { &phi } else { &psi };
        for m in maps.iter().take(n) {
            let image = m.mul_vec(&v);
            if is_zero_vector(&image) {
                continue;
            }
            if let Some(r) = spans[1 - slot].insert(&image) {
                queue.push((1 - slot, r));
            }
        }
    }
    Closure {
        ev_dim: spans[0].dim(),
        odd_dim: spans[1].dim(),
        ev_basis: spans[0].basis(),
        odd_basis: spans[1].basis(),
        module_size: mf.size(),
    }
}

/// Closure of a seed element of `I` under left multiplication by all of `V`.
pub fn submodule_closure(module: &IdealModule, seed: &CliffordElement) -> Result<Closure> {
    let (ev, odd) = seed.grade_parts();
    let coords = |x: &CliffordElement| -> Result<Vector> {
        // the slot holding this parity
        let slot = if module.is_shifted() {
            x.parity().map(Parity::flip)
        } else {
            x.parity()
        };
        match slot {
            None => Ok(vec![Rat::zero(); module.size()]),
            Some(s) => module
                .coordinates(s, x)
                .ok_or_else(|| Error::NotInSpan(format!("seed component {x} is not in I"))),
        }
    };
    let (ce, co) = (coords(&ev)?, coords(&odd)?);
    let (se, so) = if module.is_shifted() { (co, ce) } else { (ce, co) };
    Ok(closure_of_coordinates(&module.factorization(), &se, &so))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Simplicity {
    Simple,
    NotSimple,
}

impl Simplicity {
    fn from_bool(b: bool) -> Self {
        if b {
            Simplicity::Simple
        } else {
            Simplicity::NotSimple
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Simplicity::Simple => "SIMPLE",
            Simplicity::NotSimple => "NOT_SIMPLE",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SimplicityVerdict {
    pub end_dim: usize,
    pub computed: Simplicity,
    pub predicted: Simplicity,
    /// Which case of the trichotomy applied.
    pub case: String,
}

impl SimplicityVerdict {
    pub fn agrees(&self) -> bool {
        self.computed == self.predicted
    }
}

/// `dim End(S) == 1`, compared against the prediction from `W`, `K` and the rank:
/// simple when `W` is maximal, or when the rank is even, `pi(W)` is maximal and
/// `W ∩ K` has codimension one in `K`.
pub fn simplicity_verdict(module: &IdealModule) -> Result<SimplicityVerdict> {
    let mf = module.factorization();
    let end_dim = hom_space(&mf, &mf)?.dim();
    let space = module.space();
    let k = space.radical();
    let wk = module.w().intersect(&k);
    let pi_dim = module.w().dim() - wk.dim();
    let pi_maximal = 2 * pi_dim + (space.rank() % 2) == space.rank();
    let (predicted, case) = if pi_maximal && wk.dim() == k.dim() {
        (true, "W maximal")
    } else if pi_maximal && space.rank() % 2 == 0 && wk.dim() + 1 == k.dim() {
        (true, "even rank, pi(W) maximal, W ∩ K of codimension 1 in K")
    } else {
        (false, "otherwise")
    };
    Ok(SimplicityVerdict {
        end_dim,
        computed: Simplicity::from_bool(end_dim == 1),
        predicted: Simplicity::from_bool(predicted),
        case: case.to_string(),
    })
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Irreducibility {
    Irreducible { certificate: Vec<String> },
    Reducible { seed: String, ev_dim: usize, odd_dim: usize },
    Undecided { reason: String },
}

impl Irreducibility {
    pub fn name(&self) -> &'static str {
        match self {
            Irreducibility::Irreducible { .. } => "IRREDUCIBLE",
            Irreducibility::Reducible { .. } => "REDUCIBLE",
            Irreducibility::Undecided { .. } => "UNDECIDED",
        }
    }
}

/// Seeds tried for a proper closure: basis elements of both halves, their
/// pairwise sums, and the products `(monomial) * generator`.
fn seeds(module: &IdealModule) -> Vec<(String, CliffordElement)> {
    let mut out: Vec<(String, CliffordElement)> = Vec::new();
    let all: Vec<&CliffordElement> = module.ev_basis().iter().chain(module.odd_basis()).collect();
    for (i, x) in all.iter().enumerate() {
        out.push((format!("basis element {i}"), (*x).clone()));
    }
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            out.push((format!("basis elements {i} + {j}"), all[i].add(all[j]).expect("same algebra")));
        }
    }
    let g = module.generator();
    for mask in 1..module.algebra().size() as u32 {
        let x = g.left_mul_monomial(mask);
        if !x.is_zero() {
            out.push((format!("{} * generator", crate::clifford::monomial_name(mask)), x));
        }
    }
    out
}

/// Search for a proper submodule generated by a seed.
pub fn reducibility_witness(module: &IdealModule) -> Result<Option<(String, Closure)>> {
    for (label, seed) in seeds(module) {
        let c = submodule_closure(module, &seed)?;
        if c.is_proper() {
            return Ok(Some((label, c)));
        }
    }
    Ok(None)
}

/// Verify, in a normal form adapted to a maximal `W`, the identities behind the
/// argument that every nonzero element generates `I`:
/// `w_i xi = 0`, `w_i u_i xi = xi`, `u_i w_j = -w_j u_i` for `i != j`, and in odd
/// rank `v_0 v_0 xi = c xi` with `c != 0`.
fn certificate(module: &IdealModule) -> Result<Option<Vec<String>>> {
    let space = module.space();
    let form = space.standardize(module.w())?;
    let w_is_maximal = form.pi_w_maximal && form.radical_rest.is_empty();
    if !w_is_maximal {
        return Ok(None);
    }
    let alg = module.algebra();
    let xi = CliffordElement::product_of_vectors(alg, &form.w_basis());
    let mut lines = Vec::new();
    let k = form.k();
    for (i, (u, w)) in form.pairs.iter().enumerate() {
        if !xi.left_mul_vector(w).is_zero() {
            return Ok(None);
        }
        if xi.left_mul_vector(u).left_mul_vector(w) != xi {
            return Ok(None);
        }
        for (j, (_, wj)) in form.pairs.iter().enumerate() {
            if i == j {
                continue;
            }
            let ue = CliffordElement::vector(alg, u);
            let we = CliffordElement::vector(alg, wj);
            if ue.mul(&we)? != we.mul(&ue)?.neg() {
                return Ok(None);
            }
        }
    }
    lines.push(format!("w_i xi = 0 and w_i u_i xi = xi for all {k} hyperbolic pairs"));
    lines.push(format!("u_i w_j = -w_j u_i for all {} ordered pairs i != j", k * k.saturating_sub(1)));
    if let Some((v0, c)) = &form.anisotropic {
        if c.is_zero() || xi.left_mul_vector(v0).left_mul_vector(v0) != xi.scale(c) {
            return Ok(None);
        }
        lines.push(format!("v0 v0 xi = {c} xi"));
    }
    lines.push(format!("xi = generator of W in the normal form ({} vectors)", form.w_basis().len()));
    Ok(Some(lines))
}

pub fn irreducibility_check(module: &IdealModule) -> Result<Irreducibility> {
    if let Some((seed, c)) = reducibility_witness(module)? {
        return Ok(Irreducibility::Reducible { seed, ev_dim: c.ev_dim, odd_dim: c.odd_dim });
    }
    match certificate(module) {
        Ok(Some(certificate)) => Ok(Irreducibility::Irreducible { certificate }),
        Ok(None) => Ok(Irreducibility::Undecided {
            reason: "no proper closure among the seeds, and W is not maximal".into(),
        }),
        Err(e) => Ok(Irreducibility::Undecided { reason: e.to_string() }),
    }
}

/// Unit seed vector in the given slot.
pub fn slot_seed(mf: &MatrixFactorization, slot: Parity, i: usize) -> Closure {
    let z = vec![Rat::zero(); mf.size()];
    let e = unit_vector(mf.size(), i);
    match slot {
        Parity::Even => closure_of_coordinates(mf, &e, &z),
        Parity::Odd => closure_of_coordinates(mf, &z, &e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;
    use crate::quadform::{QuadraticSpace, Subspace};

    fn module(space: &QuadraticSpace, idx: &[usize]) -> IdealModule {
        IdealModule::build(space, &Subspace::coordinate(space.dim(), idx)).unwrap()
    }

    #[test]
    fn closures() {
        let h6 = QuadraticSpace::hyperbolic(3, 0).unwrap();
        let i = module(&h6, &[3, 4, 5]);
        let c = submodule_closure(&i, i.generator()).unwrap();
        assert!(c.is_everything());
        let zero = CliffordElement::zero(i.algebra());
        assert_eq!(submodule_closure(&i, &zero).unwrap().dim(), 0);
        let outside = CliffordElement::one(i.algebra());
        assert!(submodule_closure(&i, &outside).is_err());

        let qs = QuadraticSpace::from_polynomial(4, &[(0, 1, int(1))]).unwrap();
        let i = module(&qs, &[1, 2]);
        let seed = i.generator().left_mul_basis(3);
        let c = submodule_closure(&i, &seed).unwrap();
        assert_eq!(c.dim(), i.size());
    }

    #[test]
    fn simplicity() {
        let h6 = QuadraticSpace::hyperbolic(3, 0).unwrap();
        let v = simplicity_verdict(&module(&h6, &[3, 4, 5])).unwrap();
        assert_eq!((v.computed, v.predicted), (Simplicity::Simple, Simplicity::Simple));
        let v = simplicity_verdict(&module(&h6, &[3])).unwrap();
        assert_eq!((v.computed, v.predicted), (Simplicity::NotSimple, Simplicity::NotSimple));
        let qs = QuadraticSpace::from_polynomial(4, &[(0, 1, int(1))]).unwrap();
        let v = simplicity_verdict(&module(&qs, &[1, 2])).unwrap();
        assert_eq!(v.end_dim, 1);
        assert!(v.agrees());
        let v = simplicity_verdict(&module(&qs, &[1])).unwrap();
        assert!(v.agrees(), "{v:?}");
    }

    #[test]
    fn irreducibility() {
        let h6 = QuadraticSpace::hyperbolic(3, 0).unwrap();
        assert!(matches!(irreducibility_check(&module(&h6, &[3, 4, 5])).unwrap(), Irreducibility::Irreducible { .. }));
        assert!(matches!(irreducibility_check(&module(&h6, &[3])).unwrap(), Irreducibility::Reducible { .. }));
        let qs = QuadraticSpace::from_polynomial(4, &[(0, 1, int(1))]).unwrap();
        assert!(matches!(irreducibility_check(&module(&qs, &[1, 2])).unwrap(), Irreducibility::Reducible { .. }));
        let o5 = QuadraticSpace::from_polynomial(5, &[(0, 0, int(1)), (1, 3, int(1)), (2, 4, int(1))]).unwrap();
        let v = irreducibility_check(&module(&o5, &[3, 4])).unwrap();
        assert!(matches!(v, Irreducibility::Irreducible { .. }), "{v:?}");
    }
}
