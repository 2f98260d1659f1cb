//! Ideals `I = Cl * w_1 ... w_m`, their matrix factorizations, and the
//! constructions comparing them: flags, restrictions, cones, group actions.

mod compare;
mod factorization;
mod family;
mod flag;
mod ideal;

pub use compare::{
    cone_compare, equivariance_check, restrict_compare, ConeVerdict, EquivarianceVerdict, MapCheck,
    RestrictionKind, RestrictionVerdict,
};
pub use factorization::{MatrixFactorization, ModuleMeta};
pub use family::{family_indicator, standard_probe, HalfKilled};
pub use flag::{drop_vector, flag_sequence, FlagSequence, FlagVerdict};
pub use ideal::IdealModule;

use crate::error::Result;
use crate::quadform::{QuadraticSpace, Subspace};

/// `I` for an isotropic `W`.
pub fn build_ideal(space: &QuadraticSpace, w: &Subspace) -> Result<IdealModule> {
    IdealModule::build(space, w)
}

/// `W ∩ K` recovered from the module as `V ∩ Ann(I)`.
pub fn recover_intersection_with_radical(module: &IdealModule) -> Subspace {
    module.factorization().intersection_with_radical()
}
