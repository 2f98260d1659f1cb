//! Hom spaces, isomorphism and simplicity tests, submodule closures, and the
//! numerical invariants of the cokernel sheaves.

mod hom;
mod iso;
mod numerics;
mod submodule;

pub use hom::{b_is_unique, companion_identity_holds, hom_space, module_hom_dim, GradedHom};
pub use iso::{is_isomorphic, IsoVerdict, DEFAULT_SEED, RANDOM_TRIALS};
pub use numerics::{
    cohomology_dim, cohomology_dim_in, cohomology_table, hilbert_cross_check, hilbert_polynomial,
    quadric_hilbert_polynomial, sheaf_numerics, CohomologyRow, SheafNumerics, WINDOW,
};
pub use submodule::{
    closure_of_coordinates, irreducibility_check, reducibility_witness, simplicity_verdict, slot_seed,
    submodule_closure, Closure, Irreducibility, Simplicity, SimplicityVerdict,
};
