//! Spinor sheaves on possibly singular quadrics, built from Clifford-algebra
//! ideals as matrix factorizations of the quadratic form, together with exact
//! verifications of their properties: factorization identities, rank
//! stratification, Hom spaces, duality, exact sequences, restriction and cone
//! comparisons, Hilbert polynomials, slope, ACM vanishing and simplicity.
//!
//! All arithmetic is over the rationals and exact.

pub mod clifford;
pub mod error;
pub mod exactalg;
pub mod fixtures;
pub mod grid;
pub mod homalg;
pub mod printed_example;
pub mod quadform;
pub mod spinor;
pub mod verify;

pub use clifford::{CliffordAlgebra, CliffordElement, GroupElement, Parity};
pub use error::{Error, Result};
pub use exactalg::{LinMat, Mat, Rat, UniPoly, Vector};
pub use quadform::{QuadraticSpace, QuotientSpace, StandardForm, Subspace};
pub use homalg::{hom_space, is_isomorphic, GradedHom, IsoVerdict, SheafNumerics};
pub use spinor::{IdealModule, MatrixFactorization};
