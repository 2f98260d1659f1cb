//! Exact rational scalars, dense matrices, matrices of linear forms and
//! univariate polynomials. No floating point anywhere.

mod echelon;
mod linmat;
mod mat;
mod poly;
mod rat;

pub use echelon::{integer_row, Echelon, SparseRow};
pub use linmat::{
    monomial_count, monomial_multiplication_matrix, monomials, render_form, LinMat, MonomialMap,
    QuadMat,
};
pub use mat::{
    combine, dot, is_zero_vector, unit_vector, vec_add, vec_scale, vec_sub, Mat, Solution, Vector,
};
pub use poly::UniPoly;
pub use rat::{int, rat, ParseRatError, Rat};
