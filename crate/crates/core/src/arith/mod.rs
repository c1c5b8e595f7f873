//! Exact arithmetic: rationals, Laurent polynomials and rational functions.

mod field;
mod poly;
mod rat;
mod ratfunc;

pub use field::Field;
pub use poly::{product_of, Monomial, Poly, VarImage};
pub use rat::{ParseRatError, Rat};
pub use ratfunc::{normalize, poly_cmp, RatFunc};

