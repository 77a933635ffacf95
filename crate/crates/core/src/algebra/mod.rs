//! Exact arithmetic: rationals, polynomials, torus characters, matrices and
//! Pfaffians.

mod character;
mod matrix;
mod pfaffian;
mod poly;
mod ring;

pub use character::LaurentChar;
pub use matrix::{jordan_type, Matrix};
pub use pfaffian::{det_leibniz, pfaffian, pfaffian_by_permutations, symbolic_alternating, DivInt};
pub use poly::{Monomial, MultiPoly};
pub use ring::{format_q, parse_q, Field, Ring, Q};
