//! Sparse polynomial arithmetic over the rationals and prime fields.

mod field;
pub mod gcd;
pub mod groebner;
mod monomial;
mod multipoly;
pub mod pfaffian;
pub mod text;

pub use field::{Field, PrimeField, Rationals, Ring};
pub use monomial::Monomial;
pub use multipoly::{MultiPoly, PolyRing};
