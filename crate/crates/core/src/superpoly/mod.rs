//! Supercommutative polynomials over exact rationals.
//!
//! Variables carry a parity and an integer weight. Monomials are kept in the
//! chart's declaration order and every product or derivative is brought back
//! to that order with the Koszul sign.

mod chart;
mod monomial;
mod parity;
mod poly;

pub use chart::{same_chart, Chart, Provenance, VariableDecl};
pub use monomial::Monomial;
pub use parity::{sign, Parity};
pub use poly::{int, rat, render_monomial, render_rational, Grade, Rational, SuperPoly};
