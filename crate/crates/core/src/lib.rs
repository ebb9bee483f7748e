//! Exact symbolic engine for graded supermanifold structures.
//!
//! The crate is layered: [`superpoly`] holds the polynomial arithmetic,
//! [`geometry`] charts, lifts and vector fields, [`brackets`] the canonical
//! Poisson and Schouten brackets, [`structures`] the verification reports,
//! [`liealg`] the structure-constant layer and [`doubles`] the double
//! constructions.

pub mod brackets;
pub mod doubles;
pub mod error;
pub mod geometry;
pub mod liealg;
pub mod sample;
pub mod structures;
pub mod superpoly;

#[cfg(test)]
pub(crate) mod fixtures;

pub use error::{Error, Result};
pub use geometry::{GradingKind, GradingSystem, LiftKind, VectorField};
pub use superpoly::{int, rat, Chart, Grade, Monomial, Parity, Rational, SuperPoly};
