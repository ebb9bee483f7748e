//! Shared test data.

use std::sync::Arc;

use crate::geometry::VectorField;
use crate::superpoly::{Chart, Parity, SuperPoly};

/// `R^{1|3}` with weights 2, 1, 1, 1.
pub fn r13() -> Arc<Chart> {
    Chart::from_spec(
        "M",
        &[
            ("x", Parity::Even, 2),
            ("xi1", Parity::Odd, 1),
            ("xi2", Parity::Odd, 1),
            ("xi3", Parity::Odd, 1),
        ],
    )
}

pub fn v(c: &Arc<Chart>, n: &str) -> SuperPoly {
    SuperPoly::var_named(c, n).unwrap()
}

/// The nonlinear weight-one homological field on `R^{1|3}`.
pub fn r13_field(c: &Arc<Chart>) -> VectorField {
    let (x, a, b, d) = (v(c, "x"), v(c, "xi1"), v(c, "xi2"), v(c, "xi3"));
    VectorField::from_named(
        c,
        [
            ("x", &(&x * &a) + &(&(&a * &b) * &d)),
            ("xi1", &a * &d),
            ("xi2", &x + &(&a * &b)),
        ],
    )
    .unwrap()
}

pub fn names(list: &[&str]) -> Option<Vec<String>> {
    Some(list.iter().map(|s| s.to_string()).collect())
}
