//! Finite-dimensional Lie superalgebras: structure constants, their fields
//! and tensors, generated examples and the double constructions.

mod builtin;
mod constants;
mod drinfeld;
mod fields;
pub mod linalg;
mod odd;
mod relative;
mod search;

pub use builtin::{
    builtin, constants_from_matrices, gl, gl_super, q, sl, susy1, BuiltinAlgebra, CartanPart,
    SuperMatrix,
};
pub use constants::{render_combination, InnerProduct, StructureConstants};
pub use drinfeld::{
    drinfeld_double, drinfeld_pairing, even_cobracket_formula, even_double_formula, DrinfeldDouble,
};
pub use fields::{
    coordinate_bracket_constants, lie_poisson_tensor, lie_schouten_tensor, lie_tensors, pi_chart,
    plain_chart, q_from_sc, quadratic_coefficients, sc_from_q, tensor_from_brackets, LIE_SHIFT,
};
pub use odd::{
    coboundary_cobracket, odd_cobracket_from_dual, odd_double, odd_dual_cobracket, odd_pairing,
    render_sym_cobracket, sym_chart, OddDouble,
};
pub use relative::{
    q_cobracket_formula, q_relative_input, relative_double, QSplit, RelativeDouble, RelativeInput,
    SignRecord, TermFamily,
};
pub use search::{constant_slots, search_even_cobrackets, search_odd_cobrackets};

#[cfg(test)]
mod double_tests;
#[cfg(test)]
mod tests;
