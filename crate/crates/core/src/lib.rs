//! Lex segments of monomials, their decomposition into monomial spaces, and
//! the duality between the Macaulay coefficients of an ideal segment and of
//! the complementary quotient segment.
//!
//! Monomials live in `k[x_1, ..., x_n]` with `x_1 > x_2 > ... > x_n`. The
//! [`oracle`] module recomputes everything by brute force and is what the
//! closed forms in the other modules are tested against.

pub mod cli;
pub mod duality;
pub mod error;
pub mod fuzzing;
pub mod macaulay;
pub mod monomial;
pub mod oracle;
pub mod segments;

pub use duality::{
    coefficient_sets, ideal_coefficients, quotient_coefficients, rank, rank_by_quotient,
    reconstruct_from_ideal_set, reconstruct_from_quotient_set, shift_inheritance_check, unrank,
    CoefficientSets,
};
pub use error::{Error, Result};
pub use macaulay::{
    binom, eval_rep, ideal_growth_bound, macaulay_rep, quotient_growth_bound, space_dimension,
    BigCount, MacaulayRep,
};
pub use monomial::{Monomial, VariableWindow};
pub use segments::{
    decompose, multiply_decomposition, multiply_segment, reduce_window, segment_dimension,
    split_once, Decomposition, SegmentKind, SegmentSpec, Split, Summand,
};
