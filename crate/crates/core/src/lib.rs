//! Numerical toolkit for Young functions and the Orlicz-space quantities
//! built from them: Lebesgue exponents, Luxemburg norms and modulars,
//! trace-type mixed norms, spliced constructions with prescribed
//! exponents, and equivalence/inclusion analysis.

// `!(x > 1.0)` rejects NaN along with the out-of-range values; the
// suggested `x <= 1.0` would let NaN through the parameter guards.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod constructors;
pub mod error;
pub mod exponents;
pub mod gallery;
pub mod grid;
pub mod integrand;
pub mod mixed;
pub mod norms;
pub mod numerics;
pub mod yf;

pub use error::{Error, Result};
pub use grid::GridSpec;
pub use yf::YoungFunction;
