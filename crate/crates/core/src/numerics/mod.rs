//! Shared numerical machinery: root finding, limit extrapolation, and
//! adaptive quadrature.

pub mod extrapolate;
pub mod quadrature;
pub mod roots;
