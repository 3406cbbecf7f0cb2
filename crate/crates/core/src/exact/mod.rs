//! Exact scalars (rationals, Laurent polynomials in `t`) and dense linear algebra.

pub mod laurent;
pub mod matrix;
pub mod rational;

pub use laurent::{laurent_normalize, LaurentPoly};
pub use matrix::QMatrix;
pub use rational::{format_rational, parse_rational, rat, ratio, Rational};

/// Reduced row-echelon form of `m` together with its rank.
pub fn rref(m: &QMatrix) -> (usize, QMatrix) {
    m.rref()
}

/// Basis of the right null space of `m`.
pub fn kernel(m: &QMatrix) -> Vec<Vec<Rational>> {
    m.kernel()
}
