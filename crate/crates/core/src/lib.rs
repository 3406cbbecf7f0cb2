//! Exact verification of Grassmannian degenerations from the Jordan Lie
//! subalgebra of a simple Lie algebra to its `n`-dimensional abelian ideals.
//!
//! The crate is layered bottom-up:
//!
//! * [`exact`]: rationals, Laurent polynomials in `t`, dense linear algebra.
//! * [`roots`]: positive root systems of every simple type.
//! * [`liealg`]: bracket models of the Borel subalgebra.
//! * [`regnil`]: the principal nilpotent, its centralizer `J`, and the limit `K`.
//! * [`ideals`]: enumeration and classification of abelian ideals.
//! * [`deform`]: unipotent and toric deformations and their `t → 0` limits.
//! * [`chains`]: the explicit deformation chains and their certificates.

pub mod chains;
pub mod deform;
pub mod error;
pub mod exact;
pub mod ideals;
pub mod liealg;
pub mod regnil;
pub mod roots;

pub use error::{Error, Result};
