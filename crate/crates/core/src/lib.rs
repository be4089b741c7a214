//! Exact computations with finite-dimensional Hopf algebras given by
//! structure constants over cyclotomic fields.
//!
//! The algorithms are generic over an exact [`Field`]; the aliases at the
//! crate root fix the scalar to [`Cyclotomic`], which is what the presets,
//! file formats and CLI use.

pub mod double;
pub mod error;
pub mod exactfield;
pub mod hopf;
pub mod linalg;
pub mod presets;
pub mod qexp;
pub mod twist;
pub mod scalar;

pub use error::{Error, Result};
pub use exactfield::{Cyclotomic, Poly, Rational};
pub use scalar::Field;

/// A Hopf algebra over a cyclotomic field.
pub type Hopf = hopf::HopfAlgebra<Cyclotomic>;

/// Dense matrix over a cyclotomic field.
pub type CycloMatrix = linalg::Matrix<Cyclotomic>;
/// Polynomial over a cyclotomic field.
pub type CycloPoly = Poly<Cyclotomic>;
