//! Exact scalars: arbitrary-precision rationals, cyclotomic fields Q(ζ_m)
//! in the power basis, and univariate polynomials over either.

mod cyclotomic;
mod poly;
mod rational;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
pub use poly::Poly;
pub use rational::{binomial, Rational};

