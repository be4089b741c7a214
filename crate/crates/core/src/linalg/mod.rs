//! Dense exact linear algebra: matrices, Kronecker products, span
//! membership, minimal polynomials and spectral tests built on them.

mod matrix;
mod minpoly;
mod span;

pub use matrix::Matrix;
pub use minpoly::{
    default_order_bound, eval_at_matrix, is_nilpotent, minimal_polynomial, root_of_unity_order,
    sequence_minimal_polynomial, squarefree_part, vector_minimal_polynomial,
};
pub use span::{null_space, solve_in_span, SpanBuilder};

