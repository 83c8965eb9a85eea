//! Exact linear algebra over the rationals.
//!
//! Everything here is a pure function of immutable values. Subspaces are kept
//! in reduced row echelon form, which makes equality of subspaces a plain
//! structural comparison.

mod matrix;
mod poly;
mod scalar;
mod subspace;

pub use matrix::Matrix;
pub use poly::Poly;
pub use scalar::{
    dot, format_scalar, format_vector, frac, int, is_zero_vector, parse_scalar, unit_vector,
    zero_vector, Scalar,
};
pub use subspace::{Quotient, Subspace};

/// Kronecker product `a ⊗ b`; the basis vector `e_i ⊗ f_j` has index
/// `i * dim(W) + j`.
pub fn tensor_matrix(a: &Matrix, b: &Matrix) -> Matrix {
    a.kron(b)
}

/// Null space of `m`.
pub fn kernel(m: &Matrix) -> Subspace {
    m.kernel()
}

/// One eigenpair per distinct rational eigenvalue of `m`, in increasing order
/// of eigenvalue.
pub fn rational_eigenvectors(m: &Matrix) -> Vec<(Scalar, Vec<Scalar>)> {
    m.rational_eigenvectors()
}
