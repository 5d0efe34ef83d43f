//! Exact linear algebra over Q or GF(p).
//!
//! Tensor bases are ordered lexicographically: in `V ⊗ W`, `e_i ⊗ e_j` has
//! flat index `i * dim(W) + j`. Matrices act on columns, so column `j` of a
//! [`LinMap`] is the image of `e_j`.

mod matrix;
mod scalar;
mod tensor;

pub use matrix::{invert_linear_map, kron, kron_all, LinMap};
pub use scalar::{Field, Scalar};
pub use tensor::{matrix_of, CoTensor, MulTensor, Tensor};
