//! Exact integer linear algebra: matrices over `Z`, Smith normal form,
//! cokernels, integer kernels and binomial coefficients.

mod binomial;
mod group;
mod matrix;
mod snf;

pub use binomial::{binomial, BinomialRow};
pub use group::{
    canonical_basis, cokernel_structure, content, integer_kernel, primitive_part, AbelianGroup,
};
pub use matrix::IntMatrix;
pub use num_bigint::BigInt;
pub use snf::{snf, SmithForm};
