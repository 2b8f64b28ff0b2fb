//! Finite-dimensional pivotal Hopf algebras over exact fields and the
//! linear operators they induce on edge state spaces.

mod algebra;
mod invariants;
mod linalg;
mod scalar;
mod tensor;

pub use algebra::{AxiomCheck, FinHopf, HopfJson, Sparse};
pub use linalg::Matrix;
pub use scalar::{Fp, Scalar, Q};
pub use tensor::{check_dim, decode_index, encode_index, LinOperator, OperatorJson, Tensor, DEFAULT_MAX_DIM, HLEG};
pub use invariants::{check_yd_equivariance, LinearBiinv};
