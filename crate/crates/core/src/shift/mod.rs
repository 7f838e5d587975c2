//! One-variable operator calculus built from shifts `T^k` and the
//! reflection `R`, the standard Racah and Bannai-Ito realizations, and
//! exact bispectrality matrices.

mod bispectral;
mod operator;
mod realization;

use thiserror::Error;

use crate::kernel::{KernelError, Symbol};

pub use bispectral::*;
pub use operator::*;
pub use realization::*;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShiftError {
    #[error("operators act on different variables ({0} and {1})")]
    VariableMismatch(Symbol, Symbol),
    #[error("operator does not map polynomials to polynomials")]
    NotPolynomialPreserving,
    #[error("target is not in the span of the basis operators")]
    Inconsistent,
    #[error("basis operators are linearly dependent")]
    Singular,
    #[error("operator is not a scalar multiple of the identity")]
    NotScalar,
    #[error("polynomial is not invariant under the λ-reflection")]
    NotSymmetric,
    #[error("repeated eigenvalue at positions {first} and {second}")]
    DegenerateSpectrum { first: usize, second: usize },
    #[error("parameters must be numeric for matrix computations")]
    SymbolicParameters,
    #[error("entry ({row}, {col}) lies outside the three central diagonals")]
    NotTridiagonal { row: usize, col: usize },
    #[error(transparent)]
    Kernel(KernelError),
}

impl From<KernelError> for ShiftError {
    fn from(e: KernelError) -> Self {
        match e {
            KernelError::DegenerateSpectrum { first, second } => {
                ShiftError::DegenerateSpectrum { first, second }
            }
            other => ShiftError::Kernel(other),
        }
    }
}
