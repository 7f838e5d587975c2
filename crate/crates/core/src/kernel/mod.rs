//! Exact arithmetic: Gaussian rationals, parameter polynomials, rational
//! functions and dense matrices. Nothing in the crate rounds.

mod matrix;
mod poly;
mod ratfunc;
mod scalar;
mod symbol;

use std::fmt;

use thiserror::Error;

pub use matrix::{solve_polynomial_system, ExactMatrix};
pub use poly::{gcd as poly_gcd, Monomial, ParamPoly};
pub use ratfunc::{common_denominator, RatFunc};
pub use scalar::Scalar;
pub use symbol::{Symbol, NSYM};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("repeated diagonal entry at positions {first} and {second}")]
    DegenerateSpectrum { first: usize, second: usize },
    #[error("matrix is not upper triangular")]
    NotTriangular,
    #[error("singular system")]
    Singular,
    #[error("inconsistent system")]
    Inconsistent,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("malformed rational `{0}`")]
    MalformedRational(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
}

/// The operations the matrix routines need from their entries.
pub trait Field: Clone + PartialEq + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn fadd(&self, rhs: &Self) -> Self;
    fn fsub(&self, rhs: &Self) -> Self;
    fn fmul(&self, rhs: &Self) -> Self;
    fn fneg(&self) -> Self;
    fn finv(&self) -> Option<Self>;
}

macro_rules! impl_field {
    ($t:ty) => {
        impl Field for $t {
            fn zero() -> Self {
                <$t>::zero()
            }
            fn one() -> Self {
                <$t>::one()
            }
            fn is_zero(&self) -> bool {
                <$t>::is_zero(self)
            }
            fn fadd(&self, rhs: &Self) -> Self {
                self + rhs
            }
            fn fsub(&self, rhs: &Self) -> Self {
                self - rhs
            }
            fn fmul(&self, rhs: &Self) -> Self {
                self * rhs
            }
            fn fneg(&self) -> Self {
                -self
            }
            fn finv(&self) -> Option<Self> {
                self.inv()
            }
        }
    };
}
impl_field!(Scalar);
impl_field!(RatFunc);

/// Greatest common divisor of two univariate polynomials in `var` (with
/// parameter-polynomial coefficients), normalized monic in `var`.
///
/// Returns `None` when the gcd's leading coefficient in `var` is not a
/// scalar, i.e. monic normalization would leave the polynomial ring.
pub fn univariate_gcd(p: &ParamPoly, q: &ParamPoly, var: Symbol) -> Option<ParamPoly> {
    let g = poly_gcd(p, q);
    if g.is_zero() {
        return Some(g);
    }
    let lc = g.lc_in(var).constant_value()?;
    Some(g.scale(&lc.inv()?))
}

/// `n / d` reduced and normalized.
pub fn ratfunc_normalize(n: ParamPoly, d: ParamPoly) -> Result<RatFunc, KernelError> {
    RatFunc::normalize(n, d)
}
