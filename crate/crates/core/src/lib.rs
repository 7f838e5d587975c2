//! Exact operator-algebra workbench for the Racah and Bannai-Ito algebras.

pub mod dunkl;
pub mod kernel;
pub mod pbw;
pub mod shift;
pub mod verifier;
