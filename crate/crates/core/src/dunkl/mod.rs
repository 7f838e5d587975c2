//! Differential-reflection operators in three variables: `su(1,1)` and
//! `osp(1|2)` realizations, coproduct lifts, and the Racah and Bannai-Ito
//! commutant algebras.

mod element;
mod lie;
mod problems;

pub use element::*;
pub use lie::*;
pub use problems::*;
