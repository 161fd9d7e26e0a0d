//! Centrally graded groups, discrete Clifford groups `Q_{p,q}` and their
//! group algebras.

pub mod algebra;
pub mod classify;
pub mod clifford;
pub mod error;
pub mod gamma;
pub mod graded;

pub use error::{Error, Result};
pub use gamma::{GammaElem, GammaRing};
