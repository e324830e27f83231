//! Exact computations with periodic Hecke modules, tensor modules of the
//! quantum loop algebra of gl_p, and the canonical bases on both sides.

pub mod alcove;
pub mod bridge;
pub mod cli;
pub mod error;
pub mod hecke;
pub mod loopmod;
pub mod periodic;
pub mod qcoeff;
pub mod rootdata;
pub mod triangular;
pub mod weyl;

pub use error::{Error, Result};
pub use qcoeff::LaurentScalar;
