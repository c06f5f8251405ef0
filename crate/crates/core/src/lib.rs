//! Generalized Euler numbers `E_n^(a)`, the companion sequences `U_n` and
//! `S_n`, and machine checks of Stern-type congruences and p-regular
//! function expansions for them.

pub mod congruence;
pub mod error;
pub mod exactmath;
pub mod pregular;
pub mod report;
pub mod sequences;

pub use error::{Error, Result};
