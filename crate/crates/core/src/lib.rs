//! Exact computations for σ-Brauer categories and their modules.

pub mod brauer;
pub mod combinat;
pub mod error;
pub mod exactla;
pub mod modcat;
pub mod schurweyl;
pub mod specht;
pub mod stabilizer;
pub mod symfun;

pub use error::{Error, Result};
