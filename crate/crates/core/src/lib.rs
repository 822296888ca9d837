//! Modular representations of symmetric groups over prime fields.

pub mod combinat;
pub mod error;
pub mod ffield;
pub mod filtration;
pub mod modrep;
pub mod specht;
pub mod structure;

pub use error::{Error, Result};
