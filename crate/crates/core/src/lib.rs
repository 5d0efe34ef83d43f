//! Exact verification of finite-dimensional Hom-algebraic structures given
//! by structure constants.

pub mod double;
pub mod error;
pub mod hom;
pub mod io;
pub mod linalg;
pub mod modules;
pub mod report;
pub mod smash;
pub mod twisted;

pub use error::{Error, Result};
pub use report::{AxiomEntry, AxiomReport, Group, Witness};
