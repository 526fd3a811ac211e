//! Exact normal-form computations for quantum matrix algebras, quantum
//! Grassmannians, their big cells and Drinfeld duals.

pub mod bialgebra;
pub mod bigcell;
pub mod coeffs;
pub mod completion;
pub mod drinfeld;
pub mod error;
pub mod exec;
pub mod hopf;
pub mod linalg;
pub mod minors;
pub mod ncalg;

pub use error::{Error, Result};
