pub mod braids;
pub mod error;
pub mod invariants;
pub mod modular;
pub mod orbits;
pub mod poly;
pub mod theorems;

mod bigjson;
mod dense;

pub use error::{Error, Result};
