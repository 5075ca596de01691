pub mod bigraded;
pub mod error;
pub mod exact;
pub mod invariants;
pub mod liealg;
pub mod pencil;
pub mod sl2rep;

pub use error::{Error, Result};
