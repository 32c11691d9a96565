pub mod canonical;
pub mod cli;
pub mod crystal;
pub mod error;
pub mod fixtures;
pub mod fock;
pub mod laurent;
pub mod modular;
pub mod partitions;
pub mod verify;

pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use partitions::{Modulus, Partition};
