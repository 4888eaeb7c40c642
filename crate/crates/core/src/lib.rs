pub mod characters;
pub mod cli;
pub mod error;
pub mod group;
pub mod laurent;
pub mod matrix;
pub mod modification;
pub mod partition;
pub mod pieri;
pub mod schur;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use group::{Family, GroupId, RepRingElement};
pub use laurent::LaurentPolynomial;
pub use partition::Partition;
