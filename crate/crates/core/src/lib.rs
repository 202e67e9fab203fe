//! Extended Patience Sorting, the RSK correspondence, and their geometric
//! forms through southwest and northeast shadow diagrams.

pub mod crossings;
pub mod error;
pub mod perm;
pub mod piles;
pub mod render;
pub mod report;
pub mod rsk;
pub mod shadow;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{LatticePoint, Permutation};
pub use piles::{PileConfig, Shape};
pub use rsk::Tableau;
