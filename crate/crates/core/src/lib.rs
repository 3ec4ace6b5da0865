//! Type-A crystals on semistandard tableaux and on Lusztig data of
//! single-sink quivers, with the embeddings relating them.

pub mod crystal;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod lusztig;
pub mod rsk;
pub mod tableaux;
pub mod verify;

pub use crystal::{CrystalStats, Direction, Ext};
pub use error::{Error, Result};
