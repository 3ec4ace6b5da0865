//! Partitions, alphabets, words and semistandard tableaux.

pub mod alphabet;
pub mod insertion;
pub mod shape;
pub mod sigma;
pub mod tableau;
pub mod word;

pub use alphabet::{Alphabet, AlphabetKind, Letter};
pub use insertion::{antinormalize, column_insert, insertion_tableau, rectify};
pub use shape::{Partition, SkewShape};
pub use sigma::sigma_complement;
pub use tableau::{Tableau, TableauJson};
pub use word::{Signature, Word};
