//! Young tableau models for highest weight crystals of types B and C.

pub mod alphabet;
pub mod characters;
pub mod crystal;
pub mod decompose;
pub mod error;
pub mod graph;
pub mod lr;
pub mod oracle;
pub mod partition;
pub mod random;
pub mod rsk;
pub mod signature;
pub mod stats;
pub mod tableau;
pub mod verify;
pub mod weight;

pub use crystal::CrystalVertex;
pub use graph::{generate_crystal, CrystalGraph};
pub use lr::LrTableau;
pub use alphabet::{GradedAlphabet, Grading, Letter, Ordinary, Parity, Word};
pub use error::{Error, Result};
pub use partition::{Eps, Partition, SkewShape};
pub use signature::{Dir, Sign};
pub use tableau::{ReadMode, Tableau};
pub use weight::WeightVector;
