//! Constructions, verification and exhaustive search for Hamiltonian paths
//! in complete graphs whose edge lengths form a prescribed multiset,
//! concentrating on supports `{1, x, y}`.

pub mod arith;
pub mod constructions;
pub mod equivalence;
pub mod error;
pub mod fauxset;
pub mod multiset;
pub mod path;
pub mod search;
pub mod verify;

pub use error::{Error, Result};
pub use multiset::EdgeMultiset;
pub use path::{Mode, PathSeq};
