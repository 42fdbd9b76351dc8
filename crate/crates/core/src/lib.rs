//! Growth diagrams, the four RSK variants, jeu de taquin and promotion, and
//! promotion-based bijections on fillings of moon polyominoes.
//!
//! Conventions: French notation everywhere. Rows grow upward, columns grow to
//! the right, and every vector indexed by rows is read bottom to top.

pub mod cli;
pub mod error;
pub mod fillings;
pub mod growth;
pub mod knuth;
pub mod partitions;
pub mod polyomino;
pub mod tableaux;
pub mod transform;

pub use error::{Error, Result};
pub use fillings::{ChainKind, Filling};
pub use growth::{GrowthDiagram, RskVariant};
pub use partitions::{p, Partition};
pub use polyomino::MoonPolyomino;
pub use tableaux::{ChainMode, PartitionChain, Tableau};
