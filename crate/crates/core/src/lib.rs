//! Pre-coloring extension through contraction, recognition of Meyniel,
//! Artemis and Berge graphs, and exhaustive verification of the structural
//! results that connect them on small graphs.
//!
//! The library is organized bottom-up:
//!
//! - [`graph`]: bit-set adjacency graphs and set primitives.
//! - [`io`]: DIMACS, edge-list and family file formats.
//! - [`contraction`]: `G/Q`, `G^Q` and lifting colorings back.
//! - [`detect`]: holes, houses, antiholes, prisms and class recognizers.
//! - [`solve`]: maximum clique, chromatic number, PrExt decision and optimization.
//! - [`harness`]: exhaustive and sampled verification with replayable reports.
//! - [`cli`]: the `prext` command line.

pub mod cli;
pub mod contraction;
pub mod detect;
pub mod graph;
pub mod harness;
pub mod io;
pub mod solve;

pub use contraction::{cocontract, contract, lift_coloring, CliqueFamily, ContractionResult, Origin, StableFamily};
pub use detect::{classify, ClassReport, Witness, WitnessKind};
pub use graph::{Graph, VertexSet};
pub use solve::{Coloring, PrextAnswer, SolverConfig};
