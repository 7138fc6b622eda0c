//! Exact pursuit-game solving on graphs: cop numbers for the classic game
//! and its major variants, kernelization preprocessing with strategy
//! lifting, constructive upper-bound strategies, and generators for hard
//! benchmark families.

pub mod bounds;
pub mod corpus;
pub mod error;
pub mod game;
pub mod gen;
pub mod graph;
pub mod kernel;
pub mod params;

pub use error::{BoundError, GameError, GenError, GraphError, KernelError, ParamError};
pub use game::{GameState, Solution, Turn, VariantSpec, Verdict};
pub use graph::{Connectivity, DistanceTable, Graph, NeighborhoodKind};
pub use kernel::{KernelResult, ParamKind};
pub use params::{CoverCertificate, CoverKind, NdPartition, VcMode};
