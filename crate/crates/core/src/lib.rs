//! Exact computation of complete colorings of loopless multigraphs and
//! multidigraphs.
//!
//! A *complete* coloring is a partition of the vertex set into classes that
//! avoid a forbidden pattern (a directed cycle, an undirected cycle, or a
//! single edge), such that merging any two classes creates the pattern. The
//! crate computes the maximum number of classes (adichromatic number for
//! directed cycles, a-vertex arboricity for undirected cycles, achromatic
//! number for edges), the minimum (dichromatic number, vertex arboricity,
//! chromatic number), the diachromatic number, feedback vertex sets, cycle
//! packings and degeneracy — all exactly, with independently verifiable
//! certificates and brute-force oracles for cross-checking.

pub mod coloring;
pub mod families;
pub mod graph;
pub mod guest;
mod mask;
pub mod solver;

pub use coloring::{CompletenessCertificate, Partition};
pub use graph::{CycleKind, CycleWitness, Host, HostKind, MultiDigraph, MultiGraph, VertexSet};
pub use guest::{GuestClass, HWitness};
pub use solver::{Evidence, Method, ParamResult, SolverConfig, SolverError};
