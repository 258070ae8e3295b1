//! Exact combinatorics for ultra maximal `K_r`-free graphs.
//!
//! The crate connects a graph `G` to the set system `B(G) = {K_v}` over its
//! maximal independent sets (`K_v` = the MIS containing `v`) and to the
//! convexity space generated by it. On top of that it computes the finite
//! invariants (transversal and matching numbers with their LP relaxations,
//! VC-dimension, Helly and Radon numbers, the ultra parameter, half graphs,
//! bipartite induced matchings) and runs a self-checking blow-up
//! decomposition.
//!
//! Everything is exact: densities and LP values are [`Rational`]s, and every
//! exhaustive search takes a [`SearchBudget`] and fails loudly when it runs out.

pub mod blowup;
pub mod budget;
pub mod catalog;
pub mod cliques;
pub mod codegree;
pub mod coloring;
pub mod constructions;
pub mod convexity;
pub mod error;
pub mod graph;
pub mod io;
pub mod iso;
pub mod mis;
pub mod rational;
pub mod report;
pub mod setsystem;
pub mod ultra;

pub use blowup::{BlowupDecomposition, ObstructionCertificate};
pub use budget::{Meter, SearchBudget};
pub use cliques::{clique_number, count_cliques};
pub use coloring::chromatic_number;
pub use convexity::{ConvexitySpace, Measure};
pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
pub use mis::enumerate_mis;
pub use rational::Rational;
pub use report::{Check, Report, Status};
pub use setsystem::{FractionalSolution, SetSystem};
pub use ultra::{BiInducedMatching, HalfGraphEmbedding, UltraCertificate};
