//! Exact computation of graph resolvability and zero-forcing parameters
//! for small graphs: metric dimension, vertex and edge zero forcing
//! numbers, path cover number, line-graph construction, and generators
//! for the graph families these parameters are usually studied on
//! (paths, cycles, complete and complete bipartite graphs, wheels,
//! bouquets of circles, random trees).
//!
//! The crate is `no_std` (with `alloc`): everything here is pure
//! computation over immutable [`Graph`] values. IO, file formats, and
//! the sweep CLI live in the companion `graphinv` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;

pub mod families;
pub mod graph;
pub mod line_graph;
pub mod metric_dim;
pub mod zero_forcing;

pub use error::{Error, Result};
pub use graph::{DegreeProfile, DistanceMatrix, Graph};
pub use line_graph::LineGraphResult;
pub use metric_dim::{CodeTable, DimResult};
pub use zero_forcing::{ColorMode, ColorState, ForcingTrace, ZResult};
