//! Spectral analysis of signed graphs: switching classes, characteristic and
//! matching polynomials, spectrum symmetry tests, and structured families with
//! symmetric spectra.

pub mod census;
pub mod constructions;
pub mod cycles;
pub mod error;
pub mod graph;
pub mod poly;
pub mod smallgraphs;
pub mod spectral;
pub mod symmetry;
pub mod verify;

pub use error::{Result, SgsError};
pub use graph::{Edge, SignedGraph, SwitchSet, VertexPermutation};
