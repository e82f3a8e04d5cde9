//! Exact arithmetic for shadows of k-uniform hypergraphs.
//!
//! The library computes shadows, links and degrees of k-uniform set
//! families, the shadow function from cascade (k-binomial) representations,
//! shadow-ratio lower bounds for bounded-degree hypergraphs across their
//! degree regimes, the extremal constructions that attain them, and an
//! exhaustive search oracle that certifies tightness at desk scale. All
//! ratios are exact rationals; no floating point is used anywhere.
//!
//! See the `examples/` directory for one runnable example per capability:
//! - `shadow_basics`: shadows, degrees, links, components
//! - `shadow_function`: cascade representations and F_k
//! - `constructions`: every named family generator
//! - `bound_report`: the degree-regime bound classifier
//! - `search_small`: the exhaustive minimizer
//! - `verify_tightness`: end-to-end tightness certification

pub mod bounds;
pub mod cli;
pub mod construct;
pub mod error;
pub mod format;
pub mod hypergraph;
pub mod kknum;
pub mod ratio;
pub mod search;

pub use error::{Error, Result};
pub use hypergraph::{EdgeSet, Hypergraph};
pub use ratio::Ratio;
