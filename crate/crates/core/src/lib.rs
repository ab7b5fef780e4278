//! Preprocessing for optimization instances whose input is partially
//! unknown.
//!
//! Three compressors shrink an instance with declared uncertain parts into a
//! small equivalent instance plus an additive offset `k`:
//!
//! * [`mst`] — spanning trees in graphs where some edge weights are unknown,
//!   plus a shortest-path variant;
//! * [`matroid_compress`] — minimum-weight bases in matroids where some
//!   element weights are unknown;
//! * [`matching`] — maximum bipartite matching where some vertices or edges
//!   may disappear.
//!
//! Once the unknown part materializes, solving the compressed instance and
//! adding `k` recovers the original optimum. The [`oracle`] module holds
//! independent brute-force solvers and a report-producing verifier that
//! certifies a bundle against its instance over every instantiation.

pub mod error;
pub mod graph;
pub mod matching;
pub mod matroid;
pub mod matroid_compress;
pub mod mst;
pub mod oracle;

pub use error::{Error, Result};
