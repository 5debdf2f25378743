//! Exact invariants and integer nowhere-zero flows for cubic graphs.
//!
//! The crate computes, with exact arithmetic and exhaustive desk-scale
//! search:
//!
//! - perfect matchings, minimum pairwise matching intersections, 2-factors,
//!   oddness, and the odd-circuit cut parameters ([`factors`]);
//! - edge cuts, unit-capacity max-flow/min-cut, and cyclic
//!   edge-connectivity ([`connectivity`]);
//! - proper 3-edge-colorings and the chromatic-index dichotomy
//!   ([`coloring`]);
//! - integer k-flows: verification, the flow-sum operator, canonical
//!   4-flows from edge colorings, exhaustive nowhere-zero flow search, and
//!   flow transport through suppression maps ([`flows`]);
//! - balanced valuations with exact rational weights and exhaustive balance
//!   checking ([`valuation`]);
//! - a constructive pipeline that turns small matching intersections into
//!   verified nowhere-zero 5-flows or balanced-valuation certificates
//!   ([`five_flow`]);
//! - machine-checkable certificate formats plus an independent verifier
//!   that shares nothing with construction beyond parsing
//!   ([`certificate`], [`verify`]).
//!
//! Start with the runnable programs in `examples/`; each demonstrates one
//! capability end to end. The `snarkflow` binary wraps batch analysis,
//! certificate construction, and verification for files of graphs.

pub mod bitset;
pub mod certificate;
pub mod coloring;
pub mod connectivity;
pub mod factors;
pub mod five_flow;
pub mod flows;
pub mod graph;
pub mod io;
pub mod named;
pub mod oracle;
pub mod report;
pub mod valuation;
pub mod verify;

pub use bitset::{BitSet, EdgeSet, VertexSet};
pub use graph::{CubicGraph, EdgeId, Extent, Multigraph, VertexId};
