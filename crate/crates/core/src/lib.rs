//! Hypergraph Lagrangians and colex-initial graphs.
//!
//! * [`edge`] and [`graph`]: r-sets, colex order, `C_{r,m}`, links and
//!   left-compression.
//! * [`poset`]: the descendant order on triples and enumeration of its
//!   down-sets (the left-compressed 3-graphs on `[t]`).
//! * [`lagrangian`]: `λ(G)` by symmetry-reduced multi-start ascent with
//!   stationarity refinement, plus independent cross-checks.
//! * [`verify`]: exhaustive and configuration-based checks that
//!   `λ(G) ≤ λ(C_{3,m})`, and the report formats.

pub mod bits;
pub mod edge;
pub mod error;
pub mod graph;
pub mod lagrangian;
pub mod poset;
pub mod report;
pub mod verify;
pub mod weighting;

pub use edge::{binomial, colex_compare, Edge};
pub use error::{Error, Result};
pub use graph::{RGraph, VertexSet};
pub use lagrangian::{lagrangian, LagrangianResult, Method, SolverOptions};
pub use poset::{enumerate_left_compressed, LeftCompressedEnumerator};
pub use verify::{
    build_configuration, check_theorem_inequality, sweep, verify_cell, ConfigurationSpec, Family,
    VerificationReport, VerifyOptions,
};
pub use weighting::Weighting;
