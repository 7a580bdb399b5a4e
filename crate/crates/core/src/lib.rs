//! Spectral analysis of signed graphs centered on the Estrada index.
//!
//! A signed graph is a simple graph whose edges carry a sign in {-1, +1}.
//! This crate provides:
//!
//! - [`graph`]: the signed-graph data model, switching, balance, cycle signs,
//!   induced subgraphs and the pairing property;
//! - [`spectra`]: dense symmetric eigenvalues (cyclic Jacobi) and exact
//!   integer characteristic polynomials via two independent algorithms;
//! - [`estrada`]: the Estrada index, spectral moments, moment-series
//!   evaluation, balance ratio and cycle asymptotics;
//! - [`families`]: generators for the named extremal families (paths, stars,
//!   cycles, pendant cycles, complete bipartite patterns, bowtie and diamond
//!   constructions);
//! - [`enumerate`]: exhaustive small-order generation up to isomorphism and
//!   switching, filters, and extremal search.

pub mod enumerate;
pub mod estrada;
pub mod families;
pub mod graph;
pub mod spectra;

pub use graph::{SignedGraph, SwitchingCertificate};
pub use spectra::{CharPoly, Spectrum};

/// Default eigensolver tolerance: off-diagonal Frobenius norm target.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Default tolerance under which two Estrada index values count as tied.
pub const DEFAULT_TIE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("vertex {v} out of range for graph of order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge ({u}, {v}) has sign {sign}, expected -1 or +1")]
    BadSign { u: usize, v: usize, sign: i8 },
    #[error("({u}, {v}) is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("vertex sequence is not a simple cycle: {reason}")]
    NotACycle { reason: String },
    #[error("eigensolver did not converge after {sweeps} sweeps (residual {residual:.3e})")]
    NoConvergence { sweeps: usize, residual: f64 },
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error("order {n} exceeds the enumeration guard {guard}; raise the guard explicitly to proceed")]
    GuardExceeded { n: usize, guard: usize },
    #[error("empty candidate set")]
    EmptyCandidates,
}

pub type Result<T> = std::result::Result<T, Error>;
