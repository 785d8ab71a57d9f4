//! Random coedge ideals and their homological invariants.
//!
//! For a graph `G` on `n` vertices, the coedge ideal `I_G` is the squarefree
//! quadratic monomial ideal generated by the non-edges of `G`; equivalently it
//! is the Stanley–Reisner ideal of the clique complex of `G`. This crate
//! samples graphs from seeded Erdős–Rényi models, computes the full graded
//! Betti table of `R/I_G` exactly (over the rationals or a prime field) by
//! summing reduced homology of induced subcomplexes, and derives regularity,
//! projective dimension, depth, Krull dimension, extremal Betti numbers and
//! related invariants from it.
//!
//! Beyond exhaustive computation the crate provides one-sided certificates
//! that scale past the exhaustive range: collapsibility cores for regularity
//! upper bounds, spectral-gap (Garland) certificates for vanishing rational
//! cohomology, cohomological vertex connectivity, and a common-neighbor
//! connectivity certificate. A Monte Carlo harness runs seed-reproducible
//! sweeps over `(n, alpha)` grids and aggregates per-trial statistics.

pub mod algebra;
pub mod collapse;
pub mod complex;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod homology;
pub mod rng;
pub mod spectral;

pub use algebra::{BettiTable, InvariantReport, KappaProfile, KappaValue, PdimBound, Provenance};
pub use complex::{CliqueComplex, FVector};
pub use error::Error;
pub use graph::{EdgeProbability, Graph, GraphModel, RandomGraphSpec, TwoParameterSample};
pub use homology::{BoundaryMatrix, CoefficientField, HomologyProfile};
