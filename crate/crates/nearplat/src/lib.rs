//! Plane graphs as rotation systems, with the machinery needed to build,
//! classify, transform and exhaustively enumerate k-regular plane graphs
//! whose face multiset has exactly two exceptional entries.
//!
//! The crate is organized around six modules:
//!
//! - [`planegraph`]: the core [`planegraph::PlaneGraph`] type (darts, edge
//!   involution, vertex rotations), face tracing, block structure, canonical
//!   codes and the `.rot` text format.
//! - [`classify`]: nearly-Platonic classification, face distance, touching
//!   status, saturation predicates and block signatures.
//! - [`families`]: generators for the five Platonic solids and the fourteen
//!   infinite families of two-exception graphs, plus their building blocks.
//! - [`surgery`]: boundary-edge relocation, chords, vertex splitting and
//!   amalgamation, edge cutting and cyclic gluing, and the barrel
//!   reduce/expand pair.
//! - [`enumerate`]: isomorph-free exhaustive generation of connected simple
//!   k-regular plane graphs up to a vertex bound, with an independent
//!   brute-force oracle.
//! - [`verify`]: the empirical theorem harness driving enumeration through
//!   classification and family identification.

#![forbid(unsafe_code)]

pub mod classify;
pub mod enumerate;
pub mod families;
pub mod planegraph;
pub mod surgery;
pub mod verify;

pub use planegraph::PlaneGraph;
