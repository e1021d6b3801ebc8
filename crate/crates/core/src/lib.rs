//! Workbench for binary locally repairable codes with availability.
//!
//! The crate builds the code families associated with graphs and convex
//! polyhedra, certifies (r,t)-availability through repair codewords of the
//! dual, validates exact covering systems, evaluates the closed-form rate
//! bounds, and exhaustively enumerates exact covering systems at small
//! parameters to confirm the rate-optimality and uniqueness statements.

pub mod availability;
pub mod bits;
pub mod bounds;
pub mod code;
pub mod constructions;
pub mod error;
pub mod guards;
pub mod search;
pub mod verification;

pub use bits::{BitMatrix, BitVector};
pub use code::{CosetAnalysis, LinearCode, WeightEnumerator};
pub use constructions::{CoveringSystem, PlatonicSolid, Polyhedron, SimpleGraph};
pub use error::{Error, Result};
pub use guards::Guards;
