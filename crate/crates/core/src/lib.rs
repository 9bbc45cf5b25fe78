//! Degree complexes of monomial ideals and the graded local cohomology of their
//! quotient rings.
//!
//! The crate computes `Δ_γ(I)` straight from its definition and through every
//! block decomposition (sums, intersections, products, powers, symbolic powers,
//! fiber products, mixed products), evaluates Takayama's formula with exact
//! simplicial homology, and scans a finite window of degrees for regularity and
//! depth. [`verify`] checks each decomposition against the direct computation
//! on seeded random instances.

pub mod cohomology;
pub mod complex;
pub mod degree;
pub mod error;
pub mod format;
pub mod ideal;
pub mod primes;
mod rank;
pub mod split;
pub mod verify;
pub mod vertex;

/// Largest supported number of variables; vertex sets are `u32` bitsets.
pub const MAX_VARS: usize = 24;

pub use complex::{HomologyDims, JoinIndex, Kind, SimplicialComplex};
pub use degree::{degree_complex, FiberFaces, PowerMode};
pub use error::{Error, Result};
pub use ideal::{ExponentVector, MonomialIdeal};
pub use primes::{minimal_primes, symbolic_power_ideal, PrimeList};
pub use split::Blocks;
pub use vertex::VertexSet;
