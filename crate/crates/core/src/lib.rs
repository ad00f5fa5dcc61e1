//! Exact computations with modules over bound quiver algebras, aimed at the
//! Auslander algebra `A_t` of `K[x]/(x^t)`: tilting and support τ-tilting
//! modules, exceptional and τ-exceptional sequences, and their mutations.
//!
//! Conventions used throughout:
//!
//! * Vertices are 0-based in the API and printed 1-based.
//! * Paths compose left to right: `pq` means "first `p`, then `q`".
//! * Modules are right modules. An arrow `α: i → j` acts by a matrix of shape
//!   `dim M_j × dim M_i`, so the relation `a1 b1 = 0` reads `M_b1 · M_a1 = 0`.

#![allow(clippy::needless_range_loop)]

pub mod bqa;
pub mod config;
pub mod error;
pub mod exactlin;
pub mod homology;
pub mod json;
pub mod modrep;
pub mod sequences;
pub mod tautilt;
pub mod torsion;

pub use error::{Error, Result};
