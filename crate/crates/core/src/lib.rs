//! Exact tooling for dense PG(t−1,2)-free simple binary matroids.
//!
//! A matroid is an edge set `E ⊆ F₂ʳ∖{0}`; `Y = F₂ʳ∖E` is its complement.
//! The crate computes critical numbers, PG-containment, the doubling `M_v`
//! and Walsh–Hadamard spectra exactly, and provides verifiers and a
//! counterexample auditor for the density/critical-number theorems.

pub mod density;
pub mod error;
pub mod format;
pub mod gf2;
pub mod matroid;
pub mod search;
pub mod spectral;
pub mod verify;

pub use density::{DensityParams, Rational};
pub use error::{Error, Result};
pub use gf2::{PointSet, Subspace, Vec2};
pub use matroid::Matroid;
pub use search::{critical_number, contains_pg, max_full_subspace, SearchWitness};
pub use spectral::{fourier_bias, wht, Spectrum};
