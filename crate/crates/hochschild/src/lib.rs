//! An exact-arithmetic engine for Hochschild cohomology and homology of
//! finite-dimensional associative algebras given by structure constants,
//! including the full chain-level Gerstenhaber apparatus (cup, circ, bullet,
//! star and cap products and their brackets), singular Hochschild cohomology
//! computed by stabilizing a syzygy direct system, and the
//! Batalin-Vilkovisky structure carried by symmetric algebras.
//!
//! Entry points:
//! * [`presets`] — the built-in desk-scale algebras,
//! * [`complexes::Tower`] — per-algebra cache of bar data and cohomology,
//! * [`singular`] — direct systems, stabilization and singular classes,
//! * [`bv`] — symmetric forms, duality and the BV operators,
//! * [`cli`] — the batch interface used by the `hochschild` binary.
//!
//! The runnable examples under `examples/` walk through each capability.

pub mod error;
pub mod field;
pub mod matrix;
pub mod subspace;
pub mod algebra;
pub mod presets;
pub mod complexes;
pub mod gerstenhaber;
pub mod random;

pub use error::{Error, Result};
