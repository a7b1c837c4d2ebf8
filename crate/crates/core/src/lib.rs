//! Exact arithmetic for special Peskine sixfolds: marking lattices and their
//! discriminant forms, associated K3 and cubic criteria, and the trivector
//! pipeline that produces a smooth cubic fourfold.

pub mod associations;
pub mod error;
pub mod fixtures;
pub mod lattice;
pub mod linalg;
pub mod markings;
pub mod numbers;
pub mod poly;
pub mod trivector;

pub use error::{Error, Result};
