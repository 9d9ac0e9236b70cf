//! Exact Chen–Ruan orbifold cohomology for finite-group orbifold models.
//!
//! The crate computes twisted sectors and multi-sectors of finite matrix
//! groups, degree-shifting numbers (ages), orbifold Betti and Hodge tables,
//! Poincaré pairings and orbifold cup-product rings, together with the index
//! bookkeeping of orbifold bundles over 2-orbifolds. All arithmetic is exact:
//! rationals are arbitrary precision and group elements live in cyclotomic
//! fields.

pub mod cyclo;
pub mod error;

pub use error::{Error, Result};
pub mod group;
pub mod sectors;
pub mod io;
pub mod catalog;
pub mod models;
pub mod ring;
pub mod orbicurve;
pub mod cli;
