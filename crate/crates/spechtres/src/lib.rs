//! Exact construction and mechanical verification of the minimal free
//! resolutions of polynomial rings modulo Specht ideals for partition
//! shapes (n-2, 2) and (d, d, 1).
//!
//! The crate builds the resolutions over the rationals with explicit
//! Specht-module bases and differential matrices, then certifies the chain
//! condition, minimality, graded Betti numbers, strand exactness, and the
//! Hilbert-series identity with exact arithmetic.

pub mod cli;
pub mod error;
pub mod linalg;
pub mod polyring;
pub mod resolution;
pub mod specht;
pub mod tableau;
pub mod verify;

pub use error::SpechtError;
