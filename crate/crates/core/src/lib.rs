//! Finite, exhaustively checkable models of noncommutative tensor
//! triangulated categories and their point-free spectral theory.
//!
//! The crate is `no_std` and only needs `alloc`. Every structure is finite
//! and small, so each construction is accompanied by a brute-force check:
//!
//! * [`tensys`]: finite tensor systems (objects, shift, sum, tensor,
//!   triangles, summands), builtins and a seeded generator.
//! * [`ideals`]: generated thick tensor ideals, primes, radicals.
//! * [`frames`]: finite frames, their points, and the Zariski frame of
//!   radical ideals.
//! * [`spectra`]: finite spaces, the spectrum of prime ideals, Hochster
//!   duality and homeomorphism search.
//! * [`support`]: frame-valued and space-valued support data and their
//!   universal properties.
//! * [`verify`]: the combined theorem suite run per system.

#![no_std]

extern crate alloc;

pub mod bits;
pub mod error;
pub mod frames;
pub mod ideals;
pub mod report;
pub mod spectra;
pub mod support;
pub mod tensys;
pub mod verify;

pub use bits::BitSet;
pub use error::{Error, Result};
pub use ideals::{Ideal, IdealLattice, RadicalMethod};
pub use report::{TheoremReport, ValidationReport, Violation};
pub use tensys::{ObjectId, TensorSystem};
