//! Exact integer geometry of convex lattice polygons that avoid a sublattice.
//!
//! Given a full-rank sublattice `L` of `ℤ²` with invariant factors `δ | n`,
//! a convex lattice polygon is *`L`-free* when no point of `L` lies in it
//! (boundary included). This crate provides the arithmetic of `L`, an exact
//! polygon kernel, the normal forms used to reduce an `L`-free polygon to a
//! canonical position, the slope machinery for bounding vertex counts, and an
//! exhaustive search that certifies maximal vertex counts on bounded boxes.
//!
//! Everything is integer or rational arithmetic. Overflow is reported, never
//! wrapped. The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_debug_implementations)]

extern crate alloc;

mod error;
pub mod lattice;
pub mod polygon;
pub mod reduction;
pub mod report;
pub mod slopes;
pub mod verifier;

pub use error::{Error, Result};
pub use lattice::{AffineMap, IntMat2, IntVec, Sublattice};
pub use polygon::Polygon;
pub use report::{Check, Relation, Report};
