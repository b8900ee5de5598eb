//! Maximum-area anchored rectangle packings in the unit square, computed
//! exactly for small point sets.
//!
//! Given points in `[0,1]^2` including the origin, an anchored rectangle
//! packing assigns each point an axis-parallel rectangle with that point as
//! its lower-left corner, such that no rectangle interior meets another
//! rectangle or contains a point. This crate provides:
//!
//! - exact geometry primitives over arbitrary-precision rationals or `f64`
//!   ([`geometry`], [`scalar`]),
//! - classification of point configurations by the permutation their
//!   y-ranks form ([`perm`]),
//! - a branch-and-bound oracle for the exact maximum packing area
//!   ([`solver`]),
//! - closed-form lower bounds for the named permutation classes, with the
//!   configurations that attain them ([`bounds`]),
//! - derivative-free minimax search over configurations constrained to a
//!   permutation, with a local-minimum certificate ([`minimax`]).
//!
//! The crate is `no_std` (allocation required); IO, file formats, and the
//! command line live in the companion `anchorpack-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod geometry;
pub mod minimax;
pub mod perm;
pub mod scalar;
pub mod solver;

pub use geometry::{
    staircase_region, ConfigError, Configuration, Packing, Point, Rect, RectilinearRegion,
    ValidationReport, Violation,
};
pub use perm::{ClassReport, Permutation};
pub use scalar::{Rational, Scalar};
pub use solver::{solve_max, SolveResult};
