//! Approximate Tverberg points with certified partitions.
//!
//! A Tverberg partition splits a point set into parts whose convex hulls
//! share a common point; such a point is also an approximate centerpoint.
//! This crate computes them in time linear in the number of points for any
//! fixed dimension, and — unlike sampling-based centerpoint methods — every
//! answer ships with an explicit certificate: a disjoint partition plus one
//! convex-combination witness per part, checkable independently of the
//! algorithm that produced it.
//!
//! Solvers, from simplest to strongest guarantee per unit work:
//! - [`median_partition_1d`]: the 1-D base case, depth `⌈n/2⌉`;
//! - [`simple_tverberg`]: recursion on the dimension, depth `⌈n/2^d⌉`;
//! - [`ms_tverberg`]: Radon doubling, depth `⌈n/2(d+1)^2⌉`;
//! - [`better_tverberg`]: collect/solve/combine hybrid, depth
//!   `⌈n/2(d+1)^2⌉` (brute mode) or `⌈n/4(d+1)^3⌉` (doubling mode);
//! - [`bootstrap_tverberg`]: dimension-halving recursion, depth
//!   `⌈n/4(d+1)^3⌉` in `d^{O(log d)} n` time.
//!
//! Everything is generic over the scalar via [`Real`]; the `*64` aliases
//! below pin `f64`, the default arithmetic.

pub mod algos;
pub mod caratheodory;
pub mod certificate;
pub mod dimension_reduction;
pub mod error;
pub mod geometry;
pub mod io;
pub mod linalg;
pub mod radon_doubling;
pub mod sample;
pub mod scalar;
pub mod select;
mod simplex;
pub mod verify;
pub mod witness;

pub use algos::{
    better_tverberg, better_tverberg_auto, brute_force_tverberg, collect, combine,
    lift_partition, median_partition_1d, simple_tverberg, CollectParams, SmallSolver,
    DEFAULT_BRUTE_CAP,
};
pub use caratheodory::{prune, prune_certificate, radon_partition, RadonPartition};
pub use certificate::{Part, TverbergCertificate, TverbergFlatCertificate};
pub use dimension_reduction::{bootstrap_tverberg, lift_through_flat, split_dimension_tverberg};
pub use error::{Error, Result};
pub use geometry::{Flat, Point, PointSet};
pub use linalg::{affine_dependency, AffineDependency};
pub use radon_doubling::{ms_tverberg, DepthBuckets};
pub use sample::{generate, Distribution};
pub use scalar::Real;
pub use select::select_rank;
pub use verify::{
    default_tolerance, hull_membership, verify_certificate, Check, CheckResult, ValidationReport,
};
pub use witness::Witness;

/// Double-precision aliases for the common types.
pub type Point64 = Point<f64>;
pub type PointSet64 = PointSet<f64>;
pub type Flat64 = Flat<f64>;
pub type Witness64 = Witness<f64>;
pub type Certificate64 = TverbergCertificate<f64>;
pub type FlatCertificate64 = TverbergFlatCertificate<f64>;
