//! Scalar abstraction for the geometry kernel.
//!
//! Every algorithm in this crate is generic over [`Real`], so the same code
//! runs over `f32` or `f64` (the concrete aliases at the crate root fix
//! `f64`, which is what the CLI and the file formats use). An exact-rational
//! scalar would slot in here as well, at the cost of providing the two
//! tolerance constants.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point scalar used for coordinates, weights and coefficients.
///
/// The two tolerances are the knobs the whole crate runs on: `eps_sum`
/// bounds deviations of quantities that are exactly 0 or 1 in exact
/// arithmetic (weight sums, dependency sums), `eps_geom` bounds geometric
/// residuals relative to the coordinate scale of the input set.
pub trait Real:
    Float + NumAssign + FromPrimitive + ToPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
    /// Tolerance for sums of weights/coefficients.
    fn eps_sum() -> Self;

    /// Tolerance for geometric residuals, relative to coordinate scale.
    fn eps_geom() -> Self;

    /// Conversion from an `f64` literal.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("literal not representable in scalar type")
    }

    /// Conversion from a count.
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("count not representable in scalar type")
    }
}

impl Real for f64 {
    fn eps_sum() -> Self {
        1e-9
    }
    fn eps_geom() -> Self {
        1e-9
    }
}

impl Real for f32 {
    fn eps_sum() -> Self {
        1e-4
    }
    fn eps_geom() -> Self {
        1e-4
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerances_positive() {
        assert!(f64::eps_sum() > 0.0);
        assert!(f64::eps_geom() > 0.0);
        assert!(f32::eps_sum() > 0.0);
    }

    #[test]
    fn conversions() {
        assert_eq!(f64::of(2.5), 2.5);
        assert_eq!(f64::of_usize(7), 7.0);
        assert_eq!(f32::of(0.5), 0.5f32);
    }
}
