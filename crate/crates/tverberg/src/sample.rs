//! Deterministic dataset generation.
//!
//! The generator is pinned so datasets are reproducible across platforms and
//! releases: a ChaCha8 stream keyed by the 64-bit seed, uniforms built from
//! the top 53 bits of each 64-bit draw, Gaussians from Box-Muller pairs.
//! The integer grid needs no randomness at all.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{Point, PointSet};

/// Input distributions the CLI and the test matrices use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distribution {
    /// Uniform on `[0,1]^d`.
    UnitCube,
    /// Independent standard normals.
    Gaussian,
    /// The first `n` points of the smallest integer lattice `{1..s}^d`
    /// with `s^d >= n`, in row-major order.
    Grid,
}

impl std::str::FromStr for Distribution {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cube" => Ok(Distribution::UnitCube),
            "gauss" | "gaussian" => Ok(Distribution::Gaussian),
            "grid" => Ok(Distribution::Grid),
            other => Err(Error::Parse(format!("unknown distribution '{other}'"))),
        }
    }
}

/// Uniform in `[0, 1)` from the top 53 bits.
fn unit(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / 9007199254740992.0)
}

/// Uniform in `(0, 1]`, safe for logarithms.
fn unit_open(rng: &mut ChaCha8Rng) -> f64 {
    ((rng.next_u64() >> 11) + 1) as f64 * (1.0 / 9007199254740992.0)
}

/// Generates `n` points in dimension `d`, deterministically in
/// `(dist, d, n, seed)`.
pub fn generate(dist: Distribution, d: usize, n: usize, seed: u64) -> Result<PointSet<f64>> {
    if d < 1 || n < 1 {
        return Err(Error::ParamsOutOfRange(format!(
            "need d >= 1 and n >= 1, got d = {d}, n = {n}"
        )));
    }
    let points = match dist {
        Distribution::UnitCube => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..n)
                .map(|_| Point::new((0..d).map(|_| unit(&mut rng)).collect()))
                .collect()
        }
        Distribution::Gaussian => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut spare: Option<f64> = None;
            let mut next_gauss = move |rng: &mut ChaCha8Rng| {
                if let Some(v) = spare.take() {
                    return v;
                }
                let u1 = unit_open(rng);
                let u2 = unit(rng);
                let r = (-2.0 * u1.ln()).sqrt();
                let theta = 2.0 * std::f64::consts::PI * u2;
                spare = Some(r * theta.sin());
                r * theta.cos()
            };
            (0..n)
                .map(|_| Point::new((0..d).map(|_| next_gauss(&mut rng)).collect()))
                .collect()
        }
        Distribution::Grid => {
            let mut side: u128 = 1;
            while side.pow(d as u32) < n as u128 {
                side += 1;
            }
            (0..n as u128)
                .map(|j| {
                    Point::new(
                        (0..d)
                            .map(|c| {
                                let div = side.pow((d - 1 - c) as u32);
                                ((j / div) % side + 1) as f64
                            })
                            .collect(),
                    )
                })
                .collect()
        }
    };
    PointSet::from_points(points)
}
