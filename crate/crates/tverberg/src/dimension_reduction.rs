//! Lifting through flats, the dimension-splitting recursion, and the
//! bootstrapped linear-time solver.
//!
//! Projection flats are coordinate-aligned throughout: a `δ`-dimensional
//! projection keeps the first `δ` coordinates and its orthogonal complement
//! keeps the rest, so projections are index operations and lifted centers
//! are coordinate concatenations.

use crate::algos::{collect, combine, median_partition_1d, CollectParams};
use crate::caratheodory::prune_certificate;
use crate::certificate::{Part, TverbergCertificate, TverbergFlatCertificate};
use crate::error::{Error, Result};
use crate::geometry::{Flat, Point, PointSet};
use crate::radon_doubling::ms_tverberg;
use crate::scalar::Real;
use crate::witness::Witness;

/// Lifts a pruned certificate of the projection `pr_h(P)` to a Tverberg flat
/// certificate for `P`: the `(d-k)`-flat through the lifted center
/// orthogonal to `h` meets every part's hull, at the recorded intersection
/// points (the projection weights applied to the unprojected points). Depth
/// and partition are unchanged.
pub fn lift_through_flat<T: Real>(
    ps: &PointSet<T>,
    h: &Flat<T>,
    proj: &TverbergCertificate<T>,
) -> Result<TverbergFlatCertificate<T>> {
    let d = ps.dim();
    if h.ambient_dim() != d {
        return Err(Error::DimensionMismatch { expected: d, got: h.ambient_dim() });
    }
    if proj.center().dim() != h.dim() {
        return Err(Error::DimensionMismatch { expected: h.dim(), got: proj.center().dim() });
    }
    if !proj.pruned() {
        return Err(Error::InvalidWitness("projection certificate must be pruned".into()));
    }

    let lifted_center = h.lift(proj.center())?;
    let complement = h.orthonormal_complement();
    let flat = Flat::new(lifted_center, complement)?;

    let mut intersection_points = Vec::with_capacity(proj.parts().len());
    for part in proj.parts() {
        intersection_points.push(part.witness.combination(ps)?);
    }
    Ok(TverbergFlatCertificate { flat, parts: proj.parts().to_vec(), intersection_points })
}

/// Reduces a `d`-dimensional instance to `⌈d/δ⌉` instances of dimension at
/// most `δ`: solve the prefix-coordinate projection with `inner`, lift to a
/// Tverberg flat, recurse on the intersection points inside the orthogonal
/// flat, then substitute each intersection point by its part. If `inner`
/// guarantees depth `⌈m/ρ⌉`, the result has depth `⌈n/ρ^{⌈d/δ⌉}⌉`.
pub fn split_dimension_tverberg<T, F>(
    ps: &PointSet<T>,
    delta: usize,
    inner: &mut F,
) -> Result<TverbergCertificate<T>>
where
    T: Real,
    F: FnMut(&PointSet<T>) -> Result<TverbergCertificate<T>>,
{
    if ps.is_empty() {
        return Err(Error::EmptyInput);
    }
    let d = ps.dim();
    if delta == 0 {
        return Err(Error::ParamsOutOfRange("delta must be positive".into()));
    }
    if d <= delta {
        let cert = inner(ps)?;
        return if cert.pruned() { Ok(cert) } else { prune_certificate(ps, &cert) };
    }

    let proj_set = ps.project_prefix(delta)?;
    let mut head = inner(&proj_set)?;
    if !head.pruned() {
        head = prune_certificate(&proj_set, &head)?;
    }
    let h = Flat::coordinate_prefix(d, delta);
    let flat_cert = lift_through_flat(ps, &h, &head)?;

    // The intersection points live in the orthogonal flat; their intrinsic
    // coordinates are the trailing d - delta coordinates.
    let tails: Vec<Point<T>> = flat_cert
        .intersection_points
        .iter()
        .map(|q| q.suffix_from(delta))
        .collect();
    let qset = PointSet::from_points(tails)?;
    let tail_cert = split_dimension_tverberg(&qset, delta, inner)?;

    // Substitute each intersection point by its part.
    let mut parts = Vec::with_capacity(tail_cert.parts().len());
    for tail_part in tail_cert.parts() {
        let mut ids = Vec::new();
        let mut witness = Witness::empty();
        for &qi in &tail_part.ids {
            let source = &flat_cert.parts[qi];
            ids.extend_from_slice(&source.ids);
            let mu = tail_part.witness.get(qi);
            if mu > T::zero() {
                witness.add_scaled(mu, &source.witness);
            }
        }
        parts.push(Part::new(ids, witness));
    }
    let center = head.center().concat(tail_cert.center());
    let raw = TverbergCertificate::new(center, parts, false);
    prune_certificate(ps, &raw)
}

/// Divisor of the half-dimension guarantee, `4(⌈d/2⌉+1)^3`; its square is
/// the splitting divisor `16(⌈d/2⌉+1)^6`.
fn half_divisor(d: usize) -> usize {
    let half = d.div_ceil(2);
    4 * (half + 1).pow(3)
}

/// Strongest solver with guarantee at least `⌈m/4(h+1)^3⌉` in dimension `h`.
///
/// Below the crossover `2^h <= 4(h+1)^3` the dimension recursion's
/// `⌈m/2^h⌉` dominates the required half-dimension guarantee, so it serves
/// as the half solver; past it the bootstrap recurses on itself.
fn half_solver<T: Real>(sub: &PointSet<T>) -> Result<TverbergCertificate<T>> {
    let h = sub.dim();
    let simple_wins = match 1u128.checked_shl(h as u32) {
        Some(pow) => pow <= 4 * (h as u128 + 1).pow(3),
        None => false,
    };
    if simple_wins {
        crate::algos::simple_tverberg(sub)
    } else {
        bootstrap_tverberg(sub)
    }
}

/// Approximate Tverberg point of depth `⌈n/4(d+1)^3⌉` in time linear in `n`.
///
/// Recursion on the dimension: split into two half-dimension solves, collect
/// disjoint certificates at the combined divisor, run the Radon-doubling
/// engine on the collected centers, and multiply the depths out. For inputs
/// small enough that the collection target depth degenerates to 1, the
/// collect/solve/combine hybrid already achieves the same `⌈n/4(d+1)^3⌉`
/// bound, so it handles that regime.
pub fn bootstrap_tverberg<T: Real>(ps: &PointSet<T>) -> Result<TverbergCertificate<T>> {
    if ps.is_empty() {
        return Err(Error::EmptyInput);
    }
    let d = ps.dim();
    if d == 1 {
        return median_partition_1d(ps);
    }
    let n = ps.len();
    let half = d.div_ceil(2);
    let rho = half_divisor(d) * half_divisor(d);

    if n <= 2 * rho {
        // Collection target depth would be 1.
        return crate::algos::better_tverberg(
            ps,
            crate::algos::SmallSolver::RadonDoubling,
            crate::algos::DEFAULT_BRUTE_CAP,
        );
    }

    let params = CollectParams::new(n, T::of(2.0), T::of_usize(rho))?;
    let collected = collect(ps, &params, |sub: &PointSet<T>| {
        split_dimension_tverberg(sub, half, &mut half_solver)
    })?;
    let certs: Vec<TverbergCertificate<T>> = collected.into_iter().map(|(_, c)| c).collect();
    let centers = PointSet::from_points(certs.iter().map(|c| c.center().clone()).collect())?;
    let outer = ms_tverberg(&centers)?;
    combine(ps, &outer, &certs)
}
