//! Radon-point computation and Carathéodory pruning.
//!
//! Pruning repeatedly resolves an affine dependency of `d + 2` support
//! points against the witness weights with a simplex-style ratio test, so a
//! convex combination over `m` points shrinks to at most `d + 1` points in
//! `O(d^3 m)` time while reproducing the same center.

use crate::certificate::{Part, TverbergCertificate};
use crate::error::{Error, Result};
use crate::geometry::{Point, PointSet};
use crate::linalg::{affine_dependency, dependency_coefficients};
use crate::scalar::Real;
use crate::witness::Witness;

/// Result of splitting `d + 2` points into two sides with intersecting hulls.
#[derive(Clone, Debug)]
pub struct RadonPartition<T> {
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
    pub point: Point<T>,
    pub witness_a: Witness<T>,
    pub witness_b: Witness<T>,
}

/// Radon partition of exactly `d + 2` points.
///
/// Side A holds the ids with positive dependency coefficient, side B the
/// rest (zero-coefficient ids land in B). Both sides' witnesses reproduce
/// the same point; it is returned as the average of the two evaluations.
pub fn radon_partition<T: Real>(ps: &PointSet<T>) -> Result<RadonPartition<T>> {
    let d = ps.dim();
    if ps.len() != d + 2 {
        return Err(Error::ParamsOutOfRange(format!(
            "radon partition needs exactly d + 2 = {} points, got {}",
            d + 2,
            ps.len()
        )));
    }
    let dep = affine_dependency(ps)?;

    let mut side_a = Vec::new();
    let mut side_b = Vec::new();
    let mut pos_sum = T::zero();
    let mut neg_sum = T::zero();
    for (id, g) in dep.iter() {
        if g > T::zero() {
            side_a.push(id);
            pos_sum += g;
        } else {
            side_b.push(id);
            neg_sum += -g;
        }
    }
    if side_a.is_empty() || side_b.is_empty() || pos_sum <= T::zero() || neg_sum <= T::zero() {
        return Err(Error::NumericallySingular);
    }

    let witness_a = Witness::from_entries(side_a.iter().map(|&id| (id, dep.get(id) / pos_sum)));
    let witness_b = Witness::from_entries(side_b.iter().map(|&id| (id, -dep.get(id) / neg_sum)));

    let pa = witness_a.combination(ps)?;
    let pb = witness_b.combination(ps)?;
    let mut point = pa;
    point.add_scaled(T::one(), &pb);
    let point = point.scaled(T::of(0.5));

    Ok(RadonPartition { side_a, side_b, point, witness_a, witness_b })
}

/// Statistics of one elimination round, exposed so tests can check the
/// pivot-step invariant.
#[derive(Clone, Copy, Debug)]
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) struct PruneRound<T> {
    pub min_weight_before_clamp: T,
    pub sum_before_renormalize: T,
    pub removed: usize,
}

/// One ratio-test elimination on the current support weights (id-sorted,
/// all `> eps_sum`, more than `d + 1` of them).
pub(crate) fn prune_round<T: Real>(
    ps: &PointSet<T>,
    weights: &mut Vec<(usize, T)>,
) -> Result<PruneRound<T>> {
    let d = ps.dim();
    let k = d + 2;
    let sel_points: Vec<&[T]> = weights[..k]
        .iter()
        .map(|&(id, _)| {
            ps.point_by_id(id)
                .ok_or_else(|| Error::InvalidWitness(format!("id {id} not in point set")))
        })
        .collect::<Result<_>>()?;
    let mut gamma = dependency_coefficients(&sel_points)?;

    // Ratio tests for both orientations; the smaller step wins, ties keep
    // the canonical orientation. Ties within a test resolve to the lowest id
    // by scan order.
    let mut t_pos = T::infinity();
    let mut t_neg = T::infinity();
    for (j, &(_, w)) in weights[..k].iter().enumerate() {
        if gamma[j] > T::zero() {
            t_pos = t_pos.min(w / gamma[j]);
        } else if gamma[j] < T::zero() {
            t_neg = t_neg.min(w / -gamma[j]);
        }
    }
    if !t_pos.is_finite() || !t_neg.is_finite() {
        return Err(Error::NumericallySingular);
    }
    let t = if t_neg < t_pos {
        for g in gamma.iter_mut() {
            *g = -*g;
        }
        t_neg
    } else {
        t_pos
    };

    let mut min_w = T::infinity();
    for (j, entry) in weights[..k].iter_mut().enumerate() {
        entry.1 -= t * gamma[j];
        min_w = min_w.min(entry.1);
    }

    let before = weights.len();
    weights.retain(|&(_, w)| w > T::eps_sum());
    let removed = before - weights.len();

    let sum: T = weights.iter().map(|&(_, w)| w).sum();
    for entry in weights.iter_mut() {
        entry.1 /= sum;
    }

    Ok(PruneRound { min_weight_before_clamp: min_w, sum_before_renormalize: sum, removed })
}

/// Shrinks a witnessed part to at most `d + 1` points reproducing the same
/// center. Parts already small enough are returned unchanged.
pub fn prune<T: Real>(
    part_ids: &[usize],
    witness: &Witness<T>,
    ps: &PointSet<T>,
) -> Result<(Vec<usize>, Witness<T>)> {
    let d = ps.dim();
    let mut ids = part_ids.to_vec();
    ids.sort_unstable();
    witness.validate(&ids)?;
    if ids.len() <= d + 1 {
        return Ok((ids, witness.clone()));
    }

    // Work on the support only; clean out numerically dead entries first.
    let mut weights: Vec<(usize, T)> = witness
        .iter()
        .filter(|&(_, w)| w > T::eps_sum())
        .collect();
    if weights.len() < witness.len() {
        let sum: T = weights.iter().map(|&(_, w)| w).sum();
        for entry in weights.iter_mut() {
            entry.1 /= sum;
        }
    }
    while weights.len() > d + 1 {
        let round = prune_round(ps, &mut weights)?;
        if round.removed == 0 {
            return Err(Error::NumericallySingular);
        }
    }
    let out_ids: Vec<usize> = weights.iter().map(|&(id, _)| id).collect();
    let out_witness = Witness::from_entries(weights);
    Ok((out_ids, out_witness))
}

/// Prunes every part of a certificate, keeping center and part order.
pub fn prune_certificate<T: Real>(
    ps: &PointSet<T>,
    cert: &TverbergCertificate<T>,
) -> Result<TverbergCertificate<T>> {
    let mut parts = Vec::with_capacity(cert.parts().len());
    for part in cert.parts() {
        let (ids, witness) = prune(&part.ids, &part.witness, ps)?;
        parts.push(Part { ids, witness });
    }
    Ok(TverbergCertificate::new(cert.center().clone(), parts, true))
}
