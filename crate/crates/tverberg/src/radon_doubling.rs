//! Radon-doubling certificate engine.
//!
//! State is a set of buckets holding pruned certificates of depth exactly
//! `2^k`, all over pairwise disjoint ground sets. Whenever `d + 2`
//! certificates share a level, the Radon partition of their centers acts as
//! a depth-2 outer certificate that combines them into one certificate one
//! level up. Points that pruning drops re-enter level 0 as fresh singleton
//! certificates, so every input point stays stored in exactly one
//! certificate; that conservation is what forces the deepest level high
//! enough for the `⌈n/2(d+1)^2⌉` output bound.

use std::collections::VecDeque;

use crate::algos::combine;
use crate::caratheodory::radon_partition;
use crate::certificate::{Part, TverbergCertificate};
use crate::error::{Error, Result};
use crate::geometry::PointSet;
use crate::scalar::Real;

/// Buckets of pruned certificates keyed by depth level `2^k`, FIFO within a
/// level.
#[derive(Clone, Debug)]
pub struct DepthBuckets<T> {
    levels: Vec<VecDeque<TverbergCertificate<T>>>,
}

impl<T: Real> DepthBuckets<T> {
    pub fn new() -> Self {
        Self { levels: Vec::new() }
    }

    pub fn push(&mut self, level: usize, cert: TverbergCertificate<T>) {
        while self.levels.len() <= level {
            self.levels.push(VecDeque::new());
        }
        self.levels[level].push_back(cert);
    }

    /// Lowest level holding at least `need` certificates.
    pub fn lowest_ready(&self, need: usize) -> Option<usize> {
        self.levels.iter().position(|q| q.len() >= need)
    }

    /// Pops the `k` oldest certificates at a level.
    pub fn take(&mut self, level: usize, k: usize) -> Vec<TverbergCertificate<T>> {
        self.levels[level].drain(..k).collect()
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(|q| q.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The oldest certificate at the highest non-empty level.
    pub fn deepest(mut self) -> Option<TverbergCertificate<T>> {
        while let Some(q) = self.levels.last_mut() {
            if let Some(cert) = q.pop_front() {
                return Some(cert);
            }
            self.levels.pop();
        }
        None
    }

    /// Full bucket invariant: depth at least `2^k`, pruned, grounds pairwise
    /// disjoint. Quadratic in the stored ids; meant for tests.
    pub fn check_invariants(&self, ps: &PointSet<T>) -> Result<()> {
        let mut seen = std::collections::BTreeSet::new();
        for (level, q) in self.levels.iter().enumerate() {
            for cert in q {
                if cert.depth() < (1usize << level) {
                    return Err(Error::InvalidWitness(format!(
                        "bucket {level} holds a certificate of depth {}",
                        cert.depth()
                    )));
                }
                if !cert.pruned() {
                    return Err(Error::InvalidWitness("bucket holds an unpruned certificate".into()));
                }
                for id in cert.ground_ids() {
                    if ps.point_by_id(id).is_none() || !seen.insert(id) {
                        return Err(Error::InvalidWitness(format!(
                            "ground id {id} duplicated or unknown"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

impl<T: Real> Default for DepthBuckets<T> {
    fn default() -> Self {
        Self::new()
    }
}

/// Merges two sorted id vectors.
fn merge_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Approximate Tverberg point of depth `⌈n/2(d+1)^2⌉` by Radon doubling.
pub fn ms_tverberg<T: Real>(ps: &PointSet<T>) -> Result<TverbergCertificate<T>> {
    if ps.is_empty() {
        return Err(Error::EmptyInput);
    }
    let d = ps.dim();
    let need = d + 2;

    let mut buckets = DepthBuckets::new();
    for (id, p) in ps.iter() {
        let center = crate::geometry::Point::from_slice(p);
        buckets.push(0, TverbergCertificate::new(center, vec![Part::singleton(id)], true));
    }

    while let Some(level) = buckets.lowest_ready(need) {
        let batch = buckets.take(level, need);
        let centers =
            PointSet::from_points(batch.iter().map(|c| c.center().clone()).collect())?;
        let radon = radon_partition(&centers)?;
        let outer = TverbergCertificate::new(
            radon.point,
            vec![
                Part::new(radon.side_a, radon.witness_a),
                Part::new(radon.side_b, radon.witness_b),
            ],
            true,
        );

        let mut before: Vec<usize> = Vec::new();
        for cert in &batch {
            before = merge_sorted(&before, &cert.ground_ids());
        }
        let combined = combine(ps, &outer, &batch)?;
        debug_assert_eq!(combined.depth(), 2 * (1usize << level));
        debug_assert!(combined.pruned());

        // Recycle what pruning dropped as fresh singletons.
        let after = combined.ground_ids();
        let mut j = 0;
        for &id in &before {
            while j < after.len() && after[j] < id {
                j += 1;
            }
            if j >= after.len() || after[j] != id {
                let p = ps.point_by_id(id).expect("recycled id came from this set");
                let center = crate::geometry::Point::from_slice(p);
                buckets.push(0, TverbergCertificate::new(center, vec![Part::singleton(id)], true));
            }
        }
        buckets.push(level + 1, combined);
    }

    buckets.deepest().ok_or(Error::EmptyInput)
}
