//! Tverberg certificates: a center plus disjoint parts with witnesses.

use std::collections::BTreeSet;

use crate::geometry::{Flat, Point};
use crate::scalar::Real;
use crate::witness::Witness;

/// One part of a partition: the ids it owns and the convex combination
/// placing the certificate center inside its hull.
#[derive(Clone, Debug, PartialEq)]
pub struct Part<T> {
    pub ids: Vec<usize>,
    pub witness: Witness<T>,
}

impl<T: Real> Part<T> {
    pub fn new(mut ids: Vec<usize>, witness: Witness<T>) -> Self {
        ids.sort_unstable();
        Self { ids, witness }
    }

    pub fn singleton(id: usize) -> Self {
        Self { ids: vec![id], witness: Witness::singleton(id) }
    }
}

/// A certified approximate Tverberg point: `center` lies in the convex hull
/// of every part, witnessed explicitly. The parts are pairwise disjoint
/// subsets of the source point set; `depth` is the number of parts. If
/// `pruned`, every part has at most `d + 1` ids.
#[derive(Clone, Debug)]
pub struct TverbergCertificate<T> {
    center: Point<T>,
    parts: Vec<Part<T>>,
    depth: usize,
    pruned: bool,
}

impl<T: Real> TverbergCertificate<T> {
    pub fn new(center: Point<T>, parts: Vec<Part<T>>, pruned: bool) -> Self {
        let depth = parts.len();
        Self { center, parts, depth, pruned }
    }

    /// Constructor that preserves a recorded depth field (for data loaded
    /// from files, where the field may disagree with the part count and
    /// validation must be able to see that).
    pub fn from_raw(center: Point<T>, parts: Vec<Part<T>>, depth: usize, pruned: bool) -> Self {
        Self { center, parts, depth, pruned }
    }

    pub fn center(&self) -> &Point<T> {
        &self.center
    }

    pub fn parts(&self) -> &[Part<T>] {
        &self.parts
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn pruned(&self) -> bool {
        self.pruned
    }

    /// Union of all part ids, sorted.
    pub fn ground_ids(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self
            .parts
            .iter()
            .flat_map(|p| p.ids.iter().copied())
            .collect();
        set.into_iter().collect()
    }

    /// Certificate over the first `r` parts only.
    pub fn truncated(&self, r: usize) -> Self {
        debug_assert!(r >= 1 && r <= self.parts.len());
        Self::new(self.center.clone(), self.parts[..r].to_vec(), self.pruned)
    }

    pub fn max_part_len(&self) -> usize {
        self.parts.iter().map(|p| p.ids.len()).max().unwrap_or(0)
    }
}

/// A Tverberg flat certificate: every part's hull meets `flat`, at the
/// recorded intersection point.
#[derive(Clone, Debug)]
pub struct TverbergFlatCertificate<T> {
    pub flat: Flat<T>,
    pub parts: Vec<Part<T>>,
    pub intersection_points: Vec<Point<T>>,
}

impl<T: Real> TverbergFlatCertificate<T> {
    pub fn depth(&self) -> usize {
        self.parts.len()
    }
}
