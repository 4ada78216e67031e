//! Convex-combination witnesses: the certificate currency.

use crate::error::{Error, Result};
use crate::geometry::{Point, PointSet};
use crate::scalar::Real;

/// Weights over point ids certifying that their combination hits a target
/// point. Entries are kept sorted by id with at most one entry per id;
/// certificates hold one witness per part, so the representation is a plain
/// sorted vector rather than a tree.
///
/// Construction helpers drop non-positive weights so the support is exactly
/// the entry list; [`Witness::from_raw`] keeps entries as given so that data
/// loaded from files can be rejected by validation instead of silently
/// repaired.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness<T> {
    entries: Vec<(usize, T)>,
}

fn normalize_entries<T: Real>(mut entries: Vec<(usize, T)>) -> Vec<(usize, T)> {
    entries.sort_unstable_by_key(|&(id, _)| id);
    let mut out: Vec<(usize, T)> = Vec::with_capacity(entries.len());
    for (id, w) in entries {
        match out.last_mut() {
            Some(last) if last.0 == id => last.1 += w,
            _ => out.push((id, w)),
        }
    }
    out
}

impl<T: Real> Witness<T> {
    pub fn empty() -> Self {
        Self { entries: Vec::new() }
    }

    /// Weight one on a single id.
    pub fn singleton(id: usize) -> Self {
        Self { entries: vec![(id, T::one())] }
    }

    /// Keeps only strictly positive weights (duplicates accumulate first).
    pub fn from_entries<I: IntoIterator<Item = (usize, T)>>(iter: I) -> Self {
        let mut entries = normalize_entries(iter.into_iter().collect());
        entries.retain(|&(_, w)| w > T::zero());
        Self { entries }
    }

    /// Keeps everything, accumulating duplicate ids.
    pub fn from_raw<I: IntoIterator<Item = (usize, T)>>(iter: I) -> Self {
        Self { entries: normalize_entries(iter.into_iter().collect()) }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, id: usize) -> T {
        match self.entries.binary_search_by_key(&id, |&(i, _)| i) {
            Ok(pos) => self.entries[pos].1,
            Err(_) => T::zero(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, T)> + '_ {
        self.entries.iter().copied()
    }

    /// Ids with strictly positive weight.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries
            .iter()
            .filter(|&&(_, w)| w > T::zero())
            .map(|&(id, _)| id)
    }

    pub fn sum(&self) -> T {
        self.entries.iter().map(|&(_, w)| w).sum()
    }

    /// `self += factor * other` by sorted merge, keeping only positive terms.
    pub fn add_scaled(&mut self, factor: T, other: &Witness<T>) {
        if factor <= T::zero() || other.is_empty() {
            return;
        }
        if self.entries.is_empty() {
            self.entries = other.entries.iter().map(|&(id, w)| (id, factor * w)).collect();
            return;
        }
        let mut merged = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    merged.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    merged.push((b[j].0, factor * b[j].1));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    merged.push((a[i].0, a[i].1 + factor * b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        merged.extend_from_slice(&a[i..]);
        merged.extend(b[j..].iter().map(|&(id, w)| (id, factor * w)));
        self.entries = merged;
    }

    /// Single-pass sorted merge `wa * a + wb * b` (nonpositive factors drop
    /// their side).
    pub fn interpolate(wa: T, a: &Witness<T>, wb: T, b: &Witness<T>) -> Self {
        if wa <= T::zero() {
            return Self {
                entries: b.entries.iter().map(|&(id, w)| (id, wb * w)).collect(),
            };
        }
        if wb <= T::zero() {
            return Self {
                entries: a.entries.iter().map(|&(id, w)| (id, wa * w)).collect(),
            };
        }
        let mut entries = Vec::with_capacity(a.entries.len() + b.entries.len());
        let (mut i, mut j) = (0, 0);
        while i < a.entries.len() && j < b.entries.len() {
            match a.entries[i].0.cmp(&b.entries[j].0) {
                std::cmp::Ordering::Less => {
                    entries.push((a.entries[i].0, wa * a.entries[i].1));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    entries.push((b.entries[j].0, wb * b.entries[j].1));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    entries.push((a.entries[i].0, wa * a.entries[i].1 + wb * b.entries[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        entries.extend(a.entries[i..].iter().map(|&(id, w)| (id, wa * w)));
        entries.extend(b.entries[j..].iter().map(|&(id, w)| (id, wb * w)));
        Self { entries }
    }

    /// Divides by the weight sum.
    pub fn normalized(mut self) -> Self {
        let s = self.sum();
        if s > T::zero() {
            for entry in self.entries.iter_mut() {
                entry.1 /= s;
            }
        }
        self
    }

    /// Evaluates `Σ w_p · p` against a point set.
    pub fn combination(&self, ps: &PointSet<T>) -> Result<Point<T>> {
        let mut out = vec![T::zero(); ps.dim()];
        for &(id, w) in &self.entries {
            let p = ps
                .point_by_id(id)
                .ok_or_else(|| Error::InvalidWitness(format!("id {id} not in point set")))?;
            crate::geometry::slice_add_scaled(&mut out, w, p);
        }
        Ok(Point::new(out))
    }

    /// Structural sanity: support inside `part_ids` (sorted), no significantly
    /// negative weight, weight sum near one.
    pub fn validate(&self, part_ids: &[usize]) -> Result<()> {
        debug_assert!(part_ids.windows(2).all(|w| w[0] <= w[1]));
        let tol = T::eps_sum() * T::of(100.0);
        for &(id, w) in &self.entries {
            if w < -tol {
                return Err(Error::InvalidWitness(format!("negative weight {w} on id {id}")));
            }
            if w > T::zero() && part_ids.binary_search(&id).is_err() {
                return Err(Error::InvalidWitness(format!("support id {id} outside part")));
            }
        }
        let s = self.sum();
        if (s - T::one()).abs() > tol {
            return Err(Error::InvalidWitness(format!("weight sum {s} differs from 1")));
        }
        Ok(())
    }
}
