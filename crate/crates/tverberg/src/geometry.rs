//! Points, indexed point sets and affine flats.
//!
//! Point sets keep their coordinates in one flat row-major buffer and hand
//! out slices; the solvers walk millions of points per call, so per-point
//! allocations are off the table. [`Point`] is the owned value type used for
//! centers, direction vectors and other small results.

use std::ops::Index;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// `acc += factor * src`
#[inline]
pub(crate) fn slice_add_scaled<T: Real>(acc: &mut [T], factor: T, src: &[T]) {
    debug_assert_eq!(acc.len(), src.len());
    for (a, &s) in acc.iter_mut().zip(src.iter()) {
        *a += factor * s;
    }
}

#[inline]
pub(crate) fn slice_norm_inf<T: Real>(s: &[T]) -> T {
    s.iter().fold(T::zero(), |acc, &c| acc.max(c.abs()))
}

/// A point (or direction vector) in `R^d` with dense coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Point<T> {
    coords: Vec<T>,
}

impl<T: Real> Point<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Self { coords }
    }

    pub fn from_slice(coords: &[T]) -> Self {
        Self { coords: coords.to_vec() }
    }

    pub fn zeros(dim: usize) -> Self {
        Self { coords: vec![T::zero(); dim] }
    }

    /// Standard basis vector `e_axis` in `R^dim`.
    pub fn axis(dim: usize, axis: usize) -> Self {
        let mut coords = vec![T::zero(); dim];
        coords[axis] = T::one();
        Self { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn is_finite(&self) -> bool {
        self.coords.iter().all(|c| c.is_finite())
    }

    pub fn dot(&self, other: &Self) -> T {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(other.coords.iter())
            .map(|(&a, &b)| a * b)
            .sum()
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, factor: T, other: &Self) {
        slice_add_scaled(&mut self.coords, factor, &other.coords);
    }

    pub fn minus(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self {
            coords: self
                .coords
                .iter()
                .zip(other.coords.iter())
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }

    pub fn scaled(&self, s: T) -> Self {
        Self { coords: self.coords.iter().map(|&c| c * s).collect() }
    }

    pub fn norm_inf(&self) -> T {
        slice_norm_inf(&self.coords)
    }

    pub fn norm(&self) -> T {
        self.dot(self).sqrt()
    }

    /// First `k` coordinates.
    pub fn prefix(&self, k: usize) -> Self {
        Self { coords: self.coords[..k].to_vec() }
    }

    /// Coordinates from index `k` on.
    pub fn suffix_from(&self, k: usize) -> Self {
        Self { coords: self.coords[k..].to_vec() }
    }

    /// Concatenation `(self | tail)`.
    pub fn concat(&self, tail: &Self) -> Self {
        let mut coords = self.coords.clone();
        coords.extend_from_slice(&tail.coords);
        Self { coords }
    }
}

impl<T> Index<usize> for Point<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.coords[i]
    }
}

/// An indexed point set over a flat coordinate buffer.
///
/// Ids are stable: a subset or a projection keeps the ids of the set it was
/// derived from, so witnesses always refer to the original input points.
#[derive(Clone, Debug)]
pub struct PointSet<T> {
    dim: usize,
    ids: Vec<usize>,
    coords: Vec<T>,
}

impl<T: Real> PointSet<T> {
    /// Build a set from owned points; ids are assigned `0..n`.
    pub fn from_points(points: Vec<Point<T>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        let dim = points[0].dim();
        let mut coords = Vec::with_capacity(points.len() * dim);
        for p in &points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: p.dim() });
            }
            coords.extend_from_slice(p.coords());
        }
        Self::from_flat(dim, coords)
    }

    /// Build a set from a row-major coordinate buffer; ids are `0..n`.
    pub fn from_flat(dim: usize, coords: Vec<T>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch { expected: 1, got: 0 });
        }
        if coords.is_empty() {
            return Err(Error::EmptyInput);
        }
        if !coords.len().is_multiple_of(dim) {
            return Err(Error::DimensionMismatch { expected: dim, got: coords.len() % dim });
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        let n = coords.len() / dim;
        Ok(Self { dim, ids: (0..n).collect(), coords })
    }

    pub(crate) fn with_ids(ids: Vec<usize>, coords: Vec<T>, dim: usize) -> Self {
        debug_assert_eq!(ids.len() * dim, coords.len());
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        Self { dim, ids, coords }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ids(&self) -> &[usize] {
        &self.ids
    }

    pub fn id_at(&self, pos: usize) -> usize {
        self.ids[pos]
    }

    /// Coordinates of the point at a position (not an id).
    #[inline]
    pub fn point(&self, pos: usize) -> &[T] {
        &self.coords[pos * self.dim..(pos + 1) * self.dim]
    }

    /// Owned copy of the point at a position.
    pub fn point_owned(&self, pos: usize) -> Point<T> {
        Point::from_slice(self.point(pos))
    }

    #[inline]
    pub fn point_by_id(&self, id: usize) -> Option<&[T]> {
        self.position_of(id).map(|pos| self.point(pos))
    }

    pub fn position_of(&self, id: usize) -> Option<usize> {
        // Full sets (and projections of them) have ids 0..n, so the lookup
        // is usually the identity; fall back to binary search on subsets.
        if id < self.ids.len() && self.ids[id] == id {
            return Some(id);
        }
        self.ids.binary_search(&id).ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &[T])> {
        self.ids
            .iter()
            .copied()
            .zip(self.coords.chunks_exact(self.dim))
    }

    /// Subset view over the given ids (must exist, strictly increasing).
    pub fn subset(&self, ids: &[usize]) -> Result<Self> {
        if ids.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut coords = Vec::with_capacity(ids.len() * self.dim);
        for (k, &id) in ids.iter().enumerate() {
            if k > 0 && ids[k - 1] >= id {
                return Err(Error::ParamsOutOfRange(
                    "subset ids must be strictly increasing".into(),
                ));
            }
            let p = self
                .point_by_id(id)
                .ok_or(Error::ParamsOutOfRange(format!("unknown id {id}")))?;
            coords.extend_from_slice(p);
        }
        Ok(Self::with_ids(ids.to_vec(), coords, self.dim))
    }

    /// Projection onto the coordinate flat spanned by the first `k` axes
    /// (intrinsic coordinates; ids preserved).
    pub fn project_prefix(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: k });
        }
        let mut coords = Vec::with_capacity(self.len() * k);
        for row in self.coords.chunks_exact(self.dim) {
            coords.extend_from_slice(&row[..k]);
        }
        Ok(Self::with_ids(self.ids.clone(), coords, k))
    }

    /// Projection onto an arbitrary flat (intrinsic coordinates; ids
    /// preserved).
    pub fn project_onto(&self, flat: &Flat<T>) -> Result<Self> {
        if flat.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: flat.ambient_dim() });
        }
        let k = flat.dim();
        let mut coords = Vec::with_capacity(self.len() * k);
        for row in self.coords.chunks_exact(self.dim) {
            let p = flat.project(&Point::from_slice(row))?;
            coords.extend_from_slice(p.coords());
        }
        Ok(Self::with_ids(self.ids.clone(), coords, k))
    }

    /// Max coordinate magnitude; 1 if all coordinates are zero.
    pub fn scale(&self) -> T {
        let m = slice_norm_inf(&self.coords);
        if m == T::zero() {
            T::one()
        } else {
            m
        }
    }
}

/// An affine flat: an origin plus `k` orthonormal basis directions in `R^d`.
#[derive(Clone, Debug)]
pub struct Flat<T> {
    origin: Point<T>,
    basis: Vec<Point<T>>,
}

impl<T: Real> Flat<T> {
    /// Build a flat, checking that the basis is orthonormal within `eps_geom`.
    pub fn new(origin: Point<T>, basis: Vec<Point<T>>) -> Result<Self> {
        let d = origin.dim();
        if basis.len() > d {
            return Err(Error::InvalidFlat(format!(
                "basis of {} vectors in ambient dimension {d}",
                basis.len()
            )));
        }
        let tol = T::eps_geom() * T::of(100.0);
        for (i, b) in basis.iter().enumerate() {
            if b.dim() != d {
                return Err(Error::InvalidFlat("basis vector dimension mismatch".into()));
            }
            if (b.dot(b) - T::one()).abs() > tol {
                return Err(Error::InvalidFlat(format!("basis vector {i} is not unit-norm")));
            }
            for (j, c) in basis.iter().enumerate().skip(i + 1) {
                if b.dot(c).abs() > tol {
                    return Err(Error::InvalidFlat(format!(
                        "basis vectors {i} and {j} are not orthogonal"
                    )));
                }
            }
        }
        Ok(Self { origin, basis })
    }

    /// The coordinate flat through the origin spanned by the first `k` axes.
    pub fn coordinate_prefix(ambient: usize, k: usize) -> Self {
        let basis = (0..k).map(|a| Point::axis(ambient, a)).collect();
        Self { origin: Point::zeros(ambient), basis }
    }

    /// The full space as a flat (identity basis).
    pub fn full(ambient: usize) -> Self {
        Self::coordinate_prefix(ambient, ambient)
    }

    pub fn ambient_dim(&self) -> usize {
        self.origin.dim()
    }

    /// Intrinsic dimension `k`.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn origin(&self) -> &Point<T> {
        &self.origin
    }

    pub fn basis(&self) -> &[Point<T>] {
        &self.basis
    }

    /// Intrinsic coordinates of `p`: the basis coefficients of `p - origin`.
    /// The residual `p - origin - Σ c_i b_i` is orthogonal to every basis
    /// vector.
    pub fn project(&self, p: &Point<T>) -> Result<Point<T>> {
        if p.dim() != self.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim(), got: p.dim() });
        }
        let rel = p.minus(&self.origin);
        let coords = self.basis.iter().map(|b| b.dot(&rel)).collect();
        Ok(Point::new(coords))
    }

    /// Ambient point for intrinsic coordinates: `origin + Σ c_i b_i`.
    pub fn lift(&self, intrinsic: &Point<T>) -> Result<Point<T>> {
        if intrinsic.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: intrinsic.dim() });
        }
        let mut p = self.origin.clone();
        for (b, &c) in self.basis.iter().zip(intrinsic.coords()) {
            p.add_scaled(c, b);
        }
        Ok(p)
    }

    /// Component of `p` orthogonal to the flat's direction space.
    pub fn residual(&self, p: &Point<T>) -> Result<Point<T>> {
        let intrinsic = self.project(p)?;
        let onto = self.lift(&intrinsic)?;
        Ok(p.minus(&onto))
    }

    /// Deterministic orthonormal basis of the orthogonal complement of the
    /// direction space: Gram-Schmidt over the standard axes in order.
    pub fn orthonormal_complement(&self) -> Vec<Point<T>> {
        let d = self.ambient_dim();
        let want = d - self.dim();
        let mut found: Vec<Point<T>> = Vec::with_capacity(want);
        let accept = T::of(1e-6);
        for axis in 0..d {
            if found.len() == want {
                break;
            }
            let mut v = Point::axis(d, axis);
            // Two Gram-Schmidt passes for stability.
            for _ in 0..2 {
                for b in self.basis.iter().chain(found.iter()) {
                    let c = b.dot(&v);
                    v.add_scaled(-c, b);
                }
            }
            let norm = v.norm();
            if norm > accept {
                found.push(v.scaled(T::one() / norm));
            }
        }
        debug_assert_eq!(found.len(), want);
        found
    }
}
