//! Dense elimination kernel: affine dependencies of small point sets.
//!
//! This is deliberately not a general linear-algebra layer. It is the minimal
//! machinery the pruning and Radon steps need, with fixed deterministic
//! pivoting (largest absolute value, ties to the lowest row; first free
//! column chosen for the null vector) so outputs are reproducible run to run.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::geometry::{slice_add_scaled, slice_norm_inf, PointSet};
use crate::scalar::Real;

/// A nonzero coefficient vector `γ` over point ids with `Σ γ = 0` and
/// `Σ γ_p · p = 0`, normalized so `max |γ| = 1` and the first nonzero
/// coefficient (lowest id) is positive.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineDependency<T> {
    coeffs: BTreeMap<usize, T>,
}

impl<T: Real> AffineDependency<T> {
    pub fn get(&self, id: usize) -> T {
        self.coeffs.get(&id).copied().unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, T)> + '_ {
        self.coeffs.iter().map(|(&id, &g)| (id, g))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Affine dependency of all points of `ps` (requires `|ps| ≥ d + 2`),
/// keyed by the set's ids.
pub fn affine_dependency<T: Real>(ps: &PointSet<T>) -> Result<AffineDependency<T>> {
    let points: Vec<&[T]> = ps.iter().map(|(_, p)| p).collect();
    let gamma = dependency_coefficients(&points)?;
    let coeffs = ps.ids().iter().copied().zip(gamma).collect();
    Ok(AffineDependency { coeffs })
}

/// Core solver: canonical-normalized coefficients parallel to `points`.
///
/// Solves the homogeneous system with the `d` coordinate rows plus the
/// all-ones row; `m ≥ d + 2` guarantees a free column. The matrix is one
/// flat row-major buffer; this runs once per pruning round, so allocation
/// discipline matters.
pub(crate) fn dependency_coefficients<T: Real>(points: &[&[T]]) -> Result<Vec<T>> {
    let m = points.len();
    if m == 0 {
        return Err(Error::EmptyInput);
    }
    let d = points[0].len();
    for p in points {
        if p.len() != d {
            return Err(Error::DimensionMismatch { expected: d, got: p.len() });
        }
    }
    if m < d + 2 {
        return Err(Error::ParamsOutOfRange(format!(
            "affine dependency needs at least d + 2 = {} points, got {m}",
            d + 2
        )));
    }

    let scale = points
        .iter()
        .fold(T::zero(), |acc, p| acc.max(slice_norm_inf(p)))
        .max(T::one());

    // (d + 1) x m system: coordinate rows (scaled to O(1)) plus the ones row.
    let rows = d + 1;
    let mut mat = vec![T::zero(); rows * m];
    for (j, p) in points.iter().enumerate() {
        for c in 0..d {
            mat[c * m + j] = p[c] / scale;
        }
        mat[d * m + j] = T::one();
    }

    // Forward elimination with partial pivoting (largest |entry|, ties to
    // the lowest row index).
    let pivot_tol = T::of(1e-12);
    let mut pivots: Vec<(usize, usize)> = Vec::with_capacity(rows); // (row, col)
    let mut next_row = 0;
    for col in 0..m {
        if next_row == rows {
            break;
        }
        let mut best = next_row;
        for r in next_row + 1..rows {
            if mat[r * m + col].abs() > mat[best * m + col].abs() {
                best = r;
            }
        }
        if mat[best * m + col].abs() <= pivot_tol {
            continue; // free column
        }
        if best != next_row {
            for j in 0..m {
                mat.swap(next_row * m + j, best * m + j);
            }
        }
        let inv_pivot = T::one() / mat[next_row * m + col];
        for r in next_row + 1..rows {
            let f = mat[r * m + col] * inv_pivot;
            if f != T::zero() {
                for j in col..m {
                    let v = mat[next_row * m + j];
                    mat[r * m + j] -= f * v;
                }
            }
        }
        pivots.push((next_row, col));
        next_row += 1;
    }

    // First free column hosts the null vector.
    let free_col = {
        let mut free = None;
        let mut k = 0;
        for c in 0..m {
            if k < pivots.len() && pivots[k].1 == c {
                k += 1;
            } else {
                free = Some(c);
                break;
            }
        }
        free.ok_or(Error::NumericallySingular)?
    };

    let mut gamma = vec![T::zero(); m];
    gamma[free_col] = T::one();
    for &(r, c) in pivots.iter().rev() {
        let mut s = T::zero();
        for j in c + 1..m {
            s += mat[r * m + j] * gamma[j];
        }
        gamma[c] = -s / mat[r * m + c];
    }

    // Canonical form: max |γ| = 1, first nonzero coefficient positive.
    let maxabs = gamma.iter().fold(T::zero(), |acc, g| acc.max(g.abs()));
    if maxabs == T::zero() {
        return Err(Error::NumericallySingular);
    }
    for g in gamma.iter_mut() {
        *g /= maxabs;
    }
    let anchor = gamma.iter().find(|g| g.abs() > T::eps_sum());
    if let Some(&a) = anchor {
        if a < T::zero() {
            for g in gamma.iter_mut() {
                *g = -*g;
            }
        }
    }

    // Certify by substitution.
    let sum_res: T = gamma.iter().copied().sum::<T>().abs();
    let mut geo = vec![T::zero(); d];
    for (j, p) in points.iter().enumerate() {
        slice_add_scaled(&mut geo, gamma[j], p);
    }
    if sum_res > T::eps_sum() || slice_norm_inf(&geo) > T::eps_geom() * scale {
        return Err(Error::NumericallySingular);
    }
    Ok(gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;

    fn pts(coords: &[&[f64]]) -> PointSet<f64> {
        PointSet::from_points(coords.iter().map(|c| Point::new(c.to_vec())).collect()).unwrap()
    }

    #[test]
    fn collinear_three_points() {
        // {0, 1, 2} in R^1: gamma = (1, -2, 1) up to normalization.
        let ps = pts(&[&[0.0], &[1.0], &[2.0]]);
        let dep = affine_dependency(&ps).unwrap();
        let g: Vec<f64> = (0..3).map(|i| dep.get(i)).collect();
        assert!((g[0] - 0.5).abs() < 1e-12);
        assert!((g[1] + 1.0).abs() < 1e-12);
        assert!((g[2] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn parallelogram() {
        // {(0,0), (1,0), (0,1), (1,1)}: gamma = (1, -1, -1, 1) up to normalization.
        let ps = pts(&[&[0.0, 0.0], &[1.0, 0.0], &[0.0, 1.0], &[1.0, 1.0]]);
        let dep = affine_dependency(&ps).unwrap();
        let g: Vec<f64> = (0..4).map(|i| dep.get(i)).collect();
        assert!((g[0] - 1.0).abs() < 1e-12);
        assert!((g[1] + 1.0).abs() < 1e-12);
        assert!((g[2] + 1.0).abs() < 1e-12);
        assert!((g[3] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn random_points_residuals() {
        // Derived check: substitute back and look at the residuals directly.
        let ps = pts(&[
            &[0.234, -1.77],
            &[3.1, 0.44],
            &[-0.9, 2.6],
            &[1.15, 1.08],
        ]);
        let dep = affine_dependency(&ps).unwrap();
        let sum: f64 = (0..4).map(|i| dep.get(i)).sum();
        assert!(sum.abs() <= 1e-12);
        let mut geo = vec![0.0; 2];
        for (id, p) in ps.iter() {
            slice_add_scaled(&mut geo, dep.get(id), p);
        }
        assert!(slice_norm_inf(&geo) <= 1e-10 * ps.scale());
    }

    #[test]
    fn too_few_points_rejected() {
        let ps = pts(&[&[0.0, 0.0], &[1.0, 0.0], &[0.0, 1.0]]);
        assert!(matches!(
            affine_dependency(&ps),
            Err(Error::ParamsOutOfRange(_))
        ));
    }

    #[test]
    fn deterministic() {
        let ps = pts(&[&[0.3, 0.7], &[1.2, -0.4], &[2.0, 2.0], &[-1.0, 0.5], &[0.0, 0.0]]);
        let a = affine_dependency(&ps).unwrap();
        let b = affine_dependency(&ps).unwrap();
        assert_eq!(a, b);
    }
}
