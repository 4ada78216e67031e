//! Self-contained phase-1 simplex for small dense equality systems.
//!
//! Decides feasibility of `A x = b, x >= 0` by minimizing the sum of
//! artificial variables, with Bland's rule for cycle-freedom. Only used on
//! tiny instances (brute-force partition checks, hull membership), so a
//! dense tableau is the right tool.

use crate::scalar::Real;

/// Returns a feasible `x >= 0` with `A x = b`, or `None` if the phase-1
/// optimum stays away from zero.
pub(crate) fn feasible_point<T: Real>(a: &[Vec<T>], b: &[T]) -> Option<Vec<T>> {
    let m = a.len();
    if m == 0 {
        return Some(Vec::new());
    }
    let n = a[0].len();
    let piv_tol = T::of(1e-11);
    let cost_tol = T::of(1e-9);

    // Tableau [A | I | b] with rows flipped so b >= 0; artificial basis.
    let mut t = vec![vec![T::zero(); n + m + 1]; m];
    for i in 0..m {
        let flip = b[i] < T::zero();
        for j in 0..n {
            t[i][j] = if flip { -a[i][j] } else { a[i][j] };
        }
        t[i][n + i] = T::one();
        t[i][n + m] = if flip { -b[i] } else { b[i] };
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Cost row for minimizing the artificial sum: z_j = sum_i t[i][j] over
    // rows with artificial basic cost 1; entering while z_j > 0 for a
    // non-artificial column (artificial columns start at reduced cost 0).
    let mut z = vec![T::zero(); n + m + 1];
    for j in 0..n + m + 1 {
        let mut s = T::zero();
        for row in t.iter() {
            s += row[j];
        }
        z[j] = s;
    }
    for zj in z.iter_mut().take(n + m).skip(n) {
        *zj -= T::one();
    }

    let max_iters = 200 * (n + m) + 200;
    for _ in 0..max_iters {
        // Bland: smallest improving original column. Artificials never
        // re-enter once they leave the basis.
        let mut enter = None;
        for (j, &zj) in z.iter().enumerate().take(n) {
            if zj > cost_tol {
                enter = Some(j);
                break;
            }
        }
        let Some(col) = enter else { break };

        // Ratio test; Bland tie-break by smallest basic variable index.
        let mut leave: Option<usize> = None;
        let mut best = T::infinity();
        for i in 0..m {
            if t[i][col] > piv_tol {
                let ratio = t[i][n + m] / t[i][col];
                let better = match leave {
                    None => true,
                    Some(prev) => {
                        ratio < best - piv_tol
                            || ((ratio - best).abs() <= piv_tol && basis[i] < basis[prev])
                    }
                };
                if better {
                    best = ratio;
                    leave = Some(i);
                }
            }
        }
        let Some(row) = leave else {
            return None; // unbounded phase-1 cannot happen; bail out
        };

        // Pivot.
        let pv = t[row][col];
        for v in t[row].iter_mut() {
            *v /= pv;
        }
        let (pivot_row, rest) = {
            let (head, tail) = t.split_at_mut(row);
            let (mid, tail) = tail.split_at_mut(1);
            (&mut mid[0], head.iter_mut().chain(tail.iter_mut()))
        };
        for other in rest {
            let f = other[col];
            if f != T::zero() {
                for (o, &p) in other.iter_mut().zip(pivot_row.iter()) {
                    *o -= f * p;
                }
            }
        }
        let f = z[col];
        if f != T::zero() {
            for (zj, &p) in z.iter_mut().zip(pivot_row.iter()) {
                *zj -= f * p;
            }
        }
        basis[row] = col;
    }

    // Feasible iff the artificial objective is (numerically) zero.
    let objective = z[n + m];
    if objective.abs() > cost_tol * T::of_usize(m.max(1)) {
        return None;
    }

    let mut x = vec![T::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][n + m].max(T::zero());
        }
    }
    Some(x)
}
