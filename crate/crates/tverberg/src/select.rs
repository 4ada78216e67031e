//! Rank selection with deterministic tie-breaking.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::Real;

fn cmp_keyed<T: Real>(a: &(T, usize), b: &(T, usize)) -> Ordering {
    a.0.partial_cmp(&b.0)
        .unwrap_or(Ordering::Equal)
        .then(a.1.cmp(&b.1))
}

/// The `rank`-th smallest value (1-based) under `(value, original index)`
/// ordering, together with its original index. Ties are broken by index, so
/// the answer is unique. Linear time via the standard library's selection.
pub fn select_rank<T: Real>(values: &[T], rank: usize) -> Result<(T, usize)> {
    if rank == 0 || rank > values.len() {
        return Err(Error::RankOutOfRange { rank, len: values.len() });
    }
    let mut keyed: Vec<(T, usize)> = values.iter().copied().zip(0..).collect();
    let k = rank - 1;
    keyed.select_nth_unstable_by(k, cmp_keyed);
    Ok(keyed[k])
}

/// Indices of `values` sorted ascending by `(value, index)`. Sorts
/// materialized key pairs rather than indices with an indirect comparator;
/// at the sizes the solvers see, the difference is all cache behavior.
pub(crate) fn argsort<T: Real>(values: &[T]) -> Vec<usize> {
    let mut keyed: Vec<(T, usize)> = values.iter().copied().zip(0..).collect();
    keyed.sort_unstable_by(cmp_keyed);
    keyed.into_iter().map(|(_, i)| i).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(select_rank(&[5.0, 1.0, 3.0], 2).unwrap(), (3.0, 2));
        assert_eq!(select_rank(&[5.0, 1.0, 3.0], 1).unwrap(), (1.0, 1));
        assert_eq!(select_rank(&[5.0, 1.0, 3.0], 3).unwrap(), (5.0, 0));
    }

    #[test]
    fn ties_break_by_index() {
        // [2,2,2] rank 2 -> the occurrence with the middle original index.
        assert_eq!(select_rank(&[2.0, 2.0, 2.0], 2).unwrap(), (2.0, 1));
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(
            select_rank::<f64>(&[1.0], 0),
            Err(Error::RankOutOfRange { .. })
        ));
        assert!(matches!(
            select_rank::<f64>(&[1.0], 2),
            Err(Error::RankOutOfRange { .. })
        ));
    }

    #[test]
    fn agrees_with_sort() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64) / (1u64 << 53) as f64
        };
        let values: Vec<f64> = (0..2000).map(|_| (next() * 10.0).floor()).collect();
        let order = argsort(&values);
        for rank in [1, 2, 500, 1000, 1999, 2000] {
            let (v, i) = select_rank(&values, rank).unwrap();
            assert_eq!(i, order[rank - 1]);
            assert_eq!(v, values[order[rank - 1]]);
        }
    }
}
