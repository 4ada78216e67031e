//! The core algorithm family: 1-D median partitions, the lifting recursion,
//! collection of disjoint deep subsets, depth-multiplying combination, the
//! brute-force oracle, and the collect/solve/combine hybrid.
//!
//! Conventions used throughout:
//! - a certificate's parts always reference the ids of the original point
//!   set, so recursion through projections and subsets composes for free;
//! - ties in any ordering are broken by (value, id), so no general-position
//!   assumption is needed;
//! - "arbitrary subset" choices are always the lowest remaining ids.

use crate::caratheodory::prune_certificate;
use crate::certificate::{Part, TverbergCertificate};
use crate::error::{Error, Result};
use crate::geometry::{Flat, Point, PointSet};
use crate::radon_doubling::ms_tverberg;
use crate::scalar::Real;
use crate::select::argsort;
use crate::simplex::feasible_point;
use crate::witness::Witness;

/// Default cap on brute-force instance sizes; the CLI overrides it via the
/// `TVERBERG_BRUTE_CAP` environment variable.
pub const DEFAULT_BRUTE_CAP: usize = 12;

/// Barycentric weights placing `c` on the segment `[a, b]` (requires
/// `a <= c <= b`); degenerate segments put weight one on the left endpoint.
fn segment_weights<T: Real>(a: T, b: T, c: T) -> (T, T) {
    let len = b - a;
    if len <= T::zero() {
        (T::one(), T::zero())
    } else {
        let wa = (b - c) / len;
        (wa, T::one() - wa)
    }
}

/// Median partition of a 1-D point set: the rank-`⌈n/2⌉` element is the
/// center, points pair up symmetrically around it (rank j with rank
/// n + 1 - j), and an odd middle element stays alone. Depth `⌈n/2⌉`.
pub fn median_partition_1d<T: Real>(ps: &PointSet<T>) -> Result<TverbergCertificate<T>> {
    if ps.dim() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, got: ps.dim() });
    }
    let n = ps.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let values: Vec<T> = (0..n).map(|i| ps.point(i)[0]).collect();
    let order = argsort(&values);
    let mid = n.div_ceil(2) - 1; // 0-based position of rank ⌈n/2⌉
    let center = ps.point_owned(order[mid]);
    let center_val = values[order[mid]];

    let mut parts = Vec::with_capacity(n.div_ceil(2));
    for j in 0..n / 2 {
        let lo = order[j];
        let hi = order[n - 1 - j];
        let (id_lo, id_hi) = (ps.id_at(lo), ps.id_at(hi));
        let (wa, wb) = segment_weights(values[lo], values[hi], center_val);
        let witness = Witness::from_entries([(id_lo, wa), (id_hi, wb)]);
        parts.push(Part::new(vec![id_lo, id_hi], witness));
    }
    if n % 2 == 1 {
        parts.push(Part::singleton(ps.id_at(order[mid])));
    }
    Ok(TverbergCertificate::new(center, parts, true))
}

/// Lifts a pruned certificate of the projection of `ps` onto the hyperplane
/// `h` back to the ambient space, halving the depth (rounding up).
///
/// Every projected part is re-evaluated with its own weights on the
/// unprojected points, which places the results on the line through the
/// lifted center orthogonal to `h`; sorting along that line and pairing
/// extremes around the median yields the new parts (each a union of two old
/// parts, so the output is not pruned).
pub fn lift_partition<T: Real>(
    ps: &PointSet<T>,
    h: &Flat<T>,
    proj: &TverbergCertificate<T>,
) -> Result<TverbergCertificate<T>> {
    let d = ps.dim();
    if h.ambient_dim() != d || h.dim() + 1 != d {
        return Err(Error::DimensionMismatch { expected: d, got: h.dim() + 1 });
    }
    if !proj.pruned() {
        return Err(Error::InvalidWitness("projection certificate must be pruned".into()));
    }
    let r = proj.parts().len();
    if r == 0 {
        return Err(Error::EmptyInput);
    }

    // Direction of the lifting line, sign-canonicalized.
    let comp = h.orthonormal_complement();
    debug_assert_eq!(comp.len(), 1);
    let mut u = comp.into_iter().next().expect("hyperplane complement");
    if let Some(&lead) = u.coords().iter().find(|c| c.abs() > T::of(1e-9)) {
        if lead < T::zero() {
            u = u.scaled(-T::one());
        }
    }

    // Evaluate all parts into one flat buffer (row-major r x d).
    let mut x = vec![T::zero(); r * d];
    for (part, row) in proj.parts().iter().zip(x.chunks_exact_mut(d)) {
        for (id, w) in part.witness.iter() {
            let p = ps.point_by_id(id).ok_or_else(|| {
                Error::InvalidWitness(format!("id {id} not in point set"))
            })?;
            crate::geometry::slice_add_scaled(row, w, p);
        }
    }
    let u = u.coords();
    let t: Vec<T> = x
        .chunks_exact(d)
        .map(|row| row.iter().zip(u).map(|(&a, &b)| a * b).sum())
        .collect();
    let order = argsort(&t);
    let mid = r.div_ceil(2) - 1;
    let center = Point::from_slice(&x[order[mid] * d..(order[mid] + 1) * d]);
    let t_center = t[order[mid]];

    let mut parts = Vec::with_capacity(r.div_ceil(2));
    for j in 0..r / 2 {
        let lo = order[j];
        let hi = order[r - 1 - j];
        let (wa, wb) = segment_weights(t[lo], t[hi], t_center);
        let (pa, pb) = (&proj.parts()[lo], &proj.parts()[hi]);
        let witness = Witness::interpolate(wa, &pa.witness, wb, &pb.witness);
        let mut ids = Vec::with_capacity(pa.ids.len() + pb.ids.len());
        ids.extend_from_slice(&pa.ids);
        ids.extend_from_slice(&pb.ids);
        parts.push(Part::new(ids, witness));
    }
    if r % 2 == 1 {
        parts.push(proj.parts()[order[mid]].clone());
    }
    Ok(TverbergCertificate::new(center, parts, false))
}

/// Depth-`⌈n/2^d⌉` Tverberg point by recursion on the dimension: project out
/// the last coordinate, solve, lift, prune. Linear time for fixed `d`.
pub fn simple_tverberg<T: Real>(ps: &PointSet<T>) -> Result<TverbergCertificate<T>> {
    if ps.is_empty() {
        return Err(Error::EmptyInput);
    }
    let d = ps.dim();
    if d == 1 {
        return median_partition_1d(ps);
    }
    let proj_set = ps.project_prefix(d - 1)?;
    let inner = simple_tverberg(&proj_set)?;
    let h = Flat::coordinate_prefix(d, d - 1);
    let lifted = lift_partition(ps, &h, &inner)?;
    prune_certificate(ps, &lifted)
}

/// Parameters of the collection loop: reserve factor `beta`, inner depth
/// divisor `rho`, and the resulting target depth `⌈n/(beta·rho)⌉`.
#[derive(Clone, Copy, Debug)]
pub struct CollectParams<T> {
    beta: T,
    rho: T,
    target_depth: usize,
    take: usize,
}

impl<T: Real> CollectParams<T> {
    pub fn new(n: usize, beta: T, rho: T) -> Result<Self> {
        let two = T::of(2.0);
        if beta.is_nan() || rho.is_nan() || beta < two || rho < two {
            return Err(Error::ParamsOutOfRange("beta and rho must be at least 2".into()));
        }
        let nf = T::of_usize(n);
        if beta * rho > nf {
            return Err(Error::ParamsOutOfRange(format!(
                "beta must lie in [2, n/rho]; got beta {beta}, rho {rho}, n {n}"
            )));
        }
        let target_depth = (nf / (beta * rho))
            .ceil()
            .to_usize()
            .ok_or_else(|| Error::ParamsOutOfRange("target depth overflow".into()))?;
        let take = (nf / beta)
            .ceil()
            .to_usize()
            .ok_or_else(|| Error::ParamsOutOfRange("subset size overflow".into()))?;
        Ok(Self { beta, rho, target_depth, take })
    }

    pub fn beta(&self) -> T {
        self.beta
    }

    pub fn rho(&self) -> T {
        self.rho
    }

    /// Target depth `δ = ⌈n/(beta·rho)⌉`.
    pub fn target_depth(&self) -> usize {
        self.target_depth
    }

    /// Subset size `⌈n/beta⌉` handed to the inner algorithm per round.
    pub fn subset_size(&self) -> usize {
        self.take
    }

    /// The guaranteed number of collected certificates,
    /// `⌈n(1 - 1/beta)/(δ(d+1))⌉`.
    pub fn guaranteed_count(&self, n: usize, d: usize) -> usize {
        let nf = T::of_usize(n);
        let num = nf * (T::one() - T::one() / self.beta);
        let den = T::of_usize(self.target_depth) * T::of_usize(d + 1);
        (num / den).ceil().to_usize().unwrap_or(0)
    }
}

/// Repeatedly runs `inner` on the `⌈n/beta⌉` lowest remaining ids and
/// harvests disjoint certificates of depth exactly `δ` until fewer than
/// `⌈n/beta⌉` ids remain.
///
/// When a run comes back deeper than `δ`, every block of `δ` consecutive
/// parts is harvested as its own certificate (same center); ids of leftover
/// parts return to the pool. That keeps the per-round accounting of the
/// collection bound intact while avoiding re-solving for structure an inner
/// call already produced.
pub fn collect<T, F>(
    ps: &PointSet<T>,
    params: &CollectParams<T>,
    mut inner: F,
) -> Result<Vec<(Vec<usize>, TverbergCertificate<T>)>>
where
    T: Real,
    F: FnMut(&PointSet<T>) -> Result<TverbergCertificate<T>>,
{
    let delta = params.target_depth();
    let take = params.subset_size();
    let mut remaining: Vec<usize> = ps.ids().to_vec();
    let mut out = Vec::new();

    while remaining.len() >= take {
        let sub_ids: Vec<usize> = remaining[..take].to_vec();
        let sub = ps.subset(&sub_ids)?;
        let mut cert = inner(&sub)?;
        if !cert.pruned() {
            cert = prune_certificate(&sub, &cert)?;
        }
        if cert.depth() < delta {
            return Err(Error::ParamsOutOfRange(format!(
                "inner algorithm returned depth {} below the target {delta}",
                cert.depth()
            )));
        }
        let chunks = cert.depth() / delta;
        let mut used: Vec<usize> = Vec::new();
        for c in 0..chunks {
            let parts = cert.parts()[c * delta..(c + 1) * delta].to_vec();
            let chunk = TverbergCertificate::new(cert.center().clone(), parts, true);
            used.extend(chunk.ground_ids());
            out.push((chunk.ground_ids(), chunk));
        }
        used.sort_unstable();
        remaining.retain(|id| used.binary_search(id).is_err());
    }
    Ok(out)
}

/// Multiplies depth: given inner certificates of depth `r` over disjoint
/// ground sets and an outer certificate of depth `r'` over their centers
/// (ids = positions into `inners`), produces a pruned certificate of depth
/// `r·r'` for the union. Inner certificates deeper than the shallowest are
/// truncated to it.
pub fn combine<T: Real>(
    ps: &PointSet<T>,
    outer: &TverbergCertificate<T>,
    inners: &[TverbergCertificate<T>],
) -> Result<TverbergCertificate<T>> {
    if inners.is_empty() || outer.parts().is_empty() {
        return Err(Error::EmptyInput);
    }
    for inner in inners {
        if !inner.pruned() {
            return Err(Error::InvalidWitness("inner certificates must be pruned".into()));
        }
    }
    let r = inners.iter().map(|c| c.parts().len()).min().expect("nonempty");
    if r == 0 {
        return Err(Error::EmptyInput);
    }
    for part in outer.parts() {
        for &i in &part.ids {
            if i >= inners.len() {
                return Err(Error::CenterMismatch);
            }
        }
    }

    let mut parts = Vec::with_capacity(outer.parts().len() * r);
    for da in outer.parts() {
        for b in 0..r {
            let mut ids = Vec::new();
            let mut witness = Witness::empty();
            for &i in &da.ids {
                let q = &inners[i].parts()[b];
                ids.extend_from_slice(&q.ids);
                let beta = da.witness.get(i);
                if beta > T::zero() {
                    witness.add_scaled(beta, &q.witness);
                }
            }
            parts.push(Part::new(ids, witness));
        }
    }
    let raw = TverbergCertificate::new(outer.center().clone(), parts, false);
    prune_certificate(ps, &raw)
}

/// Restricted-growth-string enumeration of partitions of `0..n` into exactly
/// `r` nonempty parts of size at most `cap_size`, lexicographic, with early
/// pruning. Calls `check` on each candidate; the first `Some` wins.
fn enumerate_partitions<R>(
    n: usize,
    r: usize,
    cap_size: usize,
    check: &mut impl FnMut(&[Vec<usize>]) -> Option<R>,
) -> Option<R> {
    fn go<R>(
        n: usize,
        r: usize,
        cap_size: usize,
        next: usize,
        parts: &mut Vec<Vec<usize>>,
        check: &mut impl FnMut(&[Vec<usize>]) -> Option<R>,
    ) -> Option<R> {
        if next == n {
            return if parts.len() == r { check(parts) } else { None };
        }
        // Every still-unopened part needs at least one of the remaining elements.
        let missing = r.saturating_sub(parts.len());
        if missing > n - next {
            return None;
        }
        for k in 0..parts.len() {
            if parts[k].len() < cap_size {
                parts[k].push(next);
                if let Some(hit) = go(n, r, cap_size, next + 1, parts, check) {
                    return Some(hit);
                }
                parts[k].pop();
            }
        }
        if parts.len() < r {
            parts.push(vec![next]);
            if let Some(hit) = go(n, r, cap_size, next + 1, parts, check) {
                return Some(hit);
            }
            parts.pop();
        }
        None
    }
    let mut parts = Vec::with_capacity(r);
    go(n, r, cap_size, 0, &mut parts, check)
}

/// Linear feasibility of a candidate partition: shared point `x` (split into
/// positive and negative parts) plus one weight vector per part.
fn partition_feasibility<T: Real>(
    ps: &PointSet<T>,
    parts: &[Vec<usize>],
) -> Option<(Point<T>, Vec<Witness<T>>)> {
    let d = ps.dim();
    let scale = ps.scale();
    let sizes: Vec<usize> = parts.iter().map(|p| p.len()).collect();
    let total: usize = sizes.iter().sum();
    let cols = total + 2 * d;
    let rows = parts.len() * (d + 1);

    let mut a = vec![vec![T::zero(); cols]; rows];
    let mut b = vec![T::zero(); rows];
    let mut col0 = 0;
    for (i, part) in parts.iter().enumerate() {
        let row0 = i * (d + 1);
        for (j, &pos) in part.iter().enumerate() {
            let p = ps.point(pos);
            for c in 0..d {
                a[row0 + c][col0 + j] = p[c] / scale;
            }
            a[row0 + d][col0 + j] = T::one();
        }
        for c in 0..d {
            a[row0 + c][total + c] = -T::one(); // x+
            a[row0 + c][total + d + c] = T::one(); // x-
        }
        b[row0 + d] = T::one();
        col0 += part.len();
    }

    let x = feasible_point(&a, &b)?;
    let center = Point::new(
        (0..d)
            .map(|c| (x[total + c] - x[total + d + c]) * scale)
            .collect(),
    );

    let mut witnesses = Vec::with_capacity(parts.len());
    let mut off = 0;
    for part in parts {
        let w = Witness::from_entries(
            part.iter()
                .enumerate()
                .map(|(j, &pos)| (ps.id_at(pos), x[off + j])),
        )
        .normalized();
        let y = w.combination(ps).ok()?;
        if y.minus(&center).norm_inf() > T::of(1e-6) * scale {
            return None; // numerically unconvincing; keep searching
        }
        witnesses.push(w);
        off += part.len();
    }
    Some((center, witnesses))
}

/// Exhaustive search for a depth-`r` Tverberg partition, lexicographically
/// first feasible. Parts are capped at `d + 1` points whenever `r(d+1) >= n`
/// (so the result is already pruned); larger caps are used otherwise and the
/// result pruned afterwards.
pub fn brute_force_tverberg<T: Real>(
    ps: &PointSet<T>,
    r: usize,
    cap: usize,
) -> Result<TverbergCertificate<T>> {
    let n = ps.len();
    let d = ps.dim();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if r == 0 {
        return Err(Error::ParamsOutOfRange("depth r must be positive".into()));
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    if r > n {
        return Err(Error::Infeasible);
    }
    if r == 1 {
        let ids: Vec<usize> = ps.ids().to_vec();
        let witness = Witness::singleton(ids[0]);
        let center = ps.point_owned(0);
        let pruned = n <= d + 1;
        return Ok(TverbergCertificate::new(center, vec![Part::new(ids, witness)], pruned));
    }

    let cap_size = (d + 1).max(n.div_ceil(r));
    let found = enumerate_partitions(n, r, cap_size, &mut |parts| {
        partition_feasibility(ps, parts)
            .map(|(center, witnesses)| (parts.to_vec(), center, witnesses))
    });
    let Some((parts, center, witnesses)) = found else {
        return Err(Error::Infeasible);
    };

    let cert_parts: Vec<Part<T>> = parts
        .iter()
        .zip(witnesses)
        .map(|(positions, witness)| {
            let ids = positions.iter().map(|&pos| ps.id_at(pos)).collect();
            Part::new(ids, witness)
        })
        .collect();
    let raw = TverbergCertificate::new(center, cert_parts, false);
    prune_certificate(ps, &raw)
}

/// Which solver handles the small instances inside [`better_tverberg`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmallSolver {
    /// Exhaustive search, depth `⌈m/(d+1)⌉`.
    Brute,
    /// Radon doubling, depth `⌈m/2(d+1)^2⌉`.
    RadonDoubling,
}

fn small_solve<T: Real>(
    ps: &PointSet<T>,
    solver: SmallSolver,
    cap: usize,
) -> Result<TverbergCertificate<T>> {
    match solver {
        SmallSolver::Brute => {
            let r = ps.len().div_ceil(ps.dim() + 1);
            brute_force_tverberg(ps, r, cap)
        }
        SmallSolver::RadonDoubling => ms_tverberg(ps),
    }
}

/// Collect-then-solve hybrid: harvest depth-`⌈n/2^{d+1}⌉` certificates with
/// the dimension recursion, solve for a Tverberg point of their centers with
/// the small-instance solver, and multiply the depths out. Guarantees depth
/// `⌈n/2(d+1)^2⌉` with [`SmallSolver::Brute`] and `⌈n/4(d+1)^3⌉` with
/// [`SmallSolver::RadonDoubling`].
pub fn better_tverberg<T: Real>(
    ps: &PointSet<T>,
    solver: SmallSolver,
    cap: usize,
) -> Result<TverbergCertificate<T>> {
    if ps.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = ps.len();
    let d = ps.dim();
    let small_threshold = 1usize.checked_shl((d + 1) as u32).unwrap_or(usize::MAX);
    if n <= small_threshold {
        return small_solve(ps, solver, cap);
    }

    let rho = T::of(2.0).powi(d as i32);
    let params = CollectParams::new(n, T::of(2.0), rho)?;
    let collected = collect(ps, &params, simple_tverberg)?;
    let certs: Vec<TverbergCertificate<T>> = collected.into_iter().map(|(_, c)| c).collect();
    let centers = PointSet::from_points(certs.iter().map(|c| c.center().clone()).collect())?;
    let outer = small_solve(&centers, solver, cap)?;
    combine(ps, &outer, &certs)
}

/// [`better_tverberg`] with the solver picked automatically: brute force in
/// low dimension while the center set fits the cap, Radon-doubling otherwise.
pub fn better_tverberg_auto<T: Real>(
    ps: &PointSet<T>,
    cap: usize,
) -> Result<TverbergCertificate<T>> {
    if ps.dim() >= 3 {
        return better_tverberg(ps, SmallSolver::RadonDoubling, cap);
    }
    match better_tverberg(ps, SmallSolver::Brute, cap) {
        Err(Error::CapExceeded { .. }) => better_tverberg(ps, SmallSolver::RadonDoubling, cap),
        other => other,
    }
}
