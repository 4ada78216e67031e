//! Independent certificate validation.
//!
//! Verification is witness-based: it re-evaluates every stored convex
//! combination against the original points and never consults the algorithm
//! that produced the certificate. The feasibility-based [`hull_membership`]
//! oracle exists separately for brute-force search and adversarial tests.

use std::collections::BTreeSet;
use std::fmt;

use crate::certificate::TverbergCertificate;
use crate::error::{Error, Result};
use crate::geometry::{Point, PointSet};
use crate::scalar::Real;
use crate::simplex::feasible_point;
use crate::witness::Witness;

/// Default validation tolerance, looser than the construction tolerance to
/// absorb composition rounding.
pub fn default_tolerance<T: Real>() -> T {
    T::of(1e-8)
}

/// The five certificate checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    /// (a) parts pairwise disjoint and contained in the point set's ids
    PartDisjointness,
    /// (b) per-part weights nonnegative, supported inside the part, sum 1
    WeightValidity,
    /// (c) per-part combination reproduces the center
    CenterReproduction,
    /// (d) pruned certificates have parts of at most d + 1 ids
    PrunedPartSizes,
    /// (e) depth field equals the part count
    DepthField,
}

impl Check {
    pub fn tag(self) -> &'static str {
        match self {
            Check::PartDisjointness => "a",
            Check::WeightValidity => "b",
            Check::CenterReproduction => "c",
            Check::PrunedPartSizes => "d",
            Check::DepthField => "e",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Check::PartDisjointness => "part disjointness and id containment",
            Check::WeightValidity => "witness nonnegativity, support and weight sums",
            Check::CenterReproduction => "per-part center reproduction",
            Check::PrunedPartSizes => "pruned part sizes at most d + 1",
            Check::DepthField => "depth field equals part count",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub check: Check,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of [`verify_certificate`]: one entry per check, `valid` iff all
/// passed.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
    pub valid: bool,
}

impl ValidationReport {
    pub fn failed_checks(&self) -> Vec<Check> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.check)
            .collect()
    }

    pub fn check(&self, which: Check) -> &CheckResult {
        self.checks
            .iter()
            .find(|c| c.check == which)
            .expect("all checks present")
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "check ({}) {}: {}{}",
                c.check.tag(),
                c.check.describe(),
                if c.passed { "pass" } else { "FAIL" },
                if c.detail.is_empty() { String::new() } else { format!(" — {}", c.detail) },
            )?;
        }
        write!(f, "certificate {}", if self.valid { "valid" } else { "INVALID" })
    }
}

/// Validates a certificate against its point set at tolerance `tol`
/// (relative to the coordinate scale for geometric residuals). Failures are
/// report entries, never errors.
pub fn verify_certificate<T: Real>(
    ps: &PointSet<T>,
    cert: &TverbergCertificate<T>,
    tol: T,
) -> ValidationReport {
    let d = ps.dim();
    let scale = ps.scale();
    let mut checks = Vec::with_capacity(5);

    // (a) disjointness and containment
    {
        let mut seen = BTreeSet::new();
        let mut passed = true;
        let mut detail = String::new();
        'outer: for (k, part) in cert.parts().iter().enumerate() {
            for &id in &part.ids {
                if ps.point_by_id(id).is_none() {
                    passed = false;
                    detail = format!("part {k} references unknown id {id}");
                    break 'outer;
                }
                if !seen.insert(id) {
                    passed = false;
                    detail = format!("id {id} appears more than once (seen again in part {k})");
                    break 'outer;
                }
            }
        }
        checks.push(CheckResult { check: Check::PartDisjointness, passed, detail });
    }

    // (b) weight validity
    {
        let mut passed = true;
        let mut detail = String::new();
        'outer: for (k, part) in cert.parts().iter().enumerate() {
            let mut sum = T::zero();
            let mut sorted = part.ids.clone();
            sorted.sort_unstable();
            for (id, w) in part.witness.iter() {
                if w < -tol {
                    passed = false;
                    detail = format!("part {k}: negative weight {w} on id {id}");
                    break 'outer;
                }
                if w > T::zero() && sorted.binary_search(&id).is_err() {
                    passed = false;
                    detail = format!("part {k}: witness id {id} outside the part");
                    break 'outer;
                }
                sum += w;
            }
            if (sum - T::one()).abs() > tol {
                passed = false;
                detail = format!("part {k}: weight sum {sum}");
                break 'outer;
            }
        }
        checks.push(CheckResult { check: Check::WeightValidity, passed, detail });
    }

    // (c) center reproduction
    {
        let mut passed = true;
        let mut detail = String::new();
        if cert.center().dim() != d {
            passed = false;
            detail = format!(
                "center dimension {} differs from point set dimension {d}",
                cert.center().dim()
            );
        } else {
            let mut worst = T::zero();
            let center = cert.center().coords();
            'outer: for (k, part) in cert.parts().iter().enumerate() {
                let mut y = vec![T::zero(); d];
                for (id, w) in part.witness.iter() {
                    match ps.point_by_id(id) {
                        Some(p) => crate::geometry::slice_add_scaled(&mut y, w, p),
                        None => {
                            passed = false;
                            detail = format!("part {k}: witness id {id} unknown");
                            break 'outer;
                        }
                    }
                }
                let mut res = T::zero();
                for (a, b) in y.iter().zip(center) {
                    res = res.max((*a - *b).abs());
                }
                worst = worst.max(res);
                if res > tol * scale {
                    passed = false;
                    detail = format!("part {k}: residual {res} exceeds {}", tol * scale);
                    break 'outer;
                }
            }
            if passed {
                detail = format!("max residual {worst}");
            }
        }
        checks.push(CheckResult { check: Check::CenterReproduction, passed, detail });
    }

    // (d) pruned part sizes
    {
        let mut passed = true;
        let mut detail = String::new();
        if cert.pruned() {
            for (k, part) in cert.parts().iter().enumerate() {
                if part.ids.len() > d + 1 {
                    passed = false;
                    detail = format!("part {k} has {} ids, more than d + 1 = {}", part.ids.len(), d + 1);
                    break;
                }
            }
        } else {
            detail = "certificate not marked pruned".into();
        }
        checks.push(CheckResult { check: Check::PrunedPartSizes, passed, detail });
    }

    // (e) depth field
    {
        let passed = cert.depth() == cert.parts().len();
        let detail = if passed {
            String::new()
        } else {
            format!("depth field {} but {} parts", cert.depth(), cert.parts().len())
        };
        checks.push(CheckResult { check: Check::DepthField, passed, detail });
    }

    let valid = checks.iter().all(|c| c.passed);
    ValidationReport { checks, valid }
}

/// Decides `x ∈ conv(ps)` by linear feasibility; on success returns a
/// witness with support at most `d + 1` (a basic solution).
pub fn hull_membership<T: Real>(ps: &PointSet<T>, x: &Point<T>) -> Result<Option<Witness<T>>> {
    let d = ps.dim();
    if x.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, got: x.dim() });
    }
    if ps.is_empty() {
        return Err(Error::EmptyInput);
    }
    let scale = ps.scale().max(x.norm_inf()).max(T::one());
    let k = ps.len();

    // Rows: d coordinate equations plus the weight-sum equation.
    let mut a = vec![vec![T::zero(); k]; d + 1];
    let mut b = vec![T::zero(); d + 1];
    for (j, (_, p)) in ps.iter().enumerate() {
        for c in 0..d {
            a[c][j] = p[c] / scale;
        }
        a[d][j] = T::one();
    }
    for c in 0..d {
        b[c] = x[c] / scale;
    }
    b[d] = T::one();

    let Some(w) = feasible_point(&a, &b) else {
        return Ok(None);
    };
    let tiny = T::of(1e-12);
    let witness = Witness::from_entries(
        ps.ids().iter().copied().zip(w).filter(|&(_, wi)| wi > tiny),
    )
    .normalized();
    Ok(Some(witness))
}
