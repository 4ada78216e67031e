//! Cross-module checks driven by independent oracles: subset enumeration for
//! pruning, linear feasibility for hull membership, and the witness
//! evaluation in `verify` for every solver.

use tverberg::{
    better_tverberg, bootstrap_tverberg, brute_force_tverberg, collect, default_tolerance,
    generate, hull_membership, median_partition_1d, ms_tverberg, prune, simple_tverberg,
    split_dimension_tverberg, verify_certificate, CollectParams, Distribution, Point, PointSet,
    SmallSolver, Witness, DEFAULT_BRUTE_CAP,
};

fn assert_valid(ps: &PointSet<f64>, cert: &tverberg::Certificate64) {
    let report = verify_certificate(ps, cert, default_tolerance());
    assert!(report.valid, "{report}");
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Enumerates subsets of `ids` of size at most `d + 1` and asks the
/// LP oracle whether the center lies in the subset's hull.
fn enumeration_oracle(ps: &PointSet<f64>, ids: &[usize], center: &Point<f64>) -> Vec<Vec<usize>> {
    let d = ps.dim();
    let mut valid = Vec::new();
    let m = ids.len();
    for mask in 1u32..(1 << m) {
        if (mask.count_ones() as usize) > d + 1 {
            continue;
        }
        let subset: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| ids[i]).collect();
        let sub = ps.subset(&subset).unwrap();
        if hull_membership(&sub, center).unwrap().is_some() {
            valid.push(subset);
        }
    }
    valid
}

#[test]
fn prune_agrees_with_subset_enumeration() {
    // d <= 3, part sizes <= 8: the pruned support must be one of the subsets
    // the enumeration oracle certifies, and at least one such subset exists.
    for d in 1..=3usize {
        for (instance, n) in [(0u64, 6), (1, 7), (2, 8), (3, 8)] {
            let ps = generate(Distribution::UnitCube, d, n, 100 + instance).unwrap();
            let raw = generate(Distribution::UnitCube, 1, n, 200 + instance).unwrap();
            let weights: Vec<f64> = raw.iter().map(|(_, p)| p[0] + 0.05).collect();
            let total: f64 = weights.iter().sum();
            let witness =
                Witness::from_entries(weights.iter().enumerate().map(|(i, w)| (i, w / total)));
            let center = witness.combination(&ps).unwrap();
            let ids: Vec<usize> = (0..n).collect();

            let (pruned_ids, pruned_witness) = prune(&ids, &witness, &ps).unwrap();
            assert!(pruned_ids.len() <= d + 1);
            let c = pruned_witness.combination(&ps).unwrap();
            assert!(c.minus(&center).norm_inf() <= 1e-9 * ps.scale());

            let oracle = enumeration_oracle(&ps, &ids, &center);
            assert!(!oracle.is_empty(), "oracle found no valid subset (d={d}, n={n})");
            assert!(
                oracle.contains(&pruned_ids),
                "pruned support {pruned_ids:?} not among oracle subsets (d={d}, n={n})"
            );
        }
    }
}

#[test]
fn simple_tverberg_small_matrix() {
    for d in 1..=4usize {
        for &n in &[1usize << d, 64, 256] {
            for seed in 0..5u64 {
                for dist in [Distribution::UnitCube, Distribution::Gaussian] {
                    let ps = generate(dist, d, n, seed).unwrap();
                    let cert = simple_tverberg(&ps).unwrap();
                    assert!(
                        cert.depth() >= ceil_div(n, 1 << d),
                        "d={d} n={n} seed={seed}: depth {} below {}",
                        cert.depth(),
                        ceil_div(n, 1 << d)
                    );
                    assert!(cert.pruned());
                    assert_valid(&ps, &cert);
                }
            }
        }
    }
}

#[test]
fn collect_count_never_below_formula() {
    for (n, d, rho, seed) in [(256usize, 2usize, 4.0f64, 1u64), (300, 3, 8.0, 2), (128, 1, 2.0, 3)]
    {
        let ps = generate(Distribution::UnitCube, d, n, seed).unwrap();
        let params = CollectParams::new(n, 2.0, rho).unwrap();
        let collected = collect(&ps, &params, simple_tverberg).unwrap();
        assert!(
            collected.len() >= params.guaranteed_count(n, d),
            "collected {} certificates, formula guarantees {}",
            collected.len(),
            params.guaranteed_count(n, d)
        );
        for (ids, cert) in &collected {
            assert!(cert.depth() >= params.target_depth());
            assert!(ids.iter().all(|id| *id < n));
            assert_valid(&ps, cert);
        }
    }
}

#[test]
fn tverberg_theorem_oracle_small() {
    // Brute force always succeeds at r = ceil(n/(d+1)) — a small-scale
    // executable statement of the partition theorem.
    for d in 1..=2usize {
        for n in 2..=8usize {
            for seed in 0..3u64 {
                let ps = generate(Distribution::UnitCube, d, n, 40 + seed).unwrap();
                let r = ceil_div(n, d + 1);
                let cert = brute_force_tverberg(&ps, r, DEFAULT_BRUTE_CAP).unwrap();
                assert_eq!(cert.depth(), r);
                assert_valid(&ps, &cert);
            }
        }
    }
}

#[test]
fn hybrid_and_doubling_bounds() {
    for seed in 0..3u64 {
        // Collect/solve/combine hybrid with the exhaustive small solver at d = 2.
        let ps = generate(Distribution::UnitCube, 2, 200, seed).unwrap();
        let cert = better_tverberg(&ps, SmallSolver::Brute, DEFAULT_BRUTE_CAP).unwrap();
        assert!(cert.depth() >= ceil_div(200, 18), "depth {}", cert.depth());
        assert_valid(&ps, &cert);

        // Doubling engine at d = 2.
        let ps = generate(Distribution::Gaussian, 2, 500, seed).unwrap();
        let cert = ms_tverberg(&ps).unwrap();
        assert!(cert.depth() >= ceil_div(500, 18), "depth {}", cert.depth());
        assert_valid(&ps, &cert);

        // Bootstrap at d = 3.
        let ps = generate(Distribution::UnitCube, 3, 1000, seed).unwrap();
        let cert = bootstrap_tverberg(&ps).unwrap();
        assert!(cert.depth() >= ceil_div(1000, 256), "depth {}", cert.depth());
        assert_valid(&ps, &cert);
    }
}

#[test]
fn split_cross_checks_simple_in_the_plane() {
    for seed in 0..5u64 {
        let ps = generate(Distribution::UnitCube, 2, 96, seed).unwrap();
        let split =
            split_dimension_tverberg(&ps, 1, &mut |s: &PointSet<f64>| median_partition_1d(s))
                .unwrap();
        let simple = simple_tverberg(&ps).unwrap();
        assert_eq!(split.depth(), simple.depth());
        assert!(split.center().minus(simple.center()).norm_inf() <= 1e-9 * ps.scale());
        assert_valid(&ps, &split);
    }
}

#[test]
fn hull_membership_completeness_on_constructed_points() {
    // Whenever a witness exists by construction, the LP oracle agrees.
    for d in 1..=4usize {
        for seed in 0..5u64 {
            let ps = generate(Distribution::Gaussian, d, d + 3, 70 + seed).unwrap();
            let raw = generate(Distribution::UnitCube, 1, d + 3, 80 + seed).unwrap();
            let weights: Vec<f64> = raw.iter().map(|(_, p)| p[0] + 0.01).collect();
            let total: f64 = weights.iter().sum();
            let witness =
                Witness::from_entries(weights.iter().enumerate().map(|(i, w)| (i, w / total)));
            let target = witness.combination(&ps).unwrap();
            let found = hull_membership(&ps, &target).unwrap();
            assert!(found.is_some(), "constructed hull point not recognized (d={d})");
            let w = found.unwrap();
            assert!(w.support().count() <= d + 1);
            let y = w.combination(&ps).unwrap();
            assert!(y.minus(&target).norm_inf() <= 1e-7 * ps.scale());
        }
    }
}
