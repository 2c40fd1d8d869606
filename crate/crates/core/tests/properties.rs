//! Randomized structural properties: radius monotonicity and family
//! ordering, scan equivalence against a naive quadratic rescan, mirror
//! symmetry, boundary-restricted scan equivalence, environment rebuild
//! invariants, and the regret-decomposition identity on random runs.

use proptest::prelude::*;

#[path = "common/naive.rs"]
mod naive;
use naive::{naive_boundary_scan, naive_scan};

use cpbandits::confbounds::{laplace_radius, peeling_radius, union_radius, RadiusKind};
use cpbandits::detect::{cpd_scan, cpdi_scan, ArmTracker, Direction};
use cpbandits::env::{build_environment, RewardModel, Segment};
use cpbandits::harness::{
    build_eta_environment, compute_metrics, run_experiment, truncate_environment,
    ExperimentConfig,
};

// ---------------------------------------------------------------------------
// Strategies
// ---------------------------------------------------------------------------

fn delta_strategy() -> impl Strategy<Value = f64> {
    // Spread over (0.001, 0.5] — the operating range for scan levels.
    (1u32..=500).prop_map(|k| k as f64 / 1000.0)
}

fn value_strategy() -> impl Strategy<Value = f64> {
    (0u8..=100).prop_map(|v| v as f64 / 100.0)
}

/// A pull log: per-step (arm, value), one observation per time step.
fn log_strategy(
    max_arms: usize,
    max_len: usize,
) -> impl Strategy<Value = (usize, Vec<(usize, f64)>)> {
    (1..=max_arms).prop_flat_map(move |arms| {
        let step = (0..arms, value_strategy());
        (Just(arms), proptest::collection::vec(step, 2..=max_len))
    })
}

fn radius_kind_strategy() -> impl Strategy<Value = RadiusKind> {
    prop_oneof![
        Just(RadiusKind::Laplace),
        Just(RadiusKind::Union),
        (11u32..=30).prop_map(|a| RadiusKind::peeling(a as f64 / 10.0).expect("alpha > 1")),
    ]
}

fn tracker_from_log(arms: usize, log: &[(usize, f64)]) -> ArmTracker {
    let mut tracker = ArmTracker::new(arms, 1);
    for (step, &(arm, value)) in log.iter().enumerate() {
        tracker
            .record(arm, value, step as u64 + 1)
            .expect("increasing times");
    }
    tracker
}

// ---------------------------------------------------------------------------
// Radius properties
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// Every family's radius weakly shrinks as the pull count grows.
    #[test]
    fn radii_shrink_with_more_samples(n in 1u64..2000, delta in delta_strategy()) {
        let t = 4000u64;
        let lap_n = laplace_radius::<f64>(n, delta).unwrap();
        let lap_next = laplace_radius::<f64>(n + 1, delta).unwrap();
        prop_assert!(lap_next <= lap_n, "laplace rose: n={n} {lap_n} -> {lap_next}");

        let uni_n = union_radius::<f64>(n, t, delta).unwrap();
        let uni_next = union_radius::<f64>(n + 1, t, delta).unwrap();
        prop_assert!(uni_next <= uni_n, "union rose: n={n} {uni_n} -> {uni_next}");

        let peel_n = peeling_radius::<f64>(n, t, delta, 1.5).unwrap();
        let peel_next = peeling_radius::<f64>(n + 1, t, delta, 1.5).unwrap();
        prop_assert!(peel_next <= peel_n, "peeling rose: n={n} {peel_n} -> {peel_next}");
    }

    /// Shrinking the failure level widens every family's radius.
    #[test]
    fn radii_widen_as_level_shrinks(
        n in 1u64..2000,
        delta in delta_strategy(),
        shrink in 2u32..100,
    ) {
        let t = 4000u64;
        let tighter = delta / shrink as f64;
        prop_assert!(
            laplace_radius::<f64>(n, tighter).unwrap() > laplace_radius::<f64>(n, delta).unwrap()
        );
        prop_assert!(
            union_radius::<f64>(n, t, tighter).unwrap() > union_radius::<f64>(n, t, delta).unwrap()
        );
        prop_assert!(
            peeling_radius::<f64>(n, t, tighter, 1.5).unwrap()
                > peeling_radius::<f64>(n, t, delta, 1.5).unwrap()
        );
    }

    /// The union radius weakly grows with the elapsed horizon; the
    /// peeling radius does too (its peeling count is a ceiling of a
    /// logarithm, so growth comes in steps).
    #[test]
    fn time_dependent_radii_grow_with_elapsed_time(
        n in 1u64..500,
        t in 2u64..100_000,
        delta in delta_strategy(),
    ) {
        prop_assert!(
            union_radius::<f64>(n, t + 1, delta).unwrap()
                >= union_radius::<f64>(n, t, delta).unwrap()
        );
        prop_assert!(
            peeling_radius::<f64>(n, t + 1, delta, 1.5).unwrap()
                >= peeling_radius::<f64>(n, t, delta, 1.5).unwrap()
        );
    }

    /// In the long-horizon regime the time-uniform radius is strictly
    /// tighter than the union radius at matched (n, t, level).
    #[test]
    fn laplace_beats_union_on_long_horizons(
        t in 100u64..200_000,
        frac in 1u32..=100,
        delta in delta_strategy(),
    ) {
        let n = ((t as f64 * frac as f64 / 100.0) as u64).max(1);
        let lap = laplace_radius::<f64>(n, delta).unwrap();
        let uni = union_radius::<f64>(n, t, delta).unwrap();
        prop_assert!(lap < uni, "n={n} t={t} delta={delta}: {lap} >= {uni}");
    }
}

// ---------------------------------------------------------------------------
// Scan equivalence and symmetry
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    /// The incremental scan agrees split-for-split with a quadratic
    /// rescan that recomputes every mean and radius from the raw log.
    #[test]
    fn scan_matches_naive_rescan(
        (arms, log) in log_strategy(3, 60),
        delta in delta_strategy(),
        kind in radius_kind_strategy(),
    ) {
        let tracker = tracker_from_log(arms, &log);
        let outcome = cpd_scan(&tracker, delta, kind).expect("scan succeeds");
        let (naive, naive_splits) = naive_scan(arms, &log, delta, kind);

        prop_assert_eq!(outcome.splits_evaluated, naive_splits);
        match (outcome.detection, naive) {
            (None, None) => {}
            (Some(found), Some(expected)) => {
                prop_assert_eq!(found.arm, expected.arm);
                prop_assert_eq!(found.split, expected.split);
                prop_assert_eq!(found.direction, expected.direction);
                prop_assert_eq!(found.time, log.len() as u64);
            }
            (found, _) => prop_assert!(false, "detection mismatch: scan said {found:?}"),
        }
    }

    /// Mirroring every observation (v -> 1 - v) preserves the firing
    /// split exactly and flips its direction: radii are value-free and
    /// the mirrored means satisfy the mirrored inequality.
    #[test]
    fn mirrored_rewards_flip_the_direction(
        (arms, log) in log_strategy(3, 60),
        delta in delta_strategy(),
        kind in radius_kind_strategy(),
    ) {
        let mirrored: Vec<(usize, f64)> = log.iter().map(|&(a, v)| (a, 1.0 - v)).collect();
        let original = cpd_scan(&tracker_from_log(arms, &log), delta, kind).unwrap();
        let flipped = cpd_scan(&tracker_from_log(arms, &mirrored), delta, kind).unwrap();

        prop_assert_eq!(original.splits_evaluated, flipped.splits_evaluated);
        match (original.detection, flipped.detection) {
            (None, None) => {}
            (Some(a), Some(b)) => {
                prop_assert_eq!(a.arm, b.arm);
                prop_assert_eq!(a.split, b.split);
                let expected = match a.direction {
                    Direction::Up => Direction::Down,
                    Direction::Down => Direction::Up,
                };
                prop_assert_eq!(b.direction, expected);
            }
            (a, b) => prop_assert!(false, "mirror mismatch: {a:?} vs {b:?}"),
        }
    }

    /// A returned detection really is a disjoint pair of intervals when
    /// re-verified from the tracker's own slice means.
    #[test]
    fn detections_reverify_from_slice_means(
        (arms, log) in log_strategy(3, 60),
        delta in delta_strategy(),
        kind in radius_kind_strategy(),
    ) {
        let tracker = tracker_from_log(arms, &log);
        if let Some(found) = cpd_scan(&tracker, delta, kind).unwrap().detection {
            let count = tracker.count(found.arm);
            let elapsed = tracker.elapsed();
            let left_mean = tracker.slice_mean(found.arm, 1, found.split).unwrap();
            let right_mean = tracker.slice_mean(found.arm, found.split + 1, count).unwrap();
            let left_radius = kind.eval(found.split, elapsed, delta).unwrap();
            let right_radius = kind.eval(count - found.split, elapsed, delta).unwrap();
            let disjoint = match found.direction {
                Direction::Up => left_mean + left_radius < right_mean - right_radius,
                Direction::Down => left_mean - left_radius > right_mean + right_radius,
            };
            prop_assert!(disjoint, "reported split is not disjoint: {found:?}");
        }
    }

    /// The boundary-restricted scan agrees with a naive walk over the
    /// same boundary lists, including the skip rule for out-of-range
    /// entries.
    #[test]
    fn boundary_scan_matches_naive_walk(
        (arms, log) in log_strategy(3, 60),
        epsilon_steps in 0u32..=20,
        raw_bounds in proptest::collection::vec(
            proptest::collection::vec(0u64..70, 0..6),
            1..=3,
        ),
    ) {
        // ImpCPD-style parameters: psi from a small synthetic horizon,
        // epsilon walked down from 1 by factors of 1.05.
        let psi = 1_000.0;
        let alpha = 1.5;
        let epsilon = 1.0 / 1.05f64.powi(epsilon_steps as i32);

        let mut boundaries = vec![Vec::new(); arms];
        for (arm, list) in boundaries.iter_mut().enumerate() {
            if let Some(raw) = raw_bounds.get(arm % raw_bounds.len()) {
                let mut sorted = raw.clone();
                sorted.sort_unstable();
                sorted.dedup();
                *list = sorted;
            }
        }

        let tracker = tracker_from_log(arms, &log);
        let outcome = cpdi_scan(&tracker, &boundaries, epsilon, psi, alpha)
            .expect("boundary scan succeeds");
        let (naive, naive_splits) =
            naive_boundary_scan(arms, &log, &boundaries, epsilon, psi, alpha);

        prop_assert_eq!(outcome.splits_evaluated, naive_splits);
        match (outcome.detection, naive) {
            (None, None) => {}
            (Some(found), Some(expected)) => {
                prop_assert_eq!(found.arm, expected.arm);
                prop_assert_eq!(found.split, expected.split);
                prop_assert_eq!(found.direction, expected.direction);
            }
            (found, _) => prop_assert!(false, "detection mismatch: scan said {found:?}"),
        }
    }
}

// ---------------------------------------------------------------------------
// Environment rebuild invariants
// ---------------------------------------------------------------------------

fn segment_rows_strategy() -> impl Strategy<Value = Vec<Vec<f64>>> {
    (2usize..=4, 2usize..=3).prop_flat_map(|(rows, arms)| {
        proptest::collection::vec(
            proptest::collection::vec((1u8..=9).prop_map(|v| v as f64 / 10.0), arms..=arms),
            rows..=rows,
        )
    })
}

fn env_from_rows(rows: &[Vec<f64>], length: u64) -> cpbandits::env::Environment {
    let segments: Vec<Segment> = rows
        .iter()
        .enumerate()
        .map(|(i, means)| Segment { start_time: 1 + i as u64 * length, means: means.clone() })
        .collect();
    let horizon = length * rows.len() as u64;
    build_environment(segments, horizon, RewardModel::Bernoulli).expect("valid environment")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Rescaling segment lengths by a relative-duration factor keeps the
    /// row structure and produces uniform ceil(cost * eta) segments.
    #[test]
    fn eta_rebuild_preserves_structure(
        rows in segment_rows_strategy(),
        eta_pct in 1u32..=100,
        cost in 10u64..=2000,
    ) {
        let eta = eta_pct as f64 / 100.0;
        let base = env_from_rows(&rows, 50);
        let (rebuilt, length) = build_eta_environment(&base, eta, cost as f64).unwrap();

        let expected = (cost as f64 * eta).ceil() as u64;
        prop_assert_eq!(length, expected);
        prop_assert_eq!(rebuilt.segments().len(), rows.len());
        prop_assert_eq!(rebuilt.horizon(), expected * rows.len() as u64);
        for (i, segment) in rebuilt.segments().iter().enumerate() {
            prop_assert_eq!(segment.start_time, 1 + i as u64 * expected);
            prop_assert_eq!(&segment.means, &rows[i]);
        }
    }

    /// Truncation keeps exactly the segments that begin inside the new
    /// horizon and leaves their means untouched.
    #[test]
    fn truncation_keeps_only_reachable_segments(
        rows in segment_rows_strategy(),
        length in 10u64..=100,
        horizon_pct in 1u32..=200,
    ) {
        let base = env_from_rows(&rows, length);
        let horizon = ((base.horizon() as f64 * horizon_pct as f64 / 100.0) as u64).max(1);
        let truncated = truncate_environment(&base, horizon).unwrap();

        let expected: Vec<&Segment> =
            base.segments().iter().filter(|s| s.start_time <= horizon).collect();
        prop_assert_eq!(truncated.horizon(), horizon);
        prop_assert_eq!(truncated.segments().len(), expected.len());
        for (kept, original) in truncated.segments().iter().zip(expected) {
            prop_assert_eq!(kept.start_time, original.start_time);
            prop_assert_eq!(&kept.means, &original.means);
        }
    }
}

// ---------------------------------------------------------------------------
// End-to-end regret identity on random runs
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// On random two-segment environments, every policy's step trace
    /// satisfies the pull-count regret decomposition (checked inside
    /// compute_metrics, which fails the run otherwise).
    #[test]
    fn random_runs_satisfy_the_regret_identity(
        rows in segment_rows_strategy(),
        length in 20u64..=40,
        seed in 0u64..10_000,
    ) {
        let env = env_from_rows(&rows, length);
        let config: ExperimentConfig = serde_json::from_value(serde_json::json!({
            "environment": {
                "segments": [{"start_time": 1, "means": [0.5, 0.5]}],
                "horizon": 10,
                "reward_model": {"type": "bernoulli"}
            },
            "policies": [
                {"name": "ucbl-cpd", "params": {"delta": 0.05}},
                {"name": "ucb1", "params": {}},
                {"name": "dts", "params": {}},
                {"name": "oucb1", "params": {}}
            ],
            "replications": 1,
            "seed": seed
        })).expect("valid config");

        let result = run_experiment(&config, &env, 0..2, None).expect("runs complete");
        let metrics = compute_metrics(&result, &env).expect("regret identity holds");
        prop_assert_eq!(metrics.policies.len(), 4);
        for policy in &metrics.policies {
            prop_assert_eq!(policy.failures, 0, "quarantined run for {}", &policy.policy);
        }
    }
}
