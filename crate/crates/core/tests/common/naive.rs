//! Naive quadratic rescan: an independent reimplementation of the
//! changepoint scan used to cross-check the prefix-sum implementation.
//! Every mean and radius is recomputed from the raw log — no prefix
//! sums, no shared radius table, no incremental state.

use cpbandits::confbounds::RadiusKind;
use cpbandits::detect::Direction;

pub struct NaiveHit {
    pub arm: usize,
    pub split: u64,
    pub direction: Direction,
}

/// First-hit scan over every split of every arm, in (arm, split) order.
/// Returns the hit (if any) and the number of splits examined,
/// including the firing one.
pub fn naive_scan(
    arms: usize,
    log: &[(usize, f64)],
    delta: f64,
    kind: RadiusKind,
) -> (Option<NaiveHit>, u64) {
    let elapsed = log.len() as u64;
    let mut splits = 0u64;
    for arm in 0..arms {
        let values: Vec<f64> = log
            .iter()
            .filter(|(a, _)| *a == arm)
            .map(|(_, v)| *v)
            .collect();
        let count = values.len() as u64;
        for k in 1..count {
            splits += 1;
            if let Some(direction) = disjoint_at(&values, k as usize, |n| {
                kind.eval(n, elapsed, delta).expect("valid radius")
            }) {
                return (Some(NaiveHit { arm, split: k, direction }), splits);
            }
        }
    }
    (None, splits)
}

/// Boundary-restricted variant: only the listed splits are examined,
/// in the order given, skipping entries outside [1, count).
pub fn naive_boundary_scan(
    arms: usize,
    log: &[(usize, f64)],
    boundaries: &[Vec<u64>],
    epsilon: f64,
    psi: f64,
    alpha: f64,
) -> (Option<NaiveHit>, u64) {
    let kind = RadiusKind::phase(psi, alpha).expect("valid phase parameters");
    let mut splits = 0u64;
    for arm in 0..arms {
        let values: Vec<f64> = log
            .iter()
            .filter(|(a, _)| *a == arm)
            .map(|(_, v)| *v)
            .collect();
        let count = values.len() as u64;
        for &k in &boundaries[arm] {
            if k < 1 || k >= count {
                continue;
            }
            splits += 1;
            if let Some(direction) = disjoint_at(&values, k as usize, |n| {
                kind.eval(n, 0, epsilon).expect("valid radius")
            }) {
                return (Some(NaiveHit { arm, split: k, direction }), splits);
            }
        }
    }
    (None, splits)
}

fn disjoint_at(values: &[f64], k: usize, radius: impl Fn(u64) -> f64) -> Option<Direction> {
    let left = &values[..k];
    let right = &values[k..];
    let left_mean = left.iter().sum::<f64>() / left.len() as f64;
    let right_mean = right.iter().sum::<f64>() / right.len() as f64;
    let left_radius = radius(left.len() as u64);
    let right_radius = radius(right.len() as u64);
    if left_mean + left_radius < right_mean - right_radius {
        Some(Direction::Up)
    } else if left_mean - left_radius > right_mean + right_radius {
        Some(Direction::Down)
    } else {
        None
    }
}
