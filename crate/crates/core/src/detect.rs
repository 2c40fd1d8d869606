//! Per-arm observation logs and split-based changepoint scans.
//!
//! [`ArmTracker`] stores, for every arm, the observations made since the last
//! restart, with prefix sums so any slice mean costs O(1). Two scans consume
//! it:
//!
//! - [`cpd_scan`]: tests *every* split of every arm's log. A split separates
//!   the log into a left part (observations `1..=k`) and a right part
//!   (`k+1..=count`) and fires when the two sides' confidence intervals are
//!   disjoint.
//! - [`cpdi_scan`]: the improved detector's variant that tests only the
//!   recorded phase-boundary splits with the phase radius.
//!
//! Splits index each arm's own observation sequence, not wall-clock time: an
//! arm has samples only at its own pull times, so observation indices are the
//! only well-defined split points for its slice means.

use crate::confbounds::RadiusKind;
use crate::{Error, Real, Result};

// ---------------------------------------------------------------------------
// ArmTracker
// ---------------------------------------------------------------------------

/// Per-arm observation logs since the last restart.
///
/// Tracks the restart time `t_s`, the latest recorded time `t_p`, and one
/// observation log per arm with prefix sums. Single-writer; scans only read.
#[derive(Debug, Clone)]
pub struct ArmTracker {
    restart_time: u64,
    current_time: u64,
    /// `prefix[i][k]` = sum of the first `k` observations of arm `i`
    /// (so `prefix[i][0] == 0.0` and the log length is `prefix[i].len() - 1`).
    prefix: Vec<Vec<Real>>,
}

impl ArmTracker {
    /// Create an empty tracker over `arms` arms with restart time `t_s`.
    pub fn new(arms: usize, restart_time: u64) -> Self {
        ArmTracker {
            restart_time,
            current_time: restart_time,
            prefix: vec![vec![0.0]; arms],
        }
    }

    /// Number of arms tracked.
    pub fn arms(&self) -> usize {
        self.prefix.len()
    }

    /// The restart time `t_s` this log window began at.
    pub fn restart_time(&self) -> u64 {
        self.restart_time
    }

    /// The latest recorded time `t_p` (equals `t_s` before any record).
    pub fn current_time(&self) -> u64 {
        self.current_time
    }

    /// Elapsed time `t_p - t_s + 1` covered by the current window; this is
    /// the `t` argument the union/peeling radii receive.
    pub fn elapsed(&self) -> u64 {
        self.current_time - self.restart_time + 1
    }

    /// Number of observations recorded for `arm` since the restart.
    pub fn count(&self, arm: usize) -> u64 {
        (self.prefix[arm].len() - 1) as u64
    }

    /// Append an observation for `arm` made at time `t`.
    ///
    /// # Errors
    ///
    /// [`Error::ArmOutOfRange`] for an unknown arm and
    /// [`Error::ValueOutOfRange`] for values outside `[0, 1]`.
    pub fn record(&mut self, arm: usize, value: Real, t: u64) -> Result<()> {
        if arm >= self.prefix.len() {
            return Err(Error::ArmOutOfRange {
                arm,
                arms: self.prefix.len(),
            });
        }
        if !(0.0..=1.0).contains(&value) || value.is_nan() {
            return Err(Error::ValueOutOfRange(format!(
                "observation {value} is outside [0, 1]"
            )));
        }
        let log = &mut self.prefix[arm];
        let total = *log.last().expect("prefix array is never empty");
        log.push(total + value);
        if t > self.current_time {
            self.current_time = t;
        }
        Ok(())
    }

    /// Mean of all observations of `arm`.
    ///
    /// # Errors
    ///
    /// [`Error::NoObservations`] if the arm has no samples yet.
    pub fn mean(&self, arm: usize) -> Result<Real> {
        let n = self.count(arm);
        if n == 0 {
            return Err(Error::NoObservations(arm));
        }
        Ok(self.prefix[arm][n as usize] / n as Real)
    }

    /// Mean of observations `a+1..=b` (0-based half-open `(a, b]`) of `arm`.
    ///
    /// # Errors
    ///
    /// [`Error::ValueOutOfRange`] unless `a < b <= count(arm)`.
    pub fn slice_mean(&self, arm: usize, a: u64, b: u64) -> Result<Real> {
        if a >= b || b > self.count(arm) {
            return Err(Error::ValueOutOfRange(format!(
                "slice ({a}, {b}] is not a valid range of arm {arm}'s {} observations",
                self.count(arm)
            )));
        }
        let sums = &self.prefix[arm];
        Ok((sums[b as usize] - sums[a as usize]) / (b - a) as Real)
    }

    /// Clear every log and begin a new window at restart time `t`.
    pub fn restart(&mut self, t: u64) {
        self.restart_time = t;
        self.current_time = t;
        for log in &mut self.prefix {
            log.clear();
            log.push(0.0);
        }
    }
}

// ---------------------------------------------------------------------------
// Detections
// ---------------------------------------------------------------------------

/// Which way the mean moved at a fired split.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// The right (recent) side's interval sits above the left's.
    Up,
    /// The right side's interval sits below the left's.
    Down,
}

/// A fired changepoint alarm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Detection {
    /// Arm whose log produced the disjoint split.
    pub arm: usize,
    /// Observation index `k` of the split (`1 <= k < count(arm)`): the left
    /// side is that arm's first `k` observations.
    pub split: u64,
    /// Wall-clock time `t_p` at which the scan fired.
    pub time: u64,
    /// Direction of the mean shift.
    pub direction: Direction,
    /// Radius family the disjointness test used.
    pub radius_kind: RadiusKind,
}

/// Result of one scan invocation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanOutcome {
    /// The first firing split in scan order, if any.
    pub detection: Option<Detection>,
    /// Number of splits whose disjointness condition was evaluated (the scan
    /// stops at the first hit, which is included in the count).
    pub splits_evaluated: u64,
}

/// Disjointness test shared by both scans. Fires `Up` when the left upper
/// bound sits below the right lower bound, `Down` in the mirror case.
fn disjoint(
    left_mean: Real,
    left_radius: Real,
    right_mean: Real,
    right_radius: Real,
) -> Option<Direction> {
    if left_mean + left_radius < right_mean - right_radius {
        Some(Direction::Up)
    } else if left_mean - left_radius > right_mean + right_radius {
        Some(Direction::Down)
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// Exhaustive scan
// ---------------------------------------------------------------------------

/// Scan every split of every arm's log for disjoint confidence intervals.
///
/// For each arm and each split `k in 1..count`, the left side is the mean of
/// observations `1..=k` with a radius at `n = k` and the right side the mean
/// of `k+1..=count` with a radius at `n = count - k`; the scan returns the
/// first split (lowest arm index, then lowest `k`) where the two intervals
/// are disjoint. The scan is a full fresh pass over the tracker: one radius
/// evaluation per distinct count (shared across arms) and O(1) per split via
/// the prefix sums.
///
/// For `Union` and `Peeling`, the radius's `t` argument is the tracker's
/// elapsed time `t_p - t_s + 1` (the detection analysis is restart-relative).
///
/// # Errors
///
/// [`Error::ValueOutOfRange`] if `radius_kind` is the phase family (use
/// [`cpdi_scan`]); otherwise only argument errors propagated from the radius
/// kernel (e.g. an invalid `delta`, or a peeling scan with elapsed time
/// < 2). Empty and single-observation logs are not errors; they simply
/// contribute no splits.
pub fn cpd_scan(tracker: &ArmTracker, delta: Real, radius_kind: RadiusKind) -> Result<ScanOutcome> {
    if matches!(radius_kind, RadiusKind::Phase { .. }) {
        return Err(Error::ValueOutOfRange(
            "the phase radius family is reserved for cpdi_scan".into(),
        ));
    }
    let elapsed = tracker.elapsed();
    // One radius per distinct observation count: splits only ever need
    // n in 1..max_count-1, whichever side they sit on.
    let max_count = (0..tracker.arms()).map(|i| tracker.count(i)).max().unwrap_or(0);
    let mut radii: Vec<Real> = Vec::new();
    if max_count >= 2 {
        radii.reserve((max_count - 1) as usize);
        for n in 1..max_count {
            radii.push(radius_kind.eval(n, elapsed, delta)?);
        }
    }
    let mut splits_evaluated = 0u64;
    for arm in 0..tracker.arms() {
        let count = tracker.count(arm);
        if count < 2 {
            continue;
        }
        let sums = &tracker.prefix[arm];
        let total = sums[count as usize];
        for k in 1..count {
            splits_evaluated += 1;
            let left_sum = sums[k as usize];
            let left_mean = left_sum / k as Real;
            let right_mean = (total - left_sum) / (count - k) as Real;
            let left_radius = radii[(k - 1) as usize];
            let right_radius = radii[(count - k - 1) as usize];
            if let Some(direction) = disjoint(left_mean, left_radius, right_mean, right_radius) {
                return Ok(ScanOutcome {
                    detection: Some(Detection {
                        arm,
                        split: k,
                        time: tracker.current_time(),
                        direction,
                        radius_kind,
                    }),
                    splits_evaluated,
                });
            }
        }
    }
    Ok(ScanOutcome {
        detection: None,
        splits_evaluated,
    })
}

// ---------------------------------------------------------------------------
// Phase-boundary scan
// ---------------------------------------------------------------------------

/// Scan only the recorded phase-boundary splits with the phase radius.
///
/// `boundaries[arm]` lists the observation counts arm had at each recorded
/// phase end (ascending). Each boundary `b` with `1 <= b < count(arm)` is
/// tested exactly like a [`cpd_scan`] split but with
/// [`crate::confbounds::phase_radius`] at the *current* phase tolerance
/// `epsilon` on both sides; boundaries outside that range cannot form a
/// two-sided split yet and are skipped. First hit wins (lowest arm, earliest
/// boundary).
///
/// # Errors
///
/// [`Error::ArmOutOfRange`] if `boundaries` has more rows than the tracker
/// has arms; otherwise argument errors from the phase radius, notably
/// [`Error::DegenerateLog`] when `psi * epsilon^2 <= 1`.
pub fn cpdi_scan(
    tracker: &ArmTracker,
    boundaries: &[Vec<u64>],
    epsilon: Real,
    psi: Real,
    alpha: Real,
) -> Result<ScanOutcome> {
    if boundaries.len() > tracker.arms() {
        return Err(Error::ArmOutOfRange {
            arm: boundaries.len() - 1,
            arms: tracker.arms(),
        });
    }
    let radius_kind = RadiusKind::phase(psi, alpha)?;
    let mut splits_evaluated = 0u64;
    for (arm, arm_boundaries) in boundaries.iter().enumerate() {
        let count = tracker.count(arm);
        for &b in arm_boundaries {
            if b < 1 || b >= count {
                continue;
            }
            splits_evaluated += 1;
            let left_mean = tracker.slice_mean(arm, 0, b)?;
            let right_mean = tracker.slice_mean(arm, b, count)?;
            let left_radius = crate::confbounds::phase_radius(b, epsilon, psi, alpha)?;
            let right_radius = crate::confbounds::phase_radius(count - b, epsilon, psi, alpha)?;
            if let Some(direction) = disjoint(left_mean, left_radius, right_mean, right_radius) {
                return Ok(ScanOutcome {
                    detection: Some(Detection {
                        arm,
                        split: b,
                        time: tracker.current_time(),
                        direction,
                        radius_kind,
                    }),
                    splits_evaluated,
                });
            }
        }
    }
    Ok(ScanOutcome {
        detection: None,
        splits_evaluated,
    })
}
