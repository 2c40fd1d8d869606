//! Oracle-restart wrapper: resets a base policy at the true changepoints.
//!
//! The wrapper is told the changepoint times up front (knowledge no online
//! policy has) and hard-resets the base policy at the start of each piece,
//! which makes it a useful upper reference: it pays no detection delay and
//! never false-alarms.

use rand::RngCore;

use super::{Policy, Resettable, RestartEvent, ScanCounters, StepOutcome};
use crate::{Real, Result};

/// A base policy hard-reset at each known changepoint.
///
/// At every timestep `t` that equals a changepoint, the base policy is reset
/// to its fresh state before selecting, and the step's outcome carries a
/// [`RestartEvent`] with no detection attached (the restart was scheduled,
/// not detected).
#[derive(Debug, Clone)]
pub struct OracleRestart<P> {
    base: P,
    changepoints: Vec<u64>,
    next: usize,
    pending: Option<u64>,
    restarts: u64,
}

impl<P: Policy + Resettable> OracleRestart<P> {
    /// Wrap `base`, scheduling a reset at each time in `changepoints`.
    ///
    /// The times are sorted and deduplicated; times outside the run are
    /// simply never reached.
    pub fn new(base: P, changepoints: impl Into<Vec<u64>>) -> Self {
        let mut changepoints = changepoints.into();
        changepoints.sort_unstable();
        changepoints.dedup();
        OracleRestart {
            base,
            changepoints,
            next: 0,
            pending: None,
            restarts: 0,
        }
    }

    /// The wrapped base policy.
    pub fn base(&self) -> &P {
        &self.base
    }
}

impl<P: Policy + Resettable> Policy for OracleRestart<P> {
    fn select(&mut self, t: u64, rng: &mut dyn RngCore) -> Result<usize> {
        while self.next < self.changepoints.len() && self.changepoints[self.next] <= t {
            if self.changepoints[self.next] == t {
                self.base.reset();
                self.pending = Some(t);
                self.restarts += 1;
            }
            self.next += 1;
        }
        self.base.select(t, rng)
    }

    fn update(&mut self, arm: usize, reward: Real, t: u64, rng: &mut dyn RngCore) -> Result<StepOutcome> {
        let mut outcome = self.base.update(arm, reward, t, rng)?;
        if let Some(time) = self.pending.take() {
            outcome.restart = Some(RestartEvent {
                time,
                detection: None,
            });
        }
        Ok(outcome)
    }

    fn scan_counters(&self) -> ScanCounters {
        ScanCounters {
            restarts: self.restarts,
            ..self.base.scan_counters()
        }
    }
}
