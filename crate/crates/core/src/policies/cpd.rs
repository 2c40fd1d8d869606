//! Upper-confidence-bound policies with exhaustive changepoint scans.
//!
//! One implementation covers the three configured variants, which differ
//! only in radius family and confidence schedule:
//!
//! | config     | radius family | default schedule |
//! |------------|---------------|------------------|
//! | `ucbl-cpd` | Laplace       | `delta(t) = 1/t` |
//! | `ucb-cpd`  | Union         | fixed 0.05       |
//! | `ucbp-cpd` | Peeling       | fixed 0.05       |
//!
//! Each epoch starts with a forced round-robin pull of every arm; afterwards
//! the policy pulls the arm maximizing `mean + radius(count, delta(t))` and,
//! on every post-initialization update, runs the exhaustive scan over all
//! splits of all arm logs. A firing scan restarts the epoch: trackers clear,
//! the window base moves to the current time, and the round-robin re-arms.

use rand::RngCore;

use super::{argmax, DeltaSchedule, InitQueue, Policy, RestartEvent, ScanCounters, StepOutcome};
use crate::confbounds::RadiusKind;
use crate::detect::{cpd_scan, ArmTracker};
use crate::{Error, Real, Result};

/// Exhaustive-scan UCB policy, generic over the radius family.
#[derive(Debug, Clone)]
pub struct CpdPolicy {
    kind: RadiusKind,
    delta: DeltaSchedule,
    tracker: ArmTracker,
    init: InitQueue,
    counters: ScanCounters,
    last_forced: bool,
}

impl CpdPolicy {
    /// Create a fresh policy over `arms` arms.
    ///
    /// # Errors
    ///
    /// [`Error::EmptySpec`] for zero arms; [`Error::ValueOutOfRange`] if
    /// `kind` is the phase family (that family belongs to the improved
    /// detector) or a fixed schedule's delta is outside `(0, 1)`.
    pub fn new(arms: usize, kind: RadiusKind, delta: DeltaSchedule) -> Result<Self> {
        if arms == 0 {
            return Err(Error::EmptySpec("policy needs at least one arm".into()));
        }
        if matches!(kind, RadiusKind::Phase { .. }) {
            return Err(Error::ValueOutOfRange(
                "the phase radius family is reserved for the improved detector".into(),
            ));
        }
        if let DeltaSchedule::Fixed(value) = delta {
            if !(value > 0.0 && value < 1.0) {
                return Err(Error::InvalidDelta(value));
            }
        }
        Ok(CpdPolicy {
            kind,
            delta,
            tracker: ArmTracker::new(arms, 1),
            init: InitQueue::fresh(arms),
            counters: ScanCounters::default(),
            last_forced: false,
        })
    }

    /// The policy's upper confidence index of `arm` at timestep `t`.
    ///
    /// # Errors
    ///
    /// [`Error::NoObservations`] before the arm's first pull this epoch;
    /// radius argument errors otherwise.
    pub fn index(&self, arm: usize, t: u64) -> Result<Real> {
        let mean = self.tracker.mean(arm)?;
        let radius = self.kind.eval(
            self.tracker.count(arm),
            self.tracker.elapsed(),
            self.delta.delta(t),
        )?;
        Ok(mean + radius)
    }
}

impl Policy for CpdPolicy {
    fn select(&mut self, t: u64, _rng: &mut dyn RngCore) -> Result<usize> {
        if self.init.pending() {
            let arm = self.init.current();
            self.init.advance();
            self.last_forced = true;
            return Ok(arm);
        }
        self.last_forced = false;
        let mut indices = Vec::with_capacity(self.tracker.arms());
        for arm in 0..self.tracker.arms() {
            indices.push(self.index(arm, t)?);
        }
        Ok(argmax(indices.into_iter()))
    }

    fn update(
        &mut self,
        arm: usize,
        reward: Real,
        t: u64,
        _rng: &mut dyn RngCore,
    ) -> Result<StepOutcome> {
        self.tracker.record(arm, reward, t)?;
        if self.last_forced {
            // Initialization pulls only populate the logs; scanning begins
            // with the first index-driven step of the epoch.
            return Ok(StepOutcome {
                arm,
                restart: None,
                forced_init: true,
            });
        }
        self.counters.scan_calls += 1;
        let outcome = cpd_scan(&self.tracker, self.delta.delta(t), self.kind)?;
        self.counters.splits_evaluated += outcome.splits_evaluated;
        let restart = match outcome.detection {
            Some(detection) => {
                self.counters.restarts += 1;
                self.tracker.restart(t);
                self.init.rearm();
                Some(RestartEvent {
                    time: t,
                    detection: Some(detection),
                })
            }
            None => None,
        };
        Ok(StepOutcome {
            arm,
            restart,
            forced_init: false,
        })
    }

    fn scan_counters(&self) -> ScanCounters {
        self.counters
    }
}
