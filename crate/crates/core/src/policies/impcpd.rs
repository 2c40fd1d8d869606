//! Phase-based changepoint policy with pseudo arm elimination.
//!
//! The policy runs in phases `m = 0, 1, ...` with tolerances
//! `epsilon_0 = 1`, `epsilon_{m+1} = epsilon_m / (1 + gamma)` and per-arm
//! phase lengths `ell_m = ceil(ln(psi * epsilon_m^2) / (2 epsilon_m))`, where
//! `psi = T^2 / (K^2 ln K)`. Every step it pulls the arm maximizing
//! `mean + phase_radius(count, epsilon_m)` over *all* arms. When a phase
//! deadline `L_m` passes it runs the phase-boundary scan over all previously
//! recorded boundaries; a firing scan restarts everything, otherwise the
//! phase advances: dominated arms (upper bound below the best live lower
//! bound) are pseudo-eliminated — which only shortens future phases, never
//! restricts selection — the tolerance shrinks, the next deadline is set to
//! `t + |B| * ell`, and the current per-arm counts are recorded as a new
//! boundary.
//!
//! Phases stop at `M = floor(log_{1+gamma}(T/e) / 2)`; if the schedule is
//! exhausted mid-epoch the policy freezes further scanning until a restart
//! and flags the run.

use rand::RngCore;

use super::{argmax, InitQueue, Policy, RestartEvent, ScanCounters, StepOutcome};
use crate::confbounds::phase_radius;
use crate::detect::{cpdi_scan, ArmTracker};
use crate::{Error, Real, Result};

/// Phase-based scanning policy with pseudo arm elimination.
#[derive(Debug, Clone)]
pub struct ImpCpd {
    arms: usize,
    gamma: Real,
    alpha: Real,
    psi: Real,
    /// Current phase index `m` (resets to 0 on restart).
    phase: u64,
    /// Highest phase the schedule supports; negative when even phase 0 is
    /// unsupported.
    max_phase: i64,
    /// Current phase tolerance `epsilon_m`.
    epsilon: Real,
    /// Next phase deadline `L_m` (`u64::MAX` once frozen).
    deadline: u64,
    /// Pseudo-eliminated arms; affects phase lengths only.
    eliminated: Vec<bool>,
    /// `boundaries[arm]` = that arm's observation counts at each recorded
    /// phase end of the current epoch.
    boundaries: Vec<Vec<u64>>,
    tracker: ArmTracker,
    init: InitQueue,
    counters: ScanCounters,
    frozen: bool,
    last_forced: bool,
}

impl ImpCpd {
    /// Create a fresh policy over `arms` arms for horizon `horizon`.
    ///
    /// `delta` overrides the confidence level: `psi = 1 / (delta^2 K^2 ln K)`,
    /// with `None` meaning the canonical `delta = 1/T`.
    ///
    /// # Errors
    ///
    /// [`Error::ValueOutOfRange`] for fewer than 2 arms (`psi` divides by
    /// `ln K`), a zero horizon, or `gamma` outside `(0, 1]`;
    /// [`Error::InvalidAlpha`] for `alpha <= 0`; [`Error::InvalidDelta`] for
    /// an explicit `delta` outside `(0, 1)`; [`Error::DegenerateLog`] when
    /// the resulting `psi <= 1` (horizon too short for any phase).
    pub fn new(
        arms: usize,
        horizon: u64,
        gamma: Real,
        alpha: Real,
        delta: Option<Real>,
    ) -> Result<Self> {
        if arms < 2 {
            return Err(Error::ValueOutOfRange(format!(
                "the phase schedule needs at least 2 arms, found {arms}"
            )));
        }
        if horizon == 0 {
            return Err(Error::ValueOutOfRange(
                "the phase schedule needs a positive horizon".into(),
            ));
        }
        if !(gamma > 0.0 && gamma <= 1.0) {
            return Err(Error::ValueOutOfRange(format!(
                "gamma must lie in (0, 1], found {gamma}"
            )));
        }
        if !(alpha > 0.0) {
            return Err(Error::InvalidAlpha(format!(
                "phase requires alpha > 0, found {alpha}"
            )));
        }
        let k = arms as Real;
        let t_cap = horizon as Real;
        let psi = match delta {
            None => t_cap * t_cap / (k * k * k.ln()),
            Some(d) => {
                if !(d > 0.0 && d < 1.0) {
                    return Err(Error::InvalidDelta(d));
                }
                1.0 / (d * d * k * k * k.ln())
            }
        };
        if !(psi > 1.0) {
            return Err(Error::DegenerateLog(format!(
                "psi = {psi} must exceed 1; the horizon is too short for this arm count"
            )));
        }
        let max_phase = (0.5 * (t_cap / std::f64::consts::E).ln() / (1.0 + gamma).ln()).floor();
        let mut policy = ImpCpd {
            arms,
            gamma,
            alpha,
            psi,
            phase: 0,
            max_phase: max_phase as i64,
            epsilon: 1.0,
            deadline: 0,
            eliminated: vec![false; arms],
            boundaries: vec![Vec::new(); arms],
            tracker: ArmTracker::new(arms, 1),
            init: InitQueue::fresh(arms),
            counters: ScanCounters::default(),
            frozen: false,
            last_forced: false,
        };
        policy.deadline = arms as u64 * policy.phase_length(1.0);
        Ok(policy)
    }

    /// The horizon constant `psi = T^2 / (K^2 ln K)` (or its `delta` form).
    pub fn psi(&self) -> Real {
        self.psi
    }

    /// The last supported phase index `M`; negative when even phase 0 is
    /// unsupported (every scan frozen from the start).
    pub fn max_phase(&self) -> i64 {
        self.max_phase
    }

    /// Current phase index `m`.
    pub fn current_phase(&self) -> u64 {
        self.phase
    }

    /// Current phase tolerance `epsilon_m`.
    pub fn current_epsilon(&self) -> Real {
        self.epsilon
    }

    /// Number of arms not pseudo-eliminated, floored at 1.
    pub fn live_arms(&self) -> usize {
        let live = self.eliminated.iter().filter(|&&e| !e).count();
        live.max(1)
    }

    /// Per-arm phase length `ell(epsilon) = ceil(ln(psi eps^2) / (2 eps))`.
    ///
    /// Clamped below at 1 so a deadline always moves forward; the clamp is
    /// unreachable while the schedule is live (`ln(psi eps_m^2) > 0` for all
    /// `m <= M + 1` on any valid configuration).
    pub fn phase_length(&self, epsilon: Real) -> u64 {
        let raw = ((self.psi * epsilon * epsilon).ln() / (2.0 * epsilon)).ceil();
        if raw < 1.0 {
            1
        } else {
            raw as u64
        }
    }

    /// The policy's index of `arm`: `mean + phase_radius(count, epsilon_m)`.
    ///
    /// # Errors
    ///
    /// [`Error::NoObservations`] before the arm's first pull this epoch;
    /// [`Error::DegenerateLog`] if the tolerance has decayed past the radius
    /// kernel's domain.
    pub fn index(&self, arm: usize) -> Result<Real> {
        let mean = self.tracker.mean(arm)?;
        let radius = phase_radius(self.tracker.count(arm), self.epsilon, self.psi, self.alpha)?;
        Ok(mean + radius)
    }

    /// Pseudo-eliminate every live arm whose upper bound sits below the best
    /// live lower bound; returns the live count after elimination.
    fn apply_pseudo_elimination(&mut self) -> Result<usize> {
        let mut bounds = Vec::with_capacity(self.arms);
        for arm in 0..self.arms {
            let mean = self.tracker.mean(arm)?;
            let radius =
                phase_radius(self.tracker.count(arm), self.epsilon, self.psi, self.alpha)?;
            bounds.push((mean + radius, mean - radius));
        }
        let max_live_lcb = bounds
            .iter()
            .zip(&self.eliminated)
            .filter(|(_, &gone)| !gone)
            .map(|((_, lcb), _)| *lcb)
            .fold(Real::NEG_INFINITY, Real::max);
        for arm in 0..self.arms {
            if !self.eliminated[arm] && bounds[arm].0 < max_live_lcb {
                self.eliminated[arm] = true;
            }
        }
        Ok(self.live_arms())
    }
}

impl Policy for ImpCpd {
    fn select(&mut self, _t: u64, _rng: &mut dyn RngCore) -> Result<usize> {
        if self.init.pending() {
            let arm = self.init.current();
            self.init.advance();
            self.last_forced = true;
            return Ok(arm);
        }
        self.last_forced = false;
        let mut indices = Vec::with_capacity(self.arms);
        for arm in 0..self.arms {
            indices.push(self.index(arm)?);
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
            return Ok(StepOutcome {
                arm,
                restart: None,
                forced_init: true,
            });
        }
        if t >= self.deadline {
            if self.phase as i64 > self.max_phase {
                // Schedule exhausted mid-epoch: no further scans until a
                // restart; flagged so the harness can report it.
                self.frozen = true;
                self.deadline = u64::MAX;
            } else {
                self.counters.scan_calls += 1;
                let outcome =
                    cpdi_scan(&self.tracker, &self.boundaries, self.epsilon, self.psi, self.alpha)?;
                self.counters.splits_evaluated += outcome.splits_evaluated;
                if let Some(detection) = outcome.detection {
                    self.counters.restarts += 1;
                    for arm_boundaries in &mut self.boundaries {
                        arm_boundaries.clear();
                    }
                    self.eliminated.fill(false);
                    self.phase = 0;
                    self.epsilon = 1.0;
                    self.frozen = false;
                    self.tracker.restart(t);
                    self.deadline = t + self.arms as u64 * self.phase_length(1.0);
                    self.init.rearm();
                    return Ok(StepOutcome {
                        arm,
                        restart: Some(RestartEvent {
                            time: t,
                            detection: Some(detection),
                        }),
                        forced_init: false,
                    });
                }
                // Phase end without detection: eliminate dominated arms with
                // the current tolerance, then advance the schedule and record
                // the boundary.
                let live = self.apply_pseudo_elimination()?;
                self.epsilon /= 1.0 + self.gamma;
                let ell = self.phase_length(self.epsilon);
                self.deadline = t + live as u64 * ell;
                self.phase += 1;
                for arm in 0..self.arms {
                    self.boundaries[arm].push(self.tracker.count(arm));
                }
            }
        }
        Ok(StepOutcome {
            arm,
            restart: None,
            forced_init: false,
        })
    }

    fn scan_counters(&self) -> ScanCounters {
        self.counters
    }

    fn frozen_phase(&self) -> bool {
        self.frozen
    }
}
