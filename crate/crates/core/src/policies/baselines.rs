//! Passive baseline policies: UCB1, discounted UCB, sliding-window UCB, and
//! discounted Thompson sampling.
//!
//! None of these restart themselves; the discounted and windowed variants
//! adapt to changing means by forgetting, the plain UCB1 and undiscounted
//! Thompson sampling (used by the oracle wrappers) do not adapt at all.
//! All use an internal step counter rather than the driver's wall clock so
//! that an oracle reset also rewinds their notion of time.

use std::collections::VecDeque;

use rand::{Rng, RngCore};
use rand_distr::{Beta, Distribution};

use super::{argmax, InitQueue, Policy, Resettable, StepOutcome};
use crate::{Error, Real, Result};

/// The classical optimism index `mean + sqrt(2 ln(t) / n)`.
///
/// # Errors
///
/// [`Error::InvalidCount`] if `n == 0` or `t == 0`.
pub fn ucb1_index(mean: Real, n: u64, t: u64) -> Result<Real> {
    if n == 0 {
        return Err(Error::InvalidCount(n));
    }
    if t == 0 {
        return Err(Error::InvalidCount(t));
    }
    Ok(mean + (2.0 * (t as Real).ln() / n as Real).sqrt())
}

// ---------------------------------------------------------------------------
// UCB1
// ---------------------------------------------------------------------------

/// Plain UCB1 over the full (unweighted, unwindowed) history.
#[derive(Debug, Clone)]
pub struct Ucb1 {
    counts: Vec<u64>,
    sums: Vec<Real>,
    steps: u64,
    init: InitQueue,
    last_forced: bool,
}

impl Ucb1 {
    /// Create a fresh policy over `arms` arms.
    ///
    /// # Errors
    ///
    /// [`Error::EmptySpec`] for zero arms.
    pub fn new(arms: usize) -> Result<Self> {
        if arms == 0 {
            return Err(Error::EmptySpec("policy needs at least one arm".into()));
        }
        Ok(Ucb1 {
            counts: vec![0; arms],
            sums: vec![0.0; arms],
            steps: 0,
            init: InitQueue::fresh(arms),
            last_forced: false,
        })
    }
}

impl Policy for Ucb1 {
    fn select(&mut self, _t: u64, _rng: &mut dyn RngCore) -> Result<usize> {
        self.steps += 1;
        if self.init.pending() {
            let arm = self.init.current();
            self.init.advance();
            self.last_forced = true;
            return Ok(arm);
        }
        self.last_forced = false;
        let steps = self.steps;
        let mut indices = Vec::with_capacity(self.counts.len());
        for arm in 0..self.counts.len() {
            let mean = self.sums[arm] / self.counts[arm] as Real;
            indices.push(ucb1_index(mean, self.counts[arm], steps)?);
        }
        Ok(argmax(indices.into_iter()))
    }

    fn update(
        &mut self,
        arm: usize,
        reward: Real,
        _t: u64,
        _rng: &mut dyn RngCore,
    ) -> Result<StepOutcome> {
        self.counts[arm] += 1;
        self.sums[arm] += reward;
        Ok(StepOutcome {
            arm,
            restart: None,
            forced_init: self.last_forced,
        })
    }
}

impl Resettable for Ucb1 {
    fn reset(&mut self) {
        self.counts.fill(0);
        self.sums.fill(0.0);
        self.steps = 0;
        self.init.rearm();
        self.last_forced = false;
    }
}

// ---------------------------------------------------------------------------
// Discounted UCB
// ---------------------------------------------------------------------------

/// UCB over geometrically discounted sums and counts.
///
/// Every update multiplies all arms' discounted statistics by `gamma_d`,
/// then adds `(reward, 1)` to the pulled arm. The index of an arm is
/// `discounted mean + 2 sqrt(xi ln(n_gamma) / N_gamma(arm))` where `n_gamma`
/// is the total discounted count.
#[derive(Debug, Clone)]
pub struct Ducb {
    gamma_d: Real,
    xi: Real,
    sums: Vec<Real>,
    counts: Vec<Real>,
    init: InitQueue,
    last_forced: bool,
}

impl Ducb {
    /// Create a fresh policy over `arms` arms.
    ///
    /// `gamma_d = None` applies the horizon rule `1 - sqrt(1/T) / 4`.
    ///
    /// # Errors
    ///
    /// [`Error::EmptySpec`] for zero arms; [`Error::ValueOutOfRange`] for a
    /// zero horizon with the default discount, a discount outside `(0, 1]`,
    /// or `xi <= 0`.
    pub fn new(arms: usize, horizon: u64, gamma_d: Option<Real>, xi: Real) -> Result<Self> {
        if arms == 0 {
            return Err(Error::EmptySpec("policy needs at least one arm".into()));
        }
        let gamma_d = match gamma_d {
            Some(value) => value,
            None => {
                if horizon == 0 {
                    return Err(Error::ValueOutOfRange(
                        "the default discount rule needs a positive horizon".into(),
                    ));
                }
                1.0 - 0.25 * (1.0 / horizon as Real).sqrt()
            }
        };
        if !(gamma_d > 0.0 && gamma_d <= 1.0) {
            return Err(Error::ValueOutOfRange(format!(
                "discount must lie in (0, 1], found {gamma_d}"
            )));
        }
        if !(xi > 0.0) {
            return Err(Error::ValueOutOfRange(format!(
                "xi must be positive, found {xi}"
            )));
        }
        Ok(Ducb {
            gamma_d,
            xi,
            sums: vec![0.0; arms],
            counts: vec![0.0; arms],
            init: InitQueue::fresh(arms),
            last_forced: false,
        })
    }

    /// The discount factor in effect.
    pub fn gamma_d(&self) -> Real {
        self.gamma_d
    }

    /// The policy's index of `arm`:
    /// `discounted mean + 2 sqrt(xi ln(max(n_gamma, 1)) / N_gamma(arm))`.
    ///
    /// # Errors
    ///
    /// [`Error::NoObservations`] if the arm has no discounted mass.
    pub fn index(&self, arm: usize) -> Result<Real> {
        let count = self.counts[arm];
        if count <= 0.0 {
            return Err(Error::NoObservations(arm));
        }
        let total: Real = self.counts.iter().sum();
        let mean = self.sums[arm] / count;
        Ok(mean + 2.0 * (self.xi * total.max(1.0).ln() / count).sqrt())
    }
}

impl Policy for Ducb {
    fn select(&mut self, _t: u64, _rng: &mut dyn RngCore) -> Result<usize> {
        if self.init.pending() {
            let arm = self.init.current();
            self.init.advance();
            self.last_forced = true;
            return Ok(arm);
        }
        self.last_forced = false;
        let mut indices = Vec::with_capacity(self.counts.len());
        for arm in 0..self.counts.len() {
            // Discounted mass can underflow to zero if an arm goes unpulled
            // for a very long time; treat that like an untried arm.
            indices.push(match self.index(arm) {
                Ok(value) => value,
                Err(Error::NoObservations(_)) => Real::INFINITY,
                Err(other) => return Err(other),
            });
        }
        Ok(argmax(indices.into_iter()))
    }

    fn update(
        &mut self,
        arm: usize,
        reward: Real,
        _t: u64,
        _rng: &mut dyn RngCore,
    ) -> Result<StepOutcome> {
        for i in 0..self.counts.len() {
            self.sums[i] *= self.gamma_d;
            self.counts[i] *= self.gamma_d;
        }
        self.sums[arm] += reward;
        self.counts[arm] += 1.0;
        Ok(StepOutcome {
            arm,
            restart: None,
            forced_init: self.last_forced,
        })
    }
}

// ---------------------------------------------------------------------------
// Sliding-window UCB
// ---------------------------------------------------------------------------

/// UCB over the rewards observed in the last `window` timesteps.
///
/// The window covers global timesteps, not per-arm pulls: an arm outside the
/// window has no statistics and gets an infinite index (forced refresh).
#[derive(Debug, Clone)]
pub struct SwUcb {
    window: u64,
    xi: Real,
    /// The `(arm, reward)` pairs of the last `window` steps, oldest first.
    recent: VecDeque<(usize, Real)>,
    window_sums: Vec<Real>,
    window_counts: Vec<u64>,
    steps: u64,
    init: InitQueue,
    last_forced: bool,
}

impl SwUcb {
    /// Create a fresh policy over `arms` arms.
    ///
    /// `window = None` applies the horizon rule `ceil(4 sqrt(T ln T))`.
    ///
    /// # Errors
    ///
    /// [`Error::EmptySpec`] for zero arms; [`Error::ValueOutOfRange`] if the
    /// window (given or computed) is zero or `xi <= 0`.
    pub fn new(arms: usize, horizon: u64, window: Option<u64>, xi: Real) -> Result<Self> {
        if arms == 0 {
            return Err(Error::EmptySpec("policy needs at least one arm".into()));
        }
        let window = match window {
            Some(value) => value,
            None => {
                let t = horizon as Real;
                (4.0 * (t * t.ln()).sqrt()).ceil() as u64
            }
        };
        if window == 0 {
            return Err(Error::ValueOutOfRange(
                "window must cover at least one timestep".into(),
            ));
        }
        if !(xi > 0.0) {
            return Err(Error::ValueOutOfRange(format!(
                "xi must be positive, found {xi}"
            )));
        }
        Ok(SwUcb {
            window,
            xi,
            recent: VecDeque::new(),
            window_sums: vec![0.0; arms],
            window_counts: vec![0; arms],
            steps: 0,
            init: InitQueue::fresh(arms),
            last_forced: false,
        })
    }

    /// The window length in timesteps.
    pub fn window(&self) -> u64 {
        self.window
    }

    /// The policy's index of `arm` at timestep `t`:
    /// `window mean + 2 sqrt(xi ln(min(t, window)) / N_window(arm))`, or
    /// positive infinity when the arm has no observation in the window.
    pub fn index(&self, arm: usize, t: u64) -> Real {
        let count = self.window_counts[arm];
        if count == 0 {
            return Real::INFINITY;
        }
        let mean = self.window_sums[arm] / count as Real;
        let horizon_seen = t.min(self.window) as Real;
        mean + 2.0 * (self.xi * horizon_seen.ln() / count as Real).sqrt()
    }
}

impl Policy for SwUcb {
    fn select(&mut self, _t: u64, _rng: &mut dyn RngCore) -> Result<usize> {
        self.steps += 1;
        if self.init.pending() {
            let arm = self.init.current();
            self.init.advance();
            self.last_forced = true;
            return Ok(arm);
        }
        self.last_forced = false;
        let steps = self.steps;
        Ok(argmax((0..self.window_counts.len()).map(|arm| self.index(arm, steps))))
    }

    fn update(
        &mut self,
        arm: usize,
        reward: Real,
        _t: u64,
        _rng: &mut dyn RngCore,
    ) -> Result<StepOutcome> {
        self.recent.push_back((arm, reward));
        self.window_sums[arm] += reward;
        self.window_counts[arm] += 1;
        if self.recent.len() as u64 > self.window {
            let (old_arm, old_reward) = self.recent.pop_front().expect("window is overfull");
            self.window_sums[old_arm] -= old_reward;
            self.window_counts[old_arm] -= 1;
            if self.window_counts[old_arm] == 0 {
                // Clear accumulated floating-point residue so an empty window
                // restarts from exactly zero.
                self.window_sums[old_arm] = 0.0;
            }
        }
        Ok(StepOutcome {
            arm,
            restart: None,
            forced_init: self.last_forced,
        })
    }
}

// ---------------------------------------------------------------------------
// Discounted Thompson sampling
// ---------------------------------------------------------------------------

/// Thompson sampling on Beta posteriors with geometric discounting.
///
/// Selection samples `theta_i ~ Beta(S_i + 1, F_i + 1)` for every arm in arm
/// order and pulls the argmax. The update discounts every arm's `(S, F)` by
/// `gamma_t` and then adds the pulled arm's Bernoulli outcome (non-binary
/// rewards are relaxed to a coin flip with success probability equal to the
/// reward).
#[derive(Debug, Clone)]
pub struct Dts {
    gamma_t: Real,
    successes: Vec<Real>,
    failures: Vec<Real>,
}

impl Dts {
    /// Create a fresh policy over `arms` arms with discount `gamma_t`
    /// (`1.0` gives plain undiscounted Thompson sampling).
    ///
    /// # Errors
    ///
    /// [`Error::EmptySpec`] for zero arms; [`Error::ValueOutOfRange`] for a
    /// discount outside `(0, 1]`.
    pub fn new(arms: usize, gamma_t: Real) -> Result<Self> {
        if arms == 0 {
            return Err(Error::EmptySpec("policy needs at least one arm".into()));
        }
        if !(gamma_t > 0.0 && gamma_t <= 1.0) {
            return Err(Error::ValueOutOfRange(format!(
                "discount must lie in (0, 1], found {gamma_t}"
            )));
        }
        Ok(Dts {
            gamma_t,
            successes: vec![0.0; arms],
            failures: vec![0.0; arms],
        })
    }

    /// Posterior mean `(S + 1) / (S + F + 2)` of `arm`.
    pub fn posterior_mean(&self, arm: usize) -> Real {
        (self.successes[arm] + 1.0) / (self.successes[arm] + self.failures[arm] + 2.0)
    }
}

impl Policy for Dts {
    fn select(&mut self, _t: u64, rng: &mut dyn RngCore) -> Result<usize> {
        let mut best_arm = 0usize;
        let mut best_theta = Real::NEG_INFINITY;
        for arm in 0..self.successes.len() {
            let beta = Beta::new(self.successes[arm] + 1.0, self.failures[arm] + 1.0)
                .expect("posterior parameters are positive");
            let theta = beta.sample(rng);
            if theta > best_theta {
                best_theta = theta;
                best_arm = arm;
            }
        }
        Ok(best_arm)
    }

    fn update(
        &mut self,
        arm: usize,
        reward: Real,
        _t: u64,
        rng: &mut dyn RngCore,
    ) -> Result<StepOutcome> {
        let outcome = if reward == 0.0 || reward == 1.0 {
            reward
        } else if rng.gen::<f64>() < reward {
            1.0
        } else {
            0.0
        };
        for i in 0..self.successes.len() {
            self.successes[i] *= self.gamma_t;
            self.failures[i] *= self.gamma_t;
        }
        self.successes[arm] += outcome;
        self.failures[arm] += 1.0 - outcome;
        Ok(StepOutcome {
            arm,
            restart: None,
            forced_init: false,
        })
    }
}

impl Resettable for Dts {
    fn reset(&mut self) {
        self.successes.fill(0.0);
        self.failures.fill(0.0);
    }
}
