//! Piecewise-stationary reward environments.
//!
//! An [`Environment`] is a schedule of [`Segment`]s — each a start time plus a
//! per-arm mean vector — together with a horizon and a [`RewardModel`]. The
//! model is *restless*: means evolve by wall-clock time regardless of which
//! arms are pulled. Reward draws are served by a counter-based RNG keyed by
//! `(seed, replication, t, arm)`, so the reward tape of a replication is a
//! pure function of the seed and is identical across policies — a policy's
//! past actions can never perturb future rewards.
//!
//! For clipped-Gaussian rewards the clipping shifts the distribution mean;
//! the environment caches the resulting *effective* means at construction
//! (closed form via the standard normal CDF/PDF) and regret is always
//! measured against those.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};
use std::path::Path;

use crate::{Error, Real, Result};

// ---------------------------------------------------------------------------
// Counter-based RNG streams
// ---------------------------------------------------------------------------

/// Domain tag for reward draws in the keyed stream construction.
pub const REWARD_STREAM: u32 = 0x5257_4452;

/// Domain tag for policy-internal randomness (e.g. Thompson sampling).
pub const POLICY_STREAM: u32 = 0x504c_4359;

/// Build the deterministic RNG for one `(seed, replication, t, id)` cell of a
/// stream. `id` is the arm index for reward draws ([`REWARD_STREAM`]) and the
/// policy index for policy randomness ([`POLICY_STREAM`]); the domain tag
/// keeps the two stream families disjoint even where the numeric tuples
/// coincide.
pub fn keyed_rng(seed: u64, replication: u64, t: u64, id: u32, domain: u32) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[0..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&replication.to_le_bytes());
    key[16..24].copy_from_slice(&t.to_le_bytes());
    key[24..28].copy_from_slice(&id.to_le_bytes());
    key[28..32].copy_from_slice(&domain.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

/// One constant-mean piece of the schedule.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    /// First timestep at which these means apply (1-based). The boundary
    /// timestep of the *previous* piece is `start_time - 1`.
    pub start_time: u64,
    /// Per-arm means, each in `[0, 1]`.
    pub means: Vec<Real>,
}

/// Distribution family used to draw rewards around the scheduled means.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum RewardModel {
    /// Rewards in `{0, 1}` with the scheduled mean as success probability.
    Bernoulli,
    /// `Normal(mean, sigma^2)` clamped to `[0, 1]`.
    ///
    /// Clamping keeps every reward bounded (which all confidence radii in
    /// this crate assume) at the cost of shifting the distribution mean; the
    /// shifted value is what [`Environment::effective_means`] reports.
    GaussianClipped {
        /// Standard deviation of the unclipped draw; must be positive.
        sigma: Real,
    },
}

/// A timestep resolved to its segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SegmentView<'a> {
    /// Index of the segment within the schedule (0-based).
    pub index: usize,
    /// Scheduled (unclipped) means of the segment.
    pub means: &'a [Real],
    /// Arm with the highest effective mean (lowest index on ties).
    pub optimal_arm: usize,
    /// Scheduled mean of the optimal arm.
    pub optimal_mean: Real,
}

/// A validated piecewise-stationary environment.
#[derive(Debug, Clone, PartialEq)]
pub struct Environment {
    segments: Vec<Segment>,
    horizon: u64,
    reward_model: RewardModel,
    arms: usize,
    /// Per-segment means of the actual reward distribution (clipping
    /// included); equals the scheduled means for Bernoulli.
    effective: Vec<Vec<Real>>,
    /// Per-segment `(arm, effective mean)` of the best arm.
    optimal: Vec<(usize, Real)>,
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

/// Validate a schedule and build an [`Environment`].
///
/// Requirements: at least one segment with at least one arm; all segments the
/// same width; the first segment starts at 1; starts strictly increasing; all
/// means in `[0, 1]`; the last start within the horizon. A zero horizon is
/// accepted as a degenerate "no steps" environment (useful for empty dry
/// runs) and skips the last-start check.
///
/// # Errors
///
/// [`Error::EmptySpec`], [`Error::RaggedRows`], [`Error::StartNotOne`],
/// [`Error::UnsortedSegments`], [`Error::MeanOutOfRange`],
/// [`Error::TimeOutOfRange`] (last start past the horizon), or
/// [`Error::ValueOutOfRange`] (non-positive Gaussian sigma).
pub fn build_environment(
    segments: Vec<Segment>,
    horizon: u64,
    reward_model: RewardModel,
) -> Result<Environment> {
    if segments.is_empty() {
        return Err(Error::EmptySpec("no segments".into()));
    }
    let arms = segments[0].means.len();
    if arms == 0 {
        return Err(Error::EmptySpec("no arms".into()));
    }
    for (index, seg) in segments.iter().enumerate() {
        if seg.means.len() != arms {
            return Err(Error::RaggedRows {
                index,
                found: seg.means.len(),
                expected: arms,
            });
        }
    }
    if segments[0].start_time != 1 {
        return Err(Error::StartNotOne(segments[0].start_time));
    }
    for index in 1..segments.len() {
        if segments[index].start_time <= segments[index - 1].start_time {
            return Err(Error::UnsortedSegments {
                index,
                start: segments[index].start_time,
                previous: segments[index - 1].start_time,
            });
        }
    }
    for (segment, seg) in segments.iter().enumerate() {
        for (arm, &value) in seg.means.iter().enumerate() {
            if !(0.0..=1.0).contains(&value) || value.is_nan() {
                return Err(Error::MeanOutOfRange {
                    segment,
                    arm,
                    value,
                });
            }
        }
    }
    let last_start = segments.last().expect("nonempty").start_time;
    if horizon > 0 && last_start > horizon {
        return Err(Error::TimeOutOfRange {
            time: last_start,
            horizon,
        });
    }
    if let RewardModel::GaussianClipped { sigma } = reward_model {
        if !(sigma > 0.0) || !sigma.is_finite() {
            return Err(Error::ValueOutOfRange(format!(
                "gaussian sigma must be positive and finite, found {sigma}"
            )));
        }
    }

    let effective: Vec<Vec<Real>> = segments
        .iter()
        .map(|seg| match reward_model {
            RewardModel::Bernoulli => seg.means.clone(),
            RewardModel::GaussianClipped { sigma } => seg
                .means
                .iter()
                .map(|&mu| clipped_normal_mean(mu, sigma))
                .collect(),
        })
        .collect();
    let optimal = effective
        .iter()
        .map(|row| {
            let mut best = 0usize;
            for (arm, &value) in row.iter().enumerate() {
                if value > row[best] {
                    best = arm;
                }
            }
            (best, row[best])
        })
        .collect();

    Ok(Environment {
        segments,
        horizon,
        reward_model,
        arms,
        effective,
        optimal,
    })
}

/// Load a mean-matrix CSV (`start_time, mean_1, ..., mean_K` per row, one row
/// per segment, no header) as a Bernoulli environment over the given horizon.
///
/// # Errors
///
/// [`Error::ParseError`] for unreadable files, non-numeric fields, or rows
/// whose width differs from the first row (the message names the 1-based row
/// number); otherwise whatever [`build_environment`] raises, e.g.
/// [`Error::MeanOutOfRange`].
pub fn load_mean_matrix_csv(path: &Path, horizon: u64) -> Result<Environment> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|err| Error::ParseError(format!("{}: {err}", path.display())))?;
    let mut segments = Vec::new();
    let mut width: Option<usize> = None;
    for (row_index, record) in reader.records().enumerate() {
        let row_number = row_index + 1;
        let record = record.map_err(|err| Error::ParseError(format!("row {row_number}: {err}")))?;
        if record.len() < 2 {
            return Err(Error::ParseError(format!(
                "row {row_number} has {} fields, expected a start time plus at least one mean",
                record.len()
            )));
        }
        match width {
            None => width = Some(record.len()),
            Some(expected) if record.len() != expected => {
                return Err(Error::ParseError(format!(
                    "row {row_number} has {} fields, expected {expected}",
                    record.len()
                )));
            }
            Some(_) => {}
        }
        let start_time: u64 = record[0].parse().map_err(|_| {
            Error::ParseError(format!(
                "row {row_number}: start time {:?} is not a non-negative integer",
                &record[0]
            ))
        })?;
        let mut means = Vec::with_capacity(record.len() - 1);
        for field in record.iter().skip(1) {
            let value: Real = field.parse().map_err(|_| {
                Error::ParseError(format!("row {row_number}: mean {field:?} is not a number"))
            })?;
            means.push(value);
        }
        segments.push(Segment { start_time, means });
    }
    build_environment(segments, horizon, RewardModel::Bernoulli)
}

// ---------------------------------------------------------------------------
// Queries and sampling
// ---------------------------------------------------------------------------

impl Environment {
    /// Number of arms `K`.
    pub fn arms(&self) -> usize {
        self.arms
    }

    /// Horizon `T` (number of timesteps; may be 0 for a degenerate run).
    pub fn horizon(&self) -> u64 {
        self.horizon
    }

    /// The reward distribution family.
    pub fn reward_model(&self) -> RewardModel {
        self.reward_model
    }

    /// The validated schedule.
    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// Number of changepoints `G = segment count - 1`.
    pub fn changepoint_count(&self) -> usize {
        self.segments.len() - 1
    }

    /// Changepoint times `t_1 < t_2 < ...` (the start of every segment after
    /// the first; a changepoint is the first timestep with the new means).
    pub fn changepoint_times(&self) -> Vec<u64> {
        self.segments.iter().skip(1).map(|s| s.start_time).collect()
    }

    /// Effective (distribution) means of segment `g`; equal to the scheduled
    /// means for Bernoulli, clip-shifted for clipped Gaussians.
    pub fn effective_means(&self, g: usize) -> &[Real] {
        &self.effective[g]
    }

    /// `(arm, effective mean)` of the best arm in segment `g` (lowest index
    /// on ties).
    pub fn optimal(&self, g: usize) -> (usize, Real) {
        self.optimal[g]
    }

    /// Index of the segment containing timestep `t`.
    ///
    /// The unique segment with `start <= t < next start`: a boundary timestep
    /// belongs to the earlier piece and the changepoint time itself is the
    /// first timestep of the new one.
    ///
    /// # Errors
    ///
    /// [`Error::TimeOutOfRange`] unless `1 <= t <= horizon`.
    pub fn segment_index(&self, t: u64) -> Result<usize> {
        if t < 1 || t > self.horizon {
            return Err(Error::TimeOutOfRange {
                time: t,
                horizon: self.horizon,
            });
        }
        let after = self.segments.partition_point(|seg| seg.start_time <= t);
        Ok(after - 1)
    }

    /// Resolve timestep `t` to its segment, scheduled means, and optimal arm.
    ///
    /// # Errors
    ///
    /// [`Error::TimeOutOfRange`] unless `1 <= t <= horizon`.
    pub fn segment_lookup(&self, t: u64) -> Result<SegmentView<'_>> {
        let index = self.segment_index(t)?;
        let (optimal_arm, _) = self.optimal[index];
        Ok(SegmentView {
            index,
            means: &self.segments[index].means,
            optimal_arm,
            optimal_mean: self.segments[index].means[optimal_arm],
        })
    }

    /// Draw the reward for pulling `arm` at timestep `t`.
    ///
    /// The draw is a pure function of `(seed, replication, t, arm)`: every
    /// policy run against the same seed sees the same reward wherever it
    /// pulls the same arm at the same time, and replications can run in
    /// parallel without sharing RNG state.
    ///
    /// # Errors
    ///
    /// [`Error::ArmOutOfRange`] or [`Error::TimeOutOfRange`].
    pub fn reward_sample(&self, arm: usize, t: u64, seed: u64, replication: u64) -> Result<Real> {
        if arm >= self.arms {
            return Err(Error::ArmOutOfRange {
                arm,
                arms: self.arms,
            });
        }
        let segment = self.segment_index(t)?;
        let mean = self.segments[segment].means[arm];
        let mut rng = keyed_rng(seed, replication, t, arm as u32, REWARD_STREAM);
        Ok(self.draw(mean, &mut rng))
    }

    /// Draw one reward around `mean` using the environment's reward model.
    fn draw(&self, mean: Real, rng: &mut dyn RngCore) -> Real {
        match self.reward_model {
            RewardModel::Bernoulli => {
                if rng.gen::<f64>() < mean {
                    1.0
                } else {
                    0.0
                }
            }
            RewardModel::GaussianClipped { sigma } => {
                let normal = Normal::new(mean, sigma).expect("sigma validated at construction");
                normal.sample(rng).clamp(0.0, 1.0)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Clipped-normal mean (closed form)
// ---------------------------------------------------------------------------

/// Standard normal CDF.
fn norm_cdf(z: Real) -> Real {
    0.5 * (1.0 + libm::erf(z / std::f64::consts::SQRT_2))
}

/// Standard normal PDF.
fn norm_pdf(z: Real) -> Real {
    (-0.5 * z * z).exp() / (2.0 * std::f64::consts::PI).sqrt()
}

/// Mean of `clamp(Normal(mu, sigma^2), 0, 1)` in closed form:
/// `(1 - Phi(b)) + mu (Phi(b) - Phi(a)) + sigma (phi(a) - phi(b))` with
/// `a = -mu / sigma`, `b = (1 - mu) / sigma`.
pub fn clipped_normal_mean(mu: Real, sigma: Real) -> Real {
    let a = (0.0 - mu) / sigma;
    let b = (1.0 - mu) / sigma;
    (1.0 - norm_cdf(b)) + mu * (norm_cdf(b) - norm_cdf(a)) + sigma * (norm_pdf(a) - norm_pdf(b))
}
