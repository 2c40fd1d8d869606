//! Closed-form evaluators for the analytical quantities attached to
//! piecewise-stationary bandit runs.
//!
//! The module has two layers:
//!
//! - **Pure kernels**, generic over any IEEE float ([`Scalar`]): minimum
//!   sample counts for reliable gap detection ([`min_samples`]), the
//!   detectable-gap threshold ([`detectable_gap_threshold`]), the oracle
//!   detection-delay ceiling ([`oracle_delay_bound`]), and per-changepoint
//!   hardness constants ([`hardness_pair`]).
//! - **Environment-level reports** at [`Real`] precision: per-changepoint
//!   gap structures ([`gap_profiles`]), the numeric regret upper/lower bound
//!   evaluation ([`regret_bounds`] → [`BoundReport`]), and an assumption
//!   validator ([`validate_assumptions`] → [`AssumptionReport`]).
//!
//! Every function here is pure: repeated calls agree bitwise, and nothing
//! touches randomness or shared state.

use serde::Serialize;

use crate::confbounds::{as_scalar, check_count, check_delta, Scalar};
use crate::env::Environment;
use crate::{Error, Real, Result};

// ---------------------------------------------------------------------------
// Pure kernels
// ---------------------------------------------------------------------------

/// Optimality gaps of one mean row: `max(row) - row[i]` per arm.
///
/// The best arm's own gap is zero. An empty row yields an empty vector.
pub fn optimality_gaps<F: Scalar>(row: &[F]) -> Vec<F> {
    let best = row.iter().copied().fold(F::neg_infinity(), F::max);
    row.iter().map(|&v| best - v).collect()
}

fn check_eta<F: Scalar>(eta: F) -> Result<()> {
    if !(eta > F::zero() && eta < F::one()) {
        return Err(Error::InvalidEta(eta.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(())
}

/// Minimum sample count `ceil( ln(2 x^2 / delta) / (2 gap^2) )` that makes a
/// mean deviation of `gap` detectable with probability `1 - delta` inside an
/// observation window of length `x`.
///
/// # Errors
///
/// [`Error::InvalidCount`] if `x == 0`; [`Error::InvalidGap`] if `gap` is
/// outside `(0, 1]`; [`Error::InvalidDelta`] if `delta` is outside `(0, 1)`.
pub fn min_samples<F: Scalar>(x: u64, gap: F, delta: F) -> Result<u64> {
    check_count(x)?;
    if !(gap > F::zero() && gap <= F::one()) {
        return Err(Error::InvalidGap(gap.to_f64().unwrap_or(f64::NAN)));
    }
    check_delta(delta)?;
    let two = as_scalar::<F>(2);
    let xf: F = as_scalar(x);
    let value = (two * xf * xf / delta).ln() / (two * gap * gap);
    Ok(value
        .ceil()
        .to_u64()
        .expect("sample requirement fits in u64"))
}

/// Worst-case detection delay `eta ln(t/delta) K ln(t^2/delta) / (2 gap^2)
/// + K delta` of the best detection policy for a deviation of at least
/// `gap`.
///
/// `arms == 0` degenerates to zero delay (nothing to detect with).
///
/// # Errors
///
/// [`Error::InvalidCount`] if `t == 0`; [`Error::InvalidGap`] if
/// `gap <= 0`; [`Error::InvalidDelta`] / [`Error::InvalidEta`] for
/// parameters outside `(0, 1)`.
pub fn oracle_delay_bound<F: Scalar>(t: u64, gap: F, delta: F, eta: F, arms: usize) -> Result<F> {
    check_count(t)?;
    if !(gap > F::zero()) {
        return Err(Error::InvalidGap(gap.to_f64().unwrap_or(f64::NAN)));
    }
    check_delta(delta)?;
    check_eta(eta)?;
    if arms == 0 {
        return Ok(F::zero());
    }
    let tf: F = as_scalar(t);
    let k: F = as_scalar(arms as u64);
    let two = as_scalar::<F>(2);
    let ceiling = eta * (tf / delta).ln();
    Ok(ceiling * k * (tf * tf / delta).ln() / (two * gap * gap) + k * delta)
}

/// Detectable-gap threshold `sqrt( ln(2 x^2 / delta) / (2 x) )` for a
/// changepoint preceded by an observation window of length `x`: changes at
/// least this large are reliably detectable within the window.
///
/// # Errors
///
/// [`Error::InvalidCount`] if `x == 0`; [`Error::InvalidDelta`] if `delta`
/// is outside `(0, 1)`.
pub fn detectable_gap_threshold<F: Scalar>(x: u64, delta: F) -> Result<F> {
    check_count(x)?;
    check_delta(delta)?;
    let two = as_scalar::<F>(2);
    let xf: F = as_scalar(x);
    Ok(((two * xf * xf / delta).ln() / (two * xf)).sqrt())
}

/// Hardness constants of one changepoint.
///
/// `h1` trades off learning the optimal arm before the change against
/// detecting the change itself; `h2` measures how much regret each step of
/// detection delay can cost relative to the detectable threshold.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Hardness<F = Real> {
    /// `max(optimality_sum, change_sum)`.
    pub h1: F,
    /// Largest post-change optimality gap divided by the threshold.
    pub h2: F,
    /// `sum over suboptimal arms of 1 / (pre-change optimality gap)^2`.
    pub optimality_sum: F,
    /// `sum over arms with change >= threshold of 1 / (change gap)^2`.
    pub change_sum: F,
}

impl<F: Scalar> Hardness<F> {
    /// Whether `h2 <= h1 <= arms * h2 / threshold^2` holds.
    pub fn sandwich_holds(&self, arms: usize, threshold: F) -> bool {
        let upper = as_scalar::<F>(arms as u64) * self.h2 / (threshold * threshold);
        self.h2 <= self.h1 && self.h1 <= upper
    }
}

/// Hardness constants from the mean rows on either side of a changepoint.
///
/// The optimality sum runs over the pre-change row's suboptimal arms only
/// (the optimal arm's zero gap would make the sum infinite); the change sum
/// runs over arms whose absolute mean change is at least `threshold`; `h2`
/// uses the post-change row's largest optimality gap.
///
/// # Errors
///
/// [`Error::EmptySpec`] for empty rows; [`Error::RaggedRows`] if the rows
/// have different lengths; [`Error::ValueOutOfRange`] if `threshold <= 0`.
pub fn hardness_pair<F: Scalar>(before: &[F], after: &[F], threshold: F) -> Result<Hardness<F>> {
    if before.is_empty() {
        return Err(Error::EmptySpec("hardness needs at least one arm".into()));
    }
    if after.len() != before.len() {
        return Err(Error::RaggedRows {
            index: 1,
            found: after.len(),
            expected: before.len(),
        });
    }
    if !(threshold > F::zero()) {
        return Err(Error::ValueOutOfRange(format!(
            "detectable threshold must be positive, found {:?}",
            threshold
        )));
    }
    let mut optimality_sum = F::zero();
    for gap in optimality_gaps(before) {
        if gap > F::zero() {
            optimality_sum = optimality_sum + F::one() / (gap * gap);
        }
    }
    let mut change_sum = F::zero();
    for (&b, &a) in before.iter().zip(after) {
        let change = (a - b).abs();
        if change >= threshold {
            change_sum = change_sum + F::one() / (change * change);
        }
    }
    let worst_after = optimality_gaps(after)
        .into_iter()
        .fold(F::zero(), F::max);
    Ok(Hardness {
        h1: optimality_sum.max(change_sum),
        h2: worst_after / threshold,
        optimality_sum,
        change_sum,
    })
}

/// The phase-discount constant `((1 + gamma) / gamma)^4` as instantiated by
/// the bound statements.
pub fn corollary1_c1_definition(gamma: Real) -> Real {
    ((1.0 + gamma) / gamma).powi(4)
}

/// The variant `((1 + gamma) / gamma)^3` that the proof text instantiates
/// (exponent `2 alpha` at `alpha = 3/2`); exposed alongside the definition
/// so reports can label which formula produced which number.
pub fn corollary1_c1_proof(gamma: Real) -> Real {
    ((1.0 + gamma) / gamma).powi(3)
}

// ---------------------------------------------------------------------------
// Per-changepoint gap profiles
// ---------------------------------------------------------------------------

/// Gap structure of one changepoint, derived from the environment means.
#[derive(Debug, Clone, Serialize)]
pub struct GapProfile {
    /// Changepoint index `g` (0-based).
    pub changepoint: usize,
    /// Time of the change (first timestep governed by the new means).
    pub time: u64,
    /// Length `x` of the preceding segment.
    pub window: u64,
    /// Detectable-gap threshold for this window.
    pub threshold: Real,
    /// `|post mean - pre mean|` per arm.
    pub change_gaps: Vec<Real>,
    /// Pre-change optimality gaps per arm.
    pub optimality_before: Vec<Real>,
    /// Post-change optimality gaps per arm.
    pub optimality_after: Vec<Real>,
    /// Arms whose change gap meets the detectable threshold.
    pub delta_optimal_arms: Vec<usize>,
    /// Arms whose change gap lies in `[sqrt(e/T), threshold)`.
    pub undetectable_arms: Vec<usize>,
    /// Hardness constants of this changepoint.
    pub hardness: Hardness,
}

fn floor_gap(horizon: u64) -> Real {
    (std::f64::consts::E / horizon as Real).sqrt()
}

/// Per-changepoint gap profiles for an environment at confidence `delta`.
///
/// Stationary environments yield an empty vector. Gaussian environments are
/// profiled on their clipped (effective) means, which are the quantities
/// regret is measured against.
///
/// # Errors
///
/// [`Error::InvalidDelta`] if `delta` is outside `(0, 1)`.
pub fn gap_profiles(env: &Environment, delta: Real) -> Result<Vec<GapProfile>> {
    check_delta(delta)?;
    let floor = floor_gap(env.horizon());
    let starts: Vec<u64> = env.segments().iter().map(|s| s.start_time).collect();
    let mut profiles = Vec::with_capacity(env.changepoint_count());
    for g in 0..env.changepoint_count() {
        let before = env.effective_means(g);
        let after = env.effective_means(g + 1);
        let window = starts[g + 1] - starts[g];
        let threshold = detectable_gap_threshold(window, delta)?;
        let change_gaps: Vec<Real> = before
            .iter()
            .zip(after)
            .map(|(&b, &a)| (a - b).abs())
            .collect();
        let delta_optimal_arms = change_gaps
            .iter()
            .enumerate()
            .filter(|(_, &gap)| gap >= threshold)
            .map(|(arm, _)| arm)
            .collect();
        let undetectable_arms = change_gaps
            .iter()
            .enumerate()
            .filter(|(_, &gap)| gap >= floor && gap < threshold)
            .map(|(arm, _)| arm)
            .collect();
        profiles.push(GapProfile {
            changepoint: g,
            time: starts[g + 1],
            window,
            threshold,
            change_gaps,
            optimality_before: optimality_gaps(before),
            optimality_after: optimality_gaps(after),
            delta_optimal_arms,
            undetectable_arms,
            hardness: hardness_pair(before, after, threshold)?,
        });
    }
    Ok(profiles)
}

/// Hardness constants of changepoint `g` in an environment.
///
/// # Errors
///
/// [`Error::LastChangepoint`] if `g` is not a changepoint index (there is no
/// post-change segment); [`Error::InvalidDelta`] for `delta` outside
/// `(0, 1)`.
pub fn hardness(env: &Environment, g: usize, delta: Real) -> Result<Hardness> {
    check_delta(delta)?;
    if g >= env.changepoint_count() {
        return Err(Error::LastChangepoint {
            index: g,
            changepoints: env.changepoint_count(),
        });
    }
    let starts: Vec<u64> = env.segments().iter().map(|s| s.start_time).collect();
    let threshold = detectable_gap_threshold(starts[g + 1] - starts[g], delta)?;
    hardness_pair(env.effective_means(g), env.effective_means(g + 1), threshold)
}

// ---------------------------------------------------------------------------
// Regret bound reports
// ---------------------------------------------------------------------------

/// Term-by-term evaluation of the gap-dependent upper bound for the
/// restart-on-detection policy with time-uniform intervals.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Theorem1Terms {
    /// (a) Cost of learning the optimal arm inside each segment:
    /// `sum over segments, suboptimal arms of 6 ln(t) / gap`.
    pub optimality: Real,
    /// (b) Maximal regret for delayed detection of each detectable change:
    /// `sum of 16 h2 ln(t) / change_gap` over detectable gaps.
    pub delayed_detection: Real,
    /// (c) Regret for total compounded delayed detection:
    /// `sum of 30 K h2 ln(t) / threshold` over detectable gaps.
    pub compounded_delay: Real,
    /// (d) Worst single contribution of an undetectable change:
    /// `max of change_gap * t` over gaps in `[sqrt(e/T), threshold)`.
    pub undetectable: Real,
    /// Sum of the four terms.
    pub total: Real,
}

/// Term-by-term evaluation of the gap-dependent upper bound for the
/// phase-based policy with known horizon.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Theorem2Terms {
    /// (a) Phase-length overhead:
    /// `sum of 48 K C1 gap ln(T/K) (K ln K)^{3/2}` over gaps at least
    /// `sqrt(e/T)`, with `C1 = ((1+gamma)/gamma)^4`.
    pub phase_overhead: Real,
    /// (b) Per-segment optimality cost:
    /// `sum of 16 ln(T gap^2 / K) / gap` over the same gaps.
    pub optimality: Real,
    /// (c) Detection cost per detectable change:
    /// `sum of 16 h2 ln(T change^2 / K) / change`.
    pub delayed_detection: Real,
    /// (d) Compounded detection cost:
    /// `sum of 16 K h2 ln(T change^2 / K) / threshold`.
    pub compounded_delay: Real,
    /// (e) Worst undetectable contribution: `max of change * T` over gaps in
    /// `[sqrt(e/T), threshold)`.
    pub undetectable: Real,
    /// Sum of the five terms.
    pub total: Real,
}

/// Numeric lower bounds.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Theorem3Lower {
    /// Gap-dependent sum `sum over changepoints, suboptimal arms of
    /// ln(T / (G h1)) / gap`, reported with unit constant.
    pub gap_dependent: Real,
    /// The gap-dependent value holds only up to an unspecified constant
    /// factor; this label travels with serialized reports.
    pub gap_dependent_note: &'static str,
    /// Gap-independent bound `(1/20) sqrt(K G T)` (zero when stationary).
    pub gap_independent: Real,
}

/// Leading-order terms in the equal-small-gap regime, plus both published
/// instantiations of the phase constant.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Corollary1 {
    /// `sqrt(G T) ln(T)` — the time-uniform policy's leading order.
    pub ucbl_leading: Real,
    /// `sqrt(G T)` — the phase-based policy's leading order.
    pub impcpd_leading: Real,
    /// `((1+gamma)/gamma)^4` per the bound statement.
    pub c1_definition: Real,
    /// `((1+gamma)/gamma)^3` per the proof text.
    pub c1_proof: Real,
}

/// Soft diagnostics attached to a [`BoundReport`].
///
/// These flag preconditions the report inputs violate; the numeric terms are
/// still evaluated so callers can inspect them.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum BoundFlag {
    /// `eta` is below the minimum the stated bound requires.
    EtaTooSmall {
        /// Which bound's requirement failed (`"theorem1"` or `"theorem2"`).
        bound: &'static str,
        eta: Real,
        required: Real,
    },
    /// A positive change gap falls below the `sqrt(e/T)` floor, outside the
    /// detectable/undetectable dichotomy the bounds assume.
    GapTooSmall {
        changepoint: usize,
        arm: usize,
        gap: Real,
        floor: Real,
    },
}

/// Full numeric bound evaluation for one environment.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub horizon: u64,
    /// Evaluation time for the anytime bound's `ln(t)` factors.
    pub t: u64,
    pub delta: Real,
    pub gamma: Real,
    pub eta: Real,
    pub per_changepoint: Vec<GapProfile>,
    pub theorem1: Theorem1Terms,
    pub theorem2: Theorem2Terms,
    pub theorem3: Theorem3Lower,
    pub corollary1: Corollary1,
    pub flags: Vec<BoundFlag>,
    /// Precondition checks for the same `(delta, eta)`.
    pub assumptions: AssumptionReport,
}

/// Evaluate every bound term for `env` at time `t` (the known-horizon terms
/// always use the environment's own horizon).
///
/// Precondition violations that the bounds merely assume — `eta` too small
/// for the stated requirements, positive change gaps below `sqrt(e/T)` —
/// are reported as [`BoundFlag`]s rather than errors.
///
/// # Errors
///
/// [`Error::InvalidCount`] if `t == 0`; [`Error::ValueOutOfRange`] for a
/// zero-horizon environment or `gamma <= 0`; [`Error::InvalidDelta`] /
/// [`Error::InvalidEta`] for parameters outside `(0, 1)`.
pub fn regret_bounds(
    env: &Environment,
    t: u64,
    delta: Real,
    gamma: Real,
    eta: Real,
) -> Result<BoundReport> {
    check_count(t)?;
    check_delta(delta)?;
    check_eta(eta)?;
    if env.horizon() == 0 {
        return Err(Error::ValueOutOfRange(
            "bound evaluation needs a positive horizon".into(),
        ));
    }
    if !(gamma > 0.0) {
        return Err(Error::ValueOutOfRange(format!(
            "phase discount must be positive, found {gamma}"
        )));
    }

    let profiles = gap_profiles(env, delta)?;
    let arms = env.arms() as Real;
    let horizon = env.horizon();
    let t_cap = horizon as Real;
    let floor = floor_gap(horizon);
    let ln_t = (t as Real).ln();
    let segment_count = env.segments().len();

    // Anytime bound: terms (a)-(d).
    let mut optimality1 = 0.0;
    for g in 0..segment_count {
        for gap in optimality_gaps(env.effective_means(g)) {
            if gap > 0.0 {
                optimality1 += 6.0 * ln_t / gap;
            }
        }
    }
    let mut delayed1 = 0.0;
    let mut compounded1 = 0.0;
    let mut undetectable1: Real = 0.0;
    for profile in &profiles {
        for &change in &profile.change_gaps {
            if change >= profile.threshold {
                delayed1 += 16.0 * profile.hardness.h2 * ln_t / change;
                compounded1 += 30.0 * arms * profile.hardness.h2 * ln_t / profile.threshold;
            } else if change >= floor {
                undetectable1 = undetectable1.max(change * t as Real);
            }
        }
    }
    let theorem1 = Theorem1Terms {
        optimality: optimality1,
        delayed_detection: delayed1,
        compounded_delay: compounded1,
        undetectable: undetectable1,
        total: optimality1 + delayed1 + compounded1 + undetectable1,
    };

    // Known-horizon bound: terms (a)-(e).
    let c1 = corollary1_c1_definition(gamma);
    let phase_factor = (arms * arms.ln()).powf(1.5);
    let mut phase_overhead = 0.0;
    let mut optimality2 = 0.0;
    for g in 0..segment_count {
        for gap in optimality_gaps(env.effective_means(g)) {
            if gap >= floor {
                phase_overhead += 48.0 * arms * c1 * gap * (t_cap / arms).ln() * phase_factor;
                optimality2 += 16.0 * (t_cap * gap * gap / arms).ln() / gap;
            }
        }
    }
    let mut delayed2 = 0.0;
    let mut compounded2 = 0.0;
    let mut undetectable2: Real = 0.0;
    for profile in &profiles {
        for &change in &profile.change_gaps {
            if change >= profile.threshold {
                let log_term = (t_cap * change * change / arms).ln();
                delayed2 += 16.0 * profile.hardness.h2 * log_term / change;
                compounded2 += 16.0 * arms * profile.hardness.h2 * log_term / profile.threshold;
            } else if change >= floor {
                undetectable2 = undetectable2.max(change * t_cap);
            }
        }
    }
    let theorem2 = Theorem2Terms {
        phase_overhead,
        optimality: optimality2,
        delayed_detection: delayed2,
        compounded_delay: compounded2,
        undetectable: undetectable2,
        total: phase_overhead + delayed2 + compounded2 + optimality2 + undetectable2,
    };

    // Lower bounds.
    let change_count = profiles.len();
    let mut gap_dependent = 0.0;
    for profile in &profiles {
        let scale = (t_cap / (change_count as Real * profile.hardness.h1)).ln();
        for &gap in &profile.optimality_before {
            if gap > 0.0 {
                gap_dependent += scale / gap;
            }
        }
    }
    let gap_independent = if change_count > 0 {
        0.05 * (arms * change_count as Real * t_cap).sqrt()
    } else {
        0.0
    };
    let theorem3 = Theorem3Lower {
        gap_dependent,
        gap_dependent_note: "up to constants",
        gap_independent,
    };

    let sqrt_gt = if change_count > 0 {
        (change_count as Real * t_cap).sqrt()
    } else {
        0.0
    };
    let corollary1 = Corollary1 {
        ucbl_leading: sqrt_gt * t_cap.ln(),
        impcpd_leading: sqrt_gt,
        c1_definition: c1,
        c1_proof: corollary1_c1_proof(gamma),
    };

    let mut flags = Vec::new();
    let required1 = 6.0 / (2.0 * ln_t + 1.0);
    if eta < required1 {
        flags.push(BoundFlag::EtaTooSmall {
            bound: "theorem1",
            eta,
            required: required1,
        });
    }
    let required2 = 8.0 / (2.0 * t_cap.ln() + 1.0);
    if eta < required2 {
        flags.push(BoundFlag::EtaTooSmall {
            bound: "theorem2",
            eta,
            required: required2,
        });
    }
    for profile in &profiles {
        for (arm, &gap) in profile.change_gaps.iter().enumerate() {
            if gap > 0.0 && gap < floor {
                flags.push(BoundFlag::GapTooSmall {
                    changepoint: profile.changepoint,
                    arm,
                    gap,
                    floor,
                });
            }
        }
    }

    let assumptions = validate_assumptions(env, delta, eta)?;
    Ok(BoundReport {
        horizon,
        t,
        delta,
        gamma,
        eta,
        per_changepoint: profiles,
        theorem1,
        theorem2,
        theorem3,
        corollary1,
        flags,
        assumptions,
    })
}

// ---------------------------------------------------------------------------
// Assumption validation
// ---------------------------------------------------------------------------

/// An arm whose mean does not change at a changepoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UnchangedArm {
    pub changepoint: usize,
    pub arm: usize,
}

/// Delay budget accounting for one changepoint.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SeparationMargin {
    pub changepoint: usize,
    /// Oracle delay ceiling for detecting this change.
    pub delay_bound: Real,
    /// `eta * (next changepoint - this changepoint)`.
    pub budget: Real,
    pub pass: bool,
}

/// A positive change gap below the `sqrt(e/T)` floor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SmallGap {
    pub changepoint: usize,
    pub arm: usize,
    pub gap: Real,
}

/// Whether every arm's mean changes at every changepoint.
#[derive(Debug, Clone, Serialize)]
pub struct GlobalCheck {
    pub pass: bool,
    /// `(changepoint, arm)` pairs whose mean is identical across the change.
    pub unchanged: Vec<UnchangedArm>,
}

/// Whether each change can be detected within its successor segment.
#[derive(Debug, Clone, Serialize)]
pub struct SeparationCheck {
    pub pass: bool,
    pub margins: Vec<SeparationMargin>,
}

/// Whether undetectable changes are isolated and all gaps clear the floor.
#[derive(Debug, Clone, Serialize)]
pub struct IsolationCheck {
    pub pass: bool,
    /// Changepoints `g` such that both `g` and `g + 1` carry an
    /// undetectable gap on some arm.
    pub consecutive_undetectable: Vec<usize>,
    /// Positive gaps below `sqrt(e/T)`, outside the assumed dichotomy.
    pub below_floor: Vec<SmallGap>,
}

/// Structural validation of an environment against the three modeling
/// assumptions the regret bounds rest on.
#[derive(Debug, Clone, Serialize)]
pub struct AssumptionReport {
    /// Every arm's mean changes at every changepoint.
    pub global: GlobalCheck,
    /// Each change's worst-case detection delay fits inside `eta` times the
    /// following segment.
    pub separated: SeparationCheck,
    /// No two consecutive changepoints are both undetectable, and no
    /// positive gap falls below `sqrt(e/T)`.
    pub isolated: IsolationCheck,
}

/// Validate `env` against the three modeling assumptions.
///
/// The report is purely informational — a failing assumption does not make
/// the environment unusable, it means the regret bounds do not cover it.
///
/// # Errors
///
/// [`Error::InvalidDelta`] / [`Error::InvalidEta`] for parameters outside
/// `(0, 1)`.
pub fn validate_assumptions(env: &Environment, delta: Real, eta: Real) -> Result<AssumptionReport> {
    check_delta(delta)?;
    check_eta(eta)?;
    let profiles = gap_profiles(env, delta)?;
    let starts: Vec<u64> = env.segments().iter().map(|s| s.start_time).collect();
    let change_count = profiles.len();

    let mut unchanged = Vec::new();
    for profile in &profiles {
        for (arm, &gap) in profile.change_gaps.iter().enumerate() {
            if gap == 0.0 {
                unchanged.push(UnchangedArm {
                    changepoint: profile.changepoint,
                    arm,
                });
            }
        }
    }

    let mut margins = Vec::new();
    for profile in &profiles {
        let delay_bound =
            oracle_delay_bound(profile.time, profile.threshold, delta, eta, env.arms())?;
        let next_change = if profile.changepoint + 1 < change_count {
            starts[profile.changepoint + 2]
        } else {
            env.horizon() + 1
        };
        let budget = eta * (next_change - profile.time) as Real;
        margins.push(SeparationMargin {
            changepoint: profile.changepoint,
            delay_bound,
            budget,
            pass: delay_bound <= budget,
        });
    }

    let undetectable: Vec<bool> = profiles
        .iter()
        .map(|p| !p.undetectable_arms.is_empty())
        .collect();
    let consecutive_undetectable: Vec<usize> = (0..change_count.saturating_sub(1))
        .filter(|&g| undetectable[g] && undetectable[g + 1])
        .collect();
    let floor = floor_gap(env.horizon());
    let mut below_floor = Vec::new();
    for profile in &profiles {
        for (arm, &gap) in profile.change_gaps.iter().enumerate() {
            if gap > 0.0 && gap < floor {
                below_floor.push(SmallGap {
                    changepoint: profile.changepoint,
                    arm,
                    gap,
                });
            }
        }
    }

    Ok(AssumptionReport {
        global: GlobalCheck {
            pass: unchanged.is_empty(),
            unchanged,
        },
        separated: SeparationCheck {
            pass: margins.iter().all(|m| m.pass),
            margins,
        },
        isolated: IsolationCheck {
            pass: consecutive_undetectable.is_empty() && below_floor.is_empty(),
            consecutive_undetectable,
            below_floor,
        },
    })
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
