//! Closed-form confidence radii for bounded rewards.
//!
//! Four interval families are provided, all for rewards in `[0, 1]` and all
//! using natural logarithms:
//!
//! - [`laplace_radius`]: time-uniform interval from the Laplace (pseudo
//!   maximum-likelihood) method; valid simultaneously over all sample counts.
//! - [`union_radius`]: per-timestep Hoeffding interval made time-uniform by a
//!   union bound over timesteps.
//! - [`peeling_radius`]: union bound over geometric blocks of timesteps
//!   (peeling), parameterized by a block growth rate `alpha > 1`.
//! - [`phase_radius`]: the phase-indexed interval used by the improved
//!   changepoint detector, parameterized by a phase tolerance `epsilon` and
//!   the horizon-derived constant `psi`.
//!
//! All kernels are pure and generic over any IEEE float ([`Scalar`]); the
//! rest of the crate instantiates them at [`crate::Real`]. [`RadiusKind`]
//! bundles a family choice with its parameters for runtime dispatch by the
//! policies.

use std::fmt;

use num_traits::{Float, FromPrimitive};

use crate::{Error, Result};

/// Floating-point scalar usable by the numeric kernels.
///
/// Blanket-implemented for every type with the required `num-traits`
/// capabilities (`f32`, `f64`, and compatible third-party floats).
pub trait Scalar: Float + FromPrimitive + fmt::Debug {}

impl<T: Float + FromPrimitive + fmt::Debug> Scalar for T {}

// ---------------------------------------------------------------------------
// Shared argument checks
// ---------------------------------------------------------------------------

pub(crate) fn check_count(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidCount(n));
    }
    Ok(())
}

pub(crate) fn check_delta<F: Scalar>(delta: F) -> Result<()> {
    if !(delta > F::zero() && delta < F::one()) {
        return Err(Error::InvalidDelta(delta.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(())
}

pub(crate) fn as_scalar<F: Scalar>(n: u64) -> F {
    F::from_u64(n).expect("u64 count representable as scalar")
}

// ---------------------------------------------------------------------------
// Radius kernels
// ---------------------------------------------------------------------------

/// Time-uniform Laplace-method radius `sqrt((1 + 1/n) * ln(sqrt(n+1)/delta) / (2n))`.
///
/// Holds simultaneously for every sample count `n >= 1` with probability at
/// least `1 - delta`, which is what lets the changepoint scan test every
/// split of an observation log without a per-split union bound.
///
/// # Errors
///
/// [`Error::InvalidCount`] if `n == 0`; [`Error::InvalidDelta`] if
/// `delta` is outside `(0, 1)`.
pub fn laplace_radius<F: Scalar>(n: u64, delta: F) -> Result<F> {
    check_count(n)?;
    check_delta(delta)?;
    let nf: F = as_scalar(n);
    let one = F::one();
    let two = as_scalar::<F>(2);
    let inflation = one + one / nf;
    let log_term = ((nf + one).sqrt() / delta).ln();
    Ok((inflation * log_term / (two * nf)).sqrt())
}

/// Union-bound radius `sqrt(ln(4 t^2 / delta) / (2n))`.
///
/// A Hoeffding interval widened so the union over timesteps `1..=t` holds
/// with probability at least `1 - delta`. `t` is the number of timesteps the
/// bound must cover (for the detectors: elapsed time since the last restart).
///
/// # Errors
///
/// [`Error::InvalidCount`] if `n == 0` or `t == 0`; [`Error::InvalidDelta`]
/// if `delta` is outside `(0, 1)`.
pub fn union_radius<F: Scalar>(n: u64, t: u64, delta: F) -> Result<F> {
    check_count(n)?;
    check_count(t)?;
    check_delta(delta)?;
    let nf: F = as_scalar(n);
    let tf: F = as_scalar(t);
    let two = as_scalar::<F>(2);
    let four = as_scalar::<F>(4);
    let log_term = (four * tf * tf / delta).ln();
    Ok((log_term / (two * nf)).sqrt())
}

/// Peeling radius `sqrt((alpha / n) * ln(ceil(ln(t) / alpha) / delta))`.
///
/// Unions over geometric blocks of timesteps rather than individual steps;
/// `alpha > 1` controls the block growth rate. Requires `t >= 2` so that
/// `ceil(ln(t) / alpha) >= 1` and the logarithm is defined.
///
/// # Errors
///
/// [`Error::InvalidAlpha`] if `alpha <= 1`; [`Error::InvalidCount`] if
/// `n == 0` or `t < 2`; [`Error::InvalidDelta`] if `delta` is outside
/// `(0, 1)`.
pub fn peeling_radius<F: Scalar>(n: u64, t: u64, delta: F, alpha: F) -> Result<F> {
    if !(alpha > F::one()) {
        return Err(Error::InvalidAlpha(format!(
            "peeling requires alpha > 1, found {:?}",
            alpha
        )));
    }
    check_count(n)?;
    if t < 2 {
        return Err(Error::InvalidCount(t));
    }
    check_delta(delta)?;
    let nf: F = as_scalar(n);
    let tf: F = as_scalar(t);
    let blocks = (tf.ln() / alpha).ceil();
    let log_term = (blocks / delta).ln();
    Ok((alpha / nf * log_term).sqrt())
}

/// Phase radius `sqrt(alpha * ln(psi * epsilon^2) / (2n))`.
///
/// Used by the improved changepoint detector, where `epsilon` is the current
/// phase tolerance and `psi` is derived from the horizon (`T^2 / (K^2 ln K)`).
/// The logarithm must be positive, i.e. `psi * epsilon^2 > 1`; smaller values
/// signal a horizon too short for the phase schedule and are rejected rather
/// than clamped, because a zero/negative radius would make the detector fire
/// spuriously.
///
/// # Errors
///
/// [`Error::InvalidCount`] if `n == 0`; [`Error::ValueOutOfRange`] if
/// `epsilon` is outside `(0, 1]` or `psi <= 0`; [`Error::InvalidAlpha`] if
/// `alpha <= 0`; [`Error::DegenerateLog`] if `psi * epsilon^2 <= 1`.
pub fn phase_radius<F: Scalar>(n: u64, epsilon: F, psi: F, alpha: F) -> Result<F> {
    check_count(n)?;
    if !(epsilon > F::zero() && epsilon <= F::one()) {
        return Err(Error::ValueOutOfRange(format!(
            "phase tolerance epsilon must lie in (0, 1], found {:?}",
            epsilon
        )));
    }
    if !(psi > F::zero()) {
        return Err(Error::ValueOutOfRange(format!(
            "psi must be positive, found {:?}",
            psi
        )));
    }
    if !(alpha > F::zero()) {
        return Err(Error::InvalidAlpha(format!(
            "phase requires alpha > 0, found {:?}",
            alpha
        )));
    }
    let arg = psi * epsilon * epsilon;
    if arg <= F::one() {
        return Err(Error::DegenerateLog(format!(
            "psi * epsilon^2 = {:?} must exceed 1 (horizon too short for the phase schedule)",
            arg
        )));
    }
    let nf: F = as_scalar(n);
    let two = as_scalar::<F>(2);
    Ok((alpha * arg.ln() / (two * nf)).sqrt())
}

// ---------------------------------------------------------------------------
// Runtime family selection
// ---------------------------------------------------------------------------

/// A confidence-interval family together with its fixed parameters.
///
/// The detection-oriented families (`Laplace`, `Union`, `Peeling`) take a
/// confidence level `delta` at evaluation time; `Phase` instead takes the
/// current phase tolerance `epsilon`. [`RadiusKind::eval`] documents how the
/// `level` argument is interpreted per family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadiusKind {
    /// Time-uniform Laplace interval; no extra parameters.
    Laplace,
    /// Per-timestep union bound; no extra parameters.
    Union,
    /// Geometric-block union bound with growth rate `alpha > 1`.
    Peeling {
        /// Block growth rate; must exceed 1.
        alpha: f64,
    },
    /// Phase-indexed interval with horizon constant `psi > 0` and scale
    /// `alpha > 0`.
    Phase {
        /// Horizon-derived constant `T^2 / (K^2 ln K)`.
        psi: f64,
        /// Radius scale factor.
        alpha: f64,
    },
}

impl RadiusKind {
    /// Validated constructor for the peeling family.
    ///
    /// # Errors
    ///
    /// [`Error::InvalidAlpha`] if `alpha <= 1`.
    pub fn peeling(alpha: f64) -> Result<Self> {
        if !(alpha > 1.0) {
            return Err(Error::InvalidAlpha(format!(
                "peeling requires alpha > 1, found {alpha}"
            )));
        }
        Ok(RadiusKind::Peeling { alpha })
    }

    /// Validated constructor for the phase family.
    ///
    /// # Errors
    ///
    /// [`Error::ValueOutOfRange`] if `psi <= 0`; [`Error::InvalidAlpha`] if
    /// `alpha <= 0`.
    pub fn phase(psi: f64, alpha: f64) -> Result<Self> {
        if !(psi > 0.0) {
            return Err(Error::ValueOutOfRange(format!(
                "psi must be positive, found {psi}"
            )));
        }
        if !(alpha > 0.0) {
            return Err(Error::InvalidAlpha(format!(
                "phase requires alpha > 0, found {alpha}"
            )));
        }
        Ok(RadiusKind::Phase { psi, alpha })
    }

    /// Evaluate the radius for `n` observations at time scope `t`.
    ///
    /// `level` is the confidence level `delta` for `Laplace`, `Union`, and
    /// `Peeling`, and the phase tolerance `epsilon` for `Phase`. `t` is
    /// ignored by `Laplace` and `Phase`, which do not depend on elapsed time.
    ///
    /// # Errors
    ///
    /// Propagates the underlying kernel's argument errors.
    pub fn eval(&self, n: u64, t: u64, level: f64) -> Result<f64> {
        match *self {
            RadiusKind::Laplace => laplace_radius(n, level),
            RadiusKind::Union => union_radius(n, t, level),
            RadiusKind::Peeling { alpha } => peeling_radius(n, t, level, alpha),
            RadiusKind::Phase { psi, alpha } => phase_radius(n, level, psi, alpha),
        }
    }
}
