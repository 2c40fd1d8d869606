//! Crate-wide error type.
//!
//! Every fallible constructor and evaluator in the crate returns the same
//! [`Error`] enum so that callers (the CLI in particular) can report any
//! failure uniformly. Soft diagnostics that do not invalidate a computation
//! (for example "eta is too small for the delay bound to be meaningful") are
//! *not* errors; they are carried as flags on the corresponding report types.

use thiserror::Error;

/// All failure modes raised by environment validation, the confidence-radius
/// kernels, policy construction, the bound evaluators, and the harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An environment specification had no segments or no arms.
    #[error("environment specification is empty: {0}")]
    EmptySpec(String),

    /// Segment start times are not strictly increasing.
    #[error("segment starts must be strictly increasing: segment {index} starts at {start} after {previous}")]
    UnsortedSegments {
        /// Index of the offending segment.
        index: usize,
        /// Start time of the offending segment.
        start: u64,
        /// Start time of the preceding segment.
        previous: u64,
    },

    /// A segment mean lies outside the closed unit interval.
    #[error("mean {value} for arm {arm} in segment {segment} is outside [0, 1]")]
    MeanOutOfRange {
        /// Segment index containing the bad mean.
        segment: usize,
        /// Arm index of the bad mean.
        arm: usize,
        /// The offending value.
        value: f64,
    },

    /// Segments disagree on the number of arms.
    #[error("segment {index} has {found} arm means but the first segment has {expected}")]
    RaggedRows {
        /// Index of the offending segment.
        index: usize,
        /// Number of means found in that segment.
        found: usize,
        /// Number of means in the first segment.
        expected: usize,
    },

    /// The first segment does not start at time 1.
    #[error("the first segment must start at time 1, found {0}")]
    StartNotOne(u64),

    /// A time index lies outside the configured horizon.
    #[error("time {time} is outside the horizon {horizon}")]
    TimeOutOfRange {
        /// The offending time index.
        time: u64,
        /// The configured horizon.
        horizon: u64,
    },

    /// An arm index is not valid for the environment or policy.
    #[error("arm index {arm} is out of range for {arms} arms")]
    ArmOutOfRange {
        /// The offending arm index.
        arm: usize,
        /// Number of arms available.
        arms: usize,
    },

    /// A sample count that must be positive was zero (or otherwise invalid).
    #[error("sample count must be positive, found {0}")]
    InvalidCount(u64),

    /// A confidence parameter delta lies outside (0, 1).
    #[error("delta must lie in (0, 1), found {0}")]
    InvalidDelta(f64),

    /// A peeling/phase parameter alpha is out of range for its kernel.
    #[error("alpha is out of range: {0}")]
    InvalidAlpha(String),

    /// A logarithm argument was too small for the formula to be defined.
    #[error("degenerate logarithm: {0}")]
    DegenerateLog(String),

    /// A generic numeric parameter was outside its documented domain.
    #[error("value out of range: {0}")]
    ValueOutOfRange(String),

    /// A tracker or scan was asked to operate on an arm with no observations.
    #[error("no observations recorded for arm {0}")]
    NoObservations(usize),

    /// A gap parameter was outside (0, 1].
    #[error("gap must lie in (0, 1], found {0}")]
    InvalidGap(f64),

    /// An eta parameter was outside (0, 1).
    #[error("eta must lie in (0, 1), found {0}")]
    InvalidEta(f64),

    /// A per-changepoint quantity was requested past the last changepoint.
    #[error("changepoint index {index} is out of range: environment has {changepoints} changepoints")]
    LastChangepoint {
        /// The requested changepoint index.
        index: usize,
        /// Number of changepoints in the environment.
        changepoints: usize,
    },

    /// A configuration or data file could not be parsed.
    #[error("parse error: {0}")]
    ParseError(String),

    /// A recorded trace violated an internal consistency check.
    #[error("inconsistent trace: {0}")]
    InconsistentTrace(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::ParseError(err.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(err: csv::Error) -> Self {
        Error::ParseError(err.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::ParseError(err.to_string())
    }
}
