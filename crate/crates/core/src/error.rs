//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A parameter failed its domain invariant (value out of range,
    /// non-positive-definite covariance, and so on).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// GOSPA was asked to compare sets beyond the exhaustive-assignment
    /// limit. The implementation refuses rather than approximating.
    #[error("set too large for exhaustive assignment: max cardinality {got} exceeds {limit}")]
    SetTooLarge { got: usize, limit: usize },

    /// Every hypothesis (including "no target") has zero likelihood for
    /// the supplied measurement history: the history is impossible under
    /// the model, e.g. a measurement with no clutter and no hypothesis in
    /// the field of view.
    #[error("degenerate posterior: all hypothesis likelihoods are zero")]
    DegeneratePosterior,

    /// Hypothesis index outside `0..=n`.
    #[error("hypothesis index {index} out of range (n = {n})")]
    IndexOutOfRange { index: usize, n: usize },

    /// A sampled clutter count exceeded the hard per-scan cap.
    #[error("clutter sample of {got} points exceeds the cap of {cap} per scan")]
    ClutterCapExceeded { got: usize, cap: usize },

    /// `sample_scan` was asked for a detection that the geometry forbids.
    #[error("detection requested for a hypothesis outside the field of view")]
    DetectionOutsideFov,

    /// The detection-sequence enumerator refuses horizons beyond its cap.
    #[error("horizon {got} exceeds the detection-sequence enumeration cap of {cap}")]
    HorizonTooLong { got: usize, cap: usize },

    /// A planner exceeded its configured search budget.
    #[error("planning budget exceeded: {0}")]
    BudgetExceeded(String),

    /// Configuration rejected before any work was done.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
