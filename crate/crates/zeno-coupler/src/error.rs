use thiserror::Error;

/// Errors produced by the evaluation, oracle, and sweep layers.
#[derive(Debug, Error)]
pub enum Error {
    /// A phase mismatch was requested for an amplitude of zero magnitude.
    #[error("phase of the {which} amplitude is undefined (zero magnitude)")]
    ZeroAmplitudePhase { which: &'static str },

    /// A three-exponential kernel signature outside the catalog.
    #[error("unknown kernel signature `{0}`")]
    InvalidSignature(String),

    /// Truncated Fock dimension exceeds the configured budget.
    #[error("Fock dimension {dim} exceeds budget {budget}")]
    BudgetExceeded { dim: usize, budget: usize },

    /// Coherent amplitudes too large for the requested cutoffs.
    #[error("predicted truncation deficit {predicted:.3e} exceeds leakage tolerance {tol:.3e}")]
    ExcessiveTruncation { predicted: f64, tol: f64 },

    /// Dynamics reached the truncation boundary.
    #[error("boundary-layer occupation {leakage:.3e} exceeds tolerance {tol:.3e} at z = {z}")]
    LeakageExceeded { leakage: f64, tol: f64, z: f64 },

    /// The propagator could not meet its tolerance.
    #[error("propagator step failure at z = {z}: {detail}")]
    StepFailure { z: f64, detail: String },

    /// Unknown figure preset name.
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    /// Semantic violation in a sweep specification or config document,
    /// reported with the offending field path.
    #[error("invalid config at `{path}`: {message}")]
    Config { path: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn config(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            path: path.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
