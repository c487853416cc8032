//! Photon/phonon-number dynamics and quantum Zeno / anti-Zeno parameters
//! for an asymmetric nonlinear optical coupler: a probe waveguide coupled
//! to the pump modes of a non-degenerate hyper-Raman process.
//!
//! The library evaluates the second-order perturbative closed forms for
//! the Stokes, phonon, and anti-Stokes number expectations and the Zeno
//! parameters Z_b, Z_c, Z_d, with numerically stable handling of every
//! removable detuning singularity, and cross-validates them against exact
//! propagation of the truncated-Fock-space problem.
//!
//! Start with the runnable examples (`cargo run --example eval_point`, …)
//! or the `zeno-coupler` command-line interface.

pub mod cli;
pub mod coefficients;
pub mod error;
pub mod fileio;
pub mod kernels;
pub mod observables;
pub mod oracle;
pub mod sweep;
pub mod types;
pub mod zeno;

pub use error::{Error, Result};
pub use types::{
    CoherentAmplitudes, CouplerConfig, Couplings, Detunings, Frequencies, PhaseMismatch,
};
pub use zeno::{
    classify, scaling_coefficients, zeno_closed, zeno_difference, zeno_phonon_excitation,
    zeno_resonant, Classification, Method, ZenoResult,
};
