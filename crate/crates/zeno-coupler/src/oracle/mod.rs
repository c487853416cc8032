//! Exact (non-perturbative) propagation of the six-mode coherent state in a
//! truncated Fock space. This is the ground-truth oracle for the number
//! expectations, the Zeno parameters, and the conservation laws.

mod basis;
mod generator;
mod propagate;
mod state;

pub use basis::{FockBasis, Mode};
pub use generator::{build_generator, GeneratorMatrix};
pub use propagate::{evolve, oracle_number_expectations, oracle_zeno};
pub use state::{coherent_state_truncated, TruncatedState};

use crate::error::{Error, Result};

/// Truncation and tolerance settings for the oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FockConfig {
    /// Max occupation per mode, order (p, a1, a2, b, c, d); basis dimension
    /// per mode is cutoff + 1.
    pub cutoffs: [u32; 6],
    /// Relative tolerance of the propagator (error per unit length budget).
    pub rtol: f64,
    /// Max admissible probability on a boundary Fock layer.
    pub leakage_tol: f64,
    /// Max total basis dimension.
    pub budget: usize,
}

impl FockConfig {
    pub fn new(cutoffs: [u32; 6]) -> FockConfig {
        FockConfig {
            cutoffs,
            rtol: 1e-10,
            leakage_tol: 1e-6,
            budget: 200_000,
        }
    }

    pub fn with_leakage_tol(mut self, tol: f64) -> FockConfig {
        self.leakage_tol = tol;
        self
    }

    pub fn with_rtol(mut self, rtol: f64) -> FockConfig {
        self.rtol = rtol;
        self
    }

    pub fn dimension(&self) -> usize {
        self.cutoffs.iter().map(|&c| c as usize + 1).product()
    }

    pub fn validate(&self) -> Result<()> {
        if self.cutoffs.iter().any(|&c| c == 0) {
            return Err(Error::config("fock.cutoffs", "cutoffs must be positive"));
        }
        let dim = self.dimension();
        if dim > self.budget {
            return Err(Error::BudgetExceeded {
                dim,
                budget: self.budget,
            });
        }
        Ok(())
    }
}
