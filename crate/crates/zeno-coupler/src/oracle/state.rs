//! Truncated product coherent states and expectation values.

use std::io::{Read, Write};

use num_complex::Complex64;

use super::basis::FockBasis;
use super::FockConfig;
use crate::error::{Error, Result};
use crate::types::CoherentAmplitudes;

/// Normalized state vector over the product Fock basis.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedState {
    basis: FockBasis,
    pub amplitudes: Vec<Complex64>,
    /// 1 − ⟨ψ|ψ⟩ of the raw truncated coherent product, recorded before
    /// renormalization.
    pub norm_deficit: f64,
}

/// Per-mode truncated coherent coefficients c_n = e^{−|λ|²/2} λⁿ/√n!.
fn mode_vector(lambda: Complex64, cutoff: u32) -> Vec<Complex64> {
    let mut v = Vec::with_capacity(cutoff as usize + 1);
    let mut c = Complex64::new((-lambda.norm_sqr() / 2.0).exp(), 0.0);
    v.push(c);
    for n in 1..=cutoff {
        c = c * lambda / (n as f64).sqrt();
        v.push(c);
    }
    v
}

/// Poisson tail beyond the cutoff for mean occupation |λ|².
fn poisson_tail(mean: f64, cutoff: u32) -> f64 {
    let mut kept = 0.0;
    let mut w = (-mean).exp();
    kept += w;
    for n in 1..=cutoff {
        w *= mean / n as f64;
        kept += w;
    }
    (1.0 - kept).max(0.0)
}

/// Truncated product coherent state, renormalized; errors when the
/// predicted Poisson leakage exceeds the configured tolerance.
pub fn coherent_state_truncated(
    amps: &CoherentAmplitudes,
    fock: &FockConfig,
) -> Result<TruncatedState> {
    fock.validate()?;
    let basis = FockBasis::new(fock.cutoffs);
    let lambdas = amps.as_array();

    let mut predicted = 0.0;
    for (m, lam) in lambdas.iter().enumerate() {
        predicted += poisson_tail(lam.norm_sqr(), fock.cutoffs[m]);
    }
    if predicted > fock.leakage_tol {
        return Err(Error::ExcessiveTruncation {
            predicted,
            tol: fock.leakage_tol,
        });
    }

    let mut vec = vec![Complex64::new(1.0, 0.0)];
    for (m, lam) in lambdas.iter().enumerate() {
        let mv = mode_vector(*lam, fock.cutoffs[m]);
        let mut next = Vec::with_capacity(vec.len() * mv.len());
        for a in &vec {
            for w in &mv {
                next.push(a * w);
            }
        }
        vec = next;
    }
    debug_assert_eq!(vec.len(), basis.dim());

    let norm_sqr: f64 = vec.iter().map(|a| a.norm_sqr()).sum();
    let deficit = 1.0 - norm_sqr;
    let scale = 1.0 / norm_sqr.sqrt();
    for a in &mut vec {
        *a *= scale;
    }
    Ok(TruncatedState {
        basis,
        amplitudes: vec,
        norm_deficit: deficit,
    })
}

impl TruncatedState {
    pub fn basis(&self) -> &FockBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// A bare basis state (unit amplitude on one occupation tuple).
    pub fn basis_state(fock: &FockConfig, occ: [u32; 6]) -> Result<TruncatedState> {
        fock.validate()?;
        let basis = FockBasis::new(fock.cutoffs);
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); basis.dim()];
        amplitudes[basis.index(occ)] = Complex64::new(1.0, 0.0);
        Ok(TruncatedState {
            basis,
            amplitudes,
            norm_deficit: 0.0,
        })
    }

    pub(crate) fn with_amplitudes(&self, amplitudes: Vec<Complex64>) -> TruncatedState {
        TruncatedState {
            basis: self.basis,
            amplitudes,
            norm_deficit: self.norm_deficit,
        }
    }

    /// ⟨N_mode⟩.
    pub fn expectation_number(&self, mode: usize) -> f64 {
        self.amplitudes
            .iter()
            .enumerate()
            .map(|(i, a)| a.norm_sqr() * self.basis.occupation(i, mode) as f64)
            .sum()
    }

    /// Expectation of a diagonal observable given by a weight function of
    /// the occupation tuple.
    pub fn expectation_weighted(&self, f: impl Fn(&[u32; 6]) -> f64) -> f64 {
        self.amplitudes
            .iter()
            .enumerate()
            .map(|(i, a)| a.norm_sqr() * f(&self.basis.occupations(i)))
            .sum()
    }

    /// ⟨Π_m a_m^{p_m}⟩ for the given lowering powers.
    pub fn expectation_lowering(&self, powers: [u32; 6]) -> Complex64 {
        let shift: usize = (0..6).map(|m| powers[m] as usize * self.basis.stride(m)).sum();
        let mut acc = Complex64::new(0.0, 0.0);
        'outer: for (i, a) in self.amplitudes.iter().enumerate() {
            if a.norm_sqr() == 0.0 {
                continue;
            }
            let occ = self.basis.occupations(i);
            let mut factor = 1.0f64;
            for m in 0..6 {
                if occ[m] < powers[m] {
                    continue 'outer;
                }
                for k in 0..powers[m] {
                    factor *= (occ[m] - k) as f64;
                }
            }
            acc += self.amplitudes[i - shift].conj() * a * factor.sqrt();
        }
        acc
    }

    /// Probability mass on the truncation boundary.
    pub fn boundary_mass(&self) -> f64 {
        self.amplitudes
            .iter()
            .enumerate()
            .filter(|(i, _)| self.basis.is_boundary(*i))
            .map(|(_, a)| a.norm_sqr())
            .sum()
    }

    /// Binary dump: cutoffs as six little-endian u32, dimension as
    /// little-endian u64, then interleaved re/im f64 in basis order.
    pub fn write_binary<W: Write>(&self, w: &mut W) -> Result<()> {
        for c in self.basis.cutoffs() {
            w.write_all(&c.to_le_bytes())?;
        }
        w.write_all(&(self.dim() as u64).to_le_bytes())?;
        for a in &self.amplitudes {
            w.write_all(&a.re.to_le_bytes())?;
            w.write_all(&a.im.to_le_bytes())?;
        }
        Ok(())
    }

    pub fn read_binary<R: Read>(r: &mut R) -> Result<TruncatedState> {
        let mut b4 = [0u8; 4];
        let mut cutoffs = [0u32; 6];
        for c in &mut cutoffs {
            r.read_exact(&mut b4)?;
            *c = u32::from_le_bytes(b4);
        }
        let mut b8 = [0u8; 8];
        r.read_exact(&mut b8)?;
        let dim = u64::from_le_bytes(b8) as usize;
        let basis = FockBasis::new(cutoffs);
        if basis.dim() != dim {
            return Err(Error::config(
                "state",
                format!("dimension {} does not match cutoffs", dim),
            ));
        }
        let mut amplitudes = Vec::with_capacity(dim);
        for _ in 0..dim {
            r.read_exact(&mut b8)?;
            let re = f64::from_le_bytes(b8);
            r.read_exact(&mut b8)?;
            let im = f64::from_le_bytes(b8);
            amplitudes.push(Complex64::new(re, im));
        }
        Ok(TruncatedState {
            basis,
            amplitudes,
            norm_deficit: f64::NAN,
        })
    }
}
