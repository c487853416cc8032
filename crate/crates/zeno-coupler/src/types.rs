//! Domain types and the detuning / phase-mismatch algebra.
//!
//! Units: ħ = 1, frequencies and couplings in units of the Stokes coupling
//! `g`, propagation length as the dimensionless product `g z`. Phases are
//! reported in `(-π, π]`. Couplings are real and non-negative; interaction
//! phases are carried by the coherent amplitudes.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Wrap an angle to `(-π, π]`.
pub fn wrap_angle(x: f64) -> f64 {
    let two_pi = std::f64::consts::TAU;
    let w = x.rem_euclid(two_pi);
    if w > std::f64::consts::PI {
        w - two_pi
    } else {
        w
    }
}

/// Mode frequencies (probe pump, pump 1, pump 2, Stokes, phonon, anti-Stokes).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Frequencies {
    pub omega_p: f64,
    pub omega_a1: f64,
    pub omega_a2: f64,
    pub omega_b: f64,
    pub omega_c: f64,
    pub omega_d: f64,
}

impl Frequencies {
    /// The seven derived frequency mismatches.
    pub fn detunings(&self) -> Detunings {
        let ds = -self.omega_a1 - self.omega_a2 + self.omega_b + self.omega_c;
        let da = self.omega_a1 + self.omega_a2 + self.omega_c - self.omega_d;
        let dd = self.omega_a1 + self.omega_a2 - self.omega_p;
        Detunings {
            ds,
            da,
            dd,
            d1: 2.0 * self.omega_a1 + 2.0 * self.omega_a2 - self.omega_b - self.omega_d,
            d2: self.omega_b + 2.0 * self.omega_c - self.omega_d,
            d3: self.omega_b + self.omega_c - self.omega_p,
            d4: self.omega_c - self.omega_d + self.omega_p,
        }
    }

    /// A frequency assignment realizing the requested primary detunings,
    /// anchored at pump frequencies ω_a1 = ω_a2 = 1.
    pub fn from_detunings(ds: f64, da: f64, dd: f64) -> Frequencies {
        Frequencies {
            omega_p: 2.0 - dd,
            omega_a1: 1.0,
            omega_a2: 1.0,
            omega_b: 1.5 + 0.5 * ds,
            omega_c: 0.5 + 0.5 * ds,
            omega_d: 2.5 + 0.5 * ds - da,
        }
    }

    /// Strictly positive frequencies; non-positive values are accepted for
    /// kernel stress tests but flagged in run metadata.
    pub fn is_physical(&self) -> bool {
        self.omega_p > 0.0
            && self.omega_a1 > 0.0
            && self.omega_a2 > 0.0
            && self.omega_b > 0.0
            && self.omega_c > 0.0
            && self.omega_d > 0.0
    }
}

/// Coupling constants: Stokes `g`, anti-Stokes `chi`, probe-system `gamma`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Couplings {
    pub g: f64,
    pub chi: f64,
    pub gamma: f64,
}

/// Initial coherent amplitudes (probe, pump 1, pump 2, Stokes, phonon,
/// anti-Stokes).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentAmplitudes {
    pub alpha: Complex64,
    pub alpha1: Complex64,
    pub alpha2: Complex64,
    pub beta: Complex64,
    pub gamma: Complex64,
    pub delta: Complex64,
}

impl CoherentAmplitudes {
    /// All-real amplitudes from magnitudes (zero phases).
    pub fn from_magnitudes(mags: [f64; 6]) -> CoherentAmplitudes {
        let c = |m: f64| Complex64::new(m, 0.0);
        CoherentAmplitudes {
            alpha: c(mags[0]),
            alpha1: c(mags[1]),
            alpha2: c(mags[2]),
            beta: c(mags[3]),
            gamma: c(mags[4]),
            delta: c(mags[5]),
        }
    }

    pub fn as_array(&self) -> [Complex64; 6] {
        [
            self.alpha,
            self.alpha1,
            self.alpha2,
            self.beta,
            self.gamma,
            self.delta,
        ]
    }

    /// The pump occupation factor |α₁|² + |α₂|² + 1 shared by the scaling
    /// coefficients and the paired cross terms of the number expectations.
    pub fn pump_factor(&self) -> f64 {
        self.alpha1.norm_sqr() + self.alpha2.norm_sqr() + 1.0
    }

    /// Phase mismatches θ₁ = φ_d − φ_p − φ_c and θ₂ = φ_p − φ_b − φ_c.
    pub fn phase_mismatches(&self) -> Result<PhaseMismatch> {
        let phi = |amp: Complex64, which: &'static str| -> Result<f64> {
            if amp.norm_sqr() == 0.0 {
                Err(Error::ZeroAmplitudePhase { which })
            } else {
                Ok(amp.arg())
            }
        };
        let phi_p = phi(self.alpha, "probe")?;
        let phi_b = phi(self.beta, "Stokes")?;
        let phi_c = phi(self.gamma, "phonon")?;
        let phi_d = phi(self.delta, "anti-Stokes")?;
        Ok(PhaseMismatch {
            theta1: wrap_angle(phi_d - phi_p - phi_c),
            theta2: wrap_angle(phi_p - phi_b - phi_c),
        })
    }

    /// Adjust arg(δ) and arg(β) so the phase mismatches equal the request;
    /// magnitudes and the other amplitudes are untouched.
    pub fn with_phase_mismatch(&self, theta1: f64, theta2: f64) -> Result<CoherentAmplitudes> {
        self.with_phase_targets(Some(theta1), Some(theta2))
    }

    pub(crate) fn with_phase_targets(
        &self,
        theta1: Option<f64>,
        theta2: Option<f64>,
    ) -> Result<CoherentAmplitudes> {
        let phi = |amp: Complex64, which: &'static str| -> Result<f64> {
            if amp.norm_sqr() == 0.0 {
                Err(Error::ZeroAmplitudePhase { which })
            } else {
                Ok(amp.arg())
            }
        };
        let mut out = *self;
        if let Some(t1) = theta1 {
            if self.delta.norm_sqr() == 0.0 {
                return Err(Error::ZeroAmplitudePhase {
                    which: "anti-Stokes",
                });
            }
            let phi_p = phi(self.alpha, "probe")?;
            let phi_c = phi(self.gamma, "phonon")?;
            out.delta = Complex64::from_polar(self.delta.norm(), wrap_angle(t1 + phi_p + phi_c));
        }
        if let Some(t2) = theta2 {
            if self.beta.norm_sqr() == 0.0 {
                return Err(Error::ZeroAmplitudePhase { which: "Stokes" });
            }
            let phi_p = phi(self.alpha, "probe")?;
            let phi_c = phi(self.gamma, "phonon")?;
            out.beta = Complex64::from_polar(self.beta.norm(), wrap_angle(phi_p - phi_c - t2));
        }
        Ok(out)
    }
}

/// Frequency mismatches Δω_S, Δω_A, Δω_D and the composite Δω_1…Δω_4.
///
/// The composites obey `d1 = da − ds`, `d2 = da + ds`, `d3 = ds + dd`,
/// `d4 = da − dd`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Detunings {
    pub ds: f64,
    pub da: f64,
    pub dd: f64,
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
    pub d4: f64,
}

/// Phase mismatches θ₁ (probe-anti-Stokes) and θ₂ (probe-Stokes), in
/// `(-π, π]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhaseMismatch {
    pub theta1: f64,
    pub theta2: f64,
}

/// Complete experiment description.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplerConfig {
    pub frequencies: Frequencies,
    pub couplings: Couplings,
    pub amplitudes: CoherentAmplitudes,
}

impl CouplerConfig {
    pub fn detunings(&self) -> Detunings {
        self.frequencies.detunings()
    }
}

/// Detunings from the three primary mismatches (free operation for tests
/// and axis sweeps; equals `Frequencies::from_detunings(..).detunings()` up
/// to rounding).
pub fn detunings_from_primary(ds: f64, da: f64, dd: f64) -> Detunings {
    Frequencies::from_detunings(ds, da, dd).detunings()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn symmetric_resonance_has_zero_detunings() {
        let f = Frequencies {
            omega_p: 2.0,
            omega_a1: 1.0,
            omega_a2: 1.0,
            omega_b: 1.5,
            omega_c: 0.5,
            omega_d: 2.5,
        };
        let d = f.detunings();
        assert_eq!((d.ds, d.da, d.dd), (0.0, 0.0, 0.0));
    }

    #[test]
    fn published_off_resonant_regime() {
        let f = Frequencies {
            omega_p: 1.999,
            omega_a1: 1.0,
            omega_a2: 1.0,
            omega_b: 1.505,
            omega_c: 0.505,
            omega_d: 2.495,
        };
        let d = f.detunings();
        assert!(close(d.ds, 0.01, 1e-14));
        assert!(close(d.da, 0.01, 1e-14));
        assert!(close(d.dd, 0.001, 1e-14));
    }

    #[test]
    fn from_detunings_round_trips() {
        let d = Frequencies::from_detunings(0.07, -0.02, 0.004).detunings();
        assert!(close(d.ds, 0.07, 1e-15));
        assert!(close(d.da, -0.02, 1e-15));
        assert!(close(d.dd, 0.004, 1e-15));
    }

    #[test]
    fn phase_mismatch_trivial_and_rotated() {
        let amps = CoherentAmplitudes::from_magnitudes([1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        let pm = amps.phase_mismatches().unwrap();
        assert_eq!((pm.theta1, pm.theta2), (0.0, 0.0));

        let mut rot = amps;
        rot.alpha = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_2);
        let pm = rot.phase_mismatches().unwrap();
        assert!(close(pm.theta1, -std::f64::consts::FRAC_PI_2, 1e-15));
        assert!(close(pm.theta2, std::f64::consts::FRAC_PI_2, 1e-15));
    }

    #[test]
    fn phase_mismatch_wraps_into_half_open_interval() {
        let mut amps = CoherentAmplitudes::from_magnitudes([1.0, 1.0, 1.0, 2.0, 1.0, 1.0]);
        amps.beta = Complex64::from_polar(2.0, -3.0 * std::f64::consts::FRAC_PI_4);
        let pm = amps.phase_mismatches().unwrap();
        assert!(close(pm.theta2, 3.0 * std::f64::consts::FRAC_PI_4, 1e-15));
        assert!(close(pm.theta1, 0.0, 1e-15));
    }

    #[test]
    fn with_phase_mismatch_round_trip_and_hand_case() {
        let amps = CoherentAmplitudes::from_magnitudes([1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        let set = amps
            .with_phase_mismatch(std::f64::consts::PI, std::f64::consts::FRAC_PI_2)
            .unwrap();
        let pm = set.phase_mismatches().unwrap();
        assert!(close(pm.theta1, std::f64::consts::PI, 1e-12));
        assert!(close(pm.theta2, std::f64::consts::FRAC_PI_2, 1e-12));

        let mut amps = amps;
        amps.gamma = Complex64::from_polar(0.01, 0.2);
        let set = amps.with_phase_mismatch(0.3, -1.1).unwrap();
        let phi_a = amps.alpha.arg();
        assert!(close(set.delta.arg(), wrap_angle(0.3 + phi_a + 0.2), 1e-12));
        assert!(close(set.beta.arg(), wrap_angle(phi_a - 0.2 + 1.1), 1e-12));
        assert!(close(set.delta.norm(), 6.0, 1e-15));
        assert!(close(set.beta.norm(), 4.0, 1e-15));
    }

    #[test]
    fn zero_amplitude_phase_is_an_error() {
        let amps = CoherentAmplitudes::from_magnitudes([1.0, 1.0, 1.0, 0.0, 1.0, 1.0]);
        assert!(matches!(
            amps.phase_mismatches(),
            Err(Error::ZeroAmplitudePhase { which: "Stokes" })
        ));
        assert!(amps.with_phase_mismatch(0.0, 0.1).is_err());
    }
}
