//! Zeno parameters Z_b, Z_c, Z_d: closed forms, the definitional
//! probe-on/probe-off difference, resonant and phonon-excitation limits,
//! QZE/QAZE classification, and the Raman / degenerate reductions.

use num_complex::Complex64;

use crate::coefficients::{antistokes_coeffs, phonon_coeffs, stokes_coeffs};
use crate::kernels::{f_antistokes, f_stokes, sinc};
use crate::observables::{
    antistokes_groups, phonon_groups, stokes_groups, x_probe_antistokes, x_probe_stokes, Flags,
};
use crate::types::{CoherentAmplitudes, CouplerConfig, Couplings};

/// Sign classification of a Zeno parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Qze,
    Qaze,
    Neither,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Classification::Qze => write!(f, "QZE"),
            Classification::Qaze => write!(f, "QAZE"),
            Classification::Neither => write!(f, "Neither"),
        }
    }
}

/// Evaluation route of a [`ZenoResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    Difference,
    Resonant,
    PhononExcitation,
    Oracle,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::Difference => "difference",
            Method::Resonant => "resonant",
            Method::PhononExcitation => "phonon-excitation",
            Method::Oracle => "oracle",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Zeno parameters with per-mode classification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZenoResult {
    pub z_b: f64,
    pub z_c: f64,
    pub z_d: f64,
    pub class_b: Classification,
    pub class_c: Classification,
    pub class_d: Classification,
    pub method: Method,
    pub flags: Flags,
}

/// Depth scales C_b = 2Γg(|α₁|²+|α₂|²+1)|α||β||γ| and
/// C_d = 2Γχ(|α₁|²+|α₂|²+1)|α||γ||δ|.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingCoefficients {
    pub c_b: f64,
    pub c_d: f64,
}

pub fn scaling_coefficients(c: &Couplings, amps: &CoherentAmplitudes) -> ScalingCoefficients {
    let p = amps.pump_factor();
    let common = p * amps.alpha.norm() * amps.gamma.norm();
    ScalingCoefficients {
        c_b: 2.0 * c.gamma * c.g * common * amps.beta.norm(),
        c_d: 2.0 * c.gamma * c.chi * common * amps.delta.norm(),
    }
}

/// Relative dead band for the `Neither` class:
/// `1e-9 · max(1, C_b z², C_d z²)`.
pub fn default_tol_class(sc: &ScalingCoefficients, z: f64) -> f64 {
    1e-9 * (sc.c_b * z * z).max(sc.c_d * z * z).max(1.0)
}

/// QZE if `value < -tol_class`, QAZE if `value > tol_class`, else Neither.
pub fn classify(value: f64, tol_class: f64) -> Classification {
    if value < -tol_class {
        Classification::Qze
    } else if value > tol_class {
        Classification::Qaze
    } else {
        Classification::Neither
    }
}

fn build_result(
    z_b: f64,
    z_c: f64,
    z_d: f64,
    method: Method,
    flags: Flags,
    tol: f64,
) -> ZenoResult {
    ZenoResult {
        z_b,
        z_c,
        z_d,
        class_b: classify(z_b, tol),
        class_c: classify(z_c, tol),
        class_d: classify(z_d, tol),
        method,
        flags,
    }
}

fn tol_for(cfg: &CouplerConfig, z: f64, tol_class: Option<f64>) -> f64 {
    tol_class.unwrap_or_else(|| {
        default_tol_class(&scaling_coefficients(&cfg.couplings, &cfg.amplitudes), z)
    })
}

/// Closed-form Zeno parameters via the singularity-stable response kernels.
pub fn zeno_closed(cfg: &CouplerConfig, z: f64) -> ZenoResult {
    zeno_closed_with(cfg, z, None)
}

pub fn zeno_closed_with(cfg: &CouplerConfig, z: f64, tol_class: Option<f64>) -> ZenoResult {
    let det = cfg.detunings();
    let c = &cfg.couplings;
    let amps = &cfg.amplitudes;
    let p = amps.pump_factor();
    let fb = f_stokes(det.ds, det.dd, z);
    let fd = f_antistokes(det.da, det.dd, z);
    let z_b = 2.0 * c.g * c.gamma * p * (x_probe_stokes(amps) * fb).re;
    let z_d = 2.0 * c.chi * c.gamma * p * (x_probe_antistokes(amps).conj() * fd).re;
    let z_c = z_b - z_d;
    build_result(
        z_b,
        z_c,
        z_d,
        Method::ClosedForm,
        Flags::default(),
        tol_for(cfg, z, tol_class),
    )
}

/// Zeno parameters as the difference of the mean boson numbers evaluated
/// with the probe coupling as given and with Γ = 0 (a fresh full
/// evaluation, not term dropping). Subtraction happens per matching summand
/// group, so the Γ-independent groups cancel exactly.
pub fn zeno_difference(cfg: &CouplerConfig, z: f64) -> ZenoResult {
    zeno_difference_with(cfg, z, None)
}

pub fn zeno_difference_with(cfg: &CouplerConfig, z: f64, tol_class: Option<f64>) -> ZenoResult {
    let det = cfg.detunings();
    let amps = &cfg.amplitudes;
    let f = &cfg.frequencies;
    let c_on = cfg.couplings;
    let c_off = Couplings { gamma: 0.0, ..c_on };

    let jb_on = stokes_groups(amps, &stokes_coeffs(&c_on, &det, f.omega_b, z));
    let jb_off = stokes_groups(amps, &stokes_coeffs(&c_off, &det, f.omega_b, z));
    let kc_on = phonon_groups(amps, &phonon_coeffs(&c_on, &det, f.omega_c, z));
    let kc_off = phonon_groups(amps, &phonon_coeffs(&c_off, &det, f.omega_c, z));
    let ld_on = antistokes_groups(amps, &antistokes_coeffs(&c_on, &det, f.omega_d, z));
    let ld_off = antistokes_groups(amps, &antistokes_coeffs(&c_off, &det, f.omega_d, z));

    let diff = |on: &[f64], off: &[f64]| -> f64 {
        on.iter()
            .zip(off.iter())
            .fold(0.0, |acc, (a, b)| acc + (a - b))
    };
    let z_b = diff(&jb_on, &jb_off);
    let z_c = diff(&kc_on, &kc_off);
    let z_d = diff(&ld_on, &ld_off);

    let negative = |g: &[f64]| g.iter().sum::<f64>() < 0.0;
    let flags = Flags {
        perturbation_breakdown: negative(&jb_on)
            || negative(&kc_on)
            || negative(&ld_on)
            || negative(&jb_off)
            || negative(&kc_off)
            || negative(&ld_off),
    };
    build_result(
        z_b,
        z_c,
        z_d,
        Method::Difference,
        flags,
        tol_for(cfg, z, tol_class),
    )
}

/// Resonant limit: Z_b = −½C_b z² cosθ₂, Z_d = −½C_d z² cosθ₁; the inputs'
/// detunings are ignored (treated as zero).
pub fn zeno_resonant(cfg: &CouplerConfig, z: f64) -> ZenoResult {
    zeno_resonant_with(cfg, z, None)
}

pub fn zeno_resonant_with(cfg: &CouplerConfig, z: f64, tol_class: Option<f64>) -> ZenoResult {
    let c = &cfg.couplings;
    let amps = &cfg.amplitudes;
    let p = amps.pump_factor();
    let z_b = -(c.g * c.gamma) * p * z * z * x_probe_stokes(amps).re;
    let z_d = -(c.chi * c.gamma) * p * z * z * x_probe_antistokes(amps).conj().re;
    let z_c = z_b - z_d;
    build_result(
        z_b,
        z_c,
        z_d,
        Method::Resonant,
        Flags::default(),
        tol_for(cfg, z, tol_class),
    )
}

/// Phonon-excitation regime Δω_D = Δω_S = −Δω_A = Δ (Δ read from the
/// config's Δω_D): the closed forms specialize to
/// Z_b = −½C_b z² sinc²(Δz/2) cos(Δz − θ₂) and
/// Z_d = −½C_d z² sinc²(Δz/2) cos(Δz + θ₁).
pub fn zeno_phonon_excitation(cfg: &CouplerConfig, z: f64) -> ZenoResult {
    zeno_phonon_excitation_with(cfg, z, None)
}

pub fn zeno_phonon_excitation_with(
    cfg: &CouplerConfig,
    z: f64,
    tol_class: Option<f64>,
) -> ZenoResult {
    let c = &cfg.couplings;
    let amps = &cfg.amplitudes;
    let p = amps.pump_factor();
    let delta = cfg.detunings().dd;
    let m = {
        let s = sinc(delta * z / 2.0);
        s * s
    };
    let rot = Complex64::from_polar(1.0, delta * z);
    let z_b = -(c.g * c.gamma) * p * z * z * m * (x_probe_stokes(amps) * rot).re;
    let z_d = -(c.chi * c.gamma) * p * z * z * m * (x_probe_antistokes(amps).conj() * rot).re;
    let z_c = z_b - z_d;
    build_result(
        z_b,
        z_c,
        z_d,
        Method::PhononExcitation,
        Flags::default(),
        tol_for(cfg, z, tol_class),
    )
}

/// Reductions of the non-degenerate process.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionVariant {
    /// α₂ = 0: plain Raman scattering.
    Raman,
    /// α₂ = α₁: degenerate hyper-Raman pumping.
    DegenerateHyperRaman,
}

/// Apply a pump reduction; all other fields are unchanged.
pub fn reduce(cfg: &CouplerConfig, variant: ReductionVariant) -> CouplerConfig {
    let mut out = *cfg;
    match variant {
        ReductionVariant::Raman => out.amplitudes.alpha2 = Complex64::new(0.0, 0.0),
        ReductionVariant::DegenerateHyperRaman => out.amplitudes.alpha2 = out.amplitudes.alpha1,
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::Frequencies;

    fn fig_config() -> CouplerConfig {
        CouplerConfig {
            frequencies: Frequencies::from_detunings(0.01, 0.01, 0.001),
            couplings: Couplings {
                g: 1.0,
                chi: 10.0,
                gamma: 100.0,
            },
            amplitudes: CoherentAmplitudes::from_magnitudes([11.0, 10.0, 9.5, 8.0, 0.01, 1.0]),
        }
    }

    fn resonant_config() -> CouplerConfig {
        CouplerConfig {
            frequencies: Frequencies::from_detunings(0.0, 0.0, 0.0),
            ..fig_config()
        }
    }

    #[test]
    fn scaling_coefficients_match_hand_values() {
        let cfg = fig_config();
        let sc = scaling_coefficients(&cfg.couplings, &cfg.amplitudes);
        assert!((sc.c_b - 33660.0).abs() < 1e-9 * 33660.0);
        assert!((sc.c_d - 42075.0).abs() < 1e-9 * 42075.0);
    }

    #[test]
    fn resonant_hand_values_and_classes() {
        let cfg = resonant_config();
        let r = zeno_resonant(&cfg, 0.1);
        assert!((r.z_b - (-168.3)).abs() < 1e-10 * 168.3);
        assert!((r.z_d - (-210.375)).abs() < 1e-10 * 210.375);
        assert!((r.z_c - 42.075).abs() < 1e-10 * 42.075);
        assert_eq!(r.class_b, Classification::Qze);
        assert_eq!(r.class_d, Classification::Qze);
        assert_eq!(r.class_c, Classification::Qaze);
    }

    #[test]
    fn closed_and_difference_agree() {
        let cfg = fig_config();
        let a = zeno_closed(&cfg, 0.1);
        let b = zeno_difference(&cfg, 0.1);
        let scale = a.z_b.abs().max(a.z_d.abs());
        assert!((a.z_b - b.z_b).abs() < 1e-10 * scale);
        assert!((a.z_c - b.z_c).abs() < 1e-10 * scale);
        assert!((a.z_d - b.z_d).abs() < 1e-10 * scale);
    }

    #[test]
    fn special_cases_exact() {
        let mut spont = fig_config();
        spont.amplitudes.beta = Complex64::new(0.0, 0.0);
        spont.amplitudes.gamma = Complex64::new(0.0, 0.0);
        spont.amplitudes.delta = Complex64::new(0.0, 0.0);
        for r in [zeno_closed(&spont, 0.3), zeno_difference(&spont, 0.3)] {
            assert_eq!(r.z_b, 0.0);
            assert_eq!(r.z_c, 0.0);
            assert_eq!(r.z_d, 0.0);
        }

        let mut no_delta = fig_config();
        no_delta.amplitudes.delta = Complex64::new(0.0, 0.0);
        for r in [zeno_closed(&no_delta, 0.3), zeno_difference(&no_delta, 0.3)] {
            assert_eq!(r.z_d, 0.0);
            assert_eq!(r.z_b, r.z_c);
        }

        let mut no_beta = fig_config();
        no_beta.amplitudes.beta = Complex64::new(0.0, 0.0);
        for r in [zeno_closed(&no_beta, 0.3), zeno_difference(&no_beta, 0.3)] {
            assert_eq!(r.z_b, 0.0);
            assert_eq!(r.z_d, -r.z_c);
        }

        let mut no_gamma = fig_config();
        no_gamma.amplitudes.gamma = Complex64::new(0.0, 0.0);
        for r in [zeno_closed(&no_gamma, 0.3), zeno_difference(&no_gamma, 0.3)] {
            assert_eq!((r.z_b, r.z_c, r.z_d), (0.0, 0.0, 0.0));
        }
    }

    #[test]
    fn phonon_excitation_matches_closed_at_constraint() {
        let delta = 0.31;
        let mut cfg = fig_config();
        cfg.frequencies = Frequencies::from_detunings(delta, -delta, delta);
        let z = 0.7;
        let ph = zeno_phonon_excitation(&cfg, z);
        let cl = zeno_closed(&cfg, z);
        let scale = cl.z_b.abs().max(cl.z_d.abs());
        assert!((ph.z_b - cl.z_b).abs() < 1e-10 * scale);
        assert!((ph.z_d - cl.z_d).abs() < 1e-10 * scale);
    }

    #[test]
    fn phonon_excitation_crossover_and_reduction_to_resonant() {
        let mut cfg = resonant_config();
        let z = 0.1;
        // Δz = π/2 puts the Stokes response on its zero
        cfg.frequencies = Frequencies::from_detunings(
            std::f64::consts::FRAC_PI_2 / z,
            -std::f64::consts::FRAC_PI_2 / z,
            std::f64::consts::FRAC_PI_2 / z,
        );
        let r = zeno_phonon_excitation(&cfg, z);
        assert!(r.z_b.abs() < 1e-9 * 168.3);

        let mut near_res = resonant_config();
        near_res.frequencies = Frequencies::from_detunings(1e-9, -1e-9, 1e-9);
        let a = zeno_phonon_excitation(&near_res, z);
        let b = zeno_resonant(&near_res, z);
        assert!((a.z_b - b.z_b).abs() < 1e-7 * b.z_b.abs());
    }

    #[test]
    fn phonon_excitation_at_delta_z_pi() {
        let z = 0.1;
        let delta = std::f64::consts::PI / z;
        let mut cfg = resonant_config();
        cfg.frequencies = Frequencies::from_detunings(delta, -delta, delta);
        let r = zeno_phonon_excitation(&cfg, z);
        // sinc²(π/2)·cos(π) = -(2/π)²: Z_b = +½ C_b z² (2/π)²
        let expect = 0.5 * 33660.0 * z * z * (2.0 / std::f64::consts::PI).powi(2);
        assert!((r.z_b - expect).abs() < 1e-9 * expect);
    }

    #[test]
    fn classify_dead_band() {
        assert_eq!(classify(-168.3, 1e-9), Classification::Qze);
        assert_eq!(classify(0.0, 1e-9), Classification::Neither);
        assert_eq!(classify(42.075, 1e-9), Classification::Qaze);
    }

    #[test]
    fn reductions_rescale_depths() {
        let cfg = fig_config();
        let sc = scaling_coefficients(&cfg.couplings, &cfg.amplitudes);
        let raman = reduce(&cfg, ReductionVariant::Raman);
        let sr = scaling_coefficients(&raman.couplings, &raman.amplitudes);
        assert!((sr.c_b / sc.c_b - 101.0 / 191.25).abs() < 1e-12);
        let degen = reduce(&cfg, ReductionVariant::DegenerateHyperRaman);
        let sd = scaling_coefficients(&degen.couplings, &degen.amplitudes);
        assert!((sd.c_b / sc.c_b - 201.0 / 191.25).abs() < 1e-12);
    }
}
