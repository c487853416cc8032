//! The perturbative coefficient sets j1..j10, k1..k13, l1..l10.
//!
//! Each set is stored as the common free-propagation phase (`j1`, `k1`,
//! `l1`) plus the coefficients relative to it; the stated intra-set
//! equalities (j4 = j5, k8 = −k11 = −k12, …) hold exactly because equal
//! members share one kernel evaluation. Coefficient pairs that must cancel
//! against each other across sets (j6/k4 and k6/l6) are routed through one
//! shared evaluation as well, so the conservation identity between the
//! Zeno parameters survives in floating point.

use num_complex::Complex64;

use crate::kernels::{kernel_k1, kernel_k2, kernel_k3, K2Signature, K3Sign};
use crate::types::{Couplings, Detunings};

/// Stokes-mode coefficients. `r*` fields are the coefficients divided by the
/// common phase `j1`; the physical values are recovered by the `j*` methods.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StokesCoefficients {
    pub phase: Complex64,
    pub r2: Complex64,
    pub r3: Complex64,
    pub r4: Complex64,
    pub r5: Complex64,
    pub r6: Complex64,
    pub r7: Complex64,
    pub r8: Complex64,
    pub r9: Complex64,
    pub r10: Complex64,
}

impl StokesCoefficients {
    pub fn j1(&self) -> Complex64 {
        self.phase
    }
    pub fn j2(&self) -> Complex64 {
        self.phase * self.r2
    }
    pub fn j3(&self) -> Complex64 {
        self.phase * self.r3
    }
    pub fn j4(&self) -> Complex64 {
        self.phase * self.r4
    }
    pub fn j5(&self) -> Complex64 {
        self.phase * self.r5
    }
    pub fn j6(&self) -> Complex64 {
        self.phase * self.r6
    }
    pub fn j7(&self) -> Complex64 {
        self.phase * self.r7
    }
    pub fn j8(&self) -> Complex64 {
        self.phase * self.r8
    }
    pub fn j9(&self) -> Complex64 {
        self.phase * self.r9
    }
    pub fn j10(&self) -> Complex64 {
        self.phase * self.r10
    }
}

/// Phonon-mode coefficients relative to `k1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhononCoefficients {
    pub phase: Complex64,
    pub r2: Complex64,
    pub r3: Complex64,
    pub r4: Complex64,
    pub r5: Complex64,
    pub r6: Complex64,
    pub r7: Complex64,
    pub r8: Complex64,
    pub r9: Complex64,
    pub r10: Complex64,
    pub r11: Complex64,
    pub r12: Complex64,
    pub r13: Complex64,
}

impl PhononCoefficients {
    pub fn k1(&self) -> Complex64 {
        self.phase
    }
    pub fn k2(&self) -> Complex64 {
        self.phase * self.r2
    }
    pub fn k3(&self) -> Complex64 {
        self.phase * self.r3
    }
    pub fn k4(&self) -> Complex64 {
        self.phase * self.r4
    }
    pub fn k5(&self) -> Complex64 {
        self.phase * self.r5
    }
    pub fn k6(&self) -> Complex64 {
        self.phase * self.r6
    }
    pub fn k7(&self) -> Complex64 {
        self.phase * self.r7
    }
    pub fn k8(&self) -> Complex64 {
        self.phase * self.r8
    }
    pub fn k9(&self) -> Complex64 {
        self.phase * self.r9
    }
    pub fn k10(&self) -> Complex64 {
        self.phase * self.r10
    }
    pub fn k11(&self) -> Complex64 {
        self.phase * self.r11
    }
    pub fn k12(&self) -> Complex64 {
        self.phase * self.r12
    }
    pub fn k13(&self) -> Complex64 {
        self.phase * self.r13
    }
}

/// Anti-Stokes-mode coefficients relative to `l1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AntiStokesCoefficients {
    pub phase: Complex64,
    pub r2: Complex64,
    pub r3: Complex64,
    pub r4: Complex64,
    pub r5: Complex64,
    pub r6: Complex64,
    pub r7: Complex64,
    pub r8: Complex64,
    pub r9: Complex64,
    pub r10: Complex64,
}

impl AntiStokesCoefficients {
    pub fn l1(&self) -> Complex64 {
        self.phase
    }
    pub fn l2(&self) -> Complex64 {
        self.phase * self.r2
    }
    pub fn l3(&self) -> Complex64 {
        self.phase * self.r3
    }
    pub fn l4(&self) -> Complex64 {
        self.phase * self.r4
    }
    pub fn l5(&self) -> Complex64 {
        self.phase * self.r5
    }
    pub fn l6(&self) -> Complex64 {
        self.phase * self.r6
    }
    pub fn l7(&self) -> Complex64 {
        self.phase * self.r7
    }
    pub fn l8(&self) -> Complex64 {
        self.phase * self.r8
    }
    pub fn l9(&self) -> Complex64 {
        self.phase * self.r9
    }
    pub fn l10(&self) -> Complex64 {
        self.phase * self.r10
    }
}

/// gΓ probe response shared by j6/j7 and k4/k5.
fn probe_stokes_ratio(c: &Couplings, d: &Detunings, z: f64) -> Complex64 {
    c.g * c.gamma * kernel_k2(d.ds, d.dd, z, K2Signature::J6)
}

/// Γχ probe response in the k6/k7 orientation; the l6/l7 partner is its
/// negated conjugate.
fn probe_antistokes_ratio(c: &Couplings, d: &Detunings, z: f64) -> Complex64 {
    c.gamma * c.chi * kernel_k2(d.da, d.dd, z, K2Signature::K6)
}

/// First-order Stokes response shared by j2 and k2.
fn stokes_pump_ratio(c: &Couplings, d: &Detunings, z: f64) -> Complex64 {
    c.g * kernel_k1(d.ds, z)
}

pub fn stokes_coeffs(c: &Couplings, d: &Detunings, omega_b: f64, z: f64) -> StokesCoefficients {
    let r4 = c.g * c.chi * kernel_k2(d.ds, d.da, z, K2Signature::J4);
    let r6 = probe_stokes_ratio(c, d, z);
    let r8 = c.g * c.g * kernel_k3(d.ds, z, K3Sign::Minus);
    StokesCoefficients {
        phase: Complex64::from_polar(1.0, omega_b * z),
        r2: stokes_pump_ratio(c, d, z),
        r3: c.g * c.chi * kernel_k2(d.ds, d.da, z, K2Signature::J3),
        r4,
        r5: r4,
        r6,
        r7: r6,
        r8,
        r9: -r8,
        r10: -r8,
    }
}

pub fn phonon_coeffs(c: &Couplings, d: &Detunings, omega_c: f64, z: f64) -> PhononCoefficients {
    let r4 = probe_stokes_ratio(c, d, z);
    let r6 = probe_antistokes_ratio(c, d, z);
    let r8 = -(c.chi * c.chi) * kernel_k3(d.da, z, K3Sign::Minus);
    let r9 = -(c.g * c.g) * kernel_k3(d.ds, z, K3Sign::Plus);
    PhononCoefficients {
        phase: Complex64::from_polar(1.0, omega_c * z),
        r2: stokes_pump_ratio(c, d, z),
        r3: c.chi * kernel_k1(d.da, z),
        r4,
        r5: r4,
        r6,
        r7: r6,
        r8,
        r9,
        r10: r9,
        r11: -r8,
        r12: -r8,
        r13: -r9,
    }
}

pub fn antistokes_coeffs(
    c: &Couplings,
    d: &Detunings,
    omega_d: f64,
    z: f64,
) -> AntiStokesCoefficients {
    let r3 = c.g * c.chi * kernel_k2(d.da, d.ds, z, K2Signature::L3);
    let r6 = -probe_antistokes_ratio(c, d, z).conj();
    let r8 = -(c.chi * c.chi) * kernel_k3(d.da, z, K3Sign::Plus);
    AntiStokesCoefficients {
        phase: Complex64::from_polar(1.0, omega_d * z),
        r2: c.chi * kernel_k1(-d.da, z),
        r3,
        r4: r3,
        r5: c.g * c.chi * kernel_k2(d.da, d.ds, z, K2Signature::L5),
        r6,
        r7: r6,
        r8,
        r9: r8,
        r10: r8,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::Frequencies;

    fn couplings() -> Couplings {
        Couplings {
            g: 1.0,
            chi: 10.0,
            gamma: 100.0,
        }
    }

    fn dets(ds: f64, da: f64, dd: f64) -> Detunings {
        Frequencies::from_detunings(ds, da, dd).detunings()
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm().max(1e-300)
    }

    #[test]
    fn zero_length_collapses_everything() {
        let c = couplings();
        let d = dets(0.31, -0.12, 0.07);
        let j = stokes_coeffs(&c, &d, 1.5, 0.0);
        let k = phonon_coeffs(&c, &d, 0.5, 0.0);
        let l = antistokes_coeffs(&c, &d, 2.5, 0.0);
        assert_eq!(j.phase, Complex64::new(1.0, 0.0));
        for v in [j.r2, j.r3, j.r4, j.r6, j.r8, k.r2, k.r3, k.r4, k.r6, k.r8, k.r9, l.r2, l.r3, l.r5, l.r6, l.r8] {
            assert_eq!(v.norm(), 0.0);
        }
    }

    #[test]
    fn unit_modulus_phases() {
        let c = couplings();
        let d = dets(0.01, 0.01, 0.001);
        let j = stokes_coeffs(&c, &d, 1.505, 0.7);
        let k = phonon_coeffs(&c, &d, 0.505, 0.7);
        let l = antistokes_coeffs(&c, &d, 2.495, 0.7);
        for p in [j.j1(), k.k1(), l.l1()] {
            assert!((p.norm() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn stated_equalities_are_bitwise() {
        let c = couplings();
        let d = dets(0.09, -0.03, 0.012);
        let j = stokes_coeffs(&c, &d, 1.5, 0.8);
        assert_eq!(j.j4(), j.j5());
        assert_eq!(j.j6(), j.j7());
        assert_eq!(j.j8(), -j.j9());
        assert_eq!(j.j8(), -j.j10());
        let k = phonon_coeffs(&c, &d, 0.5, 0.8);
        assert_eq!(k.k4(), k.k5());
        assert_eq!(k.k6(), k.k7());
        assert_eq!(k.k8(), -k.k11());
        assert_eq!(k.k8(), -k.k12());
        assert_eq!(k.k9(), k.k10());
        assert_eq!(k.k9(), -k.k13());
        let l = antistokes_coeffs(&c, &d, 2.5, 0.8);
        assert_eq!(l.l3(), l.l4());
        assert_eq!(l.l6(), l.l7());
        assert_eq!(l.l8(), l.l9());
        assert_eq!(l.l8(), l.l10());
    }

    #[test]
    fn cross_set_pairings_are_bitwise() {
        let c = couplings();
        let d = dets(0.02, 0.05, -0.01);
        let j = stokes_coeffs(&c, &d, 1.5, 1.1);
        let k = phonon_coeffs(&c, &d, 0.5, 1.1);
        let l = antistokes_coeffs(&c, &d, 2.5, 1.1);
        assert_eq!(j.r6, k.r4);
        assert_eq!(l.r6, -k.r6.conj());
        assert_eq!(j.r2, k.r2);
    }

    #[test]
    fn resonant_limits() {
        let c = couplings();
        let d = dets(0.0, 0.0, 0.0);
        let z = 0.37;
        let j = stokes_coeffs(&c, &d, 1.5, z);
        let k = phonon_coeffs(&c, &d, 0.5, z);
        let l = antistokes_coeffs(&c, &d, 2.5, z);
        let igz = Complex64::new(0.0, c.g * z);
        let ixz = Complex64::new(0.0, c.chi * z);
        let half = z * z / 2.0;
        assert!(rel(j.r2, igz) < 1e-14);
        assert!(rel(k.r3, ixz) < 1e-14);
        assert!(rel(l.r2, ixz) < 1e-14);
        assert!(rel(j.r8, Complex64::new(c.g * c.g * half, 0.0)) < 1e-14);
        assert!(rel(k.r8, Complex64::new(-c.chi * c.chi * half, 0.0)) < 1e-14);
        assert!(rel(k.r9, Complex64::new(-c.g * c.g * half, 0.0)) < 1e-14);
        assert!(rel(l.r8, Complex64::new(-c.chi * c.chi * half, 0.0)) < 1e-14);
        assert!(rel(j.r3, Complex64::new(c.g * c.chi * half, 0.0)) < 1e-14);
    }

    #[test]
    fn continuity_at_removable_singularities() {
        let c = couplings();
        let z = 0.9;
        let at_zero = stokes_coeffs(&c, &dets(0.0, 0.0, 0.0), 1.5, z);
        let nearby = stokes_coeffs(&c, &dets(1e-8, 1e-8, 1e-8), 1.5, z);
        for (a, b) in [
            (at_zero.r2, nearby.r2),
            (at_zero.r3, nearby.r3),
            (at_zero.r4, nearby.r4),
            (at_zero.r6, nearby.r6),
            (at_zero.r8, nearby.r8),
        ] {
            assert!(rel(a, b) < 1e-6);
        }
    }

    #[test]
    fn coupling_prefactor_scales_linearly() {
        let c = couplings();
        let doubled = Couplings {
            g: 2.0 * c.g,
            ..c
        };
        let d = dets(0.04, -0.02, 0.008);
        let a = stokes_coeffs(&c, &d, 1.5, 0.6);
        let b = stokes_coeffs(&doubled, &d, 1.5, 0.6);
        assert_eq!(b.r2, 2.0 * a.r2); // j2 ∝ g
        assert_eq!(b.r3, 2.0 * a.r3); // j3 ∝ gχ
        assert_eq!(b.r8, 4.0 * a.r8); // j8 ∝ g²
    }
}
