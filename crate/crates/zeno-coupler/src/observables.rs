//! Mean Stokes / phonon / anti-Stokes boson numbers at length z.
//!
//! Two assembly routes are kept side by side. The production route sums the
//! cross terms pairwise through their shared pump factor, which makes the
//! special-case identities between the Zeno parameters exact in floating
//! point. The literal route multiplies every summand family and its
//! conjugate partner independently and records the residual imaginary part;
//! a conjugation slip anywhere in the transcription shows up there at full
//! scale instead of rounding scale.

use num_complex::Complex64;

use crate::coefficients::{AntiStokesCoefficients, PhononCoefficients, StokesCoefficients};
use crate::types::CoherentAmplitudes;

/// Diagnostic flags attached to evaluated results.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Flags {
    /// A mean boson number came out negative: second-order theory is being
    /// used outside its validity window. Values are returned as-is.
    pub perturbation_breakdown: bool,
}

impl Flags {
    pub fn merge(self, other: Flags) -> Flags {
        Flags {
            perturbation_breakdown: self.perturbation_breakdown || other.perturbation_breakdown,
        }
    }

    pub fn is_empty(&self) -> bool {
        !self.perturbation_breakdown
    }
}

impl std::fmt::Display for Flags {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.perturbation_breakdown {
            write!(f, "perturbation-breakdown")
        } else {
            Ok(())
        }
    }
}

/// Mean boson numbers with the assembly diagnostic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumberExpectations {
    pub n_b: f64,
    pub n_c: f64,
    pub n_d: f64,
    /// Largest imaginary part discarded by the literal complex assembly.
    pub imag_residual: f64,
    pub flags: Flags,
}

/// One labeled summand family of a number expectation. For cross families
/// the printed summand is `value + c.c.`; for the modulus and seed families
/// `value` is real.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanTerm {
    pub label: &'static str,
    pub value: Complex64,
}

pub(crate) fn x_probe_stokes(amps: &CoherentAmplitudes) -> Complex64 {
    amps.alpha.conj() * amps.beta * amps.gamma
}

pub(crate) fn x_probe_antistokes(amps: &CoherentAmplitudes) -> Complex64 {
    amps.alpha * amps.gamma * amps.delta.conj()
}

/// `2 Re{conj(r) · x}`.
fn cross(r: Complex64, x: Complex64) -> f64 {
    2.0 * (r.conj() * x).re
}

/// Probe cross term with its pump factor, shared verbatim by every paired
/// family so the conserved combinations cancel bitwise.
pub(crate) fn probe_term(r: Complex64, x: Complex64, pump: f64) -> f64 {
    cross(r, x) * pump
}

pub(crate) const N_STOKES_GROUPS: usize = 7;
pub(crate) const N_PHONON_GROUPS: usize = 10;
pub(crate) const N_ANTISTOKES_GROUPS: usize = 7;

pub(crate) fn stokes_groups(
    amps: &CoherentAmplitudes,
    jc: &StokesCoefficients,
) -> [f64; N_STOKES_GROUPS] {
    let a1 = amps.alpha1.norm_sqr();
    let a2 = amps.alpha2.norm_sqr();
    let nb = amps.beta.norm_sqr();
    let nc = amps.gamma.norm_sqr();
    let p = amps.pump_factor();
    let c1 = amps.alpha1.conj();
    let c2 = amps.alpha2.conj();
    [
        nb,
        jc.r2.norm_sqr() * a1 * a2 * (nc + 1.0),
        cross(jc.r2, c1 * c2 * amps.beta * amps.gamma),
        cross(jc.r3, c1 * c1 * c2 * c2 * amps.beta * amps.delta),
        cross(jc.r4, amps.beta * amps.gamma * amps.gamma * amps.delta.conj()) * p,
        probe_term(jc.r6, x_probe_stokes(amps), p),
        2.0 * jc.r8.re * nb * (a1 * a2 - p * nc),
    ]
}

pub(crate) fn phonon_groups(
    amps: &CoherentAmplitudes,
    kc: &PhononCoefficients,
) -> [f64; N_PHONON_GROUPS] {
    let a1 = amps.alpha1.norm_sqr();
    let a2 = amps.alpha2.norm_sqr();
    let nb = amps.beta.norm_sqr();
    let nc = amps.gamma.norm_sqr();
    let nd = amps.delta.norm_sqr();
    let p = amps.pump_factor();
    let c1 = amps.alpha1.conj();
    let c2 = amps.alpha2.conj();
    [
        nc,
        kc.r2.norm_sqr() * a1 * a2 * (nb + 1.0),
        kc.r3.norm_sqr() * (a1 + 1.0) * (a2 + 1.0) * nd,
        cross(kc.r2, c1 * c2 * amps.beta * amps.gamma),
        cross(kc.r3, amps.alpha1 * amps.alpha2 * amps.gamma * amps.delta.conj()),
        probe_term(kc.r4, x_probe_stokes(amps), p),
        probe_term(kc.r6, x_probe_antistokes(amps), p),
        2.0 * ((kc.r2 * kc.r3.conj())
            * (amps.alpha1
                * amps.alpha1
                * amps.alpha2
                * amps.alpha2
                * amps.beta.conj()
                * amps.delta.conj()))
        .re,
        2.0 * kc.r8.re * nc * (a1 * a2 - p * nd),
        2.0 * kc.r9.re * nc * (p * nb - a1 * a2),
    ]
}

pub(crate) fn antistokes_groups(
    amps: &CoherentAmplitudes,
    lc: &AntiStokesCoefficients,
) -> [f64; N_ANTISTOKES_GROUPS] {
    let a1 = amps.alpha1.norm_sqr();
    let a2 = amps.alpha2.norm_sqr();
    let nc = amps.gamma.norm_sqr();
    let nd = amps.delta.norm_sqr();
    let p = amps.pump_factor();
    let c1 = amps.alpha1.conj();
    let c2 = amps.alpha2.conj();
    let cg = amps.gamma.conj();
    [
        nd,
        lc.r2.norm_sqr() * a1 * a2 * nc,
        cross(lc.r2, c1 * c2 * cg * amps.delta),
        cross(lc.r3, amps.beta.conj() * cg * cg * amps.delta) * p,
        cross(lc.r5, c1 * c1 * c2 * c2 * amps.beta * amps.delta),
        probe_term(lc.r6, x_probe_antistokes(amps).conj(), p),
        2.0 * lc.r8.re * nd * (p * nc + (a1 + 1.0) * (a2 + 1.0)),
    ]
}

fn fold(groups: &[f64]) -> f64 {
    groups.iter().fold(0.0, |acc, g| acc + g)
}

/// Mean Stokes photon number at the coefficients' length.
pub fn mean_stokes(amps: &CoherentAmplitudes, jc: &StokesCoefficients) -> f64 {
    fold(&stokes_groups(amps, jc))
}

/// Mean phonon number at the coefficients' length.
pub fn mean_phonon(amps: &CoherentAmplitudes, kc: &PhononCoefficients) -> f64 {
    fold(&phonon_groups(amps, kc))
}

/// Mean anti-Stokes photon number at the coefficients' length.
pub fn mean_antistokes(amps: &CoherentAmplitudes, lc: &AntiStokesCoefficients) -> f64 {
    fold(&antistokes_groups(amps, lc))
}

fn forward(factors: &[Complex64]) -> Complex64 {
    factors
        .iter()
        .fold(Complex64::new(1.0, 0.0), |acc, v| acc * v)
}

fn reverse_conj(factors: &[Complex64]) -> Complex64 {
    factors
        .iter()
        .rev()
        .fold(Complex64::new(1.0, 0.0), |acc, v| acc * v.conj())
}

struct LiteralSum {
    total: Complex64,
    terms: Vec<MeanTerm>,
}

impl LiteralSum {
    fn new() -> Self {
        LiteralSum {
            total: Complex64::new(0.0, 0.0),
            terms: Vec::new(),
        }
    }

    fn real(&mut self, label: &'static str, v: f64) {
        self.total += Complex64::new(v, 0.0);
        self.terms.push(MeanTerm {
            label,
            value: Complex64::new(v, 0.0),
        });
    }

    fn pair(&mut self, label: &'static str, factors: &[Complex64]) {
        let t = forward(factors);
        self.total += t + reverse_conj(factors);
        self.terms.push(MeanTerm { label, value: t });
    }
}

fn stokes_literal(amps: &CoherentAmplitudes, jc: &StokesCoefficients) -> LiteralSum {
    let mut s = LiteralSum::new();
    let a1 = amps.alpha1.norm_sqr();
    let a2 = amps.alpha2.norm_sqr();
    let nb = amps.beta.norm_sqr();
    let nc = amps.gamma.norm_sqr();
    let c1 = amps.alpha1.conj();
    let c2 = amps.alpha2.conj();
    let j1 = jc.j1();
    s.real("|beta|^2", nb);
    s.real("|j2|^2", jc.j2().norm_sqr() * a1 * a2 * (nc + 1.0));
    s.pair("j1 j2*", &[j1, jc.j2().conj(), c1, c2, amps.beta, amps.gamma]);
    s.pair("j1 j3*", &[j1, jc.j3().conj(), c1, c1, c2, c2, amps.beta, amps.delta]);
    let bgg = [amps.beta, amps.gamma, amps.gamma, amps.delta.conj()];
    s.pair("j1 j4*", &[j1, jc.j4().conj(), Complex64::new(a1 + 1.0, 0.0), bgg[0], bgg[1], bgg[2], bgg[3]]);
    s.pair("j1 j5*", &[j1, jc.j5().conj(), Complex64::new(a2, 0.0), bgg[0], bgg[1], bgg[2], bgg[3]]);
    let abg = [amps.alpha.conj(), amps.beta, amps.gamma];
    s.pair("j1 j6*", &[j1, jc.j6().conj(), Complex64::new(a1 + 1.0, 0.0), abg[0], abg[1], abg[2]]);
    s.pair("j1 j7*", &[j1, jc.j7().conj(), Complex64::new(a2, 0.0), abg[0], abg[1], abg[2]]);
    s.pair("j1 j8*", &[j1, jc.j8().conj(), Complex64::new(a1 * a2 * nb, 0.0)]);
    s.pair("j1 j9*", &[j1, jc.j9().conj(), Complex64::new((a1 + 1.0) * nb * nc, 0.0)]);
    s.pair("j1 j10*", &[j1, jc.j10().conj(), Complex64::new(a2 * nb * nc, 0.0)]);
    s
}

fn phonon_literal(amps: &CoherentAmplitudes, kc: &PhononCoefficients) -> LiteralSum {
    let mut s = LiteralSum::new();
    let a1 = amps.alpha1.norm_sqr();
    let a2 = amps.alpha2.norm_sqr();
    let nb = amps.beta.norm_sqr();
    let nc = amps.gamma.norm_sqr();
    let nd = amps.delta.norm_sqr();
    let c1 = amps.alpha1.conj();
    let c2 = amps.alpha2.conj();
    let k1 = kc.k1();
    s.real("|gamma|^2", nc);
    s.real("|k2|^2", kc.k2().norm_sqr() * a1 * a2 * (nb + 1.0));
    s.real("|k3|^2", kc.k3().norm_sqr() * (a1 + 1.0) * (a2 + 1.0) * nd);
    s.pair("k1 k2*", &[k1, kc.k2().conj(), c1, c2, amps.beta, amps.gamma]);
    s.pair("k1 k3*", &[k1, kc.k3().conj(), amps.alpha1, amps.alpha2, amps.gamma, amps.delta.conj()]);
    let abg = [amps.alpha.conj(), amps.beta, amps.gamma];
    s.pair("k1 k4*", &[k1, kc.k4().conj(), Complex64::new(a1 + 1.0, 0.0), abg[0], abg[1], abg[2]]);
    s.pair("k1 k5*", &[k1, kc.k5().conj(), Complex64::new(a2, 0.0), abg[0], abg[1], abg[2]]);
    let agd = [amps.alpha, amps.gamma, amps.delta.conj()];
    s.pair("k1 k6*", &[k1, kc.k6().conj(), Complex64::new(a1, 0.0), agd[0], agd[1], agd[2]]);
    s.pair("k1 k7*", &[k1, kc.k7().conj(), Complex64::new(a2 + 1.0, 0.0), agd[0], agd[1], agd[2]]);
    s.pair(
        "k2 k3*",
        &[
            kc.k2(),
            kc.k3().conj(),
            amps.alpha1,
            amps.alpha1,
            amps.alpha2,
            amps.alpha2,
            amps.beta.conj(),
            amps.delta.conj(),
        ],
    );
    s.pair("k1 k8*", &[k1, kc.k8().conj(), Complex64::new(a1 * a2 * nc, 0.0)]);
    s.pair("k1 k9*", &[k1, kc.k9().conj(), Complex64::new((a1 + 1.0) * nb * nc, 0.0)]);
    s.pair("k1 k10*", &[k1, kc.k10().conj(), Complex64::new(a2 * nb * nc, 0.0)]);
    s.pair("k1 k11*", &[k1, kc.k11().conj(), Complex64::new(a1 * nc * nd, 0.0)]);
    s.pair("k1 k12*", &[k1, kc.k12().conj(), Complex64::new((a2 + 1.0) * nc * nd, 0.0)]);
    s.pair("k1 k13*", &[k1, kc.k13().conj(), Complex64::new(a1 * a2 * nc, 0.0)]);
    s
}

fn antistokes_literal(amps: &CoherentAmplitudes, lc: &AntiStokesCoefficients) -> LiteralSum {
    let mut s = LiteralSum::new();
    let a1 = amps.alpha1.norm_sqr();
    let a2 = amps.alpha2.norm_sqr();
    let nc = amps.gamma.norm_sqr();
    let nd = amps.delta.norm_sqr();
    let c1 = amps.alpha1.conj();
    let c2 = amps.alpha2.conj();
    let cg = amps.gamma.conj();
    let l1 = lc.l1();
    s.real("|delta|^2", nd);
    s.real("|l2|^2", lc.l2().norm_sqr() * a1 * a2 * nc);
    s.pair("l1 l2*", &[l1, lc.l2().conj(), c1, c2, cg, amps.delta]);
    let bgd = [amps.beta.conj(), cg, cg, amps.delta];
    s.pair("l1 l3*", &[l1, lc.l3().conj(), Complex64::new(a1 + 1.0, 0.0), bgd[0], bgd[1], bgd[2], bgd[3]]);
    s.pair("l1 l4*", &[l1, lc.l4().conj(), Complex64::new(a2, 0.0), bgd[0], bgd[1], bgd[2], bgd[3]]);
    s.pair("l1 l5*", &[l1, lc.l5().conj(), c1, c1, c2, c2, amps.beta, amps.delta]);
    let agd = [amps.alpha.conj(), cg, amps.delta];
    s.pair("l1 l6*", &[l1, lc.l6().conj(), Complex64::new(a1 + 1.0, 0.0), agd[0], agd[1], agd[2]]);
    s.pair("l1 l7*", &[l1, lc.l7().conj(), Complex64::new(a2, 0.0), agd[0], agd[1], agd[2]]);
    s.pair("l1 l8*", &[l1, lc.l8().conj(), Complex64::new((a1 + 1.0) * nc * nd, 0.0)]);
    s.pair("l1 l9*", &[l1, lc.l9().conj(), Complex64::new(a2 * nc * nd, 0.0)]);
    s.pair("l1 l10*", &[l1, lc.l10().conj(), Complex64::new((a1 + 1.0) * (a2 + 1.0) * nd, 0.0)]);
    s
}

/// Labeled summand families of the Stokes expectation.
pub fn stokes_terms(amps: &CoherentAmplitudes, jc: &StokesCoefficients) -> Vec<MeanTerm> {
    stokes_literal(amps, jc).terms
}

/// Labeled summand families of the phonon expectation.
pub fn phonon_terms(amps: &CoherentAmplitudes, kc: &PhononCoefficients) -> Vec<MeanTerm> {
    phonon_literal(amps, kc).terms
}

/// Labeled summand families of the anti-Stokes expectation.
pub fn antistokes_terms(amps: &CoherentAmplitudes, lc: &AntiStokesCoefficients) -> Vec<MeanTerm> {
    antistokes_literal(amps, lc).terms
}

/// All three means plus the literal-assembly residual.
pub fn number_expectations(
    amps: &CoherentAmplitudes,
    jc: &StokesCoefficients,
    kc: &PhononCoefficients,
    lc: &AntiStokesCoefficients,
) -> NumberExpectations {
    let n_b = mean_stokes(amps, jc);
    let n_c = mean_phonon(amps, kc);
    let n_d = mean_antistokes(amps, lc);
    let resid = stokes_literal(amps, jc)
        .total
        .im
        .abs()
        .max(phonon_literal(amps, kc).total.im.abs())
        .max(antistokes_literal(amps, lc).total.im.abs());
    NumberExpectations {
        n_b,
        n_c,
        n_d,
        imag_residual: resid,
        flags: Flags {
            perturbation_breakdown: n_b < 0.0 || n_c < 0.0 || n_d < 0.0,
        },
    }
}

/// Real value of the literal complex assembly (test hook for the grouped
/// route).
pub fn literal_means(
    amps: &CoherentAmplitudes,
    jc: &StokesCoefficients,
    kc: &PhononCoefficients,
    lc: &AntiStokesCoefficients,
) -> [f64; 3] {
    [
        stokes_literal(amps, jc).total.re,
        phonon_literal(amps, kc).total.re,
        antistokes_literal(amps, lc).total.re,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{antistokes_coeffs, phonon_coeffs, stokes_coeffs};
    use crate::types::{Couplings, Frequencies};

    fn setup(
        z: f64,
    ) -> (
        Couplings,
        StokesCoefficients,
        PhononCoefficients,
        AntiStokesCoefficients,
    ) {
        let c = Couplings {
            g: 1.0,
            chi: 10.0,
            gamma: 100.0,
        };
        let f = Frequencies::from_detunings(0.01, 0.01, 0.001);
        let d = f.detunings();
        (
            c,
            stokes_coeffs(&c, &d, f.omega_b, z),
            phonon_coeffs(&c, &d, f.omega_c, z),
            antistokes_coeffs(&c, &d, f.omega_d, z),
        )
    }

    #[test]
    fn zero_length_returns_seeds() {
        let amps = CoherentAmplitudes::from_magnitudes([11.0, 10.0, 9.5, 8.0, 0.01, 1.0]);
        let (_, jc, kc, lc) = setup(0.0);
        assert_eq!(mean_stokes(&amps, &jc), amps.beta.norm_sqr());
        assert_eq!(mean_phonon(&amps, &kc), amps.gamma.norm_sqr());
        assert_eq!(mean_antistokes(&amps, &lc), amps.delta.norm_sqr());
    }

    #[test]
    fn spontaneous_survivors() {
        let amps = CoherentAmplitudes::from_magnitudes([11.0, 10.0, 9.5, 0.0, 0.0, 0.0]);
        let (_, jc, kc, lc) = setup(0.08);
        let a12 = 100.0 * 90.25;
        let nb = mean_stokes(&amps, &jc);
        assert!((nb - jc.r2.norm_sqr() * a12).abs() <= 1e-12 * nb.abs().max(1.0));
        let ncm = mean_phonon(&amps, &kc);
        assert!((ncm - kc.r2.norm_sqr() * a12).abs() <= 1e-12 * ncm.abs().max(1.0));
        assert_eq!(mean_antistokes(&amps, &lc), 0.0);
    }

    #[test]
    fn literal_and_grouped_routes_agree() {
        let amps = CoherentAmplitudes {
            alpha: Complex64::new(2.1, 0.7),
            alpha1: Complex64::new(1.4, -0.2),
            alpha2: Complex64::new(0.9, 0.33),
            beta: Complex64::new(-0.8, 0.5),
            gamma: Complex64::new(0.35, -0.6),
            delta: Complex64::new(0.27, 0.9),
        };
        let (_, jc, kc, lc) = setup(0.37);
        let lit = literal_means(&amps, &jc, &kc, &lc);
        let n = number_expectations(&amps, &jc, &kc, &lc);
        for (a, b) in [(lit[0], n.n_b), (lit[1], n.n_c), (lit[2], n.n_d)] {
            assert!((a - b).abs() <= 1e-11 * b.abs().max(1.0));
        }
        assert!(n.imag_residual <= 1e-10 * n.n_b.abs().max(1.0));
    }

    #[test]
    fn term_accessors_cover_all_families() {
        let amps = CoherentAmplitudes::from_magnitudes([1.0, 1.0, 1.0, 1.0, 1.0, 1.0]);
        let (_, jc, kc, lc) = setup(0.2);
        assert_eq!(stokes_terms(&amps, &jc).len(), 11);
        assert_eq!(phonon_terms(&amps, &kc).len(), 16);
        assert_eq!(antistokes_terms(&amps, &lc).len(), 11);
    }
}
