//! Adaptive Lanczos propagator: ψ(z) = exp(+izG)ψ(0) on the truncated
//! basis. The sign convention is fixed by the first-order calibration
//! against the probe equation of motion d⟨a_p⟩/dz = i(ω_p⟨a_p⟩ + Γ⟨a₁a₂⟩).

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::generator::GeneratorMatrix;
use super::state::TruncatedState;
use super::FockConfig;
use crate::error::{Error, Result};
use crate::types::CouplerConfig;
use crate::zeno::{classify, default_tol_class, scaling_coefficients, Method, ZenoResult};

const MAX_KRYLOV: usize = 30;
const MAX_STEPS: usize = 20_000;

fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter()
        .zip(b.iter())
        .fold(Complex64::new(0.0, 0.0), |acc, (x, y)| acc + x.conj() * y)
}

fn norm(a: &[Complex64]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

struct Krylov {
    vectors: Vec<Vec<Complex64>>,
    alphas: Vec<f64>,
    betas: Vec<f64>,
    beta_next: f64,
    happy: bool,
}

fn lanczos(gen: &GeneratorMatrix, start: &[Complex64], m_max: usize) -> Krylov {
    let beta0 = norm(start);
    let v0: Vec<Complex64> = start.iter().map(|x| x / beta0).collect();
    let mut vectors = vec![v0];
    let mut alphas: Vec<f64> = Vec::new();
    let mut betas: Vec<f64> = Vec::new();
    let mut beta_next = 0.0;
    let mut happy = false;
    let mut scale = 0.0f64;

    for j in 0..m_max {
        let mut w = gen.matvec(&vectors[j]);
        let alpha = dot(&vectors[j], &w).re;
        alphas.push(alpha);
        scale = scale.max(alpha.abs());
        for (wi, vi) in w.iter_mut().zip(vectors[j].iter()) {
            *wi -= alpha * vi;
        }
        if j > 0 {
            let b = betas[j - 1];
            for (wi, vi) in w.iter_mut().zip(vectors[j - 1].iter()) {
                *wi -= b * vi;
            }
        }
        // full reorthogonalization; the subspace is small
        for v in &vectors {
            let c = dot(v, &w);
            for (wi, vi) in w.iter_mut().zip(v.iter()) {
                *wi -= c * vi;
            }
        }
        let beta = norm(&w);
        scale = scale.max(beta);
        if beta <= 1e-13 * scale.max(1.0) {
            beta_next = beta;
            happy = true;
            break;
        }
        if j + 1 == m_max {
            beta_next = beta;
            break;
        }
        betas.push(beta);
        for wi in &mut w {
            *wi /= beta;
        }
        vectors.push(w);
    }

    Krylov {
        vectors,
        alphas,
        betas,
        beta_next,
        happy,
    }
}

struct Spectral {
    q: DMatrix<f64>,
    lambda: Vec<f64>,
}

impl Spectral {
    fn new(alphas: &[f64], betas: &[f64]) -> Spectral {
        let m = alphas.len();
        let t = DMatrix::from_fn(m, m, |r, c| {
            if r == c {
                alphas[r]
            } else if r + 1 == c {
                betas[r]
            } else if c + 1 == r {
                betas[c]
            } else {
                0.0
            }
        });
        let eig = t.symmetric_eigen();
        Spectral {
            q: eig.eigenvectors,
            lambda: eig.eigenvalues.iter().copied().collect(),
        }
    }

    /// u(s) = exp(+isT) e₁.
    fn propagate_e1(&self, s: f64) -> Vec<Complex64> {
        let m = self.lambda.len();
        let mut u = vec![Complex64::new(0.0, 0.0); m];
        for j in 0..m {
            let w = Complex64::from_polar(self.q[(0, j)], s * self.lambda[j]);
            for (k, uk) in u.iter_mut().enumerate() {
                *uk += self.q[(k, j)] * w;
            }
        }
        u
    }
}

/// Propagate a state by length z under the generator; the error budget is
/// `fock.rtol` per unit of total length, and boundary-layer occupation is
/// checked after every accepted step.
pub fn evolve(
    state: &TruncatedState,
    gen: &GeneratorMatrix,
    z: f64,
    fock: &FockConfig,
) -> Result<TruncatedState> {
    assert_eq!(state.dim(), gen.dim(), "state/generator dimension mismatch");
    if z == 0.0 {
        return Ok(state.clone());
    }
    let mut psi = state.amplitudes.clone();
    let mut remaining = z;
    let mut steps = 0usize;

    while remaining > 0.0 {
        steps += 1;
        if steps > MAX_STEPS {
            return Err(Error::StepFailure {
                z: z - remaining,
                detail: format!("step budget of {} exhausted", MAX_STEPS),
            });
        }
        let kry = lanczos(gen, &psi, MAX_KRYLOV);
        let spectral = Spectral::new(&kry.alphas, &kry.betas);
        let beta0 = norm(&psi);
        let m = kry.alphas.len();
        let mut h = remaining;
        let u = loop {
            let u_full = spectral.propagate_e1(h);
            if kry.happy {
                break u_full;
            }
            let u_half = spectral.propagate_e1(h / 2.0);
            let rho0 = if m == 1 { kry.beta_next } else { 0.0 };
            let rho_half = kry.beta_next * u_half[m - 1].norm();
            let rho_full = kry.beta_next * u_full[m - 1].norm();
            let err = beta0 * h * (rho0 + 4.0 * rho_half + rho_full) / 6.0;
            if err <= fock.rtol * beta0 * (h / z) {
                break u_full;
            }
            h *= 0.5;
            if h < z * 1e-15 {
                return Err(Error::StepFailure {
                    z: z - remaining,
                    detail: format!("step size underflow (local error {:.3e})", err),
                });
            }
        };

        let mut next = vec![Complex64::new(0.0, 0.0); psi.len()];
        for (k, v) in kry.vectors.iter().enumerate() {
            let c = beta0 * u[k];
            for (ni, vi) in next.iter_mut().zip(v.iter()) {
                *ni += c * vi;
            }
        }
        psi = next;
        remaining -= h;

        let boundary: f64 = psi
            .iter()
            .enumerate()
            .filter(|(i, _)| gen.basis().is_boundary(*i))
            .map(|(_, a)| a.norm_sqr())
            .sum();
        if boundary > fock.leakage_tol {
            return Err(Error::LeakageExceeded {
                leakage: boundary,
                tol: fock.leakage_tol,
                z: z - remaining,
            });
        }
    }

    Ok(state.with_amplitudes(psi))
}

/// Exact mean boson numbers (Stokes, phonon, anti-Stokes) at length z.
pub fn oracle_number_expectations(
    cfg: &CouplerConfig,
    fock: &FockConfig,
    z: f64,
) -> Result<[f64; 3]> {
    let state = super::coherent_state_truncated(&cfg.amplitudes, fock)?;
    let gen = build(cfg, fock)?;
    let out = evolve(&state, &gen, z, fock)?;
    Ok([
        out.expectation_number(3),
        out.expectation_number(4),
        out.expectation_number(5),
    ])
}

fn build(cfg: &CouplerConfig, fock: &FockConfig) -> Result<GeneratorMatrix> {
    super::build_generator(&cfg.frequencies, &cfg.couplings, fock)
}

/// Zeno parameters by two exact evolutions (probe coupling as given and
/// Γ = 0) and differencing the number expectations.
pub fn oracle_zeno(cfg: &CouplerConfig, fock: &FockConfig, z: f64) -> Result<ZenoResult> {
    let state = super::coherent_state_truncated(&cfg.amplitudes, fock)?;
    let gen_on = build(cfg, fock)?;
    let mut cfg_off = *cfg;
    cfg_off.couplings.gamma = 0.0;
    let gen_off = build(&cfg_off, fock)?;

    let on = evolve(&state, &gen_on, z, fock)?;
    let off = evolve(&state, &gen_off, z, fock)?;

    let z_b = on.expectation_number(3) - off.expectation_number(3);
    let z_c = on.expectation_number(4) - off.expectation_number(4);
    let z_d = on.expectation_number(5) - off.expectation_number(5);
    let tol = default_tol_class(&scaling_coefficients(&cfg.couplings, &cfg.amplitudes), z);
    Ok(ZenoResult {
        z_b,
        z_c,
        z_d,
        class_b: classify(z_b, tol),
        class_c: classify(z_c, tol),
        class_d: classify(z_d, tol),
        method: Method::Oracle,
        flags: Default::default(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{CoherentAmplitudes, Couplings, Frequencies};

    fn resonant_freqs() -> Frequencies {
        Frequencies {
            omega_p: 2.0,
            omega_a1: 1.0,
            omega_a2: 1.0,
            omega_b: 1.5,
            omega_c: 0.5,
            omega_d: 2.5,
        }
    }

    #[test]
    fn free_evolution_conserves_numbers() {
        let amps = CoherentAmplitudes::from_magnitudes([0.3, 0.25, 0.2, 0.3, 0.2, 0.1]);
        let fock = FockConfig::new([3; 6]).with_leakage_tol(1e-3);
        let c = Couplings {
            g: 0.0,
            chi: 0.0,
            gamma: 0.0,
        };
        let gen = build_generator_for_test(&c, &fock);
        let st = super::super::coherent_state_truncated(&amps, &fock).unwrap();
        let out = evolve(&st, &gen, 0.8, &fock).unwrap();
        for m in 0..6 {
            assert!((out.expectation_number(m) - st.expectation_number(m)).abs() < 1e-10);
        }
        assert!((out.norm_sqr() - 1.0).abs() < 1e-10);
    }

    fn build_generator_for_test(c: &Couplings, fock: &FockConfig) -> GeneratorMatrix {
        super::super::build_generator(&resonant_freqs(), c, fock).unwrap()
    }

    #[test]
    fn unitarity_with_interactions() {
        let amps = CoherentAmplitudes::from_magnitudes([0.4, 0.4, 0.35, 0.3, 0.2, 0.2]);
        let fock = FockConfig::new([4; 6]).with_leakage_tol(1e-3);
        let c = Couplings {
            g: 1.0,
            chi: 1.0,
            gamma: 1.0,
        };
        let gen = build_generator_for_test(&c, &fock);
        let st = super::super::coherent_state_truncated(&amps, &fock).unwrap();
        let out = evolve(&st, &gen, 0.05, &fock).unwrap();
        assert!((out.norm_sqr() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn first_order_probe_calibration() {
        // d⟨a_p⟩/dz = i(ω_p⟨a_p⟩ + Γ⟨a1 a2⟩) at z = 0, to first order in h
        let amps = CoherentAmplitudes::from_magnitudes([0.3, 0.3, 0.25, 0.2, 0.15, 0.1]);
        let fock = FockConfig::new([4; 6]).with_leakage_tol(1e-3).with_rtol(1e-12);
        let c = Couplings {
            g: 0.8,
            chi: 0.6,
            gamma: 1.2,
        };
        let gen = build_generator_for_test(&c, &fock);
        let st = super::super::coherent_state_truncated(&amps, &fock).unwrap();
        let ap0 = st.expectation_lowering([1, 0, 0, 0, 0, 0]);
        let pair0 = st.expectation_lowering([0, 1, 1, 0, 0, 0]);
        let rhs = Complex64::new(0.0, 1.0) * (2.0 * ap0 + 1.2 * pair0);

        let mut prev_err = f64::INFINITY;
        for &h in &[1e-3, 5e-4, 2.5e-4] {
            let out = evolve(&st, &gen, h, &fock).unwrap();
            let ap_h = out.expectation_lowering([1, 0, 0, 0, 0, 0]);
            let fd = (ap_h - ap0) / h;
            let err = (fd - rhs).norm();
            assert!(err < prev_err || err < 1e-10);
            prev_err = err;
        }
        assert!(prev_err < 2.5e-4 * 10.0 * rhs.norm());
    }

    #[test]
    fn leakage_detected_when_dynamics_hits_boundary() {
        // strong coupling and tiny cutoffs force occupation onto the edge
        let amps = CoherentAmplitudes::from_magnitudes([1.2, 1.2, 1.2, 0.0, 0.0, 0.0]);
        let fock = FockConfig::new([1, 1, 1, 1, 1, 1]).with_leakage_tol(1e-9);
        let c = Couplings {
            g: 5.0,
            chi: 5.0,
            gamma: 5.0,
        };
        let gen = build_generator_for_test(&c, &fock);
        let st = super::super::coherent_state_truncated(&amps, &fock);
        // the initial product state itself may violate the predicted-tail
        // gate; either failure mode is the guarded behavior
        match st {
            Err(Error::ExcessiveTruncation { .. }) => {}
            Ok(st) => match evolve(&st, &gen, 2.0, &fock) {
                Err(Error::LeakageExceeded { .. }) => {}
                other => panic!("expected leakage failure, got {:?}", other.map(|_| ())),
            },
            Err(e) => panic!("unexpected error {e}"),
        }
    }

    #[test]
    fn generator_expectation_matches_coherent_formula() {
        let amps = CoherentAmplitudes::from_magnitudes([0.2, 0.25, 0.15, 0.1, 0.12, 0.08]);
        let fock = FockConfig::new([5; 6]).with_leakage_tol(1e-6);
        let c = Couplings {
            g: 0.9,
            chi: 0.7,
            gamma: 1.1,
        };
        let gen = build_generator_for_test(&c, &fock);
        let st = super::super::coherent_state_truncated(&amps, &fock).unwrap();
        let f = resonant_freqs();
        let a = amps.as_array();
        let mut expect = f.omega_p * a[0].norm_sqr()
            + f.omega_a1 * a[1].norm_sqr()
            + f.omega_a2 * a[2].norm_sqr()
            + f.omega_b * a[3].norm_sqr()
            + f.omega_c * a[4].norm_sqr()
            + f.omega_d * a[5].norm_sqr();
        expect += 2.0
            * (c.g * (a[1] * a[2] * a[3].conj() * a[4].conj()).re
                + c.chi * (a[1] * a[2] * a[4] * a[5].conj()).re
                + c.gamma * (a[0] * a[1].conj() * a[2].conj()).re);
        let got = gen.expectation(&st.amplitudes);
        assert!((got - expect).abs() < 1e-6);
    }
}
