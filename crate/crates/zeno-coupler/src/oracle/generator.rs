//! Sparse momentum-operator matrix on the truncated basis.
//!
//! The matrix is real symmetric: the diagonal carries the free energies
//! Σ ω_m n_m, and each interaction term contributes an off-diagonal pair
//! with the standard bosonic √-factors. Hermiticity holds by construction
//! because each undirected transition is inserted as a conjugate pair, and
//! transitions that would cross a cutoff are dropped on both sides.

use num_complex::Complex64;
use rayon::prelude::*;

use super::basis::FockBasis;
use super::FockConfig;
use crate::error::Result;
use crate::types::{Couplings, Frequencies};

#[derive(Debug, Clone)]
pub struct GeneratorMatrix {
    basis: FockBasis,
    row_ptr: Vec<usize>,
    col_idx: Vec<usize>,
    vals: Vec<f64>,
    pub frequencies: Frequencies,
    pub couplings: Couplings,
}

pub fn build_generator(
    freqs: &Frequencies,
    couplings: &Couplings,
    fock: &FockConfig,
) -> Result<GeneratorMatrix> {
    fock.validate()?;
    let basis = FockBasis::new(fock.cutoffs);
    let dim = basis.dim();
    let cut = basis.cutoffs();
    let (s0, s1, s2, s3, s4, s5) = (
        basis.stride(0),
        basis.stride(1),
        basis.stride(2),
        basis.stride(3),
        basis.stride(4),
        basis.stride(5),
    );

    let mut triplets: Vec<(usize, usize, f64)> = Vec::with_capacity(dim * 7);
    for i in 0..dim {
        let n = basis.occupations(i);
        let diag = freqs.omega_p * n[0] as f64
            + freqs.omega_a1 * n[1] as f64
            + freqs.omega_a2 * n[2] as f64
            + freqs.omega_b * n[3] as f64
            + freqs.omega_c * n[4] as f64
            + freqs.omega_d * n[5] as f64;
        triplets.push((i, i, diag));

        // g · a1 a2 b† c†
        if couplings.g != 0.0 && n[1] >= 1 && n[2] >= 1 && n[3] < cut[3] && n[4] < cut[4] {
            let j = i - s1 - s2 + s3 + s4;
            let amp = couplings.g
                * ((n[1] as f64) * (n[2] as f64) * (n[3] as f64 + 1.0) * (n[4] as f64 + 1.0))
                    .sqrt();
            triplets.push((i, j, amp));
            triplets.push((j, i, amp));
        }
        // χ · a1 a2 c d†
        if couplings.chi != 0.0 && n[1] >= 1 && n[2] >= 1 && n[4] >= 1 && n[5] < cut[5] {
            let j = i - s1 - s2 - s4 + s5;
            let amp = couplings.chi
                * ((n[1] as f64) * (n[2] as f64) * (n[4] as f64) * (n[5] as f64 + 1.0)).sqrt();
            triplets.push((i, j, amp));
            triplets.push((j, i, amp));
        }
        // Γ · a_p a1† a2†
        if couplings.gamma != 0.0 && n[0] >= 1 && n[1] < cut[1] && n[2] < cut[2] {
            let j = i - s0 + s1 + s2;
            let amp = couplings.gamma
                * ((n[0] as f64) * (n[1] as f64 + 1.0) * (n[2] as f64 + 1.0)).sqrt();
            triplets.push((i, j, amp));
            triplets.push((j, i, amp));
        }
    }

    triplets.sort_unstable_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    let mut row_ptr = vec![0usize; dim + 1];
    let mut col_idx = Vec::with_capacity(triplets.len());
    let mut vals: Vec<f64> = Vec::with_capacity(triplets.len());
    let mut prev: Option<(usize, usize)> = None;
    for (r, c, v) in triplets {
        if prev == Some((r, c)) {
            *vals.last_mut().unwrap() += v;
        } else {
            col_idx.push(c);
            vals.push(v);
            row_ptr[r + 1] += 1;
            prev = Some((r, c));
        }
    }
    for r in 0..dim {
        row_ptr[r + 1] += row_ptr[r];
    }

    Ok(GeneratorMatrix {
        basis,
        row_ptr,
        col_idx,
        vals,
        frequencies: *freqs,
        couplings: *couplings,
    })
}

impl GeneratorMatrix {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn basis(&self) -> &FockBasis {
        &self.basis
    }

    pub fn nnz(&self) -> usize {
        self.vals.len()
    }

    /// y = G x.
    pub fn matvec_into(&self, x: &[Complex64], y: &mut [Complex64]) {
        assert_eq!(x.len(), self.dim());
        assert_eq!(y.len(), self.dim());
        y.par_iter_mut().enumerate().for_each(|(i, yi)| {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in self.row_ptr[i]..self.row_ptr[i + 1] {
                acc += self.vals[k] * x[self.col_idx[k]];
            }
            *yi = acc;
        });
    }

    pub fn matvec(&self, x: &[Complex64]) -> Vec<Complex64> {
        let mut y = vec![Complex64::new(0.0, 0.0); self.dim()];
        self.matvec_into(x, &mut y);
        y
    }

    pub fn entry(&self, row: usize, col: usize) -> f64 {
        for k in self.row_ptr[row]..self.row_ptr[row + 1] {
            if self.col_idx[k] == col {
                return self.vals[k];
            }
        }
        0.0
    }

    /// max |G - Gᵀ| over all stored entries (zero by construction).
    pub fn asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim() {
            for k in self.row_ptr[i]..self.row_ptr[i + 1] {
                let j = self.col_idx[k];
                worst = worst.max((self.vals[k] - self.entry(j, i)).abs());
            }
        }
        worst
    }

    /// ⟨x|G|x⟩ (real part; exact for Hermitian G).
    pub fn expectation(&self, x: &[Complex64]) -> f64 {
        let gx = self.matvec(x);
        x.iter()
            .zip(gx.iter())
            .map(|(a, b)| (a.conj() * b).re)
            .sum()
    }
}
