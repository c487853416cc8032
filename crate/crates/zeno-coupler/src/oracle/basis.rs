//! Product Fock basis with lexicographic mode order (p, a1, a2, b, c, d);
//! the probe index varies slowest.

/// The six modes in basis order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Probe = 0,
    Pump1 = 1,
    Pump2 = 2,
    Stokes = 3,
    Phonon = 4,
    AntiStokes = 5,
}

impl Mode {
    pub const ALL: [Mode; 6] = [
        Mode::Probe,
        Mode::Pump1,
        Mode::Pump2,
        Mode::Stokes,
        Mode::Phonon,
        Mode::AntiStokes,
    ];

    pub fn index(self) -> usize {
        self as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FockBasis {
    cutoffs: [u32; 6],
    dims: [usize; 6],
    strides: [usize; 6],
    dim: usize,
}

impl FockBasis {
    pub fn new(cutoffs: [u32; 6]) -> FockBasis {
        let mut dims = [0usize; 6];
        for (d, &c) in dims.iter_mut().zip(cutoffs.iter()) {
            *d = c as usize + 1;
        }
        let mut strides = [1usize; 6];
        for m in (0..5).rev() {
            strides[m] = strides[m + 1] * dims[m + 1];
        }
        FockBasis {
            cutoffs,
            dims,
            strides,
            dim: strides[0] * dims[0],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cutoffs(&self) -> [u32; 6] {
        self.cutoffs
    }

    pub fn stride(&self, mode: usize) -> usize {
        self.strides[mode]
    }

    pub fn index(&self, occ: [u32; 6]) -> usize {
        occ.iter()
            .zip(self.strides.iter())
            .map(|(&n, &s)| n as usize * s)
            .sum()
    }

    pub fn occupations(&self, idx: usize) -> [u32; 6] {
        let mut occ = [0u32; 6];
        for m in 0..6 {
            occ[m] = ((idx / self.strides[m]) % self.dims[m]) as u32;
        }
        occ
    }

    pub fn occupation(&self, idx: usize, mode: usize) -> u32 {
        ((idx / self.strides[mode]) % self.dims[mode]) as u32
    }

    /// A basis state sits on the truncation boundary if any mode occupies
    /// its top layer.
    pub fn is_boundary(&self, idx: usize) -> bool {
        (0..6).any(|m| self.occupation(idx, m) == self.cutoffs[m])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_round_trip_lexicographic() {
        let b = FockBasis::new([1, 2, 1, 3, 2, 1]);
        assert_eq!(b.dim(), 2 * 3 * 2 * 4 * 3 * 2);
        // anti-Stokes is the fastest index
        assert_eq!(b.index([0, 0, 0, 0, 0, 1]), 1);
        for idx in 0..b.dim() {
            assert_eq!(b.index(b.occupations(idx)), idx);
        }
    }

    #[test]
    fn boundary_detection() {
        let b = FockBasis::new([2, 2, 2, 2, 2, 2]);
        assert!(!b.is_boundary(b.index([1, 1, 1, 1, 1, 1])));
        assert!(b.is_boundary(b.index([2, 0, 0, 0, 0, 0])));
        assert!(b.is_boundary(b.index([0, 0, 0, 0, 0, 2])));
    }
}
