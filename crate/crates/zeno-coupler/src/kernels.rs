//! Singularity-stable oscillatory kernels.
//!
//! Every coefficient of the second-order solution, and both closed-form Zeno
//! responses, reduce to three kernel families:
//!
//! * [`kernel_k1`] — `(1 − e^{−izx})/x`, the single-exponential response,
//!   limit `iz` at `x → 0`;
//! * [`kernel_k2`] — the catalogued three-exponential responses; every
//!   catalog entry is `±T(±u, ±v, z)` for the double integral
//!   `T(u, v, z) = ∫₀ᶻ ds e^{ius} ∫₀ˢ dr e^{ivr}`, limit `z²/2`;
//! * [`kernel_k3`] — `(1 − e^{∓izx} ∓ ixz)/x²`, the secular-subtracted
//!   response, limit `z²/2` for either sign.
//!
//! Near a removable singularity each kernel switches to a truncated power
//! series; away from it, `T` is evaluated as a divided difference of
//! `E(y) = (e^{iy} − 1)/(iy)` in whichever of its two equivalent
//! representations divides by the larger frequency combination, so no
//! catastrophic cancellation survives anywhere on the real (u, v, z) space.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Series switch: arguments with `|arg · z|` below this use the series branch.
pub const EPS_SING: f64 = 1e-3;

/// `K3` subtracts to second order, so its closed form loses ~`ε/(xz)²`;
/// its series region is widened until that loss is below 1e-12.
const EPS_SING_K3: f64 = 3e-2;

fn exp_i(y: f64) -> Complex64 {
    Complex64::new(y.cos(), y.sin())
}

/// `E(y) = (e^{iy} − 1)/(iy)` with `E(0) = 1`.
fn phi1(y: f64) -> Complex64 {
    if y.abs() < EPS_SING {
        // sum_{n>=0} (iy)^n / (n+1)!
        let iy = Complex64::new(0.0, y);
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = term;
        for n in 1..16 {
            term = term * iy / (n as f64 + 1.0);
            sum += term;
            if term.norm_sqr() < 1e-36 * sum.norm_sqr() {
                break;
            }
        }
        sum
    } else {
        (exp_i(y) - 1.0) / Complex64::new(0.0, y)
    }
}

/// sinc(x) = sin(x)/x with sinc(0) = 1.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}

/// `(1 − e^{−izx})/x`; Maclaurin series in `xz` for `|xz| < EPS_SING`.
pub fn kernel_k1(x: f64, z: f64) -> Complex64 {
    let y = x * z;
    if y.abs() < EPS_SING {
        Complex64::new(0.0, z) * phi1(-y)
    } else {
        (1.0 - exp_i(-y)) / x
    }
}

/// Exponent-sign variant of [`kernel_k3`]: `Minus` is the
/// `(1 − e^{−izx} − ixz)/x²` pattern, `Plus` its conjugate pattern
/// `(1 − e^{+izx} + ixz)/x²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum K3Sign {
    Minus,
    Plus,
}

/// `(1 − e^{∓izx} ∓ ixz)/x²` with series fallback; limit `z²/2` at `x → 0`.
pub fn kernel_k3(x: f64, z: f64, sign: K3Sign) -> Complex64 {
    let s = match sign {
        K3Sign::Minus => 1.0,
        K3Sign::Plus => -1.0,
    };
    let y = x * z;
    if y.abs() < EPS_SING_K3 {
        // z^2 * sum_{m>=0} w^m / (m+2)!  with  w = -s·iy
        let w = Complex64::new(0.0, -s * y);
        let mut term = Complex64::new(0.5, 0.0);
        let mut sum = term;
        for m in 1..20 {
            term = term * w / (m as f64 + 2.0);
            sum += term;
            if term.norm_sqr() < 1e-36 * sum.norm_sqr() {
                break;
            }
        }
        sum * (z * z)
    } else {
        (1.0 - exp_i(-s * y) - Complex64::new(0.0, s * y)) / (x * x)
    }
}

/// The oscillatory double integral `T(u, v, z) = ∫₀ᶻ ds e^{ius} ∫₀ˢ dr e^{ivr}`.
///
/// Closed form `[(u+v)e^{iuz} − u·e^{i(u+v)z} − v] / (u·v·(u+v))`; evaluated
/// as `iz·[E(uz) − e^{iuz}E(vz)]/(u+v)`, switching to the equivalent
/// representation `T(u+v, −v, z)` when `|u|` exceeds `|u+v|`, and to the full
/// double series when all of `|uz|, |vz|, |(u+v)z|` are below [`EPS_SING`].
pub fn tri_exp(u: f64, v: f64, z: f64) -> Complex64 {
    let a = u * z;
    let b = v * z;
    let c = (u + v) * z;
    if a.abs() < EPS_SING && b.abs() < EPS_SING && c.abs() < EPS_SING {
        return tri_exp_series(a, b) * (z * z);
    }
    if (u + v).abs() >= u.abs() {
        tri_exp_base(u, v, z)
    } else {
        tri_exp_base(u + v, -v, z)
    }
}

/// `iz·[E(uz) − e^{iuz}E(vz)]/(u+v)`; caller guarantees `|u+v|` is the larger
/// of the two admissible divisors.
fn tri_exp_base(u: f64, v: f64, z: f64) -> Complex64 {
    let num = phi1(u * z) - exp_i(u * z) * phi1(v * z);
    Complex64::new(0.0, z) * num / (u + v)
}

/// `T/z²` as the double series `Σ_N i^N h_N(a, b)/(N+2)` with
/// `h_N = Σ_{m+n=N} a^m b^n / (m!(n+1)!)`, in the scaled variables
/// `a = uz`, `b = vz`.
fn tri_exp_series(a: f64, b: f64) -> Complex64 {
    const I_POW: [Complex64; 4] = [
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 1.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(0.0, -1.0),
    ];
    let mut sum = Complex64::new(0.0, 0.0);
    for n_tot in 0..24usize {
        // h_N; factorials stay tiny because |a|, |b| < EPS_SING
        let mut h = 0.0;
        let mut mfact = 1.0; // m!
        for m in 0..=n_tot {
            if m > 0 {
                mfact *= m as f64;
            }
            let n = n_tot - m;
            let mut nfact1 = 1.0; // (n+1)!
            for k in 2..=(n + 1) {
                nfact1 *= k as f64;
            }
            h += a.powi(m as i32) * b.powi(n as i32) / (mfact * nfact1);
        }
        let term = I_POW[n_tot % 4] * (h / (n_tot as f64 + 2.0));
        sum += term;
        if term.norm_sqr() < 1e-36 * sum.norm_sqr().max(0.25) {
            break;
        }
    }
    sum
}

/// Catalog of the three-exponential numerator patterns, keyed by the
/// coefficient family they serve. `J6` also serves k4/k5, and each pattern
/// with a stated equal partner (j4 = j5, …) is listed once.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum K2Signature {
    /// (u, v) = (Δω_S, Δω_A); pump-pair Stokes–anti-Stokes response.
    J3,
    /// (u, v) = (Δω_S, Δω_A); also j5.
    J4,
    /// (u, v) = (Δω_S, Δω_D); also j7, k4, k5.
    J6,
    /// (u, v) = (Δω_A, Δω_D); also k7.
    K6,
    /// (u, v) = (Δω_A, Δω_S); also l4.
    L3,
    /// (u, v) = (Δω_A, Δω_S).
    L5,
    /// (u, v) = (Δω_A, Δω_D); also l7. Evaluated as the negated conjugate of
    /// the `K6` pattern (an identity for real arguments), so the k6/l6 pair
    /// shares one kernel evaluation.
    L6,
}

impl K2Signature {
    pub const ALL: [K2Signature; 7] = [
        K2Signature::J3,
        K2Signature::J4,
        K2Signature::J6,
        K2Signature::K6,
        K2Signature::L3,
        K2Signature::L5,
        K2Signature::L6,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            K2Signature::J3 => "j3",
            K2Signature::J4 => "j4",
            K2Signature::J6 => "j6",
            K2Signature::K6 => "k6",
            K2Signature::L3 => "l3",
            K2Signature::L5 => "l5",
            K2Signature::L6 => "l6",
        }
    }

    /// Parse a catalog pattern by family name (accepts the stated equal
    /// partners, e.g. `k4` for `j6`).
    pub fn parse(name: &str) -> Result<K2Signature> {
        match name.trim().to_ascii_lowercase().as_str() {
            "j3" => Ok(K2Signature::J3),
            "j4" | "j5" => Ok(K2Signature::J4),
            "j6" | "j7" | "k4" | "k5" => Ok(K2Signature::J6),
            "k6" | "k7" => Ok(K2Signature::K6),
            "l3" | "l4" => Ok(K2Signature::L3),
            "l5" => Ok(K2Signature::L5),
            "l6" | "l7" => Ok(K2Signature::L6),
            other => Err(Error::InvalidSignature(other.to_string())),
        }
    }
}

/// Evaluate a catalogued three-exponential pattern (coupling prefactor
/// factored out) at the detuning pair documented on the signature.
pub fn kernel_k2(u: f64, v: f64, z: f64, signature: K2Signature) -> Complex64 {
    match signature {
        K2Signature::J3 => tri_exp(-u, v, z),
        K2Signature::J4 => -tri_exp(-u, -v, z),
        K2Signature::J6 => -tri_exp(-u, -v, z),
        K2Signature::K6 => tri_exp(-u, v, z),
        K2Signature::L3 => -tri_exp(u, v, z),
        K2Signature::L5 => -tri_exp(u, -v, z),
        K2Signature::L6 => -tri_exp(-u, v, z).conj(),
    }
}

/// Stokes Zeno response `F_b(s, d, z) = [d + s·e^{i(s+d)z} − (s+d)·e^{isz}]
/// / (s·d·(s+d)) = −T(s, d, z)`, limit `−z²/2`.
pub fn f_stokes(ds: f64, dd: f64, z: f64) -> Complex64 {
    -tri_exp(ds, dd, z)
}

/// Anti-Stokes Zeno response `F_d(a, d, z) = F_b(−a, d, z)`, limit `−z²/2`.
pub fn f_antistokes(da: f64, dd: f64, z: f64) -> Complex64 {
    -tri_exp(-da, dd, z)
}
