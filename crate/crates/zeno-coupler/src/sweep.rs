//! Parameter sweeps over phase mismatches, detunings, and length; QZE/QAZE
//! crossover detection by bisection; and the published figure presets.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::oracle::{oracle_zeno, FockConfig};
use crate::types::{CoherentAmplitudes, CouplerConfig, Couplings, Frequencies};
use crate::zeno::{
    zeno_closed_with, zeno_difference_with, zeno_phonon_excitation_with, zeno_resonant_with,
    Classification, Method, ZenoResult,
};

/// Sweepable quantities. Linked axes move several primaries together.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    Theta1,
    Theta2,
    /// θ₁ = θ₂ moved together.
    ThetaBoth,
    DetuneS,
    DetuneA,
    DetuneD,
    /// Δω_S = Δω_A moved together (radiation-energy constraint).
    DetuneSA,
    Z,
}

impl SweepAxis {
    pub fn name(&self) -> &'static str {
        match self {
            SweepAxis::Theta1 => "theta1",
            SweepAxis::Theta2 => "theta2",
            SweepAxis::ThetaBoth => "theta_both",
            SweepAxis::DetuneS => "detune_s",
            SweepAxis::DetuneA => "detune_a",
            SweepAxis::DetuneD => "detune_d",
            SweepAxis::DetuneSA => "detune_sa",
            SweepAxis::Z => "z",
        }
    }

    pub fn parse(s: &str) -> Result<SweepAxis> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "theta1" => Ok(SweepAxis::Theta1),
            "theta2" => Ok(SweepAxis::Theta2),
            "theta_both" => Ok(SweepAxis::ThetaBoth),
            "detune_s" => Ok(SweepAxis::DetuneS),
            "detune_a" => Ok(SweepAxis::DetuneA),
            "detune_d" => Ok(SweepAxis::DetuneD),
            "detune_sa" => Ok(SweepAxis::DetuneSA),
            "z" => Ok(SweepAxis::Z),
            other => Err(Error::config("axis", format!("unknown axis `{other}`"))),
        }
    }
}

/// Inclusive linear grid on one axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisSpec {
    pub axis: SweepAxis,
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl AxisSpec {
    pub fn value(&self, k: usize) -> f64 {
        if self.count == 1 {
            self.min
        } else {
            self.min + (self.max - self.min) * k as f64 / (self.count - 1) as f64
        }
    }
}

/// The three system modes a Zeno parameter is reported for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZenoMode {
    Stokes,
    Phonon,
    AntiStokes,
}

impl ZenoMode {
    pub fn name(&self) -> &'static str {
        match self {
            ZenoMode::Stokes => "b",
            ZenoMode::Phonon => "c",
            ZenoMode::AntiStokes => "d",
        }
    }

    pub fn parse(s: &str) -> Result<ZenoMode> {
        match s.trim().to_ascii_lowercase().as_str() {
            "b" | "stokes" => Ok(ZenoMode::Stokes),
            "c" | "phonon" => Ok(ZenoMode::Phonon),
            "d" | "antistokes" | "anti-stokes" => Ok(ZenoMode::AntiStokes),
            other => Err(Error::config("mode", format!("unknown mode `{other}`"))),
        }
    }

    pub fn pick(&self, r: &ZenoResult) -> (f64, Classification) {
        match self {
            ZenoMode::Stokes => (r.z_b, r.class_b),
            ZenoMode::Phonon => (r.z_c, r.class_c),
            ZenoMode::AntiStokes => (r.z_d, r.class_d),
        }
    }
}

/// A full sweep description.
#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub base: CouplerConfig,
    /// Length used when no `z` axis is present.
    pub z: f64,
    /// 1 to 3 axes, outermost first.
    pub axes: Vec<AxisSpec>,
    pub modes: Vec<ZenoMode>,
    pub method: Method,
    pub tol_class: Option<f64>,
    pub fock: Option<FockConfig>,
    pub notes: Vec<String>,
}

/// Budget guard for oracle-backed sweeps.
pub const ORACLE_GRID_BUDGET: usize = 1000;

impl SweepSpec {
    pub fn total_points(&self) -> usize {
        self.axes.iter().map(|a| a.count).product()
    }

    pub fn validate(&self) -> Result<()> {
        if self.axes.is_empty() || self.axes.len() > 3 {
            return Err(Error::config("sweep.axes", "need 1 to 3 axes"));
        }
        for (i, ax) in self.axes.iter().enumerate() {
            let path = format!("sweep.axes[{i}]");
            if ax.count < 2 {
                return Err(Error::config(format!("{path}.count"), "count must be >= 2"));
            }
            if !ax.min.is_finite() || !ax.max.is_finite() || ax.min > ax.max {
                return Err(Error::config(
                    path,
                    "axis range must be finite with min <= max",
                ));
            }
        }
        for (i, a) in self.axes.iter().enumerate() {
            for b in self.axes.iter().skip(i + 1) {
                if a.axis == b.axis {
                    return Err(Error::config(
                        "sweep.axes",
                        format!("duplicate axis `{}`", a.axis.name()),
                    ));
                }
            }
        }
        if self.modes.is_empty() {
            return Err(Error::config("sweep.modes", "need at least one mode"));
        }
        if self.method == Method::Oracle {
            if self.fock.is_none() {
                return Err(Error::config("fock", "oracle sweeps need a fock section"));
            }
            if self.total_points() > ORACLE_GRID_BUDGET {
                return Err(Error::config(
                    "sweep.axes",
                    format!(
                        "oracle grid of {} points exceeds the budget of {}",
                        self.total_points(),
                        ORACLE_GRID_BUDGET
                    ),
                ));
            }
        }
        if !self.z.is_finite() || self.z < 0.0 {
            return Err(Error::config("z", "z must be finite and non-negative"));
        }
        Ok(())
    }

    /// Realize one grid point: the configuration and length it evaluates.
    pub fn configure(&self, coords: &[f64]) -> Result<(CouplerConfig, f64)> {
        assert_eq!(coords.len(), self.axes.len());
        let mut ds = None;
        let mut da = None;
        let mut dd = None;
        let mut th1 = None;
        let mut th2 = None;
        let mut z = None;
        for (ax, &v) in self.axes.iter().zip(coords.iter()) {
            match ax.axis {
                SweepAxis::Theta1 => th1 = Some(v),
                SweepAxis::Theta2 => th2 = Some(v),
                SweepAxis::ThetaBoth => {
                    th1 = Some(v);
                    th2 = Some(v);
                }
                SweepAxis::DetuneS => ds = Some(v),
                SweepAxis::DetuneA => da = Some(v),
                SweepAxis::DetuneD => dd = Some(v),
                SweepAxis::DetuneSA => {
                    ds = Some(v);
                    da = Some(v);
                }
                SweepAxis::Z => z = Some(v),
            }
        }
        let mut cfg = self.base;
        if ds.is_some() || da.is_some() || dd.is_some() {
            let base_det = self.base.frequencies.detunings();
            cfg.frequencies = Frequencies::from_detunings(
                ds.unwrap_or(base_det.ds),
                da.unwrap_or(base_det.da),
                dd.unwrap_or(base_det.dd),
            );
        }
        if th1.is_some() || th2.is_some() {
            cfg.amplitudes = cfg.amplitudes.with_phase_targets(th1, th2)?;
        }
        Ok((cfg, z.unwrap_or(self.z)))
    }

    /// Evaluate one realized point with the spec's method.
    pub fn evaluate(&self, cfg: &CouplerConfig, z: f64) -> Result<ZenoResult> {
        match self.method {
            Method::ClosedForm => Ok(zeno_closed_with(cfg, z, self.tol_class)),
            Method::Difference => Ok(zeno_difference_with(cfg, z, self.tol_class)),
            Method::Resonant => Ok(zeno_resonant_with(cfg, z, self.tol_class)),
            Method::PhononExcitation => Ok(zeno_phonon_excitation_with(cfg, z, self.tol_class)),
            Method::Oracle => {
                let fock = self.fock.as_ref().expect("validated");
                oracle_zeno(cfg, fock, z)
            }
        }
    }

    fn coords_of(&self, index: usize) -> Vec<f64> {
        let mut rem = index;
        let mut idx = vec![0usize; self.axes.len()];
        for (i, ax) in self.axes.iter().enumerate().rev() {
            idx[i] = rem % ax.count;
            rem /= ax.count;
        }
        idx.iter()
            .zip(self.axes.iter())
            .map(|(&k, ax)| ax.value(k))
            .collect()
    }
}

/// One evaluated grid point.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub coords: Vec<f64>,
    pub outcome: std::result::Result<ZenoResult, String>,
}

/// Evaluated sweep in deterministic grid order (outermost axis slowest).
#[derive(Debug, Clone)]
pub struct SweepTable {
    pub axis_names: Vec<&'static str>,
    pub modes: Vec<ZenoMode>,
    pub method: Method,
    pub rows: Vec<SweepRow>,
}

/// Run the sweep; rows are evaluated independently (in parallel) and merged
/// in grid order. Per-row evaluation failures land in the row's error slot.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepTable> {
    spec.validate()?;
    let total = spec.total_points();
    let rows: Vec<SweepRow> = (0..total)
        .into_par_iter()
        .map(|i| {
            let coords = spec.coords_of(i);
            let outcome = spec
                .configure(&coords)
                .and_then(|(cfg, z)| spec.evaluate(&cfg, z))
                .map_err(|e| e.to_string());
            SweepRow { coords, outcome }
        })
        .collect();
    Ok(SweepTable {
        axis_names: spec.axes.iter().map(|a| a.axis.name()).collect(),
        modes: spec.modes.clone(),
        method: spec.method,
        rows,
    })
}

/// A refined QZE/QAZE crossover.
#[derive(Debug, Clone)]
pub struct CrossoverPoint {
    /// Outer-axis values followed by the refined inner-axis coordinate.
    pub coords: Vec<f64>,
    pub mode: ZenoMode,
    pub bracket_width: f64,
}

/// Scan the innermost axis (per outer grid point) for sign changes of the
/// requested mode's Zeno parameter and refine each by bisection to
/// `tol_axis`. Sign changes where |Z| stays inside the classification dead
/// band on both ends are ignored. An empty result means no sign change.
pub fn find_crossovers(
    spec: &SweepSpec,
    mode: ZenoMode,
    tol_axis: f64,
) -> Result<Vec<CrossoverPoint>> {
    spec.validate()?;
    if !(tol_axis > 0.0) {
        return Err(Error::config("tol_axis", "must be positive"));
    }
    let inner = *spec.axes.last().expect("validated");
    let outer_axes = &spec.axes[..spec.axes.len() - 1];
    let outer_total: usize = outer_axes.iter().map(|a| a.count).product();

    let mut found = Vec::new();
    for oi in 0..outer_total {
        let mut rem = oi;
        let mut outer = vec![0usize; outer_axes.len()];
        for (i, ax) in outer_axes.iter().enumerate().rev() {
            outer[i] = rem % ax.count;
            rem /= ax.count;
        }
        let outer_coords: Vec<f64> = outer
            .iter()
            .zip(outer_axes.iter())
            .map(|(&k, ax)| ax.value(k))
            .collect();

        let eval_at = |t: f64| -> Result<(f64, Classification)> {
            let mut coords = outer_coords.clone();
            coords.push(t);
            let (cfg, z) = spec.configure(&coords)?;
            Ok(mode.pick(&spec.evaluate(&cfg, z)?))
        };

        let mut prev: Option<(f64, f64, Classification)> = None;
        for k in 0..inner.count {
            let t = inner.value(k);
            let (zv, class) = eval_at(t)?;
            if let Some((t0, z0, class0)) = prev {
                let dead = class0 == Classification::Neither && class == Classification::Neither;
                if !dead && z0 * zv < 0.0 {
                    let (mut lo, mut hi) = (t0, t);
                    let mut z_lo = z0;
                    let mut width = hi - lo;
                    for _ in 0..200 {
                        if width <= tol_axis {
                            break;
                        }
                        let mid = 0.5 * (lo + hi);
                        let (zm, _) = eval_at(mid)?;
                        if zm == 0.0 {
                            lo = mid;
                            hi = mid;
                        } else if zm.signum() == z_lo.signum() {
                            lo = mid;
                            z_lo = zm;
                        } else {
                            hi = mid;
                        }
                        width = hi - lo;
                    }
                    let mut coords = outer_coords.clone();
                    coords.push(0.5 * (lo + hi));
                    found.push(CrossoverPoint {
                        coords,
                        mode,
                        bracket_width: width,
                    });
                }
            }
            prev = Some((t, zv, class));
        }
    }
    Ok(found)
}

fn published_base() -> CouplerConfig {
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

const TAU: f64 = std::f64::consts::TAU;

/// The published operating points: amplitudes (11, 10, 9.5, 8, 0.01, 1),
/// χ = 10g, Γ = 100g; phase-mismatch panels at Δω_S = Δω_A = 10⁻²g,
/// Δω_D = 10⁻³g; detuning panels at θ = 0 with the linked Δω_S = Δω_A axis
/// and gz = 0.1.
pub fn figure_preset(name: &str) -> Result<SweepSpec> {
    let base = published_base();
    let theta_axis = |axis| AxisSpec {
        axis,
        min: 0.0,
        max: TAU,
        count: 101,
    };
    let z_axis = AxisSpec {
        axis: SweepAxis::Z,
        min: 0.002,
        max: 0.1,
        count: 50,
    };
    let det_axis = |axis| AxisSpec {
        axis,
        min: 0.0,
        max: 50.0,
        count: 81,
    };
    let mut spec = SweepSpec {
        base,
        z: 0.1,
        axes: Vec::new(),
        modes: Vec::new(),
        method: Method::ClosedForm,
        tol_class: None,
        fock: None,
        notes: vec![
            "z-axis range gz in (0, 0.1] is an assumption anchored at the gz = 0.1 \
             operating point; the phase-mismatch panels do not state it numerically."
                .to_string(),
        ],
    };
    match name.trim().to_ascii_lowercase().as_str() {
        "fig2a" => {
            spec.axes = vec![theta_axis(SweepAxis::Theta2), z_axis];
            spec.modes = vec![ZenoMode::Stokes];
        }
        "fig2b" => {
            spec.axes = vec![theta_axis(SweepAxis::Theta1), z_axis];
            spec.modes = vec![ZenoMode::AntiStokes];
        }
        "fig2c" => {
            spec.axes = vec![theta_axis(SweepAxis::ThetaBoth), z_axis];
            spec.modes = vec![ZenoMode::Phonon];
        }
        "fig2d" => {
            spec.axes = vec![
                AxisSpec {
                    count: 61,
                    ..theta_axis(SweepAxis::Theta1)
                },
                AxisSpec {
                    count: 61,
                    ..theta_axis(SweepAxis::Theta2)
                },
            ];
            spec.modes = vec![ZenoMode::Phonon];
            spec.notes.push(
                "panel interpreted as the phonon response over both phase mismatches \
                 independently at gz = 0.1"
                    .to_string(),
            );
        }
        "fig3a" | "fig3b" | "fig3c" => {
            spec.axes = vec![
                AxisSpec {
                    count: 101,
                    ..det_axis(SweepAxis::DetuneSA)
                },
                z_axis,
            ];
            spec.modes = vec![match name.trim().as_bytes()[4] {
                b'a' => ZenoMode::Stokes,
                b'b' => ZenoMode::AntiStokes,
                _ => ZenoMode::Phonon,
            }];
        }
        "fig4a" => {
            spec.axes = vec![det_axis(SweepAxis::DetuneS), det_axis(SweepAxis::DetuneD)];
            spec.modes = vec![ZenoMode::Stokes];
        }
        "fig4b" => {
            spec.axes = vec![det_axis(SweepAxis::DetuneSA), det_axis(SweepAxis::DetuneD)];
            spec.modes = vec![ZenoMode::AntiStokes];
        }
        "fig4c" => {
            spec.axes = vec![det_axis(SweepAxis::DetuneSA), det_axis(SweepAxis::DetuneD)];
            spec.modes = vec![ZenoMode::Phonon];
        }
        "fig4d" => {
            spec.axes = vec![det_axis(SweepAxis::DetuneS), det_axis(SweepAxis::DetuneA)];
            spec.modes = vec![ZenoMode::Phonon];
            spec.notes
                .push("holds detune_d = 1e-3 g while both generation detunings sweep".to_string());
        }
        other => return Err(Error::UnknownPreset(other.to_string())),
    }
    if name.starts_with("fig3") || name.starts_with("fig4") {
        spec.notes.push(
            "detuning axis range [0, 50]g is an assumption; the captions do not state it \
             numerically"
                .to_string(),
        );
    }
    Ok(spec)
}

pub const PRESET_NAMES: [&str; 11] = [
    "fig2a", "fig2b", "fig2c", "fig2d", "fig3a", "fig3b", "fig3c", "fig4a", "fig4b", "fig4c",
    "fig4d",
];
