// Frozen extended-precision reference values.
//
// Generated by tools/gen_reference_values.py (mpmath, 50 significant
// digits); do not edit by hand.
#![allow(dead_code, clippy::excessive_precision)]

use num_complex::Complex64;

pub const K1_NEAR_ZERO: Complex64 = Complex64::new(5.0000000000000000e-11, 0.10000000000000000);
pub const K1_GENERIC: Complex64 = Complex64::new(1.4845623311042680, 1.4274737634591293);
pub const K3_MINUS_NEAR_ZERO: Complex64 = Complex64::new(0.019999999999999999, -1.3333333333333333e-10);
pub const K3_MINUS_GENERIC: Complex64 = Complex64::new(1.1842160355042086, -0.65534821571422714);
pub const K3_MINUS_SWITCH: Complex64 = Complex64::new(0.31999317339158729, -0.0017066448214664854);
pub const K3_PLUS_NEAR_ZERO: Complex64 = Complex64::new(0.054449999980234650, 1.1978999997390974e-6);
pub const K3_PLUS_GENERIC: Complex64 = Complex64::new(0.17356013925837596, 0.038746403327740671);
pub const K2_J3_NEAR_RES: Complex64 = Complex64::new(0.080000000000000000, -1.0666666666666667e-11);
pub const K2_J3_GENERIC: Complex64 = Complex64::new(4.4948544543820937, -0.20240661250725530);
pub const K2_J4_SPEC_POINT: Complex64 = Complex64::new(-49.862168102862941, 3.4961340305598975);
pub const K2_J6_GENERIC: Complex64 = Complex64::new(-0.75659713679107491, 1.4903789498516212);
pub const K2_J6_MIXED: Complex64 = Complex64::new(-0.10061184993334537, 0.43539778460542134);
pub const K2_K6_GENERIC: Complex64 = Complex64::new(2.2030898076797901, -0.86256073668555985);
pub const K2_K6_CANCEL: Complex64 = Complex64::new(0.36085699153359159, -0.14748485341057063);
pub const K2_L3_GENERIC: Complex64 = Complex64::new(-0.77520904085121505, -0.55488518957560638);
pub const K2_L5_GENERIC: Complex64 = Complex64::new(-0.91044146023001283, -0.33227307270137339);
pub const K2_L6_GENERIC: Complex64 = Complex64::new(-2.0285003699423016, -2.7691175223858957);

pub const FIG_RATIO_J2: Complex64 = Complex64::new(4.9999995833333472e-5, 0.099999983333334167);
pub const FIG_RATIO_J3: Complex64 = Complex64::new(0.049999995833333472, -1.6666665833333353e-5);
pub const FIG_RATIO_J4: Complex64 = Complex64::new(-0.049999970833337639, 4.9999987500001250e-5);
pub const FIG_RATIO_J6: Complex64 = Complex64::new(-0.49999986208334181, 0.00034999996132500153);
pub const FIG_RATIO_J8: Complex64 = Complex64::new(0.0049999995833333472, -1.6666665833333353e-6);
pub const FIG_RATIO_K2: Complex64 = Complex64::new(4.9999995833333472e-5, 0.099999983333334167);
pub const FIG_RATIO_K3: Complex64 = Complex64::new(0.00049999995833333472, 0.99999983333334167);
pub const FIG_RATIO_K4: Complex64 = Complex64::new(-0.49999986208334181, 0.00034999996132500153);
pub const FIG_RATIO_K6: Complex64 = Complex64::new(4.9999988708333902, -0.0031666663800833426);
pub const FIG_RATIO_K8: Complex64 = Complex64::new(-0.49999995833333472, 0.00016666665833333353);
pub const FIG_RATIO_K9: Complex64 = Complex64::new(-0.0049999995833333472, -1.6666665833333353e-6);
pub const FIG_RATIO_L2: Complex64 = Complex64::new(-0.00049999995833333472, 0.99999983333334167);
pub const FIG_RATIO_L3: Complex64 = Complex64::new(-0.049999970833337639, -4.9999987500001250e-5);
pub const FIG_RATIO_L5: Complex64 = Complex64::new(-0.049999995833333472, -1.6666665833333353e-5);
pub const FIG_RATIO_L6: Complex64 = Complex64::new(-4.9999988708333902, -0.0031666663800833426);
pub const FIG_RATIO_L8: Complex64 = Complex64::new(-0.49999995833333472, -0.00016666665833333353);

pub const CFG_A_MEAN_STOKES: f64 = -28.461950116920611;
pub const CFG_A_MEAN_PHONON: f64 = -278.85675484840408;
pub const CFG_A_MEAN_ANTISTOKES: f64 = 250.87418811443188;
pub const CFG_A_ZENO_B: f64 = -26.598367728123777;
pub const CFG_A_ZENO_D: f64 = 324.18227692768196;
pub const CFG_A_ZENO_C: f64 = -350.78064465580574;
pub const CFG_FIG2_MEAN_STOKES: f64 = 12981.931200911080;
pub const CFG_FIG2_MEAN_PHONON: f64 = 29563.687758778551;
pub const CFG_FIG2_MEAN_ANTISTOKES: f64 = -16644.756457867471;
pub const CFG_FIG2_ZENO_B: f64 = -168.29995357725285;
pub const CFG_FIG2_ZENO_D: f64 = -210.37495249031489;
pub const CFG_FIG2_ZENO_C: f64 = 42.074998913062039;
pub const CFG_DESK_MEAN_STOKES: f64 = 0.089975758400000000;
pub const CFG_DESK_MEAN_PHONON: f64 = 0.040100760000000000;
pub const CFG_DESK_MEAN_ANTISTOKES: f64 = 0.039874998400000000;
pub const CFG_DESK_ZENO_B: f64 = -4.9248000000000000e-5;
pub const CFG_DESK_ZENO_D: f64 = -3.2832000000000000e-5;
pub const CFG_DESK_ZENO_C: f64 = -1.6416000000000000e-5;

pub const POISSON_TAIL_03_CUT4: f64 = 4.5655624612844313e-8;
