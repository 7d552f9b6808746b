//! Globally adaptive Gauss-Kronrod (7/15) quadrature for complex-valued
//! integrands, plus maps for the half line.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Transform used to pull `[0, inf)` back to `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InfiniteMap {
    /// `t = -ln(1 - u)`
    #[default]
    Exp,
    /// `t = u / (1 - u)`
    Rational,
}

impl InfiniteMap {
    /// Returns `(t, dt/du)`.
    pub fn apply(self, u: f64) -> (f64, f64) {
        let v = 1.0 - u;
        match self {
            InfiniteMap::Exp => (-(-u).ln_1p(), 1.0 / v),
            InfiniteMap::Rational => (u / v, 1.0 / (v * v)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Relative tolerance on the integral.
    pub tol: f64,
    /// Absolute tolerance; the estimate is accepted when it is below either.
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    pub infinite_domain_map: InfiniteMap,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            tol: 1e-10,
            abs_tol: 0.0,
            max_subdivisions: 2000,
            infinite_domain_map: InfiniteMap::Exp,
        }
    }
}

impl QuadratureConfig {
    pub fn with_tol(tol: f64) -> Self {
        QuadratureConfig {
            tol,
            ..Default::default()
        }
    }

    /// `magnitude` is the integral of `|f|`; an error at the rounding level
    /// of that quantity is accepted even when the integral itself cancels.
    fn accepts(&self, value: Complex64, magnitude: f64, error: f64) -> bool {
        error
            <= self
                .abs_tol
                .max(self.tol * value.norm())
                .max(200.0 * f64::EPSILON * magnitude)
    }
}

/// Result of a quadrature call.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: Complex64,
    pub error: f64,
    pub evaluations: usize,
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

struct Segment {
    a: f64,
    b: f64,
    value: Complex64,
    magnitude: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gk15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> Segment {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);
    let mut kronrod = f_center * WGK[7];
    let mut gauss = f_center * WG[3];
    let mut res_abs = WGK[7] * f_center.norm();
    let mut values = [(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)); 7];
    for (j, slot) in values.iter_mut().enumerate() {
        let dx = half * XGK[j];
        let lo = f(center - dx);
        let hi = f(center + dx);
        *slot = (lo, hi);
        kronrod += (lo + hi) * WGK[j];
        res_abs += WGK[j] * (lo.norm() + hi.norm());
        if j % 2 == 1 {
            gauss += (lo + hi) * WG[j / 2];
        }
    }
    let mean = kronrod * 0.5;
    let mut res_asc = WGK[7] * (f_center - mean).norm();
    for (j, (lo, hi)) in values.iter().enumerate() {
        res_asc += WGK[j] * ((lo - mean).norm() + (hi - mean).norm());
    }
    let abs_half = half.abs();
    let value = kronrod * half;
    res_abs *= abs_half;
    res_asc *= abs_half;
    let mut error = ((kronrod - gauss) * half).norm();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }
    if !value.is_finite() {
        error = f64::INFINITY;
    }
    Segment {
        a,
        b,
        value,
        magnitude: res_abs,
        error,
    }
}

/// Integrates `f` over the finite interval `[a, b]`. The integrand is never
/// evaluated at the endpoints, so integrable endpoint singularities are fine.
pub fn integrate<F: Fn(f64) -> Complex64>(
    f: F,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<Estimate> {
    let first = gk15(&f, a, b);
    let mut value = first.value;
    let mut error = first.error;
    let mut magnitude = first.magnitude;
    let mut evaluations = 15;
    let mut heap = BinaryHeap::new();
    heap.push(first);
    let mut pieces = 1;
    while !cfg.accepts(value, magnitude, error) {
        if pieces >= cfg.max_subdivisions {
            return Err(Error::QuadratureNonConvergence {
                estimate: error,
                tol: cfg.abs_tol.max(cfg.tol * value.norm()),
            });
        }
        let worst = match heap.pop() {
            Some(s) => s,
            None => break,
        };
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) {
            return Err(Error::QuadratureNonConvergence {
                estimate: error,
                tol: cfg.abs_tol.max(cfg.tol * value.norm()),
            });
        }
        let left = gk15(&f, worst.a, mid);
        let right = gk15(&f, mid, worst.b);
        evaluations += 30;
        value = value - worst.value + left.value + right.value;
        magnitude += left.magnitude + right.magnitude - worst.magnitude;
        heap.push(left);
        heap.push(right);
        pieces += 1;
        // re-sum to keep cancellation from drifting the running totals
        if pieces % 64 == 0 {
            value = heap.iter().map(|s| s.value).sum();
        }
        error = heap.iter().map(|s| s.error).sum();
    }
    let value: Complex64 = heap.iter().map(|s| s.value).sum();
    Ok(Estimate {
        value,
        error,
        evaluations,
    })
}

/// Grading exponent `m` for the substitution `x = s^m` that makes an
/// endpoint behaviour `x^p` (with `p = re_power > -1`) smooth enough for the
/// Gauss-Kronrod rule.
pub fn grading_exponent(re_power: f64) -> f64 {
    if re_power >= 1.0 {
        1.0
    } else {
        (2.0 / (re_power + 1.0)).max(1.0)
    }
}

/// Integrates `f` over `[0, inf)` through `cfg.infinite_domain_map`.
///
/// `origin_power` is the real part of the algebraic behaviour `t^p` of the
/// integrand at the origin; it selects a grading of the pulled-back variable.
pub fn integrate_half_line<F: Fn(f64) -> Complex64>(
    f: F,
    origin_power: f64,
    cfg: &QuadratureConfig,
) -> Result<Estimate> {
    let m = grading_exponent(origin_power);
    let map = cfg.infinite_domain_map;
    integrate(
        |v| {
            let u = v.powf(m);
            let (t, dt) = map.apply(u);
            let du = if m == 1.0 { 1.0 } else { m * v.powf(m - 1.0) };
            let w = dt * du;
            if w == 0.0 || !w.is_finite() {
                return Complex64::new(0.0, 0.0);
            }
            f(t) * w
        },
        0.0,
        1.0,
        cfg,
    )
}
