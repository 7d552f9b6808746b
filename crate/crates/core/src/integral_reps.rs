//! Quadrature evaluations of the integral representations of `E_{V,C}(Z)`:
//! beta-type integrals on `[0, 1]`, the gamma integral on `[0, inf)` in the
//! denominators, and the Mellin-Barnes integral along a vertical line.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::bicomplex::{Bicomplex, HyperbolicNorm};
use crate::error::{Component, Error, Result};
use crate::miller_ross::{eval, order_power, MRParams};
use crate::quadrature::{grading_exponent, integrate, integrate_half_line, QuadratureConfig};
use crate::series::TruncationPolicy;
use crate::special::{reciprocal_gamma, sinpi};

/// Guard terms added to the series length of the matching `eval` call when
/// choosing how many integrals to sum.
pub const GUARD_TERMS: usize = 8;

/// Default number of series terms for the representations at `(params, Z)`.
pub fn default_terms(params: &MRParams, z: Bicomplex) -> Result<usize> {
    let used = eval(params, z, &TruncationPolicy::default())?.terms_used;
    Ok(used + GUARD_TERMS)
}

/// `int_0^1 s^p (1 - s)^q ds` for `Re p, Re q > -1`, graded at both ends so
/// the algebraic endpoint behaviour is smooth in the integration variable.
pub fn beta_integral(p: Complex64, q: Complex64, quad: &QuadratureConfig) -> Result<Complex64> {
    if !(p.re > -1.0 && q.re > -1.0) {
        return Err(Error::precondition("beta integral needs Re p, Re q > -1"));
    }
    // s = v^m near 0 and 1 - s = v^m near 1, split at s = 1/2
    let half = |a: Complex64, b: Complex64| -> Result<Complex64> {
        let m = grading_exponent(a.re);
        let upper = 0.5f64.powf(1.0 / m);
        let e = integrate(
            |v| {
                let ln_v = v.ln();
                let ln_s = m * ln_v;
                let s = ln_s.exp();
                (a * ln_s + b * (-s).ln_1p() + (m - 1.0) * ln_v + m.ln()).exp()
            },
            0.0,
            upper,
            quad,
        )?;
        Ok(e.value)
    };
    Ok(half(p, q)? + half(q, p)?)
}

fn require(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::precondition(what))
    }
}

/// `Z^V / Gamma(V+1) [1 + sum_{r=1}^{R} (CZ)^r / Gamma(r) int_0^1 t^(r-1) (1-t)^V dt]`.
pub fn ir_beta(
    params: &MRParams,
    z: Bicomplex,
    r_terms: usize,
    quad: &QuadratureConfig,
) -> Result<Bicomplex> {
    require(
        params.guard().admits_beta_integral(),
        "the beta representation needs Re(alpha) + 1 > |Im(beta)|",
    )?;
    let x = params.c * z;
    let component = |nu: Complex64, x: Complex64, z: Complex64| -> Result<Complex64> {
        let mut sum = Complex64::new(1.0, 0.0);
        let mut power = Complex64::new(1.0, 0.0);
        for r in 1..=r_terms {
            power *= x;
            let integral = beta_integral(Complex64::new(r as f64 - 1.0, 0.0), nu, quad)?;
            sum += power * reciprocal_gamma(Complex64::new(r as f64, 0.0)) * integral;
        }
        Ok(order_power(z, nu)? * reciprocal_gamma(nu + 1.0) * sum)
    };
    Ok(Bicomplex::new(
        component(params.v.z1, x.z1, z.z1)?,
        component(params.v.z2, x.z2, z.z2)?,
    ))
}

/// `E_{V+M,C}(Z) = Z^(V+M) / (Gamma(V) Gamma(M)) sum_{r<=R} (CZ)^r / r!
/// int int s^(V-1) (1-s)^(M+r) t^(M-1) (1-t)^r ds dt`, with the double
/// integral factored into two beta-type integrals.
pub fn ir_double(
    params: &MRParams,
    m: Bicomplex,
    z: Bicomplex,
    r_terms: usize,
    quad: &QuadratureConfig,
) -> Result<Bicomplex> {
    require(
        params.guard().admits_gamma_integral()
            && MRParams::new(m, params.c).guard().admits_gamma_integral(),
        "the double representation needs Re(alpha) > |Im(beta)| for both orders",
    )?;
    let x = params.c * z;
    let component =
        |nu: Complex64, mu: Complex64, x: Complex64, z: Complex64| -> Result<Complex64> {
            let mut sum = Complex64::new(0.0, 0.0);
            let mut power = Complex64::new(1.0, 0.0);
            for r in 0..=r_terms {
                if r > 0 {
                    power *= x / r as f64;
                }
                let rf = r as f64;
                let s_part = beta_integral(nu - 1.0, mu + rf, quad)?;
                let t_part = beta_integral(mu - 1.0, Complex64::new(rf, 0.0), quad)?;
                sum += power * s_part * t_part;
            }
            Ok(order_power(z, nu + mu)? * reciprocal_gamma(nu) * reciprocal_gamma(mu) * sum)
        };
    Ok(Bicomplex::new(
        component(params.v.z1, m.z1, x.z1, z.z1)?,
        component(params.v.z2, m.z2, x.z2, z.z2)?,
    ))
}

/// `int_0^inf e^-t t^(y-1) dt` by quadrature, for `Re y > 0`.
pub fn gamma_by_quadrature(y: Complex64, quad: &QuadratureConfig) -> Result<Complex64> {
    if !(y.re > 0.0) {
        return Err(Error::GammaPole {
            component: Component::Scalar,
            at: y,
        });
    }
    let a = y - 1.0;
    // t = lambda s puts the peak of the integrand near s = 1
    let lambda = a.re.max(1.0);
    let ln_lambda = lambda.ln();
    let e = integrate_half_line(
        |s| {
            if s <= 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            (a * (s.ln() + ln_lambda) - lambda * s + ln_lambda).exp()
        },
        a.re,
        quad,
    )?;
    Ok(e.value)
}

/// `Z^V sum_{r<=R} (CZ)^r / int_0^inf e^-t t^(V+r) dt`.
pub fn ir_gamma_denominator(
    params: &MRParams,
    z: Bicomplex,
    r_terms: usize,
    quad: &QuadratureConfig,
) -> Result<Bicomplex> {
    require(
        params.guard().admits_beta_integral(),
        "the gamma representation needs Re(alpha) + 1 > |Im(beta)|",
    )?;
    let x = params.c * z;
    let component = |nu: Complex64, x: Complex64, z: Complex64| -> Result<Complex64> {
        let mut sum = Complex64::new(0.0, 0.0);
        let mut power = Complex64::new(1.0, 0.0);
        for r in 0..=r_terms {
            if r > 0 {
                power *= x;
            }
            sum += power / gamma_by_quadrature(nu + (r + 1) as f64, quad)?;
        }
        Ok(order_power(z, nu)? * sum)
    };
    Ok(Bicomplex::new(
        component(params.v.z1, x.z1, z.z1)?,
        component(params.v.z2, x.z2, z.z2)?,
    ))
}

/// A vertical line `s = sigma + i tau`, `|tau| <= height`, sampled by the
/// trapezoidal rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BarnesPath {
    /// Abscissa, strictly between the poles at `-1` and `0`.
    pub sigma: f64,
    /// Truncation height `T`.
    pub height: f64,
    /// Number of trapezoidal nodes on `[-T, T]`.
    pub nodes: usize,
    /// Largest acceptable estimate of the neglected tails.
    pub tol: f64,
}

impl Default for BarnesPath {
    fn default() -> Self {
        BarnesPath::with_height(40.0)
    }
}

impl BarnesPath {
    /// Nodes per unit of height used by [`BarnesPath::with_height`].
    pub const NODE_DENSITY: f64 = 20.0;

    pub fn with_height(height: f64) -> Self {
        BarnesPath {
            sigma: -0.5,
            height,
            nodes: (2.0 * height * Self::NODE_DENSITY).ceil() as usize + 1,
            tol: 1e-5,
        }
    }
}

/// Truncated contour value and the estimated size of the neglected tails.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BarnesEstimate {
    pub value: Bicomplex,
    pub tail: HyperbolicNorm,
}

fn barnes_component(
    nu: Complex64,
    x: Complex64,
    prefactor: Complex64,
    path: &BarnesPath,
) -> Result<(Complex64, f64)> {
    let neg = -x;
    let rate = PI / 2.0 - neg.arg().abs();
    if !(rate > 0.0) || neg == Complex64::new(0.0, 0.0) {
        return Err(Error::PathTruncationError {
            tail: f64::INFINITY,
            tol: path.tol,
        });
    }
    let log_neg = neg.ln();
    // (1 / 2 pi i) ds = (1 / 2 pi) dtau, and Gamma(-s) Gamma(1+s) = -pi / sin(pi s)
    let g = |tau: f64| -> Complex64 {
        let s = Complex64::new(path.sigma, tau);
        (s * log_neg).exp() * (-0.5) / sinpi(s) * reciprocal_gamma(nu + 1.0 + s)
    };
    let n = path.nodes.max(3);
    let h = 2.0 * path.height / (n - 1) as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for i in 0..n {
        let tau = -path.height + i as f64 * h;
        let w = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
        sum += g(tau) * w;
    }
    let tail = (g(path.height).norm() + g(-path.height).norm()) / rate;
    let scale = prefactor.norm();
    Ok((prefactor * sum * h, tail * scale))
}

/// Mellin-Barnes evaluation of `E_{V,C}(Z)`, componentwise
/// `z^nu (1 / 2 pi i) int (-c z)^s Gamma(-s) Gamma(1+s) / Gamma(nu+1+s) ds`
/// along `path`. Needs `Re(c_i z_i) < 0`.
pub fn barnes_eval(params: &MRParams, z: Bicomplex, path: &BarnesPath) -> Result<BarnesEstimate> {
    if !(path.sigma > -1.0 && path.sigma < 0.0) {
        return Err(Error::precondition(
            "the Barnes line must have -1 < sigma < 0",
        ));
    }
    let x = params.c * z;
    let (v, zc, xc) = (params.v.components(), z.components(), x.components());
    let mut out = [(Complex64::new(0.0, 0.0), 0.0); 2];
    for i in 0..2 {
        let prefactor = order_power(zc[i], v[i])?;
        out[i] = barnes_component(v[i], xc[i], prefactor, path)?;
    }
    let tail = HyperbolicNorm::new(out[0].1, out[1].1);
    if tail.max() > path.tol {
        return Err(Error::PathTruncationError {
            tail: tail.max(),
            tol: path.tol,
        });
    }
    Ok(BarnesEstimate {
        value: Bicomplex::new(out[0].0, out[1].0),
        tail,
    })
}
