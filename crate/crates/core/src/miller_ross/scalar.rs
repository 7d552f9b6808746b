//! Complex Miller-Ross function `E_{nu,c}(z) = z^nu S(nu, c z)` with
//! `S(nu, x) = sum_r x^r / Gamma(nu + r + 1)`.
//!
//! `S` is entire in `x` but its power series cancels badly when `x` is large
//! away from the positive axis. It is therefore summed along whichever of
//! three routes is well conditioned:
//! * the power series itself;
//! * for `Re x < 0`, the Kummer-transformed series
//!   `S = e^x / Gamma(nu + 1) sum_r nu / (nu + r) (-x)^r / r!`;
//! * the incomplete-gamma form `S = x^-nu e^x - F / Gamma(nu)` where
//!   `Gamma(nu, x) = e^-x x^nu F` and `F` is a continued fraction.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::series::{sum_terms, ScalarValue, TruncationPolicy};
use crate::special::{is_nonpositive_integer, reciprocal_gamma};

/// A route is accepted outright when the summed moduli exceed the result by
/// at most this factor.
const ACCEPTED_CONDITION: f64 = 1e3;

/// Largest number of continued-fraction iterations attempted.
const MAX_FRACTION_STEPS: usize = 5000;

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

/// `nu` as an integer when it is one.
pub fn integer_order(nu: Complex64) -> Option<i32> {
    if nu.im == 0.0 && nu.re.fract() == 0.0 && nu.re.abs() <= i32::MAX as f64 {
        Some(nu.re as i32)
    } else {
        None
    }
}

/// Principal `z^nu`, by repeated multiplication for integer `nu` so that
/// `z = 0` is admitted for `nu >= 0`.
pub fn order_power(z: Complex64, nu: Complex64) -> Result<Complex64> {
    match integer_order(nu) {
        Some(0) => Ok(Complex64::new(1.0, 0.0)),
        Some(n) if n > 0 && z == zero() => Ok(zero()),
        Some(n) if z != zero() => Ok(z.powi(n)),
        _ if z == zero() => Err(Error::ZeroDivisorPower),
        _ => Ok((nu * z.ln()).exp()),
    }
}

/// Terms `x^r / Gamma(nu + r + 1)` times the falling factorial
/// `(nu + r)(nu + r - 1)...(nu + r - k + 1)`.
fn direct_series(
    nu: Complex64,
    x: Complex64,
    k: usize,
    policy: &TruncationPolicy,
) -> Result<ScalarValue> {
    let mut base = zero();
    let xm = x.norm();
    sum_terms(
        policy,
        |r| {
            let arg = nu + (r + 1) as f64;
            // near and left of the gamma poles the ratio recurrence would
            // divide by zero
            if r == 0 || arg.re < 2.0 {
                base = x.powi(r as i32) * reciprocal_gamma(arg);
            } else {
                base *= x / (arg - 1.0);
            }
            let mut t = base;
            for s in 0..k {
                t *= nu + (r as f64 - s as f64);
            }
            t
        },
        |r| {
            let d = nu.re + (r + 1) as f64;
            let dk = d - k as f64;
            if d <= 0.0 || dk <= 0.0 {
                f64::INFINITY
            } else {
                xm / d * (1.0 + k as f64 / dk)
            }
        },
    )
}

fn kummer_series(nu: Complex64, x: Complex64, policy: &TruncationPolicy) -> Result<ScalarValue> {
    let y = -x;
    let ym = y.norm();
    let mut p = Complex64::new(1.0, 0.0);
    let inner = sum_terms(
        policy,
        |r| {
            if r > 0 {
                p *= y / r as f64;
                p * nu / (nu + r as f64)
            } else {
                p
            }
        },
        |r| {
            let d = nu.re + (r + 1) as f64;
            if d <= 0.0 {
                f64::INFINITY
            } else {
                ym / (r + 1) as f64 * (1.0 + 1.0 / d)
            }
        },
    )?;
    Ok(inner.scaled(x.exp() * reciprocal_gamma(nu + 1.0)))
}

/// `F` in `Gamma(a, x) = e^-x x^a F`, by the modified Lentz method. Returns
/// the value, the iteration count and the last relative update.
fn upper_gamma_fraction(a: Complex64, x: Complex64) -> Option<(Complex64, usize, f64)> {
    const TINY: f64 = 1e-300;
    let guard = |v: Complex64| {
        if v.norm() < TINY {
            Complex64::new(TINY, 0.0)
        } else {
            v
        }
    };
    let mut f = guard(x + 1.0 - a);
    let mut c = f;
    let mut d = zero();
    for n in 1..=MAX_FRACTION_STEPS {
        let nf = n as f64;
        let an = -nf * (nf - a);
        let bn = x + (2.0 * nf + 1.0) - a;
        d = guard(bn + an * d).inv();
        c = guard(bn + an / c);
        let delta = c * d;
        f *= delta;
        let change = (delta - 1.0).norm();
        if !f.is_finite() {
            return None;
        }
        if change < 0.5 * f64::EPSILON {
            return Some((f.inv(), n, change));
        }
    }
    None
}

fn fraction_route(nu: Complex64, x: Complex64) -> Option<ScalarValue> {
    let (fraction, steps, change) = upper_gamma_fraction(nu, x)?;
    let lead = (x - nu * x.ln()).exp();
    let rest = reciprocal_gamma(nu) * fraction;
    let value = lead - rest;
    if !value.is_finite() {
        return None;
    }
    Some(ScalarValue {
        value,
        magnitude: lead.norm() + rest.norm(),
        tail: 4.0 * rest.norm() * change.max(f64::EPSILON),
        terms: steps,
    })
}

/// `S(nu, x) = sum_r x^r / Gamma(nu + r + 1)`.
pub fn mr_series(nu: Complex64, x: Complex64, policy: &TruncationPolicy) -> Result<ScalarValue> {
    if x == zero() {
        return Ok(ScalarValue::exact(reciprocal_gamma(nu + 1.0)));
    }
    let direct = direct_series(nu, x, 0, policy);
    if let Ok(v) = &direct {
        if v.condition() <= ACCEPTED_CONDITION {
            return direct;
        }
    }
    if let Some(n) = integer_order(nu).filter(|_| is_nonpositive_integer(nu)) {
        // S(-l, x) = x^l e^x
        let terms = direct.as_ref().map(|v| v.terms).unwrap_or(0);
        let value = x.powi(-n) * x.exp();
        return Ok(ScalarValue {
            terms,
            ..ScalarValue::exact(value)
        });
    }
    let mut best = direct.as_ref().ok().copied();
    let mut consider = |candidate: ScalarValue| -> Option<ScalarValue> {
        if candidate.condition() <= ACCEPTED_CONDITION {
            return Some(candidate);
        }
        if best.map_or(true, |b| candidate.condition() < b.condition()) {
            best = Some(candidate);
        }
        None
    };
    if x.re < 0.0 {
        if let Ok(v) = kummer_series(nu, x, policy) {
            if let Some(v) = consider(v) {
                return Ok(v);
            }
        }
    }
    if x.norm() > 1.0 {
        if let Some(v) = fraction_route(nu, x) {
            if let Some(v) = consider(v) {
                return Ok(v);
            }
        }
    }
    match best {
        Some(v) => Ok(v),
        None => direct,
    }
}

/// `d^k/dz^k E_{nu,c}(z)` by termwise differentiation of the power series:
/// `z^(nu - k) sum_r (nu + r)...(nu + r - k + 1) (c z)^r / Gamma(nu + r + 1)`.
pub fn mr_derivative_series(
    nu: Complex64,
    c: Complex64,
    z: Complex64,
    k: usize,
    policy: &TruncationPolicy,
) -> Result<ScalarValue> {
    let s = direct_series(nu, c * z, k, policy)?;
    let prefactor = if k == 0 {
        order_power(z, nu)?
    } else {
        order_power(z, nu - k as f64)?
    };
    Ok(s.scaled(prefactor))
}

/// `E_{nu,c}(z)`. For a negative integer order `-l` the value at `z = 0` is
/// the limit `c^l`.
pub fn mr_complex(
    nu: Complex64,
    c: Complex64,
    z: Complex64,
    policy: &TruncationPolicy,
) -> Result<ScalarValue> {
    if z == zero() {
        if let Some(n) = integer_order(nu).filter(|&n| n < 0) {
            return Ok(ScalarValue::exact(c.powi(-n)));
        }
    }
    let prefactor = order_power(z, nu)?;
    Ok(mr_series(nu, c * z, policy)?.scaled(prefactor))
}
