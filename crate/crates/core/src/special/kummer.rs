//! Confluent hypergeometric function `1F1(a; b; y)` of bicomplex arguments.

use num_complex::Complex64;

use super::gamma::is_nonpositive_integer;
use crate::bicomplex::Bicomplex;
use crate::error::{Component, Error, Result};
use crate::series::{sum_terms, Residual, ScalarValue, SeriesValue, TruncationPolicy};

/// `d^k/dy^k 1F1(a; b; y)` for complex arguments, by the termwise
/// differentiated series `(a)_k / (b)_k 1F1(a + k; b + k; y)`.
pub fn kummer_scalar(
    a: Complex64,
    b: Complex64,
    y: Complex64,
    k: usize,
    policy: &TruncationPolicy,
) -> Result<ScalarValue> {
    if is_nonpositive_integer(b) {
        return Err(Error::GammaPole {
            component: Component::Scalar,
            at: b,
        });
    }
    let mut lead = Complex64::new(1.0, 0.0);
    for s in 0..k {
        lead *= (a + s as f64) / (b + s as f64);
    }
    let (a, b) = (a + k as f64, b + k as f64);
    let mut t = lead;
    let spread = (a - b).norm();
    let ym = y.norm();
    sum_terms(
        policy,
        |r| {
            if r > 0 {
                let s = (r - 1) as f64;
                t *= (a + s) / (b + s) * y / (s + 1.0);
            }
            t
        },
        |r| {
            let d = b.re + r as f64;
            if d <= 0.0 {
                f64::INFINITY
            } else {
                (1.0 + spread / d) * ym / (r + 1) as f64
            }
        },
    )
}

fn componentwise(
    a: Bicomplex,
    b: Bicomplex,
    y: Bicomplex,
    k: usize,
    policy: &TruncationPolicy,
) -> Result<SeriesValue> {
    let tag = |component| {
        move |e| match e {
            Error::GammaPole { at, .. } => Error::GammaPole { component, at },
            other => other,
        }
    };
    let first = kummer_scalar(a.z1, b.z1, y.z1, k, policy).map_err(tag(Component::First))?;
    let second = kummer_scalar(a.z2, b.z2, y.z2, k, policy).map_err(tag(Component::Second))?;
    Ok(SeriesValue::from_components(first, second))
}

/// `1F1(a; b; Y)` summed componentwise under `policy`.
pub fn kummer_1f1(
    a: Bicomplex,
    b: Bicomplex,
    y: Bicomplex,
    policy: &TruncationPolicy,
) -> Result<SeriesValue> {
    componentwise(a, b, y, 0, policy)
}

/// `k`-th derivative in `Y` of `1F1(a; b; Y)` from the termwise
/// differentiated series.
pub fn kummer_derivative(
    a: Bicomplex,
    b: Bicomplex,
    y: Bicomplex,
    k: usize,
    policy: &TruncationPolicy,
) -> Result<SeriesValue> {
    componentwise(a, b, y, k, policy)
}

/// Defect of `Y W'' + (b - Y) W' - a W` for given `W`, `W'`, `W''`.
pub fn kummer_operator(
    a: Bicomplex,
    b: Bicomplex,
    y: Bicomplex,
    w: Bicomplex,
    dw: Bicomplex,
    d2w: Bicomplex,
) -> Residual {
    Residual::of_terms(&[y * d2w, b * dw, -(y * dw), -(a * w)])
}

/// Kummer equation residual of `1F1(a; b; Y)` with derivatives from the
/// termwise differentiated series.
pub fn kummer_ode_residual(
    a: Bicomplex,
    b: Bicomplex,
    y: Bicomplex,
    policy: &TruncationPolicy,
) -> Result<Residual> {
    let w = kummer_1f1(a, b, y, policy)?.value;
    let dw = kummer_derivative(a, b, y, 1, policy)?.value;
    let d2w = kummer_derivative(a, b, y, 2, policy)?.value;
    Ok(kummer_operator(a, b, y, w, dw, d2w))
}
