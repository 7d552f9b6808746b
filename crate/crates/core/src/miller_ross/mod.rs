//! The bicomplex Miller-Ross function
//! `E_{V,C}(Z) = Z^V sum_r (C Z)^r / Gamma(V + r + 1)`, evaluated
//! componentwise on the idempotent parts, with its recurrences, derivatives,
//! differential equation and the expansion of the prefactor in the order.

mod scalar;

pub use scalar::{integer_order, mr_complex, mr_derivative_series, mr_series, order_power};

use num_complex::Complex64;

use crate::bicomplex::{Bicomplex, HyperbolicNorm};
use crate::error::{Error, Result};
use crate::series::{Residual, ScalarValue, SeriesValue, TruncationPolicy};
use crate::special::{is_nonpositive_integer, GammaDomainGuard};

/// Order `V` and multiplier `C` of `E_{V,C}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MRParams {
    pub v: Bicomplex,
    pub c: Bicomplex,
}

impl MRParams {
    pub fn new(v: Bicomplex, c: Bicomplex) -> Self {
        MRParams { v, c }
    }

    /// Same multiplier, order shifted by `s`.
    pub fn shifted(&self, s: f64) -> Self {
        MRParams::new(self.v + s, self.c)
    }

    pub fn with_order(&self, v: Bicomplex) -> Self {
        MRParams::new(v, self.c)
    }

    pub fn guard(&self) -> GammaDomainGuard {
        GammaDomainGuard::from_bicomplex(self.v)
    }

    /// `(l1, l2)` when `V = -l1 e1 - l2 e2` with `l1, l2 >= 0`.
    pub fn negative_integer_order(&self) -> Option<(u32, u32)> {
        let l = |nu: Complex64| {
            if is_nonpositive_integer(nu) && nu.re >= -(u32::MAX as f64) {
                Some((-nu.re) as u32)
            } else {
                None
            }
        };
        Some((l(self.v.z1)?, l(self.v.z2)?))
    }

    /// True when both components of `V` are integers (of either sign).
    pub fn has_integer_order(&self) -> bool {
        integer_order(self.v.z1).is_some() && integer_order(self.v.z2).is_some()
    }

    /// True when every gamma argument `V + r + 1 + s`, `r >= 0`, `s` in
    /// `shifts`, stays at least `distance` away from the poles.
    pub fn pole_clearance(&self, shifts: std::ops::RangeInclusive<i32>, distance: f64) -> bool {
        shifts.into_iter().all(|s| {
            self.v.components().iter().all(|nu| {
                let w = nu + s as f64 + 1.0;
                if w.re > 0.5 {
                    return true;
                }
                (w - w.re.round()).norm() >= distance
            })
        })
    }
}

fn componentwise(
    v: Bicomplex,
    f: impl Fn(usize, Complex64) -> Result<ScalarValue>,
) -> Result<SeriesValue> {
    let first = f(0, v.z1)?;
    let second = f(1, v.z2)?;
    Ok(SeriesValue::from_components(first, second))
}

/// `E_{V,C}(Z)` with a certified truncation bound.
///
/// `Z` may be zero or a zero divisor only in components where the order is
/// an integer; other cases fail with [`Error::ZeroDivisorPower`].
pub fn eval(params: &MRParams, z: Bicomplex, policy: &TruncationPolicy) -> Result<SeriesValue> {
    let (v, c) = (params.v.components(), params.c.components());
    let zc = z.components();
    componentwise(params.v, |i, _| mr_complex(v[i], c[i], zc[i], policy))
}

/// `sum_r (C Z)^r / Gamma(V + r + 1)`, i.e. `E_{V,C}(Z)` without the `Z^V`
/// prefactor.
pub fn eval_series_factor(
    params: &MRParams,
    z: Bicomplex,
    policy: &TruncationPolicy,
) -> Result<SeriesValue> {
    let x = (params.c * z).components();
    componentwise(params.v, |i, nu| mr_series(nu, x[i], policy))
}

/// `E_{V,C}(Z) = C^-V E_{0,C}(Z)` for `V = -l1 e1 - l2 e2`.
pub fn eval_negative_integer_order(
    params: &MRParams,
    z: Bicomplex,
    policy: &TruncationPolicy,
) -> Result<SeriesValue> {
    let (l1, l2) = params
        .negative_integer_order()
        .ok_or_else(|| Error::precondition("order components must be nonpositive integers"))?;
    if params.c.is_zero_divisor() || params.c.is_zero() {
        return Err(Error::ZeroDivisorPower);
    }
    let base = eval(&params.with_order(Bicomplex::ZERO), z, policy)?;
    let factor = Bicomplex::new(params.c.z1.powi(l1 as i32), params.c.z2.powi(l2 as i32));
    Ok(SeriesValue {
        value: factor * base.value,
        terms_used: base.terms_used,
        tail_bound: factor.hyperbolic_norm() * base.tail_bound,
    })
}

/// `Z^(V + shift) / Gamma(V + 1 + shift)` with a single principal branch for
/// `Z^V`; integer shifts only.
fn power_over_gamma(v: Bicomplex, z: Bicomplex, shift: i32) -> Result<Bicomplex> {
    let zc = z.components();
    let vc = v.components();
    let f = |i: usize| -> Result<Complex64> {
        let p = order_power(zc[i], vc[i] + shift as f64)?;
        Ok(p * crate::special::reciprocal_gamma(vc[i] + 1.0 + shift as f64))
    };
    Ok(Bicomplex::new(f(0)?, f(1)?))
}

/// Which of the shifted-order recurrences to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Recurrence {
    /// `Z^3 E_V = C Z^3 E_{V+1} + (V+1)(V+2)(V+3) [E_{V+3} - C E_{V+4}]`
    Ii,
    /// `Z^2 E_V = Z^{V+2}/Gamma(V+1) + C^2 Z^2 E_{V+2} + C (V+2)(V+3) [E_{V+3} - C E_{V+4}]`
    Iii,
    /// `Z^2 E_V = Z^{V+2}/Gamma(V+1) + C Z^{V+3}/Gamma(V+2) + C^3 Z^2 E_{V+3}
    ///  + C^2 (V+3)(V+4) [E_{V+4} - C E_{V+5}]`
    Iv,
}

impl Recurrence {
    pub const ALL: [Recurrence; 3] = [Recurrence::Ii, Recurrence::Iii, Recurrence::Iv];

    pub fn name(self) -> &'static str {
        match self {
            Recurrence::Ii => "ii",
            Recurrence::Iii => "iii",
            Recurrence::Iv => "iv",
        }
    }
}

/// Defect of a shifted-order recurrence; `scale` is the largest term of the
/// identity.
pub fn recurrence_residual(
    id: Recurrence,
    params: &MRParams,
    z: Bicomplex,
    policy: &TruncationPolicy,
) -> Result<Residual> {
    let (v, c) = (params.v, params.c);
    let e = |s: f64| eval(&params.shifted(s), z, policy).map(|x| x.value);
    let one = Bicomplex::ONE;
    let z2 = z * z;
    let terms = match id {
        Recurrence::Ii => {
            let z3 = z2 * z;
            let p = (v + one) * (v + 2.0) * (v + 3.0);
            vec![
                z3 * e(0.0)?,
                -(c * z3 * e(1.0)?),
                -(p * e(3.0)?),
                p * c * e(4.0)?,
            ]
        }
        Recurrence::Iii => {
            let p = c * (v + 2.0) * (v + 3.0);
            vec![
                z2 * e(0.0)?,
                -(z2 * power_over_gamma(v, z, 0)?),
                -(c * c * z2 * e(2.0)?),
                -(p * e(3.0)?),
                p * c * e(4.0)?,
            ]
        }
        Recurrence::Iv => {
            let p = c * c * (v + 3.0) * (v + 4.0);
            vec![
                z2 * e(0.0)?,
                -(z2 * power_over_gamma(v, z, 0)?),
                -(c * z2 * power_over_gamma(v, z, 1)?),
                -(c * c * c * z2 * e(3.0)?),
                -(p * e(4.0)?),
                p * c * e(5.0)?,
            ]
        }
    };
    Ok(Residual::of_terms(&terms))
}

/// `d^k/dZ^k E_{V,C}(Z) = sum_{p=1}^{k} C^(k-p) Z^(V-p) / Gamma(V-p+1)
/// + C^k E_{V,C}(Z)`.
pub fn derivative_k(
    params: &MRParams,
    z: Bicomplex,
    k: u32,
    policy: &TruncationPolicy,
) -> Result<Bicomplex> {
    let c = params.c;
    let mut total = Bicomplex::ZERO;
    for p in 1..=k {
        let cpow = c.powi((k - p) as i32)?;
        total += cpow * power_over_gamma(params.v, z, -(p as i32))?;
    }
    Ok(total + c.powi(k as i32)? * eval(params, z, policy)?.value)
}

/// `d^k/dZ^k E_{V,C}(Z)` from the termwise differentiated series.
pub fn derivative_series(
    params: &MRParams,
    z: Bicomplex,
    k: u32,
    policy: &TruncationPolicy,
) -> Result<SeriesValue> {
    let (v, c, zc) = (params.v.components(), params.c.components(), z.components());
    componentwise(params.v, |i, _| {
        mr_derivative_series(v[i], c[i], zc[i], k as usize, policy)
    })
}

/// `d^k/dZ^k E_{V+M,C}(Z) = E_{V+M-k,C}(Z)` for positive-integer `M`. When
/// `k` exceeds a component of `M` the closed form of [`derivative_k`] at
/// order `V + M` is used instead.
pub fn derivative_shifted(
    params: &MRParams,
    m: Bicomplex,
    z: Bicomplex,
    k: u32,
    policy: &TruncationPolicy,
) -> Result<Bicomplex> {
    let mut least = u32::MAX;
    for mi in m.components() {
        match integer_order(mi) {
            Some(n) if n > 0 => least = least.min(n as u32),
            _ => {
                return Err(Error::precondition(
                    "shift components must be positive integers",
                ))
            }
        }
    }
    let raised = params.with_order(params.v + m);
    if k <= least {
        Ok(eval(&raised.shifted(-(k as f64)), z, policy)?.value)
    } else {
        derivative_k(&raised, z, k, policy)
    }
}

/// Defect of `Z U'' + (1 - V - C Z) U' + (V - 1) C U` for supplied `U`,
/// `U'`, `U''`; `scale` is the largest of its terms.
pub fn mr_operator(
    params: &MRParams,
    z: Bicomplex,
    u: Bicomplex,
    du: Bicomplex,
    d2u: Bicomplex,
) -> Residual {
    let (v, c) = (params.v, params.c);
    Residual::of_terms(&[z * d2u, du, -(v * du), -(c * z * du), v * c * u, -(c * u)])
}

/// Residual of the second-order equation satisfied by `E_{V,C}`, with
/// derivatives from [`derivative_k`].
pub fn ode_residual(
    params: &MRParams,
    z: Bicomplex,
    policy: &TruncationPolicy,
) -> Result<Residual> {
    let u = eval(params, z, policy)?.value;
    let du = derivative_k(params, z, 1, policy)?;
    let d2u = derivative_k(params, z, 2, policy)?;
    Ok(mr_operator(params, z, u, du, d2u))
}

/// `A sum_{k<K} (V log Z0)^k / k!` with `A = sum_r (C Z0)^r / Gamma(V+r+1)`:
/// the expansion of the prefactor `Z0^V = exp(V log Z0)` in powers of `V`,
/// with `A` held fixed.
pub fn taylor_in_order(
    params: &MRParams,
    z0: Bicomplex,
    terms: u32,
    policy: &TruncationPolicy,
) -> Result<Bicomplex> {
    let a = eval_series_factor(params, z0, policy)?.value;
    let x = params.v * z0.log()?;
    let mut term = Bicomplex::ONE;
    let mut sum = Bicomplex::ZERO;
    for k in 0..terms {
        if k > 0 {
            term = term * x * (1.0 / k as f64);
        }
        sum += term;
    }
    Ok(a * sum)
}

/// Componentwise bound `|E_{V,C}(Z)|` plus tail, convenient for tolerances.
pub fn magnitude(value: &SeriesValue) -> HyperbolicNorm {
    value.value.hyperbolic_norm() + value.tail_bound
}
