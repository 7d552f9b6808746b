//! Riemann-Liouville integrals and derivatives of bicomplex order applied to
//! powers of a real variable and, termwise, to Miller-Ross series; the
//! fractional kinetic equations and their solutions.

mod kinetic;

pub use kinetic::{kinetic_solve, kinetic_verify, KineticKind, KineticProblem, KineticSolution};

use num_complex::Complex64;

use crate::bicomplex::Bicomplex;
use crate::error::{Error, Result};
use crate::miller_ross::{eval, MRParams};
use crate::series::{sum_terms, Residual, SeriesValue, TruncationPolicy};
use crate::special::{gamma_ratio, reciprocal_gamma};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// `D^-M`
    Integral,
    /// `D^M`
    Derivative,
}

/// An order `M = m1 + j m2` together with the operator it is used for.
///
/// Integration needs `Re(m1) > |Im(m2)|` (both idempotent components with
/// positive real part), differentiation needs `Re(m1) > 0`. `M = 0` is
/// accepted in both modes as the identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FractionalOrder {
    m: Bicomplex,
    mode: Mode,
}

impl FractionalOrder {
    pub fn new(m: Bicomplex, mode: Mode) -> Result<Self> {
        let (m1, m2) = m.j_form();
        let ok = m.is_zero()
            || match mode {
                Mode::Integral => m1.re > m2.im.abs(),
                Mode::Derivative => m1.re > 0.0,
            };
        if !ok {
            return Err(Error::precondition(match mode {
                Mode::Integral => "integration order needs Re(m1) > |Im(m2)|",
                Mode::Derivative => "differentiation order needs Re(m1) > 0",
            }));
        }
        Ok(FractionalOrder { m, mode })
    }

    pub fn integral(m: Bicomplex) -> Result<Self> {
        Self::new(m, Mode::Integral)
    }

    pub fn derivative(m: Bicomplex) -> Result<Self> {
        Self::new(m, Mode::Derivative)
    }

    pub fn order(&self) -> Bicomplex {
        self.m
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// The exponent shift: `+M` for integration, `-M` for differentiation.
    pub fn shift(&self) -> Bicomplex {
        match self.mode {
            Mode::Integral => self.m,
            Mode::Derivative => -self.m,
        }
    }
}

/// `coeff t^exponent` with a bicomplex exponent and real `t > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerTerm {
    pub coeff: Bicomplex,
    pub exponent: Bicomplex,
}

impl PowerTerm {
    pub fn monomial(u: Bicomplex) -> Self {
        PowerTerm {
            coeff: Bicomplex::ONE,
            exponent: u,
        }
    }

    /// `D^-M t^u = Gamma(u+1)/Gamma(u+M+1) t^(u+M)` or
    /// `D^M t^u = Gamma(u+1)/Gamma(u-M+1) t^(u-M)`, componentwise. Needs
    /// `Re u > -1` in both components; a pole of the denominator gamma gives
    /// an exactly zero coefficient.
    pub fn apply(&self, order: &FractionalOrder) -> Result<PowerTerm> {
        let u = self.exponent;
        if !(u.z1.re > -1.0 && u.z2.re > -1.0) {
            return Err(Error::precondition("power rule needs Re u > -1"));
        }
        let shifted = u + order.shift();
        let factor = Bicomplex::new(
            gamma_ratio(u.z1 + 1.0, shifted.z1 + 1.0)?,
            gamma_ratio(u.z2 + 1.0, shifted.z2 + 1.0)?,
        );
        Ok(PowerTerm {
            coeff: self.coeff * factor,
            exponent: shifted,
        })
    }

    pub fn eval(&self, t: f64) -> Result<Bicomplex> {
        if !(t > 0.0) {
            return Err(Error::precondition(
                "power functions are evaluated at t > 0",
            ));
        }
        let ln_t = t.ln();
        Ok(self.coeff * self.exponent.map(|e| (e * ln_t).exp()))
    }
}

/// `D^-M t^u` at `t`.
pub fn rl_integral_power(order: &FractionalOrder, u: Bicomplex, t: f64) -> Result<Bicomplex> {
    if order.mode() != Mode::Integral {
        return Err(Error::precondition("expected an integration order"));
    }
    PowerTerm::monomial(u).apply(order)?.eval(t)
}

/// `D^M t^u` at `t`.
pub fn rl_derivative_power(order: &FractionalOrder, u: Bicomplex, t: f64) -> Result<Bicomplex> {
    if order.mode() != Mode::Derivative {
        return Err(Error::precondition("expected a differentiation order"));
    }
    PowerTerm::monomial(u).apply(order)?.eval(t)
}

/// The operator of `order` applied termwise to
/// `E_{V,C}(Z0 t) = Z0^V sum_r (C Z0)^r t^(V+r) / Gamma(V+r+1)`.
///
/// Each power `t^(V+r)` is mapped by the power rule; terms whose gamma
/// coefficient `1/Gamma(V+r+1)` vanishes are dropped.
pub fn rl_apply_mr(
    order: &FractionalOrder,
    params: &MRParams,
    z0: Bicomplex,
    t: f64,
    policy: &TruncationPolicy,
) -> Result<SeriesValue> {
    if z0.is_zero_divisor() || z0.is_zero() {
        return Err(Error::ZeroDivisorPower);
    }
    if !(t > 0.0) {
        return Err(Error::precondition("the variable must be positive"));
    }
    let x = params.c * z0 * t;
    let shift = order.shift();
    let ln_t = t.ln();
    let log_z0 = z0.log()?;
    let component = |i: usize| -> Result<crate::series::ScalarValue> {
        let nu = params.v.components()[i];
        let s = shift.components()[i];
        let x = x.components()[i];
        let xm = x.norm();
        let lead = ((nu + s) * ln_t + nu * log_z0.components()[i]).exp();
        let mut power = Complex64::new(1.0, 0.0);
        let value = sum_terms(
            policy,
            |r| {
                if r > 0 {
                    power *= x;
                }
                let u1 = nu + (r + 1) as f64;
                let rg = reciprocal_gamma(u1);
                if rg == Complex64::new(0.0, 0.0) {
                    return rg;
                }
                power * rg * gamma_ratio(u1, u1 + s).unwrap_or(Complex64::new(0.0, 0.0))
            },
            |r| {
                let d = (nu + s).re + (r + 1) as f64;
                if d <= 0.0 {
                    f64::INFINITY
                } else {
                    xm / d
                }
            },
        )?;
        Ok(value.scaled(lead))
    };
    Ok(SeriesValue::from_components(component(0)?, component(1)?))
}

/// Principal `exp(a log Y)` for a real exponent.
fn real_power(y: Bicomplex, a: f64) -> Result<Bicomplex> {
    if a == 0.0 {
        return Ok(Bicomplex::ONE);
    }
    Ok((y.log()? * a).exp())
}

/// Defect of `[D^(p/q) - (Z0 C)^(p/q)] y_q = sum_{r<p} C^r Z0^(V+r-p+p/q)
/// t^(V+r-p) / Gamma(V+r-p+1)` with
/// `y_q = sum_{k=1}^{q} C^((k-1)p/q) E_{V-p+kp/q,C}(Z0 t)`.
///
/// `V = alpha + j beta` must have real `alpha`, purely imaginary `beta` and
/// `alpha + 1 > |beta|`, i.e. real idempotent components above `-1`.
/// `(Z0 C)^(p/q)` is taken as `exp(p/q (log Z0 + log C))` so that its branch
/// matches the powers of `Z0` and `C` appearing separately.
pub fn yq_residual(
    p: u32,
    q: u32,
    v: Bicomplex,
    c: Bicomplex,
    z0: Bicomplex,
    t: f64,
    policy: &TruncationPolicy,
) -> Result<Residual> {
    if p == 0 || q == 0 {
        return Err(Error::precondition("p and q must be positive"));
    }
    let (alpha, beta) = v.j_form();
    if alpha.im != 0.0 || beta.re != 0.0 || !(alpha.re + 1.0 > beta.im.abs()) {
        return Err(Error::precondition(
            "order needs real alpha, imaginary beta and alpha + 1 > |beta|",
        ));
    }
    let ratio = p as f64 / q as f64;
    let m = FractionalOrder::derivative(Bicomplex::from_real(ratio))?;
    let log_c = c.log()?;
    let log_z0 = z0.log()?;
    let mut dy = Bicomplex::ZERO;
    let mut y = Bicomplex::ZERO;
    for k in 1..=q {
        let weight = real_power(c, (k - 1) as f64 * ratio)?;
        let params = MRParams::new(v - p as f64 + k as f64 * ratio, c);
        dy += weight * rl_apply_mr(&m, &params, z0, t, policy)?.value;
        y += weight * eval(&params, z0 * t, policy)?.value;
    }
    let zc = ((log_z0 + log_c) * ratio).exp();
    let mut terms = vec![dy, -(zc * y)];
    let ln_t = t.ln();
    for r in 0..p {
        let e = v + (r as f64 - p as f64);
        let cr = c.powi(r as i32)?;
        let z_part = (log_z0 * (e + ratio)).exp();
        let t_part = e.map(|w| (w * ln_t).exp());
        let g = (e + 1.0).map(reciprocal_gamma);
        terms.push(-(cr * z_part * t_part * g));
    }
    Ok(Residual::of_terms(&terms))
}
