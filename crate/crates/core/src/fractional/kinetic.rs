//! Series solutions of `N(t) - forcing(t) = -c^V D^-V N(t)` and a direct
//! quadrature check of the integral equation.

use std::cell::RefCell;

use num_complex::Complex64;

use crate::bicomplex::{Bicomplex, HyperbolicNorm};
use crate::error::{Error, Result};
use crate::miller_ross::{eval, MRParams};
use crate::quadrature::{integrate, QuadratureConfig};
use crate::series::{Residual, SeriesValue, TruncationPolicy, SMALL_RUN};
use crate::special::{ln_gamma, GammaDomainGuard};

/// Largest tolerated `sum |terms| / |sum|` before a value is reported as
/// meaningless.
const MAX_CANCELLATION: f64 = 1e12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KineticKind {
    /// `forcing = N0`
    Basic,
    /// `forcing = N0 exp(C t)`
    ExpForced,
    /// `forcing = N0 E_{mu k, C}(Z0 t)` with a fixed `k`
    MrForced,
}

impl KineticKind {
    pub fn name(self) -> &'static str {
        match self {
            KineticKind::Basic => "basic",
            KineticKind::ExpForced => "exp",
            KineticKind::MrForced => "mr",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KineticProblem {
    pub kind: KineticKind,
    pub n0: f64,
    pub c: f64,
    pub v: Bicomplex,
    pub c_forcing: Bicomplex,
    pub mu: Bicomplex,
    pub z0: Bicomplex,
    pub k_forcing: u32,
}

impl KineticProblem {
    pub fn basic(n0: f64, c: f64, v: Bicomplex) -> Result<Self> {
        KineticProblem {
            kind: KineticKind::Basic,
            n0,
            c,
            v,
            c_forcing: Bicomplex::ZERO,
            mu: Bicomplex::ZERO,
            z0: Bicomplex::ONE,
            k_forcing: 0,
        }
        .validated()
    }

    pub fn exp_forced(n0: f64, c: f64, v: Bicomplex, c_forcing: Bicomplex) -> Result<Self> {
        KineticProblem {
            kind: KineticKind::ExpForced,
            c_forcing,
            ..Self::basic(n0, c, v)?
        }
        .validated()
    }

    pub fn mr_forced(
        n0: f64,
        c: f64,
        v: Bicomplex,
        c_forcing: Bicomplex,
        mu: Bicomplex,
        z0: Bicomplex,
        k_forcing: u32,
    ) -> Result<Self> {
        KineticProblem {
            kind: KineticKind::MrForced,
            n0,
            c,
            v,
            c_forcing,
            mu,
            z0,
            k_forcing,
        }
        .validated()
    }

    pub fn validated(self) -> Result<Self> {
        if !(self.n0 > 0.0 && self.n0.is_finite()) {
            return Err(Error::precondition("N0 must be positive"));
        }
        if !(self.c > 0.0 && self.c.is_finite()) {
            return Err(Error::precondition("c must be positive"));
        }
        if !GammaDomainGuard::from_bicomplex(self.v).admits_gamma_integral() {
            return Err(Error::precondition("order needs Re(alpha) > |Im(beta)|"));
        }
        if self.kind == KineticKind::MrForced {
            if !GammaDomainGuard::from_bicomplex(self.mu).admits_beta_integral() {
                return Err(Error::precondition("mu needs Re(gamma) + 1 > |Im(delta)|"));
            }
            let lead = self.forcing_order();
            if !(lead.z1.re > -1.0 && lead.z2.re > -1.0) {
                return Err(Error::precondition("forcing order mu k needs Re > -1"));
            }
            if self.z0.is_zero() || self.z0.is_zero_divisor() {
                return Err(Error::ZeroDivisorPower);
            }
        }
        Ok(self)
    }

    fn forcing_order(&self) -> Bicomplex {
        self.mu * self.k_forcing as f64
    }

    /// The right-hand side without the integral term.
    pub fn forcing(&self, t: f64, policy: &TruncationPolicy) -> Result<Bicomplex> {
        Ok(match self.kind {
            KineticKind::Basic => Bicomplex::from_real(self.n0),
            KineticKind::ExpForced => (self.c_forcing * t).exp() * self.n0,
            KineticKind::MrForced => {
                let params = MRParams::new(self.forcing_order(), self.c_forcing);
                eval(&params, self.z0 * t, policy)?.value * self.n0
            }
        })
    }

    /// `c^V`
    pub fn c_power(&self) -> Bicomplex {
        (self.v * self.c.ln()).exp()
    }

    /// Smallest real part of the solution's leading exponent at `t = 0`.
    fn origin_exponent(&self) -> f64 {
        match self.kind {
            KineticKind::MrForced => {
                let lead = self.forcing_order();
                lead.z1.re.min(lead.z2.re).min(0.0)
            }
            _ => 0.0,
        }
    }
}

/// Series evaluator for a kinetic problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KineticSolution {
    pub problem: KineticProblem,
    pub policy: TruncationPolicy,
}

pub fn kinetic_solve(
    problem: &KineticProblem,
    policy: &TruncationPolicy,
) -> Result<KineticSolution> {
    Ok(KineticSolution {
        problem: problem.validated()?,
        policy: *policy,
    })
}

impl KineticSolution {
    /// `N(t)` for `t > 0` with a truncation bound.
    ///
    /// The outer sum over `k` stops under the usual small-term rule once the
    /// observed term ratio is below 1/2 and no longer increasing; its tail is
    /// bounded geometrically and the inner truncation bounds are added.
    pub fn eval(&self, t: f64) -> Result<SeriesValue> {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::precondition("N(t) is evaluated at t > 0"));
        }
        let p = &self.problem;
        match p.kind {
            KineticKind::Basic => {
                let ln_ct = (p.c * t).ln();
                outer_sum(&self.policy, |k| {
                    let sign = if k % 2 == 0 { p.n0 } else { -p.n0 };
                    let kf = k as f64;
                    let term = (p.v * kf)
                        .try_map(|w| Ok((w * ln_ct - ln_gamma(w + 1.0)?).exp() * sign))?;
                    Ok((term, HyperbolicNorm::ZERO))
                })
            }
            KineticKind::ExpForced => {
                let cv = p.c_power();
                let z = Bicomplex::from_real(t);
                outer_sum(&self.policy, |k| {
                    let coeff = signed_power(cv, k) * p.n0;
                    let params = MRParams::new(p.v * k as f64, p.c_forcing);
                    let inner = eval(&params, z, &self.policy)?;
                    Ok((
                        coeff * inner.value,
                        coeff.hyperbolic_norm() * inner.tail_bound,
                    ))
                })
            }
            KineticKind::MrForced => {
                let cv = p.c_power();
                let log_z0 = p.z0.log()?;
                let z = p.z0 * t;
                let lead = p.forcing_order();
                outer_sum(&self.policy, |k| {
                    let order = p.v * k as f64;
                    let coeff = signed_power(cv, k) * (-(log_z0 * order)).exp() * p.n0;
                    let params = MRParams::new(lead + order, p.c_forcing);
                    let inner = eval(&params, z, &self.policy)?;
                    Ok((
                        coeff * inner.value,
                        coeff.hyperbolic_norm() * inner.tail_bound,
                    ))
                })
            }
        }
    }

    /// Largest `t` (up to `2^20`) at which [`KineticSolution::eval`] still
    /// succeeds, located by doubling then bisection; infinite when no failure
    /// was found.
    pub fn empirical_radius(&self) -> f64 {
        let ok = |t: f64| self.eval(t).is_ok();
        let mut lo = 0.0;
        let mut hi = 1.0;
        while ok(hi) {
            lo = hi;
            hi *= 2.0;
            if hi > 1048576.0 {
                return f64::INFINITY;
            }
        }
        for _ in 0..40 {
            let mid = 0.5 * (lo + hi);
            if ok(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }
}

/// `(-w)^k` as `(-1)^k w^k`, i.e. `exp(k (i pi + V ln c))` for `w = c^V`.
fn signed_power(w: Bicomplex, k: usize) -> Bicomplex {
    let mut out = Bicomplex::ONE;
    for _ in 0..k {
        out *= w;
    }
    if k % 2 == 1 {
        -out
    } else {
        out
    }
}

fn outer_sum(
    policy: &TruncationPolicy,
    mut term: impl FnMut(usize) -> Result<(Bicomplex, HyperbolicNorm)>,
) -> Result<SeriesValue> {
    let max_terms = policy.max_terms.saturating_mul(2);
    let mut sum = Bicomplex::ZERO;
    let mut magnitude = [0.0f64; 2];
    let mut inner_tails = HyperbolicNorm::ZERO;
    let mut prev = [0.0f64; 2];
    let mut ratio = [f64::INFINITY; 2];
    let mut run = [0usize; 2];
    for k in 0..max_terms {
        let (t, tail) = term(k)?;
        if !t.is_finite() {
            return Err(Error::SeriesDivergence {
                terms: k + 1,
                ratio: f64::INFINITY,
            });
        }
        sum += t;
        inner_tails = inner_tails + tail;
        let sizes = t.hyperbolic_norm().components();
        let sums = sum.hyperbolic_norm().components();
        let mut done = true;
        for i in 0..2 {
            let size = sizes[i];
            magnitude[i] += size;
            let r = if prev[i] > 0.0 {
                size / prev[i]
            } else if size == 0.0 {
                0.0
            } else {
                f64::INFINITY
            };
            let settled = r < 0.5 && r <= ratio[i];
            ratio[i] = r;
            prev[i] = size;
            if size <= (policy.rel_tol * sums[i]).max(policy.abs_tol) {
                run[i] += 1;
            } else {
                run[i] = 0;
            }
            done &= run[i] >= SMALL_RUN && settled;
        }
        if done {
            for i in 0..2 {
                if magnitude[i] > MAX_CANCELLATION * sums[i] {
                    return Err(Error::SeriesDivergence {
                        terms: k + 1,
                        ratio: magnitude[i] / sums[i],
                    });
                }
            }
            let geometric = HyperbolicNorm::new(
                sizes[0] * ratio[0] / (1.0 - ratio[0]),
                sizes[1] * ratio[1] / (1.0 - ratio[1]),
            );
            return Ok(SeriesValue {
                value: sum,
                terms_used: k + 1,
                tail_bound: geometric + inner_tails,
            });
        }
    }
    let last = ratio[0].max(ratio[1]);
    if last >= 1.0 {
        return Err(Error::SeriesDivergence {
            terms: max_terms,
            ratio: last,
        });
    }
    Err(Error::MaxTermsExceeded { terms: max_terms })
}

/// `|N(t) - forcing(t) + c^V D^-V N(t)|_h` at each grid point, with the
/// Riemann-Liouville integral computed by quadrature.
///
/// With `nu~ = min_i Re nu_i` the substitution `tau = t (1 - u^(1/nu~))`
/// turns `(t - tau)^(nu_i - 1) d tau` into `t^nu_i / nu~ u^(nu_i/nu~ - 1) du`,
/// which is bounded at `u = 0`. Near `u = 1` (`tau = 0`) the interval is
/// graded for the leading power of `N`.
pub fn kinetic_verify(
    problem: &KineticProblem,
    solution: &KineticSolution,
    t_grid: &[f64],
    quad: &QuadratureConfig,
) -> Result<Vec<Residual>> {
    let nu = problem.v.components();
    let nu_min = nu[0].re.min(nu[1].re);
    // N(tau) mixes tau^p, tau^(p + V), ...; a strong grading makes every
    // such power at least a cubic in w
    let m = (4.0 / (1.0 + problem.origin_exponent())).max(1.0);
    let cv = problem.c_power();
    let mut out = Vec::with_capacity(t_grid.len());
    for &t in t_grid {
        let n_t = solution.eval(t)?.value;
        let forcing = problem.forcing(t, &solution.policy)?;
        let mut integral = [Complex64::new(0.0, 0.0); 2];
        for i in 0..2 {
            let failure = RefCell::new(None);
            // the integrand as a function of ln u, so that tau stays accurate
            // as u -> 1
            let integrand = |ln_u: f64| -> Complex64 {
                let tau = -t * (ln_u / nu_min).exp_m1();
                if !(tau > 0.0) || !ln_u.is_finite() {
                    return Complex64::new(0.0, 0.0);
                }
                let kernel = ((nu[i] / nu_min - 1.0) * ln_u).exp();
                match solution.eval(tau) {
                    Ok(v) => kernel * v.value.components()[i],
                    Err(e) => {
                        failure.borrow_mut().get_or_insert(e);
                        Complex64::new(0.0, 0.0)
                    }
                }
            };
            let lower = integrate(|u: f64| integrand(u.ln()), 0.0, 0.5, quad)?;
            let upper = integrate(
                |w: f64| {
                    let s = w.powf(m);
                    integrand((-s).ln_1p()) * m * s / w
                },
                0.0,
                0.5f64.powf(1.0 / m),
                quad,
            )?;
            if let Some(e) = failure.into_inner() {
                return Err(e);
            }
            let ln_t = t.ln();
            let pre = (nu[i] * ln_t - ln_gamma(nu[i])?).exp() / nu_min;
            integral[i] = pre * (lower.value + upper.value);
        }
        let rl = Bicomplex::new(integral[0], integral[1]);
        out.push(Residual::of_terms(&[n_t, -forcing, cv * rl]));
    }
    Ok(out)
}
