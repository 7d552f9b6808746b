//! Truncation policy, certified series summation and residual reports shared
//! by the series-based modules.

use num_complex::Complex64;

use crate::bicomplex::{Bicomplex, HyperbolicNorm};
use crate::error::{Error, Result};

/// Number of consecutive small terms required before a series may stop.
pub const SMALL_RUN: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPolicy {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_terms: usize,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        TruncationPolicy {
            rel_tol: 1e-14,
            abs_tol: 1e-300,
            max_terms: 10_000,
        }
    }
}

impl TruncationPolicy {
    pub fn new(rel_tol: f64, abs_tol: f64, max_terms: usize) -> Result<Self> {
        if !(rel_tol > 0.0) || !(abs_tol >= 0.0) || max_terms < 8 {
            return Err(Error::precondition(
                "truncation policy needs rel_tol > 0, abs_tol >= 0, max_terms >= 8",
            ));
        }
        Ok(TruncationPolicy {
            rel_tol,
            abs_tol,
            max_terms,
        })
    }

    pub fn with_max_terms(self, max_terms: usize) -> Self {
        TruncationPolicy { max_terms, ..self }
    }
}

/// A bicomplex series value with its truncation certificate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: Bicomplex,
    /// Largest number of terms used by either component.
    pub terms_used: usize,
    /// Componentwise bound on the truncation error of `value`.
    pub tail_bound: HyperbolicNorm,
}

impl SeriesValue {
    pub fn from_components(first: ScalarValue, second: ScalarValue) -> Self {
        SeriesValue {
            value: Bicomplex::new(first.value, second.value),
            terms_used: first.terms.max(second.terms),
            tail_bound: HyperbolicNorm::new(first.tail, second.tail),
        }
    }
}

/// One component of a series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarValue {
    pub value: Complex64,
    /// Sum of the moduli of the summed terms, in the scale of `value`. The
    /// ratio `magnitude / |value|` measures cancellation.
    pub magnitude: f64,
    pub tail: f64,
    pub terms: usize,
}

impl ScalarValue {
    pub fn exact(value: Complex64) -> Self {
        ScalarValue {
            value,
            magnitude: value.norm(),
            tail: 0.0,
            terms: 0,
        }
    }

    /// `magnitude / |value|`, infinite when everything cancelled.
    pub fn condition(&self) -> f64 {
        if self.magnitude == 0.0 {
            1.0
        } else {
            self.magnitude / self.value.norm()
        }
    }

    pub fn scaled(self, s: Complex64) -> Self {
        let m = s.norm();
        ScalarValue {
            value: self.value * s,
            magnitude: self.magnitude * m,
            tail: self.tail * m,
            terms: self.terms,
        }
    }
}

/// Sums `term(0) + term(1) + ...` under `policy`.
///
/// `ratio_bound(r)` must bound `|term(s + 1) / term(s)|` for every `s >= r`
/// (or be infinite when no such bound is available). The series stops after
/// term `r` once [`SMALL_RUN`] consecutive terms are below
/// `max(rel_tol |sum|, abs_tol)` and `q = ratio_bound(r) < 1/2`; the tail is
/// then bounded by `|term(r)| q / (1 - q)`.
pub fn sum_terms(
    policy: &TruncationPolicy,
    mut term: impl FnMut(usize) -> Complex64,
    ratio_bound: impl Fn(usize) -> f64,
) -> Result<ScalarValue> {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut magnitude = 0.0;
    let mut run = 0;
    let mut last_ratio = 0.0f64;
    let mut prev = 0.0f64;
    for r in 0..policy.max_terms {
        let t = term(r);
        let size = t.norm();
        if !size.is_finite() {
            return Err(Error::SeriesDivergence {
                terms: r + 1,
                ratio: f64::INFINITY,
            });
        }
        if prev > 0.0 {
            last_ratio = size / prev;
        }
        prev = size;
        sum += t;
        magnitude += size;
        if size <= (policy.rel_tol * sum.norm()).max(policy.abs_tol) {
            run += 1;
        } else {
            run = 0;
        }
        if run >= SMALL_RUN {
            let q = ratio_bound(r);
            if q < 0.5 {
                return Ok(ScalarValue {
                    value: sum,
                    magnitude,
                    tail: size * q / (1.0 - q),
                    terms: r + 1,
                });
            }
        }
    }
    if last_ratio >= 1.0 {
        return Err(Error::SeriesDivergence {
            terms: policy.max_terms,
            ratio: last_ratio,
        });
    }
    Err(Error::MaxTermsExceeded {
        terms: policy.max_terms,
    })
}

/// Size of an identity defect together with the size of the quantities it
/// was formed from.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Residual {
    pub norm: HyperbolicNorm,
    pub scale: HyperbolicNorm,
}

impl Residual {
    /// Residual of `lhs - rhs`, scaled by the larger side.
    pub fn between(lhs: Bicomplex, rhs: Bicomplex) -> Self {
        Residual {
            norm: (lhs - rhs).hyperbolic_norm(),
            scale: lhs.hyperbolic_norm().sup(rhs.hyperbolic_norm()),
        }
    }

    /// Residual of a sum of terms that should vanish, scaled by the largest
    /// term.
    pub fn of_terms(terms: &[Bicomplex]) -> Self {
        let total: Bicomplex = terms.iter().copied().sum();
        let scale = terms
            .iter()
            .fold(HyperbolicNorm::ZERO, |acc, t| acc.sup(t.hyperbolic_norm()));
        Residual {
            norm: total.hyperbolic_norm(),
            scale,
        }
    }

    /// Largest componentwise `norm / scale`.
    pub fn relative(&self) -> f64 {
        self.norm.relative_to(&self.scale)
    }

    pub fn absolute(&self) -> f64 {
        self.norm.max()
    }
}
