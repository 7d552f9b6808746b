use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use super::Bicomplex;
use crate::error::{Error, Result};
use crate::quadrature::{integrate, integrate_half_line, QuadratureConfig};

type PathFn = Arc<dyn Fn(f64) -> Complex64 + Send + Sync>;

/// A parametrised path `t -> xi(t)` in C(i) on `[a, b]` together with its
/// derivative. `b` may be `+inf`.
#[derive(Clone)]
pub struct ComplexPath {
    point: PathFn,
    tangent: PathFn,
    pub a: f64,
    pub b: f64,
}

impl fmt::Debug for ComplexPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ComplexPath")
            .field("a", &self.a)
            .field("b", &self.b)
            .field("start", &self.point(self.a))
            .finish()
    }
}

impl ComplexPath {
    pub fn new<P, T>(point: P, tangent: T, a: f64, b: f64) -> Self
    where
        P: Fn(f64) -> Complex64 + Send + Sync + 'static,
        T: Fn(f64) -> Complex64 + Send + Sync + 'static,
    {
        ComplexPath {
            point: Arc::new(point),
            tangent: Arc::new(tangent),
            a,
            b,
        }
    }

    /// Straight segment from `from` to `to` on `[0, 1]`.
    pub fn segment(from: Complex64, to: Complex64) -> Self {
        let d = to - from;
        Self::new(move |t| from + d * t, move |_| d, 0.0, 1.0)
    }

    /// Ray `from + t * direction` on `[0, inf)`.
    pub fn ray(from: Complex64, direction: Complex64) -> Self {
        Self::new(
            move |t| from + direction * t,
            move |_| direction,
            0.0,
            f64::INFINITY,
        )
    }

    pub fn point(&self, t: f64) -> Complex64 {
        (self.point)(t)
    }

    pub fn tangent(&self, t: f64) -> Complex64 {
        (self.tangent)(t)
    }

    pub fn is_finite(&self) -> bool {
        self.b.is_finite()
    }

    /// Traverses `self` and then `next`, reparametrised on a single interval.
    /// `self` must be finite.
    pub fn concat(&self, next: &ComplexPath) -> Self {
        let first = self.clone();
        let second = next.clone();
        let split = self.b;
        let shift = next.a - split;
        let (f1, f2) = (first.clone(), second.clone());
        ComplexPath::new(
            move |t| {
                if t <= split {
                    f1.point(t)
                } else {
                    f2.point(t + shift)
                }
            },
            move |t| {
                if t <= split {
                    first.tangent(t)
                } else {
                    second.tangent(t + shift)
                }
            },
            self.a,
            next.b - shift,
        )
    }

    /// The same path restricted to the parameter sub-interval `[a, b]`.
    pub fn restrict(&self, a: f64, b: f64) -> Self {
        ComplexPath {
            a,
            b,
            ..self.clone()
        }
    }
}

/// A bicomplex path given by one complex path per idempotent component.
/// Both share the parameter interval.
#[derive(Debug, Clone)]
pub struct CurvePair {
    pub d1: ComplexPath,
    pub d2: ComplexPath,
}

impl CurvePair {
    pub fn new(d1: ComplexPath, d2: ComplexPath) -> Result<Self> {
        if d1.a != d2.a || d1.b != d2.b {
            return Err(Error::precondition(
                "component paths must share the parameter interval",
            ));
        }
        Ok(CurvePair { d1, d2 })
    }

    /// Straight segment from `from` to `to` in both components.
    pub fn segment(from: Bicomplex, to: Bicomplex) -> Self {
        CurvePair {
            d1: ComplexPath::segment(from.z1, to.z1),
            d2: ComplexPath::segment(from.z2, to.z2),
        }
    }

    pub fn ray(from: Bicomplex, direction: Bicomplex) -> Self {
        CurvePair {
            d1: ComplexPath::ray(from.z1, direction.z1),
            d2: ComplexPath::ray(from.z2, direction.z2),
        }
    }

    pub fn point(&self, t: f64) -> Bicomplex {
        Bicomplex::new(self.d1.point(t), self.d2.point(t))
    }

    pub fn concat(&self, next: &CurvePair) -> Self {
        CurvePair {
            d1: self.d1.concat(&next.d1),
            d2: self.d2.concat(&next.d2),
        }
    }
}

/// `(int_{D1} f1 dxi1) e1 + (int_{D2} f2 dxi2) e2`, where `f` is evaluated on
/// the bicomplex curve `D1(t) e1 + D2(t) e2`.
pub fn path_integral<F>(f: F, path: &CurvePair, quad: &QuadratureConfig) -> Result<Bicomplex>
where
    F: Fn(Bicomplex) -> Bicomplex,
{
    let first = |t: f64| f(path.point(t)).z1 * path.d1.tangent(t);
    let second = |t: f64| f(path.point(t)).z2 * path.d2.tangent(t);
    let (a, b) = (path.d1.a, path.d1.b);
    if b.is_finite() {
        let i1 = integrate(first, a, b, quad)?;
        let i2 = integrate(second, a, b, quad)?;
        Ok(Bicomplex::new(i1.value, i2.value))
    } else {
        let i1 = integrate_half_line(|s| first(a + s), 0.0, quad)?;
        let i2 = integrate_half_line(|s| second(a + s), 0.0, quad)?;
        Ok(Bicomplex::new(i1.value, i2.value))
    }
}
