//! Bicomplex numbers stored in idempotent form.
//!
//! A bicomplex number `Z = w1 + j w2` (with `w1, w2` in C(i)) is kept as its
//! idempotent pair `(z1, z2)` where `Z = z1 e1 + z2 e2`, `e1 = (1+k)/2`,
//! `e2 = (1-k)/2`, `z1 = w1 - i w2` and `z2 = w1 + i w2`. Ring operations and
//! every holomorphic function act independently on the two components.

mod holomorphy;
mod path;

pub use holomorphy::{cr_check, cr_check_default, CrResidual};
pub use path::{path_integral, ComplexPath, CurvePair};

use std::f64::consts::PI;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex64;

use crate::error::{Error, Result};

const fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Bicomplex {
    /// Coefficient of `e1`.
    pub z1: Complex64,
    /// Coefficient of `e2`.
    pub z2: Complex64,
}

impl Bicomplex {
    pub const ZERO: Bicomplex = Bicomplex::new(c(0.0, 0.0), c(0.0, 0.0));
    pub const ONE: Bicomplex = Bicomplex::new(c(1.0, 0.0), c(1.0, 0.0));
    pub const E1: Bicomplex = Bicomplex::new(c(1.0, 0.0), c(0.0, 0.0));
    pub const E2: Bicomplex = Bicomplex::new(c(0.0, 0.0), c(1.0, 0.0));
    pub const I: Bicomplex = Bicomplex::new(c(0.0, 1.0), c(0.0, 1.0));
    pub const J: Bicomplex = Bicomplex::new(c(0.0, -1.0), c(0.0, 1.0));
    pub const K: Bicomplex = Bicomplex::new(c(1.0, 0.0), c(-1.0, 0.0));

    /// Builds a number from its idempotent components.
    pub const fn new(z1: Complex64, z2: Complex64) -> Self {
        Bicomplex { z1, z2 }
    }

    /// Builds `w1 + j w2`.
    pub fn make(w1: Complex64, w2: Complex64) -> Self {
        let iw2 = Complex64::new(-w2.im, w2.re);
        Bicomplex::new(w1 - iw2, w1 + iw2)
    }

    /// Builds `a + b i + c j + d k`.
    pub fn from_parts(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self::make(Complex64::new(a, b), Complex64::new(c, d))
    }

    /// A complex number `z` embedded as `z e1 + z e2`.
    pub fn from_complex(z: Complex64) -> Self {
        Bicomplex::new(z, z)
    }

    pub fn from_real(x: f64) -> Self {
        Self::from_complex(Complex64::new(x, 0.0))
    }

    pub fn idempotent(&self) -> (Complex64, Complex64) {
        (self.z1, self.z2)
    }

    /// The `(w1, w2)` view with `Z = w1 + j w2`.
    pub fn j_form(&self) -> (Complex64, Complex64) {
        let w1 = (self.z1 + self.z2) * 0.5;
        let d = (self.z1 - self.z2) * 0.5;
        (w1, Complex64::new(-d.im, d.re))
    }

    /// Real coordinates `[a, b, c, d]` of `a + b i + c j + d k`.
    pub fn parts(&self) -> [f64; 4] {
        let (w1, w2) = self.j_form();
        [w1.re, w1.im, w2.re, w2.im]
    }

    pub fn map(self, f: impl Fn(Complex64) -> Complex64) -> Self {
        Bicomplex::new(f(self.z1), f(self.z2))
    }

    pub fn zip_with(self, other: Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        Bicomplex::new(f(self.z1, other.z1), f(self.z2, other.z2))
    }

    /// Applies a fallible componentwise function.
    pub fn try_map(self, f: impl Fn(Complex64) -> Result<Complex64>) -> Result<Self> {
        Ok(Bicomplex::new(f(self.z1)?, f(self.z2)?))
    }

    pub fn components(&self) -> [Complex64; 2] {
        [self.z1, self.z2]
    }

    pub fn is_zero(&self) -> bool {
        self.z1 == Complex64::new(0.0, 0.0) && self.z2 == Complex64::new(0.0, 0.0)
    }

    /// True for nonzero singular elements, i.e. exactly one vanishing component.
    pub fn is_zero_divisor(&self) -> bool {
        let zero = Complex64::new(0.0, 0.0);
        !self.is_zero() && (self.z1 == zero || self.z2 == zero)
    }

    /// Both idempotent components are nonzero.
    pub fn is_invertible(&self) -> bool {
        let zero = Complex64::new(0.0, 0.0);
        self.z1 != zero && self.z2 != zero
    }

    pub fn is_finite(&self) -> bool {
        self.z1.is_finite() && self.z2.is_finite()
    }

    pub fn hyperbolic_norm(&self) -> HyperbolicNorm {
        HyperbolicNorm::new(self.z1.norm(), self.z2.norm())
    }

    pub fn scale(self, s: f64) -> Self {
        Bicomplex::new(self.z1 * s, self.z2 * s)
    }

    pub fn recip(self) -> Result<Self> {
        if !self.is_invertible() {
            return Err(Error::ZeroDivisorDivision);
        }
        Ok(self.map(|z| z.inv()))
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        if !rhs.is_invertible() {
            return Err(Error::ZeroDivisorDivision);
        }
        Ok(self.zip_with(rhs, |a, b| a / b))
    }

    pub fn exp(self) -> Self {
        self.map(|z| z.exp())
    }

    pub fn sin(self) -> Self {
        self.map(|z| z.sin())
    }

    pub fn cos(self) -> Self {
        self.map(|z| z.cos())
    }

    /// Principal logarithm, componentwise.
    pub fn log(self) -> Result<Self> {
        self.log_branch(0)
    }

    /// Logarithm on branch `k` (the argument of each component is shifted by `2 pi k`).
    pub fn log_branch(self, k: i32) -> Result<Self> {
        if !self.is_invertible() {
            return Err(Error::ZeroDivisorLog);
        }
        let shift = 2.0 * PI * f64::from(k);
        Ok(self.map(|z| Complex64::new(z.norm().ln(), z.arg() + shift)))
    }

    /// `exp(E log Z)` with the principal logarithm.
    pub fn pow(self, exponent: Self) -> Result<Self> {
        self.pow_branch(exponent, 0)
    }

    pub fn pow_branch(self, exponent: Self, k: i32) -> Result<Self> {
        let log = self.log_branch(k).map_err(|_| Error::ZeroDivisorPower)?;
        Ok((exponent * log).exp())
    }

    /// Integer power by repeated squaring; zero and zero divisors are allowed
    /// for `n >= 0`.
    pub fn powi(self, n: i32) -> Result<Self> {
        if n < 0 {
            return self.recip().map_err(|_| Error::ZeroDivisorPower)?.powi(-n);
        }
        let mut base = self;
        let mut acc = Bicomplex::ONE;
        let mut e = n as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        Ok(acc)
    }
}

impl fmt::Display for Bicomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::literal::format_bicomplex(self))
    }
}

impl From<f64> for Bicomplex {
    fn from(x: f64) -> Self {
        Bicomplex::from_real(x)
    }
}

impl From<Complex64> for Bicomplex {
    fn from(z: Complex64) -> Self {
        Bicomplex::from_complex(z)
    }
}

impl Add for Bicomplex {
    type Output = Bicomplex;
    fn add(self, rhs: Self) -> Self {
        Bicomplex::new(self.z1 + rhs.z1, self.z2 + rhs.z2)
    }
}

impl Sub for Bicomplex {
    type Output = Bicomplex;
    fn sub(self, rhs: Self) -> Self {
        Bicomplex::new(self.z1 - rhs.z1, self.z2 - rhs.z2)
    }
}

impl Mul for Bicomplex {
    type Output = Bicomplex;
    fn mul(self, rhs: Self) -> Self {
        Bicomplex::new(self.z1 * rhs.z1, self.z2 * rhs.z2)
    }
}

impl Mul<f64> for Bicomplex {
    type Output = Bicomplex;
    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}

impl Mul<Complex64> for Bicomplex {
    type Output = Bicomplex;
    fn mul(self, rhs: Complex64) -> Self {
        Bicomplex::new(self.z1 * rhs, self.z2 * rhs)
    }
}

impl Add<f64> for Bicomplex {
    type Output = Bicomplex;
    fn add(self, rhs: f64) -> Self {
        Bicomplex::new(self.z1 + rhs, self.z2 + rhs)
    }
}

impl Sub<f64> for Bicomplex {
    type Output = Bicomplex;
    fn sub(self, rhs: f64) -> Self {
        Bicomplex::new(self.z1 - rhs, self.z2 - rhs)
    }
}

impl Neg for Bicomplex {
    type Output = Bicomplex;
    fn neg(self) -> Self {
        Bicomplex::new(-self.z1, -self.z2)
    }
}

impl AddAssign for Bicomplex {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl SubAssign for Bicomplex {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl MulAssign for Bicomplex {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl Sum for Bicomplex {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Bicomplex::ZERO, Add::add)
    }
}

impl Product for Bicomplex {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Bicomplex::ONE, Mul::mul)
    }
}

/// The hyperbolic norm `|z1| e1 + |z2| e2`, kept as its two components.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct HyperbolicNorm {
    pub n1: f64,
    pub n2: f64,
}

impl HyperbolicNorm {
    pub const ZERO: HyperbolicNorm = HyperbolicNorm { n1: 0.0, n2: 0.0 };

    pub fn new(n1: f64, n2: f64) -> Self {
        debug_assert!(!(n1 < 0.0) && !(n2 < 0.0));
        HyperbolicNorm { n1, n2 }
    }

    pub fn max(&self) -> f64 {
        self.n1.max(self.n2)
    }

    pub fn components(&self) -> [f64; 2] {
        [self.n1, self.n2]
    }

    pub fn zip_with(self, other: Self, f: impl Fn(f64, f64) -> f64) -> Self {
        HyperbolicNorm::new(f(self.n1, other.n1), f(self.n2, other.n2))
    }

    /// Componentwise maximum.
    pub fn sup(self, other: Self) -> Self {
        self.zip_with(other, f64::max)
    }

    /// Componentwise `self <= other`.
    pub fn within(&self, other: &Self) -> bool {
        self.n1 <= other.n1 && self.n2 <= other.n2
    }

    /// Largest componentwise ratio `self / scale`, with `0/0 = 0`.
    pub fn relative_to(&self, scale: &Self) -> f64 {
        let ratio = |a: f64, b: f64| if a == 0.0 { 0.0 } else { a / b };
        ratio(self.n1, scale.n1).max(ratio(self.n2, scale.n2))
    }

    pub fn scale(self, s: f64) -> Self {
        HyperbolicNorm::new(self.n1 * s, self.n2 * s)
    }

    pub fn as_bicomplex(&self) -> Bicomplex {
        Bicomplex::new(Complex64::new(self.n1, 0.0), Complex64::new(self.n2, 0.0))
    }
}

impl Add for HyperbolicNorm {
    type Output = HyperbolicNorm;
    fn add(self, rhs: Self) -> Self {
        HyperbolicNorm::new(self.n1 + rhs.n1, self.n2 + rhs.n2)
    }
}

impl Mul for HyperbolicNorm {
    type Output = HyperbolicNorm;
    fn mul(self, rhs: Self) -> Self {
        HyperbolicNorm::new(self.n1 * rhs.n1, self.n2 * rhs.n2)
    }
}
