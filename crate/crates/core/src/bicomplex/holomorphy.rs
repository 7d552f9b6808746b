//! Numerical check of the bicomplex Cauchy-Riemann equations.

use num_complex::Complex64;

use super::Bicomplex;

/// Default finite-difference step.
pub const DEFAULT_STEP: f64 = 1e-5;

/// The two Cauchy-Riemann residuals of `f = f1 + j f2` at a point.
///
/// `first` bounds `|df1/dw1 - df2/dw2|` and `second` bounds
/// `|df1/dw2 + df2/dw1|`. Each partial derivative is estimated along both the
/// real and the imaginary step direction; disagreement between the two (a
/// non-holomorphic component) is folded into the residual of the equation the
/// partial appears in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrResidual {
    pub first: f64,
    pub second: f64,
}

impl CrResidual {
    pub fn max(&self) -> f64 {
        self.first.max(self.second)
    }
}

#[derive(Clone, Copy)]
enum Var {
    W1,
    W2,
}

struct Partials {
    f1: Complex64,
    f2: Complex64,
}

fn shifted(z: Bicomplex, var: Var, delta: Complex64) -> Bicomplex {
    match var {
        Var::W1 => z + Bicomplex::from_complex(delta),
        Var::W2 => z + Bicomplex::J * delta,
    }
}

/// Central difference of both j-form components of `f` along `var`, with a
/// complex step `unit * h`, Richardson-extrapolated over `h` and `h/2`.
fn partials<F: Fn(Bicomplex) -> Bicomplex>(
    f: &F,
    z: Bicomplex,
    var: Var,
    unit: Complex64,
    h: f64,
) -> Partials {
    let central = |step: f64| {
        let d = unit * step;
        let up = f(shifted(z, var, d)).j_form();
        let down = f(shifted(z, var, -d)).j_form();
        ((up.0 - down.0) / (d * 2.0), (up.1 - down.1) / (d * 2.0))
    };
    let (a1, a2) = central(h);
    let (b1, b2) = central(h / 2.0);
    Partials {
        f1: (b1 * 4.0 - a1) / 3.0,
        f2: (b2 * 4.0 - a2) / 3.0,
    }
}

/// Cauchy-Riemann residuals of `f` at `z` with step `h` (clamped to
/// `[1e-7, 1e-3]`).
pub fn cr_check<F: Fn(Bicomplex) -> Bicomplex>(f: F, z: Bicomplex, h: f64) -> CrResidual {
    let h = h.clamp(1e-7, 1e-3);
    let re = Complex64::new(1.0, 0.0);
    let im = Complex64::new(0.0, 1.0);

    let w1_re = partials(&f, z, Var::W1, re, h);
    let w1_im = partials(&f, z, Var::W1, im, h);
    let w2_re = partials(&f, z, Var::W2, re, h);
    let w2_im = partials(&f, z, Var::W2, im, h);

    let mut first = 0.0_f64;
    let mut second = 0.0_f64;
    for (d1, d2) in [(&w1_re, &w2_re), (&w1_im, &w2_im)] {
        first = first.max((d1.f1 - d2.f2).norm());
        second = second.max((d2.f1 + d1.f2).norm());
    }
    // holomorphy of each component in each variable
    first = first
        .max((w1_re.f1 - w1_im.f1).norm())
        .max((w2_re.f2 - w2_im.f2).norm());
    second = second
        .max((w2_re.f1 - w2_im.f1).norm())
        .max((w1_re.f2 - w1_im.f2).norm());
    CrResidual { first, second }
}

pub fn cr_check_default<F: Fn(Bicomplex) -> Bicomplex>(f: F, z: Bicomplex) -> CrResidual {
    cr_check(f, z, DEFAULT_STEP)
}
