//! Bicomplex numerics: idempotent-form arithmetic, gamma and Kummer
//! functions, the bicomplex Miller-Ross function with its recurrences,
//! derivatives and integral representations, and Riemann-Liouville
//! fractional calculus with kinetic equations.

// `!(x > 0.0)` is used on purpose so NaN fails every guard.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bicomplex;
pub mod error;
pub mod fractional;
pub mod integral_reps;
pub mod literal;
pub mod miller_ross;
pub mod quadrature;
pub mod series;
pub mod special;

pub use bicomplex::{
    cr_check, cr_check_default, path_integral, Bicomplex, ComplexPath, CrResidual, CurvePair,
    HyperbolicNorm,
};
pub use error::{Component, Error, Result};
pub use literal::{format_bicomplex, parse_bicomplex, parse_complex, parse_grid, ParseError};
pub use num_complex::Complex64;
pub use quadrature::{Estimate, InfiniteMap, QuadratureConfig};
pub use series::{Residual, ScalarValue, SeriesValue, TruncationPolicy};
