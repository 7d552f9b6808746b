//! Gamma, beta and confluent hypergeometric functions.

mod gamma;
mod kummer;

pub use gamma::{
    beta_complex, bicomplex_gamma, bicomplex_reciprocal_gamma, complex_gamma, gamma_ratio,
    is_nonpositive_integer, ln_gamma, reciprocal_gamma, sinpi, GammaDomainGuard,
};
pub use kummer::{
    kummer_1f1, kummer_derivative, kummer_ode_residual, kummer_operator, kummer_scalar,
};
