//! Special functions and quadrature shared by the rest of the crate.

mod gamma;
mod ortho;
mod quad;

pub use gamma::{digamma, ln_gamma};
pub(crate) use gamma::{lgam, psi};
pub use ortho::{Family, LogValue, OrthoPoly};
pub use quad::{integrate, QuadratureConfig, QuadratureResult, RELTOL_ENV};

/// Orthonormal polynomial value; see [`OrthoPoly::eval`].
pub fn eval_orthonormal(poly: &OrthoPoly, x: f64) -> f64 {
    poly.eval(x)
}
