//! Information-theoretic measures of D-dimensional hydrogenic states.
//!
//! Disequilibrium ⟨ρ⟩ = ∫ρ², Shannon entropy S = −∫ρ ln ρ and the LMC shape
//! complexity C = ⟨ρ⟩ e^S of stationary states in position and momentum
//! space, computed three ways: closed forms (ground and circular states),
//! decomposition into entropic functionals of orthonormal Laguerre and
//! Gegenbauer polynomials, and a direct quadrature oracle.

pub mod cli;
pub mod complexity;
pub mod error;
pub mod functionals;
pub mod specfun;
pub mod states;

pub use error::{Error, Result};
