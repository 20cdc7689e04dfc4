//! Dimensional (D → ∞) and Rydberg (n → ∞) asymptotes of circular-state
//! complexities, in log form.

use std::f64::consts::{LN_2, PI};

use serde::{Deserialize, Serialize};

use super::{ln_complexity_circular, Space};
use crate::error::{Error, Result};
use crate::specfun::{lgam, psi};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Limit {
    Dimensional,
    Rydberg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    PosComplexity,
    MomComplexity,
    Product,
}

/// An asymptote evaluated at the circular state (n, D).
///
/// For the dimensional limit n is the fixed parameter and D the evaluation
/// point; for the Rydberg limit the roles swap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsymptoticRequest {
    pub limit: Limit,
    pub quantity: Quantity,
    pub n: u32,
    pub dim: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticValue {
    pub ln_value: f64,
    /// exp(ln_value) when it is finite and nonzero in double precision.
    pub value: Option<f64>,
}

impl AsymptoticValue {
    fn from_ln(ln_value: f64) -> Self {
        let v = ln_value.exp();
        AsymptoticValue {
            ln_value,
            value: (v.is_finite() && v > 0.0).then_some(v),
        }
    }
}

fn check(req: &AsymptoticRequest) -> Result<()> {
    if req.n < 1 || req.dim < 2 {
        return Err(Error::InvalidRequest(format!(
            "asymptotic request needs n >= 1 and D >= 2 (got n={}, D={})",
            req.n, req.dim
        )));
    }
    Ok(())
}

fn ln3() -> f64 {
    3f64.ln()
}

/// ln C[ρ_cs] ~ (D+2n−2)(1 − ln 2) + (1−n)ψ(n) + ln Γ(n−½) − ½ ln π as D → ∞.
pub fn ln_position_dimensional(n: u32, dim: usize) -> f64 {
    let nf = n as f64;
    (dim as f64 + 2.0 * nf - 2.0) * (1.0 - LN_2) + (1.0 - nf) * psi(nf) + lgam(nf - 0.5)
        - 0.5 * PI.ln()
}

/// ln C[γ_cs] as D → ∞; at n = 1 this is also the ground-state asymptote.
pub fn ln_momentum_dimensional(n: u32, dim: usize) -> f64 {
    let nf = n as f64;
    let d = dim as f64;
    d * (1.5 * ln3() - 2.0 * LN_2) + (2.0 * nf - 0.5) * ln3() + lgam(2.0 * nf - 1.0)
        - (4.0 * nf - 2.5) * LN_2
        - lgam(nf)
        + (1.0 - nf) * psi(nf)
        - 0.5
}

/// The ground-state momentum asymptote with exponents 3/2·(D−1) and 2D − 3/2.
///
/// This variant is a factor (2/3)³ below [`ln_momentum_dimensional`] at n = 1
/// and so does not track the closed form; it is exposed for comparison only.
pub fn ln_ground_momentum_dimensional_alt(dim: usize) -> f64 {
    let d = dim as f64;
    1.5 * (d - 1.0) * ln3() - (2.0 * d - 1.5) * LN_2 - 0.5
}

/// ln(C[ρ_cs]C[γ_cs]) as D → ∞.
pub fn ln_product_dimensional(n: u32, dim: usize) -> f64 {
    let nf = n as f64;
    let d = dim as f64;
    d * (1.5 * ln3() + 1.0 - 3.0 * LN_2) + (2.0 * nf - 0.5) * ln3() - (4.0 * nf - 2.5) * LN_2
        + 2.0 * lgam(nf - 0.5)
        - PI.ln()
        + 2.0 * nf
        - 2.5
        - 2.0 * (nf - 1.0) * psi(nf)
}

/// ln(C[ρ_gs]C[γ_gs]) ~ D ln(3^{3/2}e/8) + (3/2) ln(3/(2e^{1/3})).
pub fn ln_ground_product_dimensional(dim: usize) -> f64 {
    let d = dim as f64;
    d * (1.5 * ln3() + 1.0 - 3.0 * LN_2) + 1.5 * (ln3() - LN_2 - 1.0 / 3.0)
}

/// Rydberg asymptote (D−1)/2 · (1 − ln 2) of either complexity.
pub fn ln_single_rydberg(dim: usize) -> f64 {
    0.5 * (dim as f64 - 1.0) * (1.0 - LN_2)
}

/// Log of the asymptote selected by `req`, evaluated at (n, D).
pub fn asymptotic(req: &AsymptoticRequest) -> Result<AsymptoticValue> {
    check(req)?;
    let ln = match (req.limit, req.quantity) {
        (Limit::Dimensional, Quantity::PosComplexity) => ln_position_dimensional(req.n, req.dim),
        (Limit::Dimensional, Quantity::MomComplexity) => ln_momentum_dimensional(req.n, req.dim),
        (Limit::Dimensional, Quantity::Product) if req.n == 1 => {
            ln_ground_product_dimensional(req.dim)
        }
        (Limit::Dimensional, Quantity::Product) => ln_product_dimensional(req.n, req.dim),
        (Limit::Rydberg, Quantity::Product) => 2.0 * ln_single_rydberg(req.dim),
        (Limit::Rydberg, _) => ln_single_rydberg(req.dim),
    };
    Ok(AsymptoticValue::from_ln(ln))
}

/// Log of the exact closed-form quantity at the circular state (n, D).
pub fn exact(req: &AsymptoticRequest) -> Result<AsymptoticValue> {
    check(req)?;
    let pos = || ln_complexity_circular(req.n, req.dim, Space::Position);
    let mom = || ln_complexity_circular(req.n, req.dim, Space::Momentum);
    let ln = match req.quantity {
        Quantity::PosComplexity => pos()?,
        Quantity::MomComplexity => mom()?,
        Quantity::Product => pos()? + mom()?,
    };
    Ok(AsymptoticValue::from_ln(ln))
}
