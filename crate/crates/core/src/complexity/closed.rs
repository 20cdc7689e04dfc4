//! Closed forms for ground and circular states, evaluated in log space.

use std::f64::consts::{LN_2, PI};

use super::{MeasureReport, Provenance, Space};
use crate::error::{Error, Result};
use crate::functionals::{const_b, entropy_e2_degree0};
use crate::specfun::{lgam, psi};
use crate::states::StateSpec;

fn ln_pi() -> f64 {
    PI.ln()
}

fn check(n: u32, dim: usize, charge: f64) -> Result<()> {
    if dim < 2 || n < 1 || !(charge > 0.0 && charge.is_finite()) {
        return Err(Error::InvalidState(format!(
            "closed forms need n >= 1, D >= 2, Z > 0 (got n={n}, D={dim}, Z={charge})"
        )));
    }
    Ok(())
}

fn report(space: Space, ln_diseq: f64, entropy: f64, angular: f64) -> MeasureReport {
    let disequilibrium = ln_diseq.exp();
    let radial = entropy - angular;
    let total = radial + angular;
    MeasureReport {
        space,
        disequilibrium,
        entropy_radial: radial,
        entropy_angular: angular,
        entropy_total: total,
        complexity: disequilibrium * total.exp(),
        method: Provenance::ClosedForm,
        error_estimate: 0.0,
    }
}

/// S[Y] of the constant harmonic: ln(2π^{D/2}/Γ(D/2)).
pub fn ground_angular_entropy(dim: usize) -> f64 {
    let d = dim as f64;
    LN_2 + 0.5 * d * ln_pi() - lgam(0.5 * d)
}

/// Ground-state disequilibrium, entropy and complexity.
pub fn closed_ground(dim: usize, charge: f64, space: Space) -> Result<MeasureReport> {
    check(1, dim, charge)?;
    let d = dim as f64;
    let ln_z = charge.ln();
    let half_up = lgam(0.5 * (d + 1.0));
    Ok(match space {
        Space::Position => {
            let ln_diseq = d * ln_z - d * (d - 1.0).ln() - 0.5 * (d - 1.0) * ln_pi() - half_up;
            let entropy =
                d * (d - 1.0).ln() - d * LN_2 + 0.5 * (d - 1.0) * ln_pi() + half_up + d - d * ln_z;
            report(space, ln_diseq, entropy, ground_angular_entropy(dim))
        }
        Space::Momentum => {
            let ln_diseq = d * (2.0 * d - 2.0).ln() - d * ln_z - 0.5 * (d + 2.0) * ln_pi()
                + 2.0 * half_up
                + lgam(2.0 + 1.5 * d)
                - lgam(2.0 * d + 2.0);
            let entropy = 0.5 * (d + 1.0) * ln_pi() - d * (d - 1.0).ln() - half_up
                + (d + 1.0) * (psi(d + 1.0) - psi(0.5 * d + 1.0))
                + d * ln_z;
            report(space, ln_diseq, entropy, ground_angular_entropy(dim))
        }
    })
}

/// Digamma combination entering the circular-state momentum entropy.
pub fn circular_momentum_constant(n: u32, dim: usize) -> f64 {
    let nf = n as f64;
    let d = dim as f64;
    (2.0 * nf + d - 1.0) / (2.0 * nf + d - 3.0)
        - (d + 1.0) / (2.0 * nf + d - 2.0)
        - (nf - 1.0) * psi(nf)
        - 0.5 * (d + 1.0) * psi(nf + 0.5 * (d - 2.0))
        + (nf + 0.5 * (d - 1.0)) * psi(nf + 0.5 * (d - 3.0))
}

/// S[Y] of the circular harmonic: every Gegenbauer factor has degree 0.
pub fn circular_angular_entropy(n: u32, dim: usize) -> f64 {
    let spec = StateSpec::circular(n, dim, 1.0).expect("valid circular state");
    let top = n as f64 - 1.0;
    const_b(&spec)
        + (1..=dim.saturating_sub(2))
            .map(|j| entropy_e2_degree0((dim as f64 - j as f64 - 1.0) / 2.0 + top))
            .sum::<f64>()
}

/// Circular-state (all μ = n − 1) disequilibrium, entropy and complexity.
pub fn closed_circular(n: u32, dim: usize, charge: f64, space: Space) -> Result<MeasureReport> {
    check(n, dim, charge)?;
    let nf = n as f64;
    let d = dim as f64;
    let ln_z = charge.ln();
    let ln_two_eta = (2.0 * nf + d - 3.0).ln();
    let g_mid = lgam(nf + 0.5 * (d - 1.0));
    let angular = circular_angular_entropy(n, dim);
    Ok(match space {
        Space::Position => {
            let ln_diseq = d * ln_z + lgam(nf - 0.5) + lgam(2.0 * nf + 0.5 * (d - 3.0))
                - (2.0 * nf - 2.0) * LN_2
                - 0.5 * d * ln_pi()
                - d * ln_two_eta
                - lgam(nf)
                - 2.0 * g_mid;
            let entropy =
                2.0 * nf + d - 2.0 - (nf - 1.0) * (psi(nf) + psi(nf + 0.5 * (d - 1.0))) - d * LN_2
                    + d * ln_two_eta
                    + 0.5 * (d - 1.0) * ln_pi()
                    + lgam(nf)
                    + g_mid
                    - d * ln_z;
            report(space, ln_diseq, entropy, angular)
        }
        Space::Momentum => {
            let ln_diseq = (4.0 * nf + d - 4.0) * LN_2
                + d * ln_two_eta
                + 2.0 * g_mid
                + lgam(2.0 * nf - 1.0)
                + lgam(2.0 * nf + 1.5 * d)
                - d * ln_z
                - 0.5 * (d + 2.0) * ln_pi()
                - 2.0 * lgam(nf)
                - lgam(4.0 * nf + 2.0 * d - 2.0);
            let entropy = circular_momentum_constant(n, dim)
                + (d + 1.0) * LN_2
                + d * ln_z
                + 0.5 * (d + 1.0) * ln_pi()
                + lgam(nf)
                - d * ln_two_eta
                - g_mid;
            report(space, ln_diseq, entropy, angular)
        }
    })
}

/// ln C of a circular state from the single-expression complexity formulas.
///
/// Independent of [`closed_circular`]'s component assembly and safe for very
/// large n and D, where the components themselves over/underflow.
pub fn ln_complexity_circular(n: u32, dim: usize, space: Space) -> Result<f64> {
    check(n, dim, 1.0)?;
    let nf = n as f64;
    let d = dim as f64;
    Ok(match space {
        Space::Position => {
            lgam(nf - 0.5) + lgam(2.0 * nf + 0.5 * (d - 3.0))
                - (2.0 * nf + d - 2.0) * LN_2
                - 0.5 * ln_pi()
                - lgam(nf + 0.5 * (d - 1.0))
                + 2.0 * nf
                + d
                - 2.0
                - (nf - 1.0) * (psi(nf) + psi(nf + 0.5 * (d - 1.0)))
        }
        Space::Momentum => {
            (4.0 * nf + 2.0 * d - 3.0) * LN_2
                + lgam(nf + 0.5 * (d - 1.0))
                + lgam(2.0 * nf - 1.0)
                + lgam(2.0 * nf + 1.5 * d)
                - 0.5 * ln_pi()
                - lgam(nf)
                - lgam(4.0 * nf + 2.0 * d - 2.0)
                + circular_momentum_constant(n, dim)
        }
    })
}

/// ln C of the ground state from the single-expression complexity formulas.
pub fn ln_complexity_ground(dim: usize, space: Space) -> Result<f64> {
    check(1, dim, 1.0)?;
    let d = dim as f64;
    Ok(match space {
        Space::Position => d * (1.0 - LN_2),
        Space::Momentum => {
            d * LN_2 + lgam(0.5 * (d + 1.0)) + lgam(2.0 + 1.5 * d)
                - 0.5 * ln_pi()
                - lgam(2.0 * d + 2.0)
                + (d + 1.0) * (psi(d + 1.0) - psi(0.5 * (d + 2.0)))
        }
    })
}
