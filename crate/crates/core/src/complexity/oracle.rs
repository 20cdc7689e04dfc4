//! Direct quadrature of ∫ρ² and −∫ρ ln ρ from the wavefunctions themselves.
//!
//! No entropic functional or digamma constant is used: the radial integrals
//! evaluate R(r) and M(p) pointwise, the angular ones evaluate the θ_j factors
//! of |Y|². Because |Y|² is a product over angles and ln|Y|² a sum, the
//! hyperspherical integrals reduce to one-dimensional ones over each θ_j.
//! Radial position integrals use r = λx; radial momentum integrals use
//! p = (Z/η) tan(χ/2) on χ ∈ (0, π).

use std::f64::consts::PI;

use crate::error::Result;
use crate::functionals::{checked, laguerre_splits, Estimate};
use crate::specfun::QuadratureConfig;
use crate::states::StateSpec;

/// Radial pieces (∫R⁴ r^{D−1} dr, −∫R² ln R² r^{D−1} dr) or their momentum analogues.
#[derive(Debug, Clone, Copy)]
pub struct RadialIntegrals {
    pub quartic: Estimate,
    pub entropy: Estimate,
}

/// Angular pieces (∫|Y|⁴ dΩ, −∫|Y|² ln|Y|² dΩ).
#[derive(Debug, Clone, Copy)]
pub struct AngularIntegrals {
    pub quartic: Estimate,
    pub entropy: Estimate,
}

fn entropy_term(ln_density: f64, ln_measure: f64) -> f64 {
    if ln_density == f64::NEG_INFINITY {
        return 0.0;
    }
    let mass = (ln_density + ln_measure).exp();
    if mass <= 1e-300 {
        0.0
    } else {
        -mass * ln_density
    }
}

pub fn position_radial(spec: &StateSpec, cfg: &QuadratureConfig) -> Result<RadialIntegrals> {
    let lambda = spec.derived().lambda;
    let d = spec.dim() as f64;
    // dr r^{D-1} = λ^D x^{D-1} dx
    let ln_measure = move |x: f64| d * lambda.ln() + (d - 1.0) * x.ln();
    let c = cfg.with_splits(laguerre_splits(&spec.laguerre_factor(), 1.0));
    let quartic = checked(
        "direct position quartic",
        |x| {
            let ln_r2 = spec.ln_radial_position_sq(lambda * x);
            if ln_r2 == f64::NEG_INFINITY {
                0.0
            } else {
                (2.0 * ln_r2 + ln_measure(x)).exp()
            }
        },
        0.0,
        f64::INFINITY,
        &c,
    )?;
    let entropy = checked(
        "direct position radial entropy",
        |x| entropy_term(spec.ln_radial_position_sq(lambda * x), ln_measure(x)),
        0.0,
        f64::INFINITY,
        &c,
    )?;
    Ok(RadialIntegrals { quartic, entropy })
}

pub fn momentum_radial(spec: &StateSpec, cfg: &QuadratureConfig) -> Result<RadialIntegrals> {
    let scale = spec.charge() / spec.derived().eta;
    let d = spec.dim() as f64;
    let p_of = move |chi: f64| scale * (0.5 * chi).tan();
    // dp p^{D-1} = p^{D-1} (Z/η) / (2 cos²(χ/2)) dχ
    let ln_measure = move |chi: f64| {
        let c = (0.5 * chi).cos();
        (d - 1.0) * p_of(chi).ln() + scale.ln() - (2.0 * c * c).ln()
    };
    let mut splits: Vec<f64> = spec
        .momentum_factor()
        .roots()
        .into_iter()
        .map(f64::acos)
        .collect();
    splits.extend([0.25 * PI, 0.5 * PI, 0.75 * PI]);
    let c = cfg.with_splits(splits);
    let quartic = checked(
        "direct momentum quartic",
        |chi| {
            let ln_m2 = spec.ln_radial_momentum_sq(p_of(chi));
            if ln_m2 == f64::NEG_INFINITY {
                0.0
            } else {
                (2.0 * ln_m2 + ln_measure(chi)).exp()
            }
        },
        0.0,
        PI,
        &c,
    )?;
    let entropy = checked(
        "direct momentum radial entropy",
        |chi| entropy_term(spec.ln_radial_momentum_sq(p_of(chi)), ln_measure(chi)),
        0.0,
        PI,
        &c,
    )?;
    Ok(RadialIntegrals { quartic, entropy })
}

pub fn angular(spec: &StateSpec, cfg: &QuadratureConfig) -> Result<AngularIntegrals> {
    let two_pi = 2.0 * PI;
    let mut quartic = Estimate::exact(1.0 / two_pi);
    let mut quartic_rel = 0.0;
    let mut entropy = Estimate::exact(two_pi.ln());
    let dim = spec.dim();
    for j in 1..=dim.saturating_sub(2) {
        let (poly, _) = spec.angular_factor_poly(j);
        let mut splits: Vec<f64> = poly.roots().into_iter().map(f64::acos).collect();
        splits.push(0.5 * PI);
        let c = cfg.with_splits(splits);
        let sin_power = (dim - 1 - j) as f64;
        let ln_w = move |t: f64| sin_power * t.sin().ln();
        let q = checked(
            &format!("direct angular quartic j={j}"),
            |t| {
                let h = spec.ln_angular_factor(j, t);
                if h == f64::NEG_INFINITY {
                    0.0
                } else {
                    (2.0 * h + ln_w(t)).exp()
                }
            },
            0.0,
            PI,
            &c,
        )?;
        let s = checked(
            &format!("direct angular entropy j={j}"),
            |t| entropy_term(spec.ln_angular_factor(j, t), ln_w(t)),
            0.0,
            PI,
            &c,
        )?;
        quartic.value *= q.value;
        quartic_rel += q.rel_error();
        entropy.value += s.value;
        entropy.error += s.error;
    }
    quartic.error = quartic_rel * quartic.value;
    Ok(AngularIntegrals { quartic, entropy })
}

/// ∫|Y|² dΩ over the factorized angular measure; 1 for a normalized harmonic.
pub fn angular_norm(spec: &StateSpec, cfg: &QuadratureConfig) -> Result<Estimate> {
    let dim = spec.dim();
    let mut total = Estimate::exact(1.0);
    for j in 1..=dim.saturating_sub(2) {
        let sin_power = (dim - 1 - j) as f64;
        let e = checked(
            &format!("angular norm j={j}"),
            |t| {
                let h = spec.ln_angular_factor(j, t);
                if h == f64::NEG_INFINITY {
                    0.0
                } else {
                    (h + sin_power * t.sin().ln()).exp()
                }
            },
            0.0,
            PI,
            cfg,
        )?;
        total.value *= e.value;
        total.error += e.error;
    }
    Ok(total)
}

/// ∫R² r^{D−1} dr, evaluated in r directly.
pub fn position_radial_norm(spec: &StateSpec, cfg: &QuadratureConfig) -> Result<Estimate> {
    let d = spec.dim() as f64;
    let lambda = spec.derived().lambda;
    let c = cfg.with_splits(
        laguerre_splits(&spec.laguerre_factor(), 1.0)
            .into_iter()
            .map(|x| x * lambda),
    );
    checked(
        "position radial norm",
        |r| (spec.ln_radial_position_sq(r) + (d - 1.0) * r.ln()).exp(),
        0.0,
        f64::INFINITY,
        &c,
    )
}

/// ∫M² p^{D−1} dp, evaluated in p directly.
pub fn momentum_radial_norm(spec: &StateSpec, cfg: &QuadratureConfig) -> Result<Estimate> {
    let d = spec.dim() as f64;
    let scale = spec.charge() / spec.derived().eta;
    let mut splits: Vec<f64> = spec
        .momentum_factor()
        .roots()
        .into_iter()
        .map(|y| scale * ((1.0 - y) / (1.0 + y)).sqrt())
        .collect();
    splits.extend([0.25, 0.5, 1.0, 2.0, 4.0].map(|m| m * scale));
    let c = cfg.with_splits(splits);
    checked(
        "momentum radial norm",
        |p| (spec.ln_radial_momentum_sq(p) + (d - 1.0) * p.ln()).exp(),
        0.0,
        f64::INFINITY,
        &c,
    )
}
