//! LMC shape complexity C = ⟨ρ⟩ e^{S[ρ]} of hydrogenic states in position and
//! momentum space, by three independent routes.

pub mod asymptotic;
mod closed;
pub mod oracle;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functionals::{
    angular_entropy, momentum_disequilibrium, position_disequilibrium, radial_momentum_entropy,
    radial_position_entropy, Estimate, QuarticPower,
};
use crate::specfun::QuadratureConfig;
use crate::states::StateSpec;

pub use closed::{
    circular_angular_entropy, circular_momentum_constant, closed_circular, closed_ground,
    ground_angular_entropy, ln_complexity_circular, ln_complexity_ground,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Space {
    Position,
    Momentum,
}

impl Space {
    pub fn as_str(self) -> &'static str {
        match self {
            Space::Position => "position",
            Space::Momentum => "momentum",
        }
    }
}

/// How a measure should be computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Closed form when the state has one, entropic functionals otherwise.
    #[default]
    Auto,
    ClosedForm,
    Functional,
    DirectOracle,
}

/// How a reported measure was actually computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    ClosedForm,
    Functional,
    DirectOracle,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::ClosedForm => "closed_form",
            Provenance::Functional => "functional",
            Provenance::DirectOracle => "direct_oracle",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasureReport {
    pub space: Space,
    pub disequilibrium: f64,
    pub entropy_radial: f64,
    pub entropy_angular: f64,
    pub entropy_total: f64,
    pub complexity: f64,
    pub method: Provenance,
    /// Propagated relative error bound on the complexity.
    pub error_estimate: f64,
}

fn assemble(
    space: Space,
    method: Provenance,
    diseq: Estimate,
    radial: Estimate,
    angular: Estimate,
) -> MeasureReport {
    let total = radial.value + angular.value;
    MeasureReport {
        space,
        disequilibrium: diseq.value,
        entropy_radial: radial.value,
        entropy_angular: angular.value,
        entropy_total: total,
        complexity: diseq.value * total.exp(),
        method,
        error_estimate: diseq.rel_error() + radial.error + angular.error,
    }
}

fn functional(spec: &StateSpec, space: Space, cfg: &QuadratureConfig) -> Result<MeasureReport> {
    let angular = angular_entropy(spec, cfg)?;
    let (diseq, radial) = match space {
        Space::Position => (
            position_disequilibrium(spec, QuarticPower::default(), cfg)?,
            radial_position_entropy(spec, cfg)?,
        ),
        Space::Momentum => (
            momentum_disequilibrium(spec, cfg)?,
            radial_momentum_entropy(spec, cfg)?,
        ),
    };
    Ok(assemble(
        space,
        Provenance::Functional,
        diseq,
        radial,
        angular,
    ))
}

fn direct(spec: &StateSpec, space: Space, cfg: &QuadratureConfig) -> Result<MeasureReport> {
    let ang = oracle::angular(spec, cfg)?;
    let rad = match space {
        Space::Position => oracle::position_radial(spec, cfg)?,
        Space::Momentum => oracle::momentum_radial(spec, cfg)?,
    };
    let diseq = Estimate {
        value: rad.quartic.value * ang.quartic.value,
        error: rad.quartic.value
            * ang.quartic.value
            * (rad.quartic.rel_error() + ang.quartic.rel_error()),
    };
    Ok(assemble(
        space,
        Provenance::DirectOracle,
        diseq,
        rad.entropy,
        ang.entropy,
    ))
}

fn closed(spec: &StateSpec, space: Space) -> Result<MeasureReport> {
    if spec.is_ground() {
        closed_ground(spec.dim(), spec.charge(), space)
    } else if spec.is_circular() {
        closed_circular(spec.n(), spec.dim(), spec.charge(), space)
    } else {
        Err(Error::ClosedFormUnavailable(format!(
            "n={}, mu={:?}, D={} (only ground and circular states have one)",
            spec.n(),
            spec.mu(),
            spec.dim()
        )))
    }
}

/// Disequilibrium, entropies and complexity of one state in one space.
pub fn measure(
    spec: &StateSpec,
    space: Space,
    method: Method,
    cfg: &QuadratureConfig,
) -> Result<MeasureReport> {
    match method {
        Method::Auto if spec.is_ground() || spec.is_circular() => closed(spec, space),
        Method::Auto | Method::Functional => functional(spec, space, cfg),
        Method::ClosedForm => closed(spec, space),
        Method::DirectOracle => direct(spec, space, cfg),
    }
}

/// C[ρ]·C[γ].
pub fn uncertainty_product(
    spec: &StateSpec,
    method: Method,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let p = measure(spec, Space::Position, method, cfg)?;
    let m = measure(spec, Space::Momentum, method, cfg)?;
    Ok(p.complexity * m.complexity)
}

/// Names of the formulas behind a report, for output metadata.
pub fn formula_names(spec: &StateSpec, space: Space, method: Provenance) -> Vec<&'static str> {
    match (method, space) {
        (Provenance::ClosedForm, Space::Position) if spec.is_ground() => vec![
            "ground-state position disequilibrium",
            "ground-state position entropy",
            "ground-state position complexity (e/2)^D",
        ],
        (Provenance::ClosedForm, Space::Momentum) if spec.is_ground() => vec![
            "ground-state momentum disequilibrium",
            "ground-state momentum entropy",
            "ground-state momentum complexity",
        ],
        (Provenance::ClosedForm, Space::Position) => vec![
            "circular-state position disequilibrium",
            "circular-state position entropy",
            "circular-state position complexity",
        ],
        (Provenance::ClosedForm, Space::Momentum) => vec![
            "circular-state momentum disequilibrium",
            "circular-state momentum entropy",
            "circular-state momentum complexity",
        ],
        (Provenance::Functional, Space::Position) => vec![
            "position disequilibrium via radial quartic K1 and angular quartic K2",
            "radial position entropy A + E1/(2 eta) - D ln Z",
            "hyperspherical entropy B + sum E2",
        ],
        (Provenance::Functional, Space::Momentum) => vec![
            "momentum disequilibrium via radial quartic K3 and angular quartic K2",
            "radial momentum entropy F + E2 + D ln Z",
            "hyperspherical entropy B + sum E2",
        ],
        (Provenance::DirectOracle, _) => vec!["direct quadrature of the density"],
    }
}
