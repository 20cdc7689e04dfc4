//! Self-validation suite run by `hydrocomplex validate`.

use std::f64::consts::E;

use crate::complexity::{closed_circular, closed_ground, measure, oracle, Method, Space};
use crate::functionals::{position_disequilibrium, QuarticPower};
use crate::specfun::QuadratureConfig;
use crate::states::StateSpec;
use crate::Result;

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Copy)]
pub struct Grid {
    pub max_dim: usize,
    pub max_n: u32,
}

impl Grid {
    pub fn full() -> Self {
        Grid {
            max_dim: 8,
            max_n: 5,
        }
    }

    pub fn quick() -> Self {
        Grid {
            max_dim: 4,
            max_n: 2,
        }
    }

    fn dims(&self) -> impl Iterator<Item = usize> {
        2..=self.max_dim
    }

    /// Ground and circular states, plus one non-circular state per (n, D) where one exists.
    fn states(&self) -> Vec<StateSpec> {
        let mut out = Vec::new();
        for d in self.dims() {
            for n in 1..=self.max_n {
                out.push(StateSpec::circular(n, d, 1.0).expect("valid"));
                if n >= 2 {
                    let mut mu = vec![0; d - 1];
                    mu[0] = n as i64 - 2;
                    out.push(StateSpec::new(d, 1.0, n, mu).expect("valid"));
                }
            }
        }
        out
    }
}

const SPACES: [Space; 2] = [Space::Position, Space::Momentum];

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

// Runs `f` over the items, tracking the worst deviation; errors count as failures.
fn check<T>(
    name: &'static str,
    tol: f64,
    items: impl IntoIterator<Item = T>,
    f: impl Fn(&T) -> Result<f64>,
    label: impl Fn(&T) -> String,
) -> CheckOutcome {
    let mut worst = 0.0f64;
    let mut worst_at = String::new();
    for item in items {
        match f(&item) {
            Ok(dev) if dev.is_nan() || dev > worst => {
                worst = if dev.is_nan() { f64::INFINITY } else { dev };
                worst_at = label(&item);
            }
            Ok(_) => {}
            Err(e) => {
                return CheckOutcome {
                    name,
                    passed: false,
                    detail: format!("{} failed: {e}", label(&item)),
                }
            }
        }
    }
    CheckOutcome {
        name,
        passed: worst <= tol,
        detail: format!(
            "max deviation {worst:.2e} (tol {tol:.0e}){}",
            if worst_at.is_empty() {
                String::new()
            } else {
                format!(" at {worst_at}")
            }
        ),
    }
}

fn describe(s: &StateSpec) -> String {
    format!("D={} n={} mu={:?}", s.dim(), s.n(), s.mu())
}

pub fn run_checks(grid: Grid, power: QuarticPower, cfg: &QuadratureConfig) -> Vec<CheckOutcome> {
    let states = grid.states();
    let covered: Vec<StateSpec> = states.iter().filter(|s| s.is_circular()).cloned().collect();
    let mut out = Vec::new();

    out.push(check(
        "normalization",
        1e-8,
        states.iter(),
        |s| {
            let a = oracle::position_radial_norm(s, cfg)?.value;
            let b = oracle::momentum_radial_norm(s, cfg)?.value;
            let c = oracle::angular_norm(s, cfg)?.value;
            Ok((a - 1.0).abs().max((b - 1.0).abs()).max((c - 1.0).abs()))
        },
        |s| describe(s),
    ));

    out.push(check(
        "ground-state disequilibrium",
        1e-8,
        grid.dims(),
        |&d| {
            let s = StateSpec::ground(d, 1.0)?;
            let f = position_disequilibrium(&s, power, cfg)?.value;
            Ok(rel(
                f,
                closed_ground(d, 1.0, Space::Position)?.disequilibrium,
            ))
        },
        |d| format!("D={d}"),
    ));

    out.push(check(
        "circular-state disequilibrium",
        1e-8,
        covered.iter(),
        |s| {
            let f = position_disequilibrium(s, power, cfg)?.value;
            Ok(rel(
                f,
                closed_circular(s.n(), s.dim(), 1.0, Space::Position)?.disequilibrium,
            ))
        },
        |s| describe(s),
    ));

    out.push(check(
        "n=1 reduction",
        1e-12,
        grid.dims().flat_map(|d| SPACES.map(|sp| (d, sp))),
        |&(d, sp)| {
            let c = closed_circular(1, d, 1.0, sp)?;
            let g = closed_ground(d, 1.0, sp)?;
            Ok(rel(c.disequilibrium, g.disequilibrium)
                .max(rel(c.complexity, g.complexity))
                .max((c.entropy_total - g.entropy_total).abs()))
        },
        |(d, sp)| format!("D={d} {}", sp.as_str()),
    ));

    out.push(check(
        "three-way agreement",
        1e-6,
        covered
            .iter()
            .flat_map(|s| SPACES.map(|sp| (s.clone(), sp))),
        |(s, sp)| {
            let c = measure(s, *sp, Method::ClosedForm, cfg)?.complexity;
            let f = measure(s, *sp, Method::Functional, cfg)?.complexity;
            let o = measure(s, *sp, Method::DirectOracle, cfg)?.complexity;
            Ok(rel(f, c).max(rel(o, c)))
        },
        |(s, sp)| format!("{} {}", describe(s), sp.as_str()),
    ));

    out.push(check(
        "functional vs oracle (non-circular)",
        1e-6,
        states
            .iter()
            .filter(|s| !s.is_circular())
            .flat_map(|s| SPACES.map(|sp| (s.clone(), sp))),
        |(s, sp)| {
            let f = measure(s, *sp, Method::Functional, cfg)?.complexity;
            let o = measure(s, *sp, Method::DirectOracle, cfg)?.complexity;
            Ok(rel(f, o))
        },
        |(s, sp)| format!("{} {}", describe(s), sp.as_str()),
    ));

    out.push(check(
        "Z invariance",
        1e-10,
        states.iter().flat_map(|s| SPACES.map(|sp| (s.clone(), sp))),
        |(s, sp)| {
            let base = measure(s, *sp, Method::Auto, cfg)?.complexity;
            let mut worst = 0.0f64;
            for z in [0.5, 2.0, 10.0, 137.0] {
                worst = worst.max(rel(
                    measure(&s.with_charge(z)?, *sp, Method::Auto, cfg)?.complexity,
                    base,
                ));
            }
            Ok(worst)
        },
        |(s, sp)| format!("{} {}", describe(s), sp.as_str()),
    ));

    out.push(check(
        "ordering in n",
        0.0,
        grid.dims().flat_map(|d| SPACES.map(|sp| (d, sp))),
        |&(d, sp)| {
            let c: Vec<f64> = (1..=grid.max_n)
                .map(|n| closed_circular(n, d, 1.0, sp).map(|r| r.complexity))
                .collect::<Result<_>>()?;
            Ok(if c.windows(2).all(|w| w[1] < w[0]) {
                0.0
            } else {
                1.0
            })
        },
        |(d, sp)| format!("D={d} {}", sp.as_str()),
    ));

    let half_e = E / 2.0;
    out.push(check(
        "uncertainty product >= e/2",
        0.0,
        states.iter(),
        |s| {
            let p = measure(s, Space::Position, Method::Auto, cfg)?.complexity
                * measure(s, Space::Momentum, Method::Auto, cfg)?.complexity;
            Ok((half_e - p).max(0.0))
        },
        |s| describe(s),
    ));

    out
}
