//! D-dimensional hydrogenic stationary states: quantum numbers, wavefunctions
//! and probability densities in position and momentum space.
//!
//! All quantities are in Hartree atomic units. Radial wavefunctions are
//! evaluated as sign / log-magnitude pairs and exponentiated only when a
//! linear value is requested.

use std::f64::consts::{LN_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::{LogValue, OrthoPoly};

/// Quantum numbers of a stationary state: dimension D, nuclear charge Z,
/// principal number n and hyperangular numbers (μ₁ ≡ l, μ₂, …, μ_{D−1} ≡ m).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateSpec {
    dim: usize,
    charge: f64,
    n: u32,
    mu: Vec<i64>,
}

/// Scalars derived from a [`StateSpec`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DerivedParams {
    /// η = n + (D−3)/2.
    pub eta: f64,
    /// Grand orbital angular momentum L = l + (D−3)/2.
    pub grand_l: f64,
    /// Length scale λ = η/(2Z).
    pub lambda: f64,
    /// α_j = (D−j−1)/2 for j = 1..D−2.
    pub alpha: Vec<f64>,
}

impl StateSpec {
    pub fn new(dim: usize, charge: f64, n: u32, mu: Vec<i64>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidState(format!(
                "dimension D = {dim} must satisfy D >= 2"
            )));
        }
        if !(charge > 0.0 && charge.is_finite()) {
            return Err(Error::InvalidState(format!(
                "nuclear charge Z = {charge} must satisfy Z > 0"
            )));
        }
        if n < 1 {
            return Err(Error::InvalidState(
                "principal number must satisfy n >= 1".into(),
            ));
        }
        if mu.len() != dim - 1 {
            return Err(Error::InvalidState(format!(
                "expected D-1 = {} hyperangular numbers, got {}",
                dim - 1,
                mu.len()
            )));
        }
        let d = mu.len();
        for j in 0..d.saturating_sub(1) {
            if mu[j] < 0 {
                return Err(Error::InvalidState(format!(
                    "mu_{} = {} violates mu_{} >= 0",
                    j + 1,
                    mu[j],
                    j + 1
                )));
            }
            let next = if j + 1 == d - 1 {
                mu[j + 1].abs()
            } else {
                mu[j + 1]
            };
            if mu[j] < next {
                return Err(Error::InvalidState(format!(
                    "mu_{} = {} < {}mu_{}{} = {} violates l = mu_1 >= mu_2 >= ... >= |mu_{}|",
                    j + 1,
                    mu[j],
                    if j + 1 == d - 1 { "|" } else { "" },
                    j + 2,
                    if j + 1 == d - 1 { "|" } else { "" },
                    next,
                    d
                )));
            }
        }
        let l = if d == 1 { mu[0].abs() } else { mu[0] };
        if l > n as i64 - 1 {
            return Err(Error::InvalidState(format!(
                "l = {l} violates 0 <= l <= n-1 = {}",
                n - 1
            )));
        }
        Ok(StateSpec { dim, charge, n, mu })
    }

    /// The ground state n = 1, all μ = 0.
    pub fn ground(dim: usize, charge: f64) -> Result<Self> {
        Self::new(dim, charge, 1, vec![0; dim.saturating_sub(1)])
    }

    /// The circular state of principal number n: all μ = n − 1.
    pub fn circular(n: u32, dim: usize, charge: f64) -> Result<Self> {
        let top = n.saturating_sub(1) as i64;
        Self::new(dim, charge, n, vec![top; dim.saturating_sub(1)])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn charge(&self) -> f64 {
        self.charge
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn mu(&self) -> &[i64] {
        &self.mu
    }

    /// Same quantum numbers with a different nuclear charge.
    pub fn with_charge(&self, charge: f64) -> Result<Self> {
        Self::new(self.dim, charge, self.n, self.mu.clone())
    }

    /// Orbital number l ≡ μ₁ (|m| when D = 2).
    pub fn l(&self) -> u32 {
        self.mu_abs(1) as u32
    }

    /// μ_j for j = 1..D−1, with the magnetic number taken in absolute value.
    pub fn mu_abs(&self, j: usize) -> i64 {
        let v = self.mu[j - 1];
        if j == self.mu.len() {
            v.abs()
        } else {
            v
        }
    }

    pub fn is_ground(&self) -> bool {
        self.n == 1
    }

    pub fn is_circular(&self) -> bool {
        let top = self.n as i64 - 1;
        (1..=self.mu.len()).all(|j| self.mu_abs(j) == top)
    }

    pub fn derived(&self) -> DerivedParams {
        let d = self.dim as f64;
        let eta = self.n as f64 + (d - 3.0) / 2.0;
        DerivedParams {
            eta,
            grand_l: self.l() as f64 + (d - 3.0) / 2.0,
            lambda: eta / (2.0 * self.charge),
            alpha: (1..=self.dim.saturating_sub(2))
                .map(|j| (d - j as f64 - 1.0) / 2.0)
                .collect(),
        }
    }

    /// E = −Z²/(2η²).
    pub fn energy(&self) -> f64 {
        let eta = self.derived().eta;
        -self.charge * self.charge / (2.0 * eta * eta)
    }

    /// Degree n − l − 1 shared by the radial Laguerre and momentum Gegenbauer factors.
    pub fn radial_degree(&self) -> usize {
        (self.n - 1 - self.l()) as usize
    }

    /// L̃^{2L+1}_{n−l−1}; the parameter 2L+1 = 2l + D − 2 is an integer.
    pub fn laguerre_factor(&self) -> OrthoPoly {
        let alpha = (2 * self.l() as usize + self.dim - 2) as f64;
        OrthoPoly::laguerre(self.radial_degree(), alpha).expect("alpha >= 0")
    }

    /// C̃^{L+1}_{n−l−1} of the momentum radial function.
    pub fn momentum_factor(&self) -> OrthoPoly {
        let lambda = self.l() as f64 + (self.dim as f64 - 1.0) / 2.0;
        OrthoPoly::gegenbauer(self.radial_degree(), lambda).expect("lambda >= 1/2")
    }

    /// Gegenbauer factor of θ_j (j = 1..D−2) and the power μ_{j+1} of sin θ_j.
    pub fn angular_factor_poly(&self, j: usize) -> (OrthoPoly, i64) {
        let (hi, lo) = (self.mu_abs(j), self.mu_abs(j + 1));
        let alpha_j = (self.dim as f64 - j as f64 - 1.0) / 2.0;
        let poly = OrthoPoly::gegenbauer((hi - lo) as usize, alpha_j + lo as f64)
            .expect("parameter >= 1/2");
        (poly, lo)
    }

    /// ln R²(r) with R the position radial function; −∞ at nodes.
    pub fn ln_radial_position_sq(&self, r: f64) -> f64 {
        let dp = self.derived();
        let x = r / dp.lambda;
        let poly = self.laguerre_factor().eval_log(x);
        if poly.is_zero() {
            return f64::NEG_INFINITY;
        }
        let l = self.l();
        let power = if l == 0 { 0.0 } else { 2.0 * l as f64 * x.ln() };
        -(self.dim as f64) * dp.lambda.ln() - (2.0 * dp.eta).ln() + power - x + 2.0 * poly.ln_abs
    }

    /// R_{n,l}(r) in sign / log-magnitude form.
    pub fn radial_position_log(&self, r: f64) -> LogValue {
        let sign = self
            .laguerre_factor()
            .eval_log(r / self.derived().lambda)
            .sign;
        if sign == 0.0 {
            return LogValue::ZERO;
        }
        LogValue {
            sign,
            ln_abs: 0.5 * self.ln_radial_position_sq(r),
        }
    }

    pub fn radial_position(&self, r: f64) -> f64 {
        self.radial_position_log(r).value()
    }

    /// ln M²(p) with M the momentum radial function; −∞ at nodes.
    pub fn ln_radial_momentum_sq(&self, p: f64) -> f64 {
        let dp = self.derived();
        let u = dp.eta * p / self.charge;
        let y = (1.0 - u * u) / (1.0 + u * u);
        let poly = self.momentum_factor().eval_log(y);
        if poly.is_zero() {
            return f64::NEG_INFINITY;
        }
        let ln_1pu2 = if u > 1e100 {
            2.0 * u.ln() + (1.0 / (u * u)).ln_1p()
        } else {
            (u * u).ln_1p()
        };
        let l = self.l();
        let power = if l == 0 { 0.0 } else { l as f64 * u.ln() };
        let d = self.dim as f64;
        2.0 * ((dp.grand_l + 2.0) * LN_2 + 0.5 * d * (dp.eta / self.charge).ln() + power
            - (dp.grand_l + 2.0) * ln_1pu2
            + poly.ln_abs)
    }

    /// M_{n,l}(p) in sign / log-magnitude form.
    pub fn radial_momentum_log(&self, p: f64) -> LogValue {
        let dp = self.derived();
        let u = dp.eta * p / self.charge;
        let sign = self
            .momentum_factor()
            .eval_log((1.0 - u * u) / (1.0 + u * u))
            .sign;
        if sign == 0.0 {
            return LogValue::ZERO;
        }
        LogValue {
            sign,
            ln_abs: 0.5 * self.ln_radial_momentum_sq(p),
        }
    }

    pub fn radial_momentum(&self, p: f64) -> f64 {
        self.radial_momentum_log(p).value()
    }

    /// ln of the θ_j factor [C̃(cos θ)]² (sin θ)^{2μ_{j+1}} of |Y|², j = 1..D−2.
    pub fn ln_angular_factor(&self, j: usize, theta: f64) -> f64 {
        let (poly, power) = self.angular_factor_poly(j);
        let c = poly.eval_log(theta.cos());
        if c.is_zero() {
            return f64::NEG_INFINITY;
        }
        let sin_part = if power == 0 {
            0.0
        } else {
            2.0 * power as f64 * theta.sin().ln()
        };
        2.0 * c.ln_abs + sin_part
    }

    /// |Y_{l,{μ}}(Ω)|² at angles (θ₁, …, θ_{D−2}, φ).
    pub fn angular_density(&self, angles: &[f64]) -> Result<f64> {
        self.check_angles(angles)?;
        let ln: f64 = (1..=self.dim - 2)
            .map(|j| self.ln_angular_factor(j, angles[j - 1]))
            .sum();
        Ok(ln.exp() / (2.0 * PI))
    }

    fn check_angles(&self, angles: &[f64]) -> Result<()> {
        if angles.len() != self.dim - 1 {
            return Err(Error::InvalidAngle(format!(
                "expected D-1 = {} angles, got {}",
                self.dim - 1,
                angles.len()
            )));
        }
        let (thetas, phi) = angles.split_at(angles.len() - 1);
        for (j, &t) in thetas.iter().enumerate() {
            if !(0.0..=PI).contains(&t) {
                return Err(Error::InvalidAngle(format!(
                    "theta_{} = {t} outside [0, pi]",
                    j + 1
                )));
            }
        }
        let phi = phi[0];
        if !(0.0..2.0 * PI).contains(&phi) {
            return Err(Error::InvalidAngle(format!("phi = {phi} outside [0, 2pi)")));
        }
        Ok(())
    }

    /// ρ(r, Ω) = R²(r) |Y(Ω)|².
    pub fn position_density(&self, r: f64, angles: &[f64]) -> Result<f64> {
        let ang = self.angular_density(angles)?;
        Ok(self.ln_radial_position_sq(r).exp() * ang)
    }

    /// γ(p, Ω) = M²(p) |Y(Ω)|².
    pub fn momentum_density(&self, p: f64, angles: &[f64]) -> Result<f64> {
        let ang = self.angular_density(angles)?;
        Ok(self.ln_radial_momentum_sq(p).exp() * ang)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_messages_name_the_inequality() {
        let e = StateSpec::new(3, 1.0, 2, vec![2, 0]).unwrap_err();
        assert!(e.to_string().contains("l <= n-1"), "{e}");
        let e = StateSpec::new(4, 1.0, 3, vec![1, 2, 0]).unwrap_err();
        assert!(e.to_string().contains("mu_1 >= mu_2"), "{e}");
        let e = StateSpec::new(3, 1.0, 3, vec![1, -2]).unwrap_err();
        assert!(e.to_string().contains("|mu_2|"), "{e}");
        assert!(StateSpec::new(1, 1.0, 1, vec![]).is_err());
        assert!(StateSpec::new(3, 0.0, 1, vec![0, 0]).is_err());
        assert!(StateSpec::new(3, 1.0, 0, vec![0, 0]).is_err());
        assert!(StateSpec::new(3, 1.0, 1, vec![0]).is_err());
    }

    #[test]
    fn negative_magnetic_numbers() {
        let s = StateSpec::new(3, 1.0, 3, vec![2, -1]).unwrap();
        assert_eq!(s.mu_abs(2), 1);
        let s = StateSpec::new(2, 1.0, 3, vec![-2]).unwrap();
        assert_eq!(s.l(), 2);
        assert!(s.is_circular());
    }

    #[test]
    fn derived_params() {
        let s = StateSpec::ground(3, 1.0).unwrap();
        let d = s.derived();
        assert_eq!((d.eta, d.grand_l, d.lambda), (1.0, 0.0, 0.5));
        let s = StateSpec::ground(2, 1.0).unwrap();
        let d = s.derived();
        assert_eq!((d.eta, d.grand_l), (0.5, -0.5));
        assert!(d.alpha.is_empty());
        let s = StateSpec::new(5, 2.0, 3, vec![2, 0, 0, 0]).unwrap();
        let d = s.derived();
        assert_eq!((d.eta, d.grand_l, d.lambda), (4.0, 3.0, 1.0));
        assert_eq!(d.alpha, vec![1.5, 1.0, 0.5]);
    }

    #[test]
    fn energies() {
        assert_eq!(StateSpec::ground(3, 1.0).unwrap().energy(), -0.5);
        assert_eq!(StateSpec::ground(2, 1.0).unwrap().energy(), -2.0);
        assert_eq!(
            StateSpec::new(3, 1.0, 2, vec![0, 0]).unwrap().energy(),
            -0.125
        );
    }

    #[test]
    fn hydrogen_1s_radial() {
        let s = StateSpec::ground(3, 1.0).unwrap();
        assert!((s.radial_position(1e-300) - 2.0).abs() < 1e-14);
        assert!((s.radial_position(1.0) - 2.0 / std::f64::consts::E).abs() < 1e-14);
    }

    #[test]
    fn hydrogen_2s_node() {
        let s = StateSpec::new(3, 1.0, 2, vec![0, 0]).unwrap();
        assert!(s.radial_position(2.0).abs() < 1e-15);
        assert!(s.radial_position(1.9) * s.radial_position(2.1) < 0.0);
    }

    #[test]
    fn hydrogen_1s_momentum_density() {
        let s = StateSpec::ground(3, 1.0).unwrap();
        for &p in &[0.1, 0.7, 1.0, 3.0] {
            let g = s.momentum_density(p, &[0.3, 1.0]).unwrap();
            let expected = 8.0 / (PI * PI * (1.0f64 + p * p).powi(4));
            assert!((g / expected - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn ground_position_density_at_origin() {
        let s = StateSpec::ground(3, 1.0).unwrap();
        let rho = s.position_density(1e-300, &[0.0, 0.0]).unwrap();
        assert!((rho - 1.0 / PI).abs() < 1e-14);
    }

    #[test]
    fn angular_density_cases() {
        let s = StateSpec::ground(5, 1.0).unwrap();
        let v = s.angular_density(&[0.3, 1.2, 2.0, 4.0]).unwrap();
        let surface = 2.0 * PI.powf(2.5) / crate::specfun::lgam(2.5).exp();
        assert!((v * surface - 1.0).abs() < 1e-13);

        let s = StateSpec::new(2, 1.0, 4, vec![3]).unwrap();
        assert!((s.angular_density(&[5.0]).unwrap() - 0.5 / PI).abs() < 1e-15);

        let s = StateSpec::new(3, 1.0, 2, vec![1, 0]).unwrap();
        assert!(s.angular_density(&[PI / 2.0, 0.0]).unwrap() < 1e-30);
    }

    #[test]
    fn angles_are_validated() {
        let s = StateSpec::ground(3, 1.0).unwrap();
        assert!(s.angular_density(&[-0.1, 0.0]).is_err());
        assert!(s.angular_density(&[0.1, 2.0 * PI]).is_err());
        assert!(s.angular_density(&[0.1]).is_err());
        assert!(s.angular_density(&[PI, 0.0]).is_ok());
    }

    #[test]
    fn momentum_zero_of_y() {
        // y = 0 at p = Z/η: the Gegenbauer factor is evaluated at the origin
        let s = StateSpec::new(3, 1.0, 3, vec![0, 0]).unwrap();
        let p = 1.0 / 3.0;
        let m = s.radial_momentum(p);
        let d = s.derived();
        let u: f64 = 1.0;
        let expected = 2f64.powf(d.grand_l + 2.0) * (d.eta).powf(1.5)
            / (1.0 + u * u).powf(d.grand_l + 2.0)
            * s.momentum_factor().eval(0.0);
        assert!((m / expected - 1.0).abs() < 1e-13);
    }
}
