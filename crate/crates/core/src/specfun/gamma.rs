//! Log-gamma and digamma on the positive real axis.

use crate::error::{Error, Result};

/// ln Γ(x) for x > 0.
///
/// Backed by the musl `lgamma` port in `libm`, which keeps full relative
/// accuracy near the zeros of ln Γ at x = 1 and x = 2.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("ln_gamma requires x > 0, got {x}")));
    }
    Ok(libm::lgamma(x))
}

/// Unchecked ln Γ for internal callers whose arguments are positive by construction.
#[inline]
pub(crate) fn lgam(x: f64) -> f64 {
    debug_assert!(x > 0.0, "lgam({x})");
    libm::lgamma(x)
}

// Bernoulli-number coefficients B_{2k}/(2k) of the asymptotic digamma series.
const DIGAMMA_SERIES: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    5.0 / 660.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
];

const DIGAMMA_SHIFT: f64 = 10.0;

/// ψ(x) = Γ'(x)/Γ(x) for x > 0.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("digamma requires x > 0, got {x}")));
    }
    Ok(psi(x))
}

/// Unchecked digamma; see [`digamma`].
pub(crate) fn psi(mut x: f64) -> f64 {
    debug_assert!(x > 0.0, "psi({x})");
    // ψ(x) = ψ(x + 1) − 1/x until the asymptotic series is accurate
    let mut shift = 0.0;
    while x < DIGAMMA_SHIFT {
        shift -= 1.0 / x;
        x += 1.0;
    }
    let inv2 = 1.0 / (x * x);
    let mut series = 0.0;
    let mut pow = inv2;
    for c in DIGAMMA_SERIES {
        series += c * pow;
        pow *= inv2;
    }
    shift + x.ln() - 0.5 / x - series
}

#[cfg(test)]
mod tests {
    use super::*;

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    #[test]
    fn ln_gamma_values() {
        assert_eq!(ln_gamma(1.0).unwrap(), 0.0);
        assert_eq!(ln_gamma(2.0).unwrap(), 0.0);
        let half = ln_gamma(0.5).unwrap();
        assert!((half - 0.5 * std::f64::consts::PI.ln()).abs() < 1e-15);
        let ten = ln_gamma(10.0).unwrap();
        assert!((ten / 362880f64.ln() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn domain_errors() {
        assert!(ln_gamma(0.0).is_err());
        assert!(ln_gamma(-1.5).is_err());
        assert!(ln_gamma(f64::NAN).is_err());
        assert!(digamma(0.0).is_err());
        assert!(digamma(-3.0).is_err());
    }

    #[test]
    fn digamma_values() {
        assert!((digamma(1.0).unwrap() + EULER_GAMMA).abs() < 1e-14);
        assert!((digamma(2.0).unwrap() - (1.0 - EULER_GAMMA)).abs() < 1e-14);
        let expected = -EULER_GAMMA - 2.0 * std::f64::consts::LN_2;
        assert!((digamma(0.5).unwrap() - expected).abs() < 1e-14);
    }

    #[test]
    fn digamma_recurrence() {
        let mut x = 0.1;
        while x <= 100.0 {
            let lhs = digamma(x + 1.0).unwrap() - digamma(x).unwrap();
            assert!((lhs - 1.0 / x).abs() < 1e-12, "x = {x}");
            x += 0.137;
        }
    }

    #[test]
    fn digamma_duplication() {
        for &z in &[0.3, 1.0, 2.5, 7.25, 40.0] {
            let lhs = psi(2.0 * z);
            let rhs = 0.5 * (psi(z) + psi(z + 0.5)) + std::f64::consts::LN_2;
            assert!((lhs - rhs).abs() < 1e-13);
        }
    }

    #[test]
    fn ln_gamma_duplication() {
        let ln_sqrt_pi = 0.5 * std::f64::consts::PI.ln();
        let mut x = 0.5;
        while x <= 50.0 {
            let lhs = ln_gamma(2.0 * x).unwrap();
            let rhs = ln_gamma(x).unwrap()
                + ln_gamma(x + 0.5).unwrap()
                + (2.0 * x - 1.0) * std::f64::consts::LN_2
                - ln_sqrt_pi;
            assert!((lhs - rhs).abs() < 1e-11, "x = {x}");
            x += 0.25;
        }
    }
}
