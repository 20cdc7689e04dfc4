//! Orthonormal Laguerre and Gegenbauer polynomials.
//!
//! Values come from the three-term recurrence written directly for the
//! orthonormal family, so the degree-0 normalisation is folded into a running
//! log-scale instead of being divided out of a classical polynomial at the
//! end. The recurrence state is rescaled whenever it leaves
//! [`RESCALE_LOW`, `RESCALE_HIGH`], which keeps degree 200 / parameter 500
//! evaluations finite.

use serde::{Deserialize, Serialize};

use super::gamma::lgam;
use crate::error::{Error, Result};

const RESCALE_HIGH: f64 = 1e150;
const RESCALE_LOW: f64 = 1e-150;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Weight x^α e^{−x} on [0, ∞).
    Laguerre,
    /// Weight (1 − x²)^{λ − 1/2} on [−1, 1].
    Gegenbauer,
}

/// A real number stored as sign and natural log of its magnitude.
///
/// `sign` is 0.0 exactly when the value is zero, in which case `ln_abs` is −∞.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogValue {
    pub sign: f64,
    pub ln_abs: f64,
}

impl LogValue {
    pub const ZERO: LogValue = LogValue {
        sign: 0.0,
        ln_abs: f64::NEG_INFINITY,
    };

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            LogValue {
                sign: x.signum(),
                ln_abs: x.abs().ln(),
            }
        }
    }

    pub fn value(self) -> f64 {
        if self.sign == 0.0 {
            0.0
        } else {
            self.sign * self.ln_abs.exp()
        }
    }

    pub fn is_zero(self) -> bool {
        self.sign == 0.0
    }
}

/// One member of an orthonormal polynomial family: family, degree and parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrthoPoly {
    family: Family,
    degree: usize,
    param: f64,
}

impl OrthoPoly {
    pub fn new(family: Family, degree: usize, param: f64) -> Result<Self> {
        if !param.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "non-finite parameter {param}"
            )));
        }
        match family {
            Family::Laguerre if param <= -1.0 => Err(Error::InvalidParameter(format!(
                "Laguerre parameter must exceed -1, got {param}"
            ))),
            Family::Gegenbauer if param <= -0.5 || param == 0.0 => Err(Error::InvalidParameter(
                format!("Gegenbauer parameter must exceed -1/2 and be nonzero, got {param}"),
            )),
            _ => Ok(OrthoPoly {
                family,
                degree,
                param,
            }),
        }
    }

    pub fn laguerre(degree: usize, alpha: f64) -> Result<Self> {
        Self::new(Family::Laguerre, degree, alpha)
    }

    pub fn gegenbauer(degree: usize, lambda: f64) -> Result<Self> {
        Self::new(Family::Gegenbauer, degree, lambda)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn param(&self) -> f64 {
        self.param
    }

    /// Natural interval of orthogonality; the upper end is +∞ for Laguerre.
    pub fn domain(&self) -> (f64, f64) {
        match self.family {
            Family::Laguerre => (0.0, f64::INFINITY),
            Family::Gegenbauer => (-1.0, 1.0),
        }
    }

    /// ln of ∫ω, the squared norm of the classical degree-0 polynomial.
    pub fn ln_weight_mass(&self) -> f64 {
        match self.family {
            Family::Laguerre => lgam(self.param + 1.0),
            Family::Gegenbauer => {
                0.5 * std::f64::consts::PI.ln() + lgam(self.param + 0.5) - lgam(self.param + 1.0)
            }
        }
    }

    /// ln ω(x). Returns −∞ where the weight vanishes.
    pub fn ln_weight(&self, x: f64) -> f64 {
        match self.family {
            Family::Laguerre => {
                if x == 0.0 && self.param == 0.0 {
                    0.0
                } else {
                    self.param * x.ln() - x
                }
            }
            Family::Gegenbauer => {
                let e = self.param - 0.5;
                if e == 0.0 {
                    0.0
                } else {
                    e * ((1.0 - x) * (1.0 + x)).ln()
                }
            }
        }
    }

    pub fn weight(&self, x: f64) -> f64 {
        self.ln_weight(x).exp()
    }

    /// Orthonormal polynomial value at `x`.
    ///
    /// Over/underflows to ±∞/0 only when the true value does; use
    /// [`OrthoPoly::eval_log`] where that matters.
    pub fn eval(&self, x: f64) -> f64 {
        self.eval_log(x).value()
    }

    /// Orthonormal polynomial value at `x` in sign / log-magnitude form.
    pub fn eval_log(&self, x: f64) -> LogValue {
        let mut log_scale = -0.5 * self.ln_weight_mass();
        let mut prev = 0.0;
        let mut cur = 1.0;
        for k in 0..self.degree {
            let next = self.step(k, x, cur, prev);
            prev = cur;
            cur = next;
            let size = cur.abs().max(prev.abs());
            if size > RESCALE_HIGH || (size < RESCALE_LOW && size > 0.0) {
                cur /= size;
                prev /= size;
                log_scale += size.ln();
            }
        }
        if cur == 0.0 {
            LogValue::ZERO
        } else {
            LogValue {
                sign: cur.signum(),
                ln_abs: cur.abs().ln() + log_scale,
            }
        }
    }

    // p_{k+1} from p_k and p_{k-1}.
    #[inline]
    fn step(&self, k: usize, x: f64, cur: f64, prev: f64) -> f64 {
        let kf = k as f64;
        match self.family {
            Family::Laguerre => {
                let a = self.param;
                let back = (kf * (kf + a)).sqrt();
                let fwd = ((kf + 1.0) * (kf + a + 1.0)).sqrt();
                ((2.0 * kf + a + 1.0 - x) * cur - back * prev) / fwd
            }
            Family::Gegenbauer => {
                let back = if k == 0 { 0.0 } else { self.jacobi_offdiag(k) };
                (x * cur - back * prev) / self.jacobi_offdiag(k + 1)
            }
        }
    }

    // Off-diagonal Jacobi-matrix entry sqrt(β_k) of the Gegenbauer recurrence.
    fn jacobi_offdiag(&self, k: usize) -> f64 {
        let l = self.param;
        let kf = k as f64;
        if k == 1 {
            (0.5 / (1.0 + l)).sqrt()
        } else {
            (kf * (kf + 2.0 * l - 1.0) / (4.0 * (kf + l) * (kf + l - 1.0))).sqrt()
        }
    }

    /// All real zeros in increasing order.
    ///
    /// Sign changes are located on a uniform grid of 64·(k+1) cells (refined by
    /// doubling if any are missed) and polished by bisection.
    pub fn roots(&self) -> Vec<f64> {
        let k = self.degree;
        if k == 0 {
            return Vec::new();
        }
        let (lo, hi) = match self.family {
            Family::Laguerre => (0.0, 4.0 * k as f64 + 2.0 * self.param.max(0.0) + 6.0),
            Family::Gegenbauer => (-1.0, 1.0),
        };
        let mut cells = 64 * (k + 1);
        for _ in 0..12 {
            let roots = self.scan_roots(lo, hi, cells);
            if roots.len() == k {
                return roots;
            }
            cells *= 2;
        }
        // Zeros of orthogonal polynomials are simple; reaching here means the
        // scan grid still straddles a pair, so return what was found.
        self.scan_roots(lo, hi, cells)
    }

    fn scan_roots(&self, lo: f64, hi: f64, cells: usize) -> Vec<f64> {
        let h = (hi - lo) / cells as f64;
        let mut roots = Vec::with_capacity(self.degree);
        let mut a = lo;
        let mut sa = self.eval_log(a).sign;
        for i in 1..=cells {
            let b = if i == cells { hi } else { lo + h * i as f64 };
            let sb = self.eval_log(b).sign;
            if sb == 0.0 && i < cells {
                roots.push(b);
            } else if sa != 0.0 && sb != 0.0 && sa != sb {
                roots.push(self.bisect(a, b, sa));
            }
            a = b;
            sa = sb;
        }
        roots
    }

    fn bisect(&self, mut a: f64, mut b: f64, sa: f64) -> f64 {
        for _ in 0..200 {
            let m = 0.5 * (a + b);
            if m <= a || m >= b {
                break;
            }
            let sm = self.eval_log(m).sign;
            if sm == 0.0 {
                return m;
            }
            if sm == sa {
                a = m;
            } else {
                b = m;
            }
        }
        0.5 * (a + b)
    }
}
