//! Globally adaptive Gauss–Kronrod (10/21) integration on finite and
//! semi-infinite intervals.
//!
//! The interval is first cut at the caller's split points (typically zeros of
//! an orthogonal polynomial, where an entropy integrand has a log spike) and
//! every piece goes into one priority queue ordered by error estimate. The
//! piece reaching +∞ is mapped to [0, 1) with x = c + t/(1 − t). Endpoints are
//! never evaluated, so integrable endpoint singularities are fine.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

/// Environment variable that overrides [`QuadratureConfig::rel_tol`] in
/// [`QuadratureConfig::from_env`].
pub const RELTOL_ENV: &str = "HYDRO_QUAD_RELTOL";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    pub split_points: Vec<f64>,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_subdivisions: 2000,
            split_points: Vec::new(),
        }
    }
}

impl QuadratureConfig {
    /// Defaults, with `rel_tol` taken from `HYDRO_QUAD_RELTOL` when it parses
    /// to a value in (0, 1).
    pub fn from_env() -> Self {
        let mut cfg = Self::default();
        if let Some(tol) = std::env::var(RELTOL_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<f64>().ok())
            .filter(|t| *t > 0.0 && *t < 1.0)
        {
            cfg.rel_tol = tol;
        }
        cfg
    }

    pub fn with_splits(&self, splits: impl IntoIterator<Item = f64>) -> Self {
        let mut cfg = self.clone();
        cfg.split_points = splits.into_iter().collect();
        cfg
    }

    pub fn tolerance_for(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub converged: bool,
    pub evaluations: usize,
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_977_211_959,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[derive(Debug, Clone, Copy)]
enum Map {
    Identity,
    /// x = origin + t / (1 − t) on t ∈ [0, 1).
    Tail(f64),
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    map: Map,
    value: f64,
    error: f64,
    finite: bool,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn mapped<F: Fn(f64) -> f64>(f: &F, map: Map, t: f64) -> f64 {
    match map {
        Map::Identity => f(t),
        Map::Tail(c) => {
            let s = 1.0 - t;
            let y = f(c + t / s);
            if y == 0.0 {
                0.0
            } else {
                y / (s * s)
            }
        }
    }
}

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, map: Map) -> Segment {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = mapped(f, map, center);
    let mut res_g = 0.0;
    let mut res_k = WGK[10] * fc;
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = mapped(f, map, center - dx);
        let f2 = mapped(f, map, center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        let sum = f1 + f2;
        if j % 2 == 1 {
            res_g += WG[j / 2] * sum;
        }
        res_k += WGK[j] * sum;
        res_abs += WGK[j] * (f1.abs() + f2.abs());
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = res_k * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let mut error = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }
    let finite = value.is_finite() && error.is_finite();
    Segment {
        a,
        b,
        map,
        value: if finite { value } else { 0.0 },
        error: if finite { error } else { 0.0 },
        finite,
    }
}

/// Integrates `f` over (a, b); `b` may be `f64::INFINITY`.
///
/// Split points strictly inside (a, b) start the subdivision. The result has
/// `converged = false` whenever the subdivision budget runs out, a piece can
/// no longer be bisected in floating point, or `f` produced a non-finite
/// value; the value is then the best available estimate.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    config: &QuadratureConfig,
) -> QuadratureResult {
    if a == b {
        return QuadratureResult {
            value: 0.0,
            error_estimate: 0.0,
            converged: true,
            evaluations: 0,
        };
    }
    if a > b {
        let mut r = integrate(f, b, a, config);
        r.value = -r.value;
        return r;
    }
    assert!(a.is_finite(), "lower limit must be finite");

    let mut cuts: Vec<f64> = config
        .split_points
        .iter()
        .copied()
        .filter(|s| s.is_finite() && *s > a && *s < b)
        .collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();

    let mut bounds = Vec::with_capacity(cuts.len() + 2);
    bounds.push(a);
    bounds.extend(cuts);
    let mut pieces: Vec<(f64, f64, Map)> = bounds
        .windows(2)
        .map(|w| (w[0], w[1], Map::Identity))
        .collect();
    let last = *bounds.last().unwrap();
    if b.is_infinite() {
        pieces.push((0.0, 1.0, Map::Tail(last)));
    } else {
        pieces.push((last, b, Map::Identity));
    }

    let mut heap = BinaryHeap::new();
    let mut done: Vec<Segment> = Vec::new();
    let mut evaluations = 0;
    let mut all_finite = true;
    for (lo, hi, map) in pieces {
        let seg = kronrod(&f, lo, hi, map);
        evaluations += 21;
        all_finite &= seg.finite;
        heap.push(seg);
    }
    let max_segments = config.max_subdivisions.max(1).max(heap.len());

    let (mut value, mut error) = totals(&heap, &done);
    let mut exhausted = false;
    while error > config.tolerance_for(value) {
        if heap.len() + done.len() >= max_segments {
            exhausted = true;
            break;
        }
        let Some(worst) = heap.pop() else {
            exhausted = true;
            break;
        };
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) {
            done.push(worst);
            exhausted = true;
            continue;
        }
        let left = kronrod(&f, worst.a, mid, worst.map);
        let right = kronrod(&f, mid, worst.b, worst.map);
        evaluations += 42;
        all_finite &= left.finite && right.finite;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        if heap.len() % 64 == 0 {
            (value, error) = totals(&heap, &done);
        }
    }
    (value, error) = totals(&heap, &done);
    let converged = all_finite
        && error <= config.tolerance_for(value)
        && !(exhausted && error > config.tolerance_for(value));
    QuadratureResult {
        value,
        error_estimate: error,
        converged,
        evaluations,
    }
}

fn totals(heap: &BinaryHeap<Segment>, done: &[Segment]) -> (f64, f64) {
    heap.iter()
        .chain(done.iter())
        .fold((0.0, 0.0), |(v, e), s| (v + s.value, e + s.error))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn exponential_on_half_line() {
        let r = integrate(|x: f64| (-x).exp(), 0.0, f64::INFINITY, &cfg());
        assert!(r.converged);
        assert!((r.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn log_endpoint_singularity() {
        let r = integrate(|x: f64| x.ln(), 0.0, 1.0, &cfg());
        assert!(r.converged, "{r:?}");
        assert!((r.value + 1.0).abs() < 1e-10);
    }

    #[test]
    fn gamma_moment() {
        let r = integrate(
            |x: f64| x.powi(3) * (-2.0 * x).exp(),
            0.0,
            f64::INFINITY,
            &cfg(),
        );
        assert!(r.converged);
        assert!((r.value - 3.0 / 8.0).abs() < 1e-12);
    }

    #[test]
    fn interior_log_spike_with_split() {
        // ∫_0^2 ln|x-1| dx = -2
        let c = cfg().with_splits([1.0]);
        let r = integrate(|x: f64| (x - 1.0).abs().ln(), 0.0, 2.0, &c);
        assert!(r.converged);
        assert!((r.value + 2.0).abs() < 1e-10);
    }

    #[test]
    fn algebraic_endpoint_singularity() {
        // ∫_0^1 x^{-1/2} dx = 2
        let r = integrate(|x: f64| 1.0 / x.sqrt(), 0.0, 1.0, &cfg());
        assert!(r.converged, "{r:?}");
        assert!((r.value - 2.0).abs() < 1e-9);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let c = QuadratureConfig {
            max_subdivisions: 3,
            ..cfg()
        };
        let r = integrate(|x: f64| (50.0 * x).sin().abs(), 0.0, 10.0, &c);
        assert!(!r.converged);
    }

    #[test]
    fn divergent_integral_is_not_converged() {
        let r = integrate(|x: f64| 1.0 / (x * x), 0.0, 1.0, &cfg());
        assert!(!r.converged);
    }

    #[test]
    fn nonfinite_integrand_is_not_converged() {
        let r = integrate(
            |x: f64| if x > 0.5 { f64::NAN } else { 1.0 },
            0.0,
            1.0,
            &cfg(),
        );
        assert!(!r.converged);
    }

    #[test]
    fn reversed_limits() {
        let r = integrate(|x: f64| x, 1.0, 0.0, &cfg());
        assert!((r.value + 0.5).abs() < 1e-14);
    }

    #[test]
    fn converged_results_respect_tolerance() {
        let c = cfg();
        for k in 0..6 {
            let r = integrate(|x: f64| x.powi(k) * (-x).exp(), 0.0, f64::INFINITY, &c);
            assert!(r.converged);
            assert!(r.error_estimate <= c.tolerance_for(r.value));
        }
    }
}
