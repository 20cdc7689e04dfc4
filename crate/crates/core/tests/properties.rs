//! Property tests over randomly drawn hydrogenic states.

use hydrocomplex::complexity::{measure, Method, Space};
use hydrocomplex::specfun::QuadratureConfig;
use hydrocomplex::states::StateSpec;
use proptest::prelude::*;

fn valid(dim: usize, n: u32, mu: &[i64]) -> bool {
    if dim < 2 || n < 1 || mu.len() != dim - 1 {
        return false;
    }
    let abs: Vec<i64> = mu
        .iter()
        .enumerate()
        .map(|(i, &m)| if i == mu.len() - 1 { m.abs() } else { m })
        .collect();
    abs[0] <= n as i64 - 1 && abs.windows(2).all(|w| w[0] >= w[1]) && abs.iter().all(|&m| m >= 0)
}

fn state() -> impl Strategy<Value = StateSpec> {
    (
        2usize..=7,
        1u32..=6,
        any::<bool>(),
        prop::collection::vec(0.0f64..1.0, 7),
        0.0f64..1.0,
    )
        .prop_map(|(dim, n, negative, fracs, lf)| {
            let l = (lf * n as f64) as i64;
            let mut mu = vec![l];
            for j in 0..dim - 2 {
                let prev = mu[j];
                mu.push((fracs[j] * (prev + 1) as f64) as i64);
            }
            if negative {
                *mu.last_mut().unwrap() *= -1;
            }
            StateSpec::new(dim, 1.0, n, mu).unwrap()
        })
}

fn cfg() -> QuadratureConfig {
    QuadratureConfig::default()
}

fn space() -> impl Strategy<Value = Space> {
    prop_oneof![Just(Space::Position), Just(Space::Momentum)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn validation_accepts_exactly_the_allowed_numbers(
        dim in 2usize..=6,
        n in 0u32..=5,
        mu in prop::collection::vec(-5i64..=5, 1..=6),
    ) {
        prop_assert_eq!(StateSpec::new(dim, 1.0, n, mu.clone()).is_ok(), valid(dim, n, &mu));
    }

    #[test]
    fn report_is_self_consistent(s in state(), sp in space()) {
        let r = measure(&s, sp, Method::Auto, &cfg()).unwrap();
        prop_assert_eq!(r.entropy_total, r.entropy_radial + r.entropy_angular);
        let c = r.disequilibrium * r.entropy_total.exp();
        prop_assert!((r.complexity - c).abs() <= 1e-12 * c);
        prop_assert!(r.complexity > 1.0);
        prop_assert!(r.error_estimate >= 0.0);
    }

    #[test]
    fn functional_matches_direct_oracle(s in state(), sp in space()) {
        let f = measure(&s, sp, Method::Functional, &cfg()).unwrap();
        let o = measure(&s, sp, Method::DirectOracle, &cfg()).unwrap();
        prop_assert!((f.complexity / o.complexity - 1.0).abs() < 1e-6);
        prop_assert!((f.entropy_total - o.entropy_total).abs() < 1e-7);
    }

    #[test]
    fn charge_only_rescales(s in state(), sp in space(), z in 0.05f64..200.0) {
        let one = measure(&s, sp, Method::Auto, &cfg()).unwrap();
        let r = measure(&s.with_charge(z).unwrap(), sp, Method::Auto, &cfg()).unwrap();
        let d = s.dim() as f64;
        let sign = match sp { Space::Position => 1.0, Space::Momentum => -1.0 };
        prop_assert!((r.complexity / one.complexity - 1.0).abs() < 1e-10);
        prop_assert!((r.entropy_total - one.entropy_total + sign * d * z.ln()).abs() < 1e-10 * (1.0 + one.entropy_total.abs()));
        prop_assert!((r.disequilibrium / (one.disequilibrium * z.powf(sign * d)) - 1.0).abs() < 1e-10);
    }

    #[test]
    fn uncertainty_product_at_least_half_e(s in state()) {
        let p = measure(&s, Space::Position, Method::Auto, &cfg()).unwrap().complexity;
        let m = measure(&s, Space::Momentum, Method::Auto, &cfg()).unwrap().complexity;
        prop_assert!(p * m >= std::f64::consts::E / 2.0);
    }
}
