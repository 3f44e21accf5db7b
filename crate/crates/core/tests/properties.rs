//! Cross-module invariants checked on random inputs.

use proptest::prelude::*;

use splab::demand::{build_wtp_schedule, candidate_prices, expected_demand, market_schedule};
use splab::oracle::{grid_argmax, oracle_demand, simulate_market, GridSpec};
use splab::sweep::{run_sweep, Axis, SweepSpec};
use splab::{solve, solve_pooling, ModelParams, Quality};

fn base() -> impl Strategy<Value = ModelParams> {
    (0.5f64..=1.0, 0.0f64..=1.0, 0.0f64..0.999).prop_map(|(h, l, v)| ModelParams::new(h, l, v).unwrap())
}

fn any_variant() -> impl Strategy<Value = ModelParams> {
    (base(), 0.01f64..0.99, 0.0f64..=1.0, 0..3u8).prop_map(|(p, g, m, which)| match which {
        0 => p,
        1 => p.with_gamma(g).unwrap(),
        _ => p.with_mu0(m).unwrap(),
    })
}

/// Points each solver in the dispatcher accepts.
fn solvable() -> impl Strategy<Value = ModelParams> {
    (
        0.5f64..=1.0,
        0.0f64..=1.0,
        0.0f64..0.999,
        0.01f64..0.99,
        0.0f64..=1.0,
        0..3u8,
    )
        .prop_map(|(h, l, v, g, m, which)| match which {
            0 => ModelParams::new(h, l, v).unwrap(),
            1 => ModelParams::new(h, 0.0, 0.0).unwrap().with_gamma(g).unwrap(),
            _ => ModelParams::new(h, 0.0, v).unwrap().with_mu0(m).unwrap(),
        })
}

fn quality() -> impl Strategy<Value = Quality> {
    prop_oneof![Just(Quality::Good), Just(Quality::Bad)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn oracle_demand_matches_schedule(p in any_variant(), q in quality(), price in 0.0f64..=1.0) {
        let s = market_schedule(&p);
        // Away from the WTP levels both buy rules agree exactly.
        prop_assume!(candidate_prices(&s).iter().all(|c| (c - price).abs() > 1e-8));
        let a = expected_demand(&s, price, q).unwrap();
        let b = oracle_demand(&p, q, price);
        prop_assert!((a - b).abs() <= 1e-12, "{} vs {}", a, b);
    }

    #[test]
    fn grid_optimum_is_a_candidate(p in base()) {
        let grid = GridSpec::for_params_with_points(&p, 2001);
        let opt = grid_argmax(&p, Quality::Good, &grid);
        let c = candidate_prices(&build_wtp_schedule(&p).unwrap());
        prop_assert!(c.contains(&opt.price));
    }

    #[test]
    fn equilibrium_price_in_value_range(p in solvable()) {
        let o = solve(&p).unwrap();
        for price in [o.price, o.low_price].into_iter().flatten() {
            prop_assert!(price >= p.v_b() && price <= 1.0);
        }
        prop_assert_eq!(o.is_none(), o.price.is_none());
    }

    #[test]
    fn simulation_is_seed_deterministic(p in any_variant(), q in quality(), price in 0.0f64..=1.0, seed in any::<u64>()) {
        let a = simulate_market(&p, q, price, 70_000, seed);
        let b = simulate_market(&p, q, price, 70_000, seed);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn sweep_cells_match_direct_calls(h in 0.5f64..=1.0, l in 0.0f64..=1.0, v in 0.0f64..0.5) {
        let spec = SweepSpec {
            h: Axis::Fixed(h),
            lambda: Axis::Fixed(l),
            v_b: Axis::Fixed(v),
            ..SweepSpec::default()
        };
        let cell = &run_sweep(&spec).unwrap()[0];
        let direct = solve(&ModelParams::new(h, l, v).unwrap()).unwrap();
        prop_assert_eq!(cell.classification, direct.classification());
        prop_assert_eq!(cell.price, direct.price);
        prop_assert_eq!(cell.profit_g, direct.profit_g);
    }

    #[test]
    fn pooling_profit_is_not_beaten_by_any_price(p in base(), price in 0.0f64..=1.0) {
        let s = build_wtp_schedule(&p).unwrap();
        if let Some(best) = solve_pooling(&p).unwrap().profit_g {
            prop_assert!(price * expected_demand(&s, price, Quality::Good).unwrap() <= best + 1e-12);
        }
    }
}
