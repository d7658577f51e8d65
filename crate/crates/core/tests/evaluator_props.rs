use humbert::evaluator::{cross_check, dispatch_order, evaluate, Thresholds};
use humbert::reference::phi1_taylor;
use humbert::scalar::{pfq, re};
use humbert::{Phi1Params, C64};
use proptest::prelude::*;

fn complex_in_disc(r: f64) -> impl Strategy<Value = C64> {
    (0.0f64..1.0, 0.0..std::f64::consts::TAU).prop_map(move |(s, t)| C64::from_polar(r * s, t))
}

fn params() -> impl Strategy<Value = Phi1Params> {
    (complex_in_disc(2.0), complex_in_disc(2.0), 0.5f64..3.0)
        .prop_filter_map("c near a pole", |(a, b, cc)| {
            Phi1Params::new(a, b, re(cc)).ok()
        })
}

/// A point somewhere in the plane, biased so that every dispatch branch is
/// reached: small, near x = 1, and large magnitudes.
fn point() -> impl Strategy<Value = (C64, C64)> {
    prop_oneof![
        (complex_in_disc(0.8), complex_in_disc(10.0)),
        (
            complex_in_disc(0.2).prop_map(|d| re(1.0) + d),
            complex_in_disc(2.0)
        ),
        (complex_in_disc(80.0), complex_in_disc(80.0)),
    ]
}

fn outcome(p: Phi1Params, x: C64, y: C64) -> String {
    match evaluate(p, x, y, 1e-10) {
        Ok(r) => format!(
            "{} {:?} {:?}",
            r.regime.tag(),
            r.value,
            r.abs_error_estimate
        ),
        Err(e) => format!("error {e}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dispatch_is_deterministic(p in params(), (x, y) in point()) {
        let th = Thresholds::default();
        prop_assert_eq!(dispatch_order(p, x, y, &th), dispatch_order(p, x, y, &th));
        let first = outcome(p, x, y);
        prop_assert_eq!(&first, &outcome(p, x, y));
        let threads: Vec<String> = std::thread::scope(|s| {
            let hs: Vec<_> = (0..3).map(|_| s.spawn(|| outcome(p, x, y))).collect();
            hs.into_iter().map(|h| h.join().unwrap()).collect()
        });
        for t in threads {
            prop_assert_eq!(&first, &t);
        }
    }

    #[test]
    fn error_estimates_are_nonnegative(p in params(), (x, y) in point()) {
        if let Ok(r) = evaluate(p, x, y, 1e-10) {
            prop_assert!(r.abs_error_estimate >= 0.0);
            prop_assert!(r.value.re.is_finite() && r.value.im.is_finite());
        }
    }

    #[test]
    fn x_zero_line_is_kummer(p in params(), y in complex_in_disc(5.0)) {
        let r = evaluate(p, re(0.0), y, 1e-13).unwrap();
        let f = pfq(&[p.a], &[p.c], y, 1e-16, 100_000).unwrap();
        let d = (r.value - f.value).norm();
        prop_assert!(
            d <= 1e-12 * f.value.norm() || d <= r.abs_error_estimate + f.abs_error_estimate,
            "{d} at {y}"
        );
    }

    #[test]
    fn cross_check_on_the_real_line(p in params(), x in -0.7f64..0.7) {
        let r = cross_check(p, re(x), re(0.0)).unwrap();
        let t = phi1_taylor(p, re(x), re(0.0), 1e-15, 100_000).unwrap();
        // every method runs at the default tolerance of 1e-12
        let bound = 1e-10 * t.value.norm().max(1.0);
        let m = r.agreement_matrix.unwrap();
        prop_assert!(m.max_delta() <= bound, "{}", m.max_delta());
        prop_assert!((r.value - t.value).norm() <= bound);
    }
}
