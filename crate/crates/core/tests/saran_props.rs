use humbert::saran::{fm_laplace, fm_series, FmParams};
use humbert::scalar::{pochhammer, re};
use humbert::C64;
use proptest::prelude::*;

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm()
}

fn fact(n: usize) -> f64 {
    (1..=n).fold(1.0, |a, k| a * k as f64)
}

/// Direct triple sum over m + n + p ≤ n_max.
fn fm_triple(q: FmParams, x: C64, y: C64, z: C64, n_max: usize) -> C64 {
    let mut s = re(0.0);
    for m in 0..=n_max {
        for n in 0..=(n_max - m) {
            for p in 0..=(n_max - m - n) {
                let (mu, nu, pu) = (m as u64, n as u64, p as u64);
                let num = pochhammer(q.alpha1, mu)
                    * pochhammer(q.alpha2, nu + pu)
                    * pochhammer(q.beta1, mu + pu)
                    * pochhammer(q.beta2, nu);
                let den = pochhammer(q.gamma1, mu) * pochhammer(q.gamma2, nu + pu);
                s += num / den * x.powu(m as u32) * y.powu(n as u32) * z.powu(p as u32)
                    / (fact(m) * fact(n) * fact(p));
            }
        }
    }
    s
}

fn complex_in_disc(r: f64) -> impl Strategy<Value = C64> {
    (0.0f64..1.0, 0.0..std::f64::consts::TAU)
        .prop_map(move |(s, t)| C64::from_polar(r * s.sqrt(), t))
}

fn fm_params() -> impl Strategy<Value = FmParams> {
    (
        complex_in_disc(1.5),
        complex_in_disc(1.5),
        0.2f64..1.5,
        complex_in_disc(1.5),
        0.5f64..2.5,
        0.5f64..2.5,
    )
        .prop_map(|(a1, a2, b1, b2, g1, g2)| {
            FmParams::new(a1, a2, re(b1), b2, re(g1), re(g2)).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(25))]

    #[test]
    fn single_series_matches_triple_series(
        q in fm_params(),
        x in complex_in_disc(0.15),
        y in complex_in_disc(0.15),
        z in complex_in_disc(0.15),
    ) {
        let v = fm_series(q, x, y, z, 1e-15, 1000).unwrap().value;
        let t = fm_triple(q, x, y, z, 45);
        prop_assert!(rel(v, t) <= 1e-9, "{}", rel(v, t));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn laplace_matches_series(
        q in fm_params(),
        x in -0.6f64..0.4,
        y in complex_in_disc(0.6),
        z in -0.5f64..0.5,
    ) {
        // both representations converge here: |z| < |1 − x| and x + z < 1
        let s = fm_series(q, re(x), y, re(z), 1e-15, 2000).unwrap();
        let l = fm_laplace(q, re(x), y, re(z)).unwrap();
        prop_assert!(rel(l.value, s.value) <= 1e-7, "{}", rel(l.value, s.value));
    }
}
