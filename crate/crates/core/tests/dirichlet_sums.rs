use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zetalab::dirichlet_sums::{
    divisor_phase_sum_direct, divisor_phase_sum_hyperbola, divisor_sieve, partial_summation_window,
    phase_sum, s1_s2_bound_check, vdc_bound, HyperbolaSums, SumWindow, Weight,
};
use zetalab::ExponentPair;

fn trial_division(n: u64) -> u32 {
    let mut count = 0;
    let mut m = 1;
    while m * m <= n {
        if n.is_multiple_of(m) {
            count += if m * m == n { 1 } else { 2 };
        }
        m += 1;
    }
    count
}

fn cis(n: u64, t: f64) -> Complex64 {
    let a = t * (n as f64).ln();
    Complex64::new(a.cos(), a.sin())
}

#[test]
fn sieve_matches_trial_division() {
    let table = divisor_sieve(10_000).unwrap();
    for n in 1..=10_000u64 {
        assert_eq!(table.d(n as usize), trial_division(n), "n = {n}");
    }
}

#[test]
fn divisor_summatory_function() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let table = divisor_sieve(200_000).unwrap();
    for _ in 0..100 {
        let u: u64 = rng.gen_range(1..=200_000);
        let floors: u64 = (1..=u).map(|m| u / m).sum();
        let from_table: u64 = (1..=u as usize).map(|n| table.d(n) as u64).sum();
        assert_eq!(from_table, floors);
        let hyper = divisor_phase_sum_hyperbola(u, 0.0);
        assert_eq!(hyper.re, floors as f64, "u = {u}");
        assert_eq!(hyper.im, 0.0);
    }
}

#[test]
fn hyperbola_matches_direct_for_all_small_u() {
    let limit = 10_000u64;
    let d: Vec<u32> = (0..=limit)
        .map(|n| if n == 0 { 0 } else { trial_division(n) })
        .collect();
    let table = divisor_sieve(limit).unwrap();
    for t in [0.0, 1.3, 17.77, 123.456] {
        let sums = HyperbolaSums::new(limit, t);
        let mut running = Complex64::new(0.0, 0.0);
        for u in 1..=limit {
            running += cis(u, t) * d[u as usize] as f64;
            let hyper = sums.divisor_sum(u);
            assert!(
                (hyper - running).norm() <= 1e-9 * (1.0 + running.norm()),
                "u = {u}, t = {t}: {hyper} vs {running}"
            );
        }
        for u in [1, 97, 1024, 5000, limit] {
            let direct = divisor_phase_sum_direct(u, t, &table).unwrap();
            assert!((direct - sums.divisor_sum(u)).norm() <= 1e-9 * (1.0 + direct.norm()));
        }
    }
}

#[test]
fn partial_summation_matches_weighted_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let table = divisor_sieve(40_000).unwrap();
    for _ in 0..100 {
        let n: u64 = rng.gen_range(1..=20_000);
        let n_prime = rng.gen_range(n + 1..=2 * n);
        let t: f64 = rng.gen_range(-500.0..500.0);
        let sigma: f64 = rng.gen_range(0.5..=1.0);
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let weight = Weight::from_sign(sign).unwrap();
        let w = SumWindow::new(n, n_prime, t).unwrap();
        let got = partial_summation_window(&w, sigma, &table, weight).unwrap();
        let expect: Complex64 = ((n + 1)..=n_prime)
            .map(|m| {
                let f = match weight {
                    Weight::NegSigma => (m as f64).powf(-sigma),
                    Weight::SigmaMinusOne => (m as f64).powf(sigma - 1.0),
                };
                cis(m, -t) * (trial_division(m) as f64 * f)
            })
            .sum();
        assert!(
            (got - expect).norm() <= 1e-9 * (1.0 + expect.norm()),
            "{got} vs {expect}"
        );
    }
}

#[test]
fn partial_summation_rejects_bad_inputs() {
    let table = divisor_sieve(100).unwrap();
    let w = SumWindow::new(60, 120, 3.0).unwrap();
    assert!(partial_summation_window(&w, 0.75, &table, Weight::NegSigma).is_err());
    let w = SumWindow::new(30, 60, 3.0).unwrap();
    assert!(partial_summation_window(&w, 0.4, &table, Weight::NegSigma).is_err());
    assert!(Weight::from_sign(0).is_none());
}

#[test]
fn bound_examples() {
    let pair = ExponentPair::parse("1/6,2/3").unwrap();
    let w = SumWindow::new(100, 200, 1e4).unwrap();
    assert!((vdc_bound(&w, &pair, 1e4).unwrap() - 10f64.powf(5.0 / 3.0)).abs() < 1e-9);

    let r = s1_s2_bound_check(10, 0.0, &pair, 100.0).unwrap();
    assert_eq!(r.s1, Complex64::new(18.0, 0.0));
    assert_eq!(r.s2, Complex64::new(3.0, 0.0));
    assert_eq!(r.n, 8);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn windows_concatenate(n in 1u64..5000, frac in 0.0f64..1.0, t in -1000.0f64..1000.0) {
        let whole = SumWindow::new(n, 2 * n, t).unwrap();
        let mid = n + 1 + ((n - 1) as f64 * frac) as u64;
        prop_assume!(mid < 2 * n);
        let left = phase_sum(&SumWindow::new(n, mid, t).unwrap());
        let right = phase_sum(&SumWindow::new(mid, 2 * n, t).unwrap());
        let total = phase_sum(&whole);
        prop_assert!((left + right - total).norm() <= 1e-10 * (1.0 + total.norm()));
    }

    #[test]
    fn phase_sum_is_bounded_by_length(n in 1u64..5000, t in -1e4f64..1e4) {
        let w = SumWindow::new(n, 2 * n, t).unwrap();
        prop_assert!(phase_sum(&w).norm() <= w.len() as f64 * (1.0 + 1e-12));
    }
}
