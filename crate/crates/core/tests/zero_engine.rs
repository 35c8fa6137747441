mod support;

use landau_lab::zeros::{
    self, compute_zeros, compute_zeros_certified, main_term, parse_zero_file, riemann_siegel_z, theta,
    write_zero_file, Source, ZeroTable,
};
use proptest::prelude::*;

#[test]
fn oracle_agrees_with_reference_points() {
    for &(t, th, z) in &support::REFERENCE_POINTS {
        assert!((support::theta(t) - th).abs() < 1e-9 * th.abs().max(1.0), "theta({t})");
        assert!((support::hardy_z(t) - z).abs() < 1e-8, "Z({t}) = {} vs {z}", support::hardy_z(t));
    }
}

#[test]
fn theta_and_z_match_reference_points() {
    for &(t, th, z) in &support::REFERENCE_POINTS {
        assert!((theta(t).unwrap() - th).abs() < 1e-10 * th.abs().max(1.0), "theta({t})");
        assert!((zeros::z(t).unwrap() - z).abs() < 1e-9, "Z({t})");
    }
}

#[test]
fn z_matches_oracle_across_range() {
    let mut t = 10.0;
    let mut worst: f64 = 0.0;
    while t <= 1e5 {
        worst = worst.max((zeros::z(t).unwrap() - support::hardy_z(t)).abs());
        t *= 1.0137;
    }
    assert!(worst <= 1e-6, "max |Z - oracle| = {worst:e}");
}

#[test]
fn riemann_siegel_formula_above_crossover() {
    for t in [1000.5, 2345.6, 9999.0, 31415.9, 99_000.0] {
        let err = (riemann_siegel_z(t).unwrap() - support::hardy_z(t)).abs();
        assert!(err <= 1e-6, "t = {t}: {err:e}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn z_matches_oracle_at_random_heights(t in 10.0f64..1e5) {
        prop_assert!((zeros::z(t).unwrap() - support::hardy_z(t)).abs() <= 1e-6);
    }

    #[test]
    fn z_is_real_valued_rotation(t in 10.0f64..5000.0) {
        // e^{iθ}ζ(1/2+it) is real: the oracle's imaginary part must vanish.
        let w = num_complex::Complex64::from_polar(1.0, support::theta(t)) * support::zeta_half(t);
        prop_assert!(w.im.abs() < 1e-8);
    }
}

#[test]
fn first_hundred_zeros_match_reference() {
    let computed = compute_zeros(100).unwrap();
    let reference = support::reference_zeros();
    assert_eq!(reference.len(), 100);
    for (i, (c, r)) in computed.ordinates().iter().zip(&reference).enumerate() {
        assert!((c - r).abs() < 1e-9, "zero #{}: {c} vs {r}", i + 1);
    }
    assert_eq!(computed.count(100.0).unwrap(), 29);
}

#[test]
fn oracle_bisection_finds_the_same_zeros() {
    let computed = compute_zeros(12).unwrap();
    for &t in computed.ordinates() {
        let root = support::bisect(support::hardy_z, t - 0.05, t + 0.05, 1e-11);
        assert!((root - t).abs() < 1e-9, "{root} vs {t}");
    }
}

#[test]
fn certificates_agree_with_oracle_sign_changes() {
    let (table, blocks) = compute_zeros_certified(300).unwrap();
    for b in blocks.iter().filter(|b| b.end <= table.coverage()) {
        assert_eq!(b.cumulative as i64, b.end_index + 1);
        assert_eq!(table.count(b.end).unwrap() as i64, b.end_index + 1);
    }
    // Independent count of sign changes of the oracle Z on a fine grid.
    let hi = blocks[20].end;
    let mut changes = 0;
    let mut prev = support::hardy_z(10.0);
    let mut t = 10.0;
    while t < hi {
        t = (t + 0.01).min(hi);
        let cur = support::hardy_z(t);
        if (cur < 0.0) != (prev < 0.0) {
            changes += 1;
        }
        prev = cur;
    }
    assert_eq!(changes, blocks[20].end_index + 1);
}

#[test]
fn counting_function_stays_near_main_term() {
    let table = compute_zeros(10_000).unwrap();
    let env = table.counting_envelope(100.0, 2000).unwrap();
    assert!(env <= 3.0, "max |N - main|/log T = {env}");
    assert!((main_term(table.coverage()).unwrap() - 10_000.0).abs() < 3.0 * table.coverage().ln());
}

#[test]
fn computed_tables_are_cached_bit_exactly() {
    let dir = tempfile::tempdir().unwrap();
    std::env::set_var(zeros::CACHE_ENV, dir.path());
    let first = zeros::load_or_compute(500).unwrap();
    assert!(dir.path().join("zeros-500.txt").exists());
    let second = zeros::load_or_compute(500).unwrap();
    std::env::remove_var(zeros::CACHE_ENV);
    assert_eq!(first.ordinates(), second.ordinates());
    assert_eq!(second.source(), Source::Computed);
}

fn increasing(len: usize) -> impl Strategy<Value = Vec<f64>> {
    (14.01f64..1e6, prop::collection::vec(1e-6f64..50.0, len)).prop_map(|(start, steps)| {
        steps
            .iter()
            .scan(start, |t, d| {
                *t += d;
                Some(*t)
            })
            .collect()
    })
}

proptest! {
    #[test]
    fn zero_file_round_trip_full_precision(v in increasing(40)) {
        let table = ZeroTable::new(v.clone(), Source::Ingested, 1e-8, "p").unwrap();
        let mut buf = Vec::new();
        write_zero_file(&table, &mut buf, None).unwrap();
        let back = parse_zero_file(buf.as_slice(), None, 1e-8, "p").unwrap();
        prop_assert_eq!(back.ordinates(), v.as_slice());
    }

    #[test]
    fn zero_file_round_trip_twelve_digits(v in increasing(40)) {
        let table = ZeroTable::new(v.clone(), Source::Ingested, 1e-8, "p").unwrap();
        let mut buf = Vec::new();
        write_zero_file(&table, &mut buf, Some(12)).unwrap();
        // Rounding can merge neighbours closer than the 12th digit.
        if let Ok(back) = parse_zero_file(buf.as_slice(), None, 1e-8, "p") {
            for (a, b) in back.ordinates().iter().zip(&v) {
                prop_assert!((a - b).abs() <= 5e-12 * b.abs());
            }
        }
    }

    #[test]
    fn base_offset_shifts_every_value(v in increasing(10), base in 0.0f64..1e9) {
        let text: String = v.iter().map(|x| format!("{x}\n")).collect();
        let plain = parse_zero_file(text.as_bytes(), None, 1e-8, "p").unwrap();
        let shifted = parse_zero_file(text.as_bytes(), Some(base), 1e-8, "p").unwrap();
        for (a, b) in shifted.ordinates().iter().zip(plain.ordinates()) {
            prop_assert_eq!(*a, b + base);
        }
    }

    #[test]
    fn count_is_a_nondecreasing_step_function(v in increasing(30), x in 0.0f64..1.0, y in 0.0f64..1.0) {
        let table = ZeroTable::new(v.clone(), Source::Ingested, 1e-8, "p").unwrap();
        let top = table.coverage();
        let (lo, hi) = if x < y { (x, y) } else { (y, x) };
        let (a, b) = (14.0 + lo * (top - 14.0), 14.0 + hi * (top - 14.0));
        prop_assert!(table.count(a).unwrap() <= table.count(b).unwrap());
        for (i, &t) in v.iter().enumerate() {
            prop_assert_eq!(table.count(t).unwrap(), i + 1);
        }
    }
}
