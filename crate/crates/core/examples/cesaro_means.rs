//! Running means of the cycle sums η_{a,h}(n) against their predicted limit
//! −(Λ(e^a)/a)e^{−(1/2+ih)a}.

use landau_lab::arithmetic::{predicted_eta_mean, Frequency};
use landau_lab::cycles::{eta_series, max_covered_cycle};
use landau_lab::zeros;
use num_complex::Complex64;

fn main() -> landau_lab::Result<()> {
    let table = zeros::load_or_compute(20_000)?;
    for (freq, h) in [(Frequency::log_of(2)?, 0.0), (Frequency::log_of(2)?, 1.0), (Frequency::log_of(6)?, 0.0)] {
        let m = max_covered_cycle(&table, freq.a, h).expect("table reaches one cycle");
        let target = predicted_eta_mean(&freq, h);
        let etas = eta_series(&table, freq.a, h, 1, m)?;
        println!("a = {freq}, h = {h}: predicted mean {:.5}{:+.5}i", target.re, target.im);
        let mut sum = Complex64::new(0.0, 0.0);
        for (i, s) in etas.iter().enumerate() {
            sum += s.value;
            let n = i + 1;
            if n.is_power_of_two() || n == etas.len() {
                let mean = sum / n as f64;
                println!("  M = {:>5}  mean {:+.5}{:+.5}i  error {:.2e}", n + 1, mean.re, mean.im, (mean - target).norm());
            }
        }
    }
    Ok(())
}
