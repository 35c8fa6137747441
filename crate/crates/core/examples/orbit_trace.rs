//! Traces the orbit function H_a(τ) over one stretch of τ, showing how the
//! window count ν moves the orbit center, and compares cycle sums with the
//! orbit function at the matching τ.

use landau_lab::cycles::{eta_h_gaps, h_trace, nu_integral};
use landau_lab::zeros;

fn main() -> landau_lab::Result<()> {
    let table = zeros::load_or_compute(20_000)?;
    let a = 1.0;

    let trace = h_trace(&table, a, 5000.0, 5030.0, 31)?;
    println!("{:>8} {:>10} {:>10} {:>3} {:>8}", "tau", "Re H", "Im H", "nu", "center");
    for s in &trace {
        println!("{:>8.1} {:>10.5} {:>10.5} {:>3} {:>8.4}", s.tau, s.value.re, s.value.im, s.nu, s.center);
    }

    println!("\n|eta(n) - H((2n+1)pi)| shrinks like 1/n:");
    for (n, gap) in eta_h_gaps(&table, a, 0.0, 100, 2000)?.into_iter().filter(|(n, _)| n % 300 == 100) {
        println!("  n = {n:>5}  gap {gap:.3e}  n*gap {:.3}", n as f64 * gap);
    }

    let t = 12_000.0;
    let nu = nu_integral(&table, a, t)?;
    let lo = 2.0 * std::f64::consts::PI * table.count(t - std::f64::consts::PI)? as f64;
    let hi = 2.0 * std::f64::consts::PI * table.count(t + std::f64::consts::PI)? as f64;
    println!("\nintegral of nu over [0, {t}] = {:.4} in [{lo:.4}, {hi:.4}]", nu.value);
    Ok(())
}
