//! Scans λ_a(T)/2T over a frequency grid. The normalized sum is close to
//! −Λ(x)x^{−1/2}/2π at a = log x and close to zero elsewhere, so prime
//! powers show up as dips.
//!
//!     cargo run --release --example landau_scan -- 20000

use landau_lab::arithmetic::Frequency;
use landau_lab::landau::{landau_convergence, landau_scan};
use landau_lab::zeros;

fn main() -> landau_lab::Result<()> {
    let count: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20_000);
    let table = zeros::load_or_compute(count)?;
    let t = table.coverage().floor();

    let grid = (2..=30).map(Frequency::log_of).collect::<landau_lab::Result<Vec<_>>>()?;
    println!("{:>4} {:>12} {:>12} {:>10}", "x", "lambda/2T", "predicted", "");
    for (x, p) in (2..=30).zip(landau_scan(&table, &grid, t)?) {
        let marker = if p.predicted < 0.0 { "prime power" } else { "" };
        println!("{x:>4} {:>12.6} {:>12.6} {marker}", p.normalized, p.predicted);
    }

    let log2 = Frequency::log_of(2)?;
    let conv = landau_convergence(&table, &log2, &[t / 8.0, t / 4.0, t / 2.0, t])?;
    println!("\nresidual for x = 2 as T doubles:");
    for (p, env) in conv.points.iter().zip(&conv.envelopes) {
        println!("  T = {:>9.1}  residual {:+.3e}  sup over (T/2, T] {env:.3e}", p.t, p.residual);
    }
    if let Some(slope) = conv.slope {
        println!("  log-log slope of |residual|: {slope:.2}");
    }
    Ok(())
}
