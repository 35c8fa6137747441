//! Computes the first zeros with their Gram-block certificates and compares
//! the counting function with its main term.
//!
//!     cargo run --release --example compute_zeros -- 10000

use std::time::Instant;

use landau_lab::zeros::{self, main_term};

fn main() -> landau_lab::Result<()> {
    let count: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10_000);

    let start = Instant::now();
    let (table, blocks) = zeros::compute_zeros_certified(count)?;
    println!("{} zeros in {:.2?}, {} Gram blocks", table.len(), start.elapsed(), blocks.len());
    for (i, t) in table.ordinates().iter().take(5).enumerate() {
        println!("  gamma_{} = {t:.10}", i + 1);
    }

    let widest = blocks.iter().max_by_key(|b| b.end_index - b.start_index).expect("count > 0");
    println!(
        "widest block: g_{}..g_{} on [{:.4}, {:.4}], {} zeros",
        widest.start_index,
        widest.end_index,
        widest.start,
        widest.end,
        widest.end_index - widest.start_index
    );

    println!("\n{:>10} {:>8} {:>12} {:>10}", "T", "N(T)", "main term", "diff");
    let top = table.coverage();
    for t in [100.0, 1000.0, top / 4.0, top / 2.0, top] {
        let n = table.count(t)?;
        let m = main_term(t)?;
        println!("{t:>10.2} {n:>8} {m:>12.3} {:>10.3}", n as f64 - m);
    }
    Ok(())
}
