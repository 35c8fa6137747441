//! Empirical densities of orbit values and recentered cycle sums for
//! a = log 2, their relation through an angular average, and a split test
//! for stationarity. Writes an SVG scatter of the cycle sums.

use std::fs::File;
use std::io::BufWriter;
use std::f64::consts::{LN_2, PI};

use landau_lab::arithmetic::{predicted_eta_mean, Frequency};
use landau_lab::cycles::{eta_series, h_trace, max_covered_cycle};
use landau_lab::distributions::{
    angular_convolve, build_histogram, histogram_distance, permutation_baseline, stationarity_split_test, Window,
    DEFAULT_ANGLE_STEPS, WINDOW_SIGMAS,
};
use landau_lab::{output, zeros};

fn main() -> landau_lab::Result<()> {
    let table = zeros::load_or_compute(100_000)?;
    let freq = Frequency::log_of(2)?;
    let top = table.coverage().floor();

    let orbit: Vec<_> = h_trace(&table, LN_2, PI, top * LN_2 - PI, 50_000)?.iter().map(|s| s.value).collect();
    let shift = predicted_eta_mean(&freq, 0.0);
    let n_max = max_covered_cycle(&table, freq.a, 0.0).expect("covered");
    let cycles: Vec<_> = eta_series(&table, freq.a, 0.0, 4, n_max)?.iter().map(|s| s.value - shift).collect();

    let window = Window::from_samples(&orbit, WINDOW_SIGMAS)?;
    let h_grid = build_histogram(&orbit, window, 40, 40)?;
    let eta_grid = build_histogram(&cycles, window, 40, 40)?;
    let averaged = angular_convolve(&eta_grid, freq.shift_radius(), DEFAULT_ANGLE_STEPS)?;
    println!("radius of the angular average: {:.5}", freq.shift_radius());
    println!("TV(H, eta)          = {:.4}", histogram_distance(&h_grid, &eta_grid)?);
    println!("TV(H, averaged eta) = {:.4}", histogram_distance(&h_grid, &averaged.grid)?);
    println!("mass pushed outside the window: {:.1}", averaged.mass_out);

    let split = stationarity_split_test(&orbit, 4, 50, 50)?;
    let worst = split.iter().map(|p| p.distance).fold(0.0, f64::max);
    println!("H stream in 4 blocks: max pairwise TV {worst:.4}");
    println!("  shuffled baseline:  {:.4}", permutation_baseline(&orbit, 4, 50, 50, 5, 1)?);

    let path = std::env::temp_dir().join("eta_log2.svg");
    output::write_svg_scatter(&cycles, BufWriter::new(File::create(&path)?))?;
    println!("scatter written to {}", path.display());
    Ok(())
}
