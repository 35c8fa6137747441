//! Writes CSV and SVG data for the five orbit and cycle-sum plots into a
//! directory (default `figures/`). Needs the first 100 000 zeros; set
//! LANDAU_LAB_CACHE to reuse them between runs.
//!
//!     cargo run --release --example reproduce_figures -- out/

use std::fs;
use std::path::PathBuf;

use landau_lab::figures::figures;
use landau_lab::output::{read_numeric_csv, write_svg_scatter};
use landau_lab::zeros;
use num_complex::Complex64;

fn main() -> landau_lab::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    fs::create_dir_all(&dir)?;
    let table = zeros::load_or_compute(100_000)?;

    for fig in figures() {
        let csv = fig.render_csv(&table)?;
        let (header, rows) = read_numeric_csv(csv.as_bytes())?;
        let re = header.iter().position(|h| h == "re").expect("re column");
        let points: Vec<Complex64> = rows.iter().map(|r| Complex64::new(r[re], r[re + 1])).collect();

        let stem = dir.join(format!("figure{}", fig.number));
        fs::write(stem.with_extension("csv"), &csv)?;
        let mut svg = Vec::new();
        write_svg_scatter(&points, &mut svg)?;
        fs::write(stem.with_extension("svg"), svg)?;
        println!("figure {}: {} ({} rows)  landau-lab {}", fig.number, fig.title, rows.len(), fig.command());
    }
    Ok(())
}
