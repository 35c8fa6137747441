//! Runs the acceptance checks and prints one line per criterion.
//!
//!     cargo run --release --example verify_suite            # 10 000 zeros
//!     cargo run --release --example verify_suite -- full    # 100 000 zeros

use landau_lab::verify::{run_suite, EngineRun, Preset};

fn main() -> landau_lab::Result<()> {
    let preset = match std::env::args().nth(1).as_deref() {
        Some("full") => Preset::Full,
        _ => Preset::Quick,
    };
    let engine = EngineRun::compute(preset.scale().zeros)?;
    let report = run_suite(&engine.table, preset, Some(&engine));
    for c in &report.criteria {
        println!("{}", c.summary_line());
        for line in c.detail_lines() {
            println!("{line}");
        }
    }
    println!("{}", if report.passed { "all criteria passed" } else { "some criteria did not pass" });
    Ok(())
}
