//! Classifies frequencies a = log x and prints the quantities that depend on
//! the classification.

use landau_lab::arithmetic::{classify_frequency, predicted_landau_limit, von_mangoldt, FrequencySpec};

fn main() -> landau_lab::Result<()> {
    for m in 2..=16 {
        println!("Lambda({m:>2}) = {:.6}", von_mangoldt(m)?);
    }
    println!();
    for text in ["log(8)", "log(2^3)", "log(12)", "2.0794415416798357", "1.5"] {
        let spec: FrequencySpec = text.parse()?;
        let f = classify_frequency(spec)?;
        println!(
            "{text:>20}: a = {:.12}  kind {:?}  limit {:+.6}  circle radius {:.6}",
            f.a,
            f.kind,
            predicted_landau_limit(&f),
            f.shift_radius()
        );
    }
    Ok(())
}
