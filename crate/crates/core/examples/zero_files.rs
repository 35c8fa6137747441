//! Reads and writes the plain zero-file format, including the `BASE`
//! offset layout used for tables of very high zeros.

use landau_lab::zeros::{parse_zero_file, table::DEFAULT_INGEST_PRECISION, write_zero_file, ZeroTable};

const HIGH_ZEROS: &str = "\
# ordinates near a large height, stored relative to BASE
BASE 267653395647.0
0.12345
0.40211
0.97830
";

fn main() -> landau_lab::Result<()> {
    let table = parse_zero_file(HIGH_ZEROS.as_bytes(), None, DEFAULT_INGEST_PRECISION, "offset example")?;
    println!("{} ordinates from {:.5} to {:.5}", table.len(), table.ordinates()[0], table.coverage());

    let low = ZeroTable::new(
        vec![14.134725141734693, 21.022039638771555, 25.01085758014569],
        landau_lab::zeros::Source::Ingested,
        1e-12,
        "three zeros",
    )?;
    let mut text = Vec::new();
    write_zero_file(&low, &mut text, Some(12))?;
    print!("{}", String::from_utf8_lossy(&text));

    let back = parse_zero_file(text.as_slice(), None, 1e-11, "round trip")?;
    let worst = back
        .ordinates()
        .iter()
        .zip(low.ordinates())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    println!("round trip at 12 digits: max change {worst:.1e}");

    match parse_zero_file("14.5\n14.2\n".as_bytes(), None, 1e-8, "bad") {
        Err(e) => println!("unsorted input: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
