//! Zero ordinates: evaluation of `Z`, the zero search, the table type and
//! its file format.

pub mod euler_maclaurin;
pub mod riemann_siegel;
pub mod search;
pub mod table;

use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::PathBuf;

pub use riemann_siegel::{riemann_siegel_z, theta, z};
pub use search::{compute_zeros, compute_zeros_certified, gram_point, BlockCertificate};
pub use table::{main_term, parse_zero_file, write_zero_file, Source, ZeroTable};

use crate::error::Result;

/// Environment variable naming the directory for cached computed tables.
pub const CACHE_ENV: &str = "LANDAU_LAB_CACHE";

/// Computes the first `count` zeros, reusing a cached table when the
/// `LANDAU_LAB_CACHE` directory holds one.
pub fn load_or_compute(count: usize) -> Result<ZeroTable> {
    let Some(dir) = std::env::var_os(CACHE_ENV).map(PathBuf::from) else {
        return compute_zeros(count);
    };
    let path = dir.join(format!("zeros-{count}.txt"));
    if let Ok(file) = File::open(&path) {
        let parsed = parse_zero_file(
            BufReader::new(file),
            None,
            search::COMPUTED_PRECISION,
            format!("first {count} zeros"),
        )?;
        if parsed.len() == count {
            return ZeroTable::new(
                parsed.ordinates().to_vec(),
                Source::Computed,
                search::COMPUTED_PRECISION,
                parsed.label(),
            );
        }
    }
    let table = compute_zeros(count)?;
    std::fs::create_dir_all(&dir)?;
    let tmp = dir.join(format!("zeros-{count}.txt.tmp"));
    write_zero_file(&table, BufWriter::new(File::create(&tmp)?), None)?;
    std::fs::rename(&tmp, &path)?;
    Ok(table)
}
