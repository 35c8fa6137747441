//! The ordered table of positive zero ordinates and its text format.
//!
//! Only the positive half of the ordinate set is stored. The set is
//! symmetric about zero, so every consumer that sums over all ordinates
//! folds the negative half in analytically.
//!
//! Text format: UTF-8, one decimal ordinate per line, blank lines and lines
//! starting with `#` ignored. The first data line may be `BASE <decimal>`,
//! an offset added to every following value (the layout used by published
//! tables of zeros at large heights).

use std::f64::consts::PI;
use std::fmt;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

/// Precision assumed for ingested ordinates when none is given.
pub const DEFAULT_INGEST_PRECISION: f64 = 1e-8;

/// Significant digits in the serialized form of a table.
pub const SERIAL_DIGITS: usize = 12;

/// Every stored ordinate must exceed this (the first zero is near 14.13).
pub const MIN_ORDINATE: f64 = 14.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Computed,
    Ingested,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Computed => f.write_str("computed"),
            Source::Ingested => f.write_str("ingested"),
        }
    }
}

/// Strictly increasing positive zero ordinates with provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroTable {
    ordinates: Vec<f64>,
    source: Source,
    precision: f64,
    label: String,
    declared_coverage: Option<f64>,
}

impl ZeroTable {
    /// Builds a table, rejecting unsorted, duplicate, non-finite or too-small
    /// ordinates.
    pub fn new(
        ordinates: Vec<f64>,
        source: Source,
        precision: f64,
        label: impl Into<String>,
    ) -> Result<Self> {
        if !(precision > 0.0) || !precision.is_finite() {
            return Err(Error::Validation(format!(
                "precision must be positive, got {precision}"
            )));
        }
        if let Some((i, bad)) = ordinates.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::Validation(format!("ordinate #{} is {bad}", i + 1)));
        }
        if let Some(&first) = ordinates.first() {
            if first <= MIN_ORDINATE {
                return Err(Error::Validation(format!(
                    "first ordinate {first} is not above {MIN_ORDINATE}"
                )));
            }
        }
        if let Some(i) = ordinates.windows(2).position(|w| w[1] <= w[0]) {
            return Err(Error::Validation(format!(
                "ordinates not strictly increasing at #{}: {} then {}",
                i + 2,
                ordinates[i],
                ordinates[i + 1]
            )));
        }
        Ok(Self {
            ordinates,
            source,
            precision,
            label: label.into(),
            declared_coverage: None,
        })
    }

    /// A hand-made table for experiments and tests: any strictly
    /// increasing positive ordinates, declared complete up to `coverage`.
    pub fn synthetic(ordinates: Vec<f64>, coverage: f64) -> Result<Self> {
        if ordinates.iter().any(|&v| !(v > 0.0) || !v.is_finite()) {
            return Err(Error::Validation("synthetic ordinates must be positive".into()));
        }
        if ordinates.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Validation("synthetic ordinates must increase".into()));
        }
        if ordinates.last().is_some_and(|&m| coverage < m) {
            return Err(Error::Validation(format!(
                "coverage {coverage} is below the last ordinate"
            )));
        }
        Ok(Self {
            ordinates,
            source: Source::Ingested,
            precision: f64::EPSILON,
            label: "synthetic".into(),
            declared_coverage: Some(coverage),
        })
    }

    pub fn empty(source: Source, label: impl Into<String>) -> Self {
        Self {
            ordinates: Vec::new(),
            source,
            precision: DEFAULT_INGEST_PRECISION,
            label: label.into(),
            declared_coverage: None,
        }
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    pub fn source(&self) -> Source {
        self.source
    }

    pub fn precision(&self) -> f64 {
        self.precision
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Height up to which the table is complete: the largest stored
    /// ordinate (0 when empty) unless a synthetic table declared more.
    pub fn coverage(&self) -> f64 {
        self.declared_coverage
            .unwrap_or_else(|| self.ordinates.last().copied().unwrap_or(0.0))
    }

    /// Fails unless heights up to `t` are covered by the table.
    pub fn require_coverage(&self, t: f64) -> Result<()> {
        if t > self.coverage() {
            return Err(Error::Coverage {
                requested: t,
                available: self.coverage(),
            });
        }
        Ok(())
    }

    /// `N(T)`: number of ordinates `<= t`.
    ///
    /// Asking beyond the last ordinate is an error, since the count would
    /// only be a lower bound. An empty table counts 0 everywhere.
    pub fn count(&self, t: f64) -> Result<usize> {
        if self.is_empty() {
            return Ok(0);
        }
        self.require_coverage(t)?;
        Ok(self.count_le(t))
    }

    pub(crate) fn count_le(&self, t: f64) -> usize {
        self.ordinates.partition_point(|&x| x <= t)
    }

    /// Ordinates in the closed interval `[lo, hi]`.
    pub fn slice_between(&self, lo: f64, hi: f64) -> &[f64] {
        let start = self.ordinates.partition_point(|&x| x < lo);
        let end = self.ordinates.partition_point(|&x| x <= hi);
        &self.ordinates[start..end.max(start)]
    }

    /// Keeps the first `count` ordinates.
    pub fn truncated(&self, count: usize) -> ZeroTable {
        let mut out = self.clone();
        out.ordinates.truncate(count);
        out.declared_coverage = None;
        out
    }

    /// Largest `|N(T) − main_term(T)| / log T` over `points` equally spaced
    /// heights in `[lo, coverage]`.
    pub fn counting_envelope(&self, lo: f64, points: usize) -> Option<f64> {
        let hi = self.coverage();
        if points < 2 || hi <= lo {
            return None;
        }
        let worst = (0..points)
            .map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64)
            .map(|t| (self.count_le(t) as f64 - main_term_unchecked(t)).abs() / t.ln())
            .fold(0.0, f64::max);
        Some(worst)
    }
}

/// Main term `(T/2π) log(T/2π) − T/2π` of the zero-counting function.
pub fn main_term(t: f64) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!("main term needs T > 0, got {t}")));
    }
    Ok(main_term_unchecked(t))
}

fn main_term_unchecked(t: f64) -> f64 {
    let u = t / (2.0 * PI);
    u * u.ln() - u
}

/// Reads a zero file.
///
/// `base_offset` and a `BASE` line are alternatives; supplying both with
/// different values is rejected.
pub fn parse_zero_file<R: BufRead>(
    reader: R,
    base_offset: Option<f64>,
    precision: f64,
    label: impl Into<String>,
) -> Result<ZeroTable> {
    let mut base = base_offset;
    let mut seen_data = false;
    let mut values = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        if let Some(rest) = text.strip_prefix("BASE") {
            if seen_data {
                return Err(Error::Parse {
                    line: line_no,
                    message: "BASE must precede all ordinates".into(),
                });
            }
            let value: f64 = rest.trim().parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("bad BASE value {:?}", rest.trim()),
            })?;
            match base {
                Some(b) if b != value => {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("BASE {value} conflicts with offset {b}"),
                    })
                }
                _ => base = Some(value),
            }
            seen_data = true;
            continue;
        }
        seen_data = true;
        let value: f64 = text.parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("not a decimal number: {text:?}"),
        })?;
        values.push(value + base.unwrap_or(0.0));
    }
    ZeroTable::new(values, Source::Ingested, precision, label)
}

/// Formats `value` with `digits` significant digits in plain decimal.
pub fn format_significant(value: f64, digits: usize) -> String {
    if value == 0.0 {
        return "0".into();
    }
    if !value.is_finite() {
        return format!("{value}");
    }
    let magnitude = value.abs().log10().floor() as i64 + 1;
    let decimals = (digits as i64 - magnitude).max(0) as usize;
    let out = format!("{value:.decimals$}");
    // Rounding can carry into a new leading digit (9.99.. → 10.0).
    let carried = out.trim_start_matches('-').split('.').next().map_or(0, str::len) as i64;
    if carried > magnitude.max(1) && decimals > 0 {
        let decimals = decimals - 1;
        return format!("{value:.decimals$}");
    }
    out
}

/// Writes a table in the zero-file format.
///
/// `digits = None` writes the shortest representation that parses back to
/// the identical `f64`.
pub fn write_zero_file<W: Write>(table: &ZeroTable, mut out: W, digits: Option<usize>) -> Result<()> {
    writeln!(
        out,
        "# {} zeros, source={}, precision={:e}, label={}",
        table.len(),
        table.source,
        table.precision,
        table.label
    )?;
    for &t in &table.ordinates {
        match digits {
            Some(d) => writeln!(out, "{}", format_significant(t, d))?,
            None => writeln!(out, "{t}")?,
        }
    }
    Ok(())
}
