//! CSV, JSON and SVG writers for scan, cycle and trace results.
//!
//! Numeric CSV fields carry 12 significant digits.

use std::io::{BufRead, Write};

use num_complex::Complex64;
use serde::Serialize;

use crate::cycles::{CycleSample, OrbitSample};
use crate::error::{Error, Result};
use crate::landau::LandauScanPoint;
use crate::zeros::table::{format_significant, SERIAL_DIGITS};

pub const LANDAU_HEADER: &str = "a,T,lambda,normalized,predicted,residual";
pub const ETA_HEADER: &str = "n,h,a,re,im";
pub const TRACE_HEADER: &str = "tau,re,im,nu,center";

fn num(x: f64) -> String {
    format_significant(x, SERIAL_DIGITS)
}

pub fn write_landau_csv<W: Write>(points: &[LandauScanPoint], mut out: W) -> Result<()> {
    writeln!(out, "{LANDAU_HEADER}")?;
    for p in points {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            num(p.a),
            num(p.t),
            num(p.lambda),
            num(p.normalized),
            num(p.predicted),
            num(p.residual)
        )?;
    }
    Ok(())
}

pub fn write_eta_csv<W: Write>(samples: &[CycleSample], mut out: W) -> Result<()> {
    writeln!(out, "{ETA_HEADER}")?;
    for s in samples {
        writeln!(out, "{},{},{},{},{}", s.n, num(s.h), num(s.a), num(s.value.re), num(s.value.im))?;
    }
    Ok(())
}

pub fn write_trace_csv<W: Write>(samples: &[OrbitSample], mut out: W) -> Result<()> {
    writeln!(out, "{TRACE_HEADER}")?;
    for s in samples {
        writeln!(
            out,
            "{},{},{},{},{}",
            num(s.tau),
            num(s.value.re),
            num(s.value.im),
            s.nu,
            num(s.center)
        )?;
    }
    Ok(())
}

#[derive(Serialize)]
struct EtaRow {
    n: u64,
    h: f64,
    a: f64,
    re: f64,
    im: f64,
}

#[derive(Serialize)]
struct TraceRow {
    tau: f64,
    re: f64,
    im: f64,
    nu: usize,
    center: f64,
    on_boundary: bool,
}

pub fn write_json<W: Write, T: Serialize + ?Sized>(value: &T, mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, value).map_err(|e| Error::Io(e.into()))?;
    writeln!(out)?;
    Ok(())
}

pub fn write_eta_json<W: Write>(samples: &[CycleSample], out: W) -> Result<()> {
    let rows: Vec<EtaRow> = samples
        .iter()
        .map(|s| EtaRow { n: s.n, h: s.h, a: s.a, re: s.value.re, im: s.value.im })
        .collect();
    write_json(&rows, out)
}

pub fn write_trace_json<W: Write>(samples: &[OrbitSample], out: W) -> Result<()> {
    let rows: Vec<TraceRow> = samples
        .iter()
        .map(|s| TraceRow {
            tau: s.tau,
            re: s.value.re,
            im: s.value.im,
            nu: s.nu,
            center: s.center,
            on_boundary: s.on_boundary,
        })
        .collect();
    write_json(&rows, out)
}

const SVG_SIZE: f64 = 800.0;
const SVG_MARGIN: f64 = 10.0;

/// Static scatter plot with one 1px marker per point, scaled to the data's
/// bounding box. Output depends only on the points.
pub fn write_svg_scatter<W: Write>(points: &[Complex64], mut out: W) -> Result<()> {
    let finite: Vec<Complex64> = points.iter().copied().filter(|z| z.re.is_finite() && z.im.is_finite()).collect();
    let bounds = |f: fn(&Complex64) -> f64| {
        let lo = finite.iter().map(f).fold(f64::INFINITY, f64::min);
        let hi = finite.iter().map(f).fold(f64::NEG_INFINITY, f64::max);
        if lo < hi {
            (lo, hi)
        } else if lo.is_finite() {
            (lo - 1.0, lo + 1.0)
        } else {
            (-1.0, 1.0)
        }
    };
    let (x0, x1) = bounds(|z| z.re);
    let (y0, y1) = bounds(|z| z.im);
    let span = SVG_SIZE - 2.0 * SVG_MARGIN;
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#,
        s = SVG_SIZE
    )?;
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#)?;
    writeln!(out, "<!-- re [{x0}, {x1}] im [{y0}, {y1}] -->")?;
    writeln!(out, r#"<g fill="black">"#)?;
    for z in &finite {
        let px = SVG_MARGIN + (z.re - x0) / (x1 - x0) * span;
        let py = SVG_MARGIN + (y1 - z.im) / (y1 - y0) * span;
        writeln!(out, r#"<rect x="{px:.2}" y="{py:.2}" width="1" height="1"/>"#)?;
    }
    writeln!(out, "</g>\n</svg>")?;
    Ok(())
}

/// Reads a CSV written by this module back into its header and numeric rows.
pub fn read_numeric_csv<R: BufRead>(reader: R) -> Result<(Vec<String>, Vec<Vec<f64>>)> {
    let mut lines = reader.lines();
    let header = match lines.next() {
        Some(line) => line?.split(',').map(str::to_owned).collect::<Vec<_>>(),
        None => return Err(Error::Parse { line: 1, message: "missing header".into() }),
    };
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        let row = line
            .split(',')
            .map(|f| {
                f.parse::<f64>().map_err(|_| Error::Parse {
                    line: i + 2,
                    message: format!("not a number: {f:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != header.len() {
            return Err(Error::Parse {
                line: i + 2,
                message: format!("expected {} fields, found {}", header.len(), row.len()),
            });
        }
        rows.push(row);
    }
    Ok((header, rows))
}
