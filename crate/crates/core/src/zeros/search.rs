//! Zero search along the critical line by Gram blocks.
//!
//! A Gram point `g_k` solves `θ(g_k) = kπ`; it is *good* when
//! `(−1)^k Z(g_k) > 0`. Between consecutive good Gram points `g_j < g_k`
//! there are exactly `k − j` zeros whenever the counting function agrees
//! with `θ(t)/π + 1` at both ends, which holds throughout the desk-scale
//! range. Each block is scanned at its Gram points; missing sign changes
//! are hunted by dyadic subdivision, and every sign change is refined by
//! bisection.

use std::f64::consts::PI;

use rayon::prelude::*;

use super::riemann_siegel::{theta_derivative, theta_unchecked, z_unchecked, MIN_HEIGHT};
use super::table::{Source, ZeroTable};
use crate::error::{Error, Result};

/// Largest zero count accepted by [`compute_zeros`].
pub const MAX_COUNT: usize = 1_000_000;

/// Bisection stops once the bracket is this narrow.
pub const BRACKET_WIDTH: f64 = 1e-10;

/// Declared absolute precision of computed ordinates.
pub const COMPUTED_PRECISION: f64 = 1e-9;

/// Dyadic subdivision depth when a block is short of sign changes.
pub const MAX_SUBDIVISION_DEPTH: u32 = 12;

/// Gram points are evaluated in batches of this size.
const GRAM_BATCH: usize = 2048;

/// One certified Gram block.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockCertificate {
    /// Gram index at the left end; `-1` stands for the search start at `t = 10`.
    pub start_index: i64,
    pub end_index: i64,
    pub start: f64,
    pub end: f64,
    /// Zeros found below `end`; equals `end_index + 1`.
    pub cumulative: usize,
}

/// Solves `θ(t) = kπ` by Newton's method from an asymptotic guess.
pub fn gram_point(k: i64) -> Result<f64> {
    if k < 0 {
        return Err(Error::Domain(format!(
            "Gram point {k} lies below the supported height range"
        )));
    }
    // θ(t) ≈ (t/2) log(t/2πe) − π/8, so t/2πe = e^{W((k + 1/8)/e)}.
    let target = k as f64 * PI;
    let w = lambert_w((k as f64 + 0.125) / std::f64::consts::E);
    let mut t = 2.0 * PI * std::f64::consts::E * w.exp();
    for _ in 0..50 {
        let step = (theta_unchecked(t) - target) / theta_derivative(t);
        t -= step;
        if step.abs() <= 1e-13 * t {
            break;
        }
    }
    Ok(t)
}

/// Principal branch of Lambert's `W` for `x >= 0`.
fn lambert_w(x: f64) -> f64 {
    let mut w = if x < 1.0 { x } else { x.ln() - x.ln().ln().max(0.0) };
    for _ in 0..60 {
        let ew = w.exp();
        let f = w * ew - x;
        let step = f / (ew * (w + 1.0));
        w -= step;
        if step.abs() < 1e-15 * w.abs().max(1.0) {
            break;
        }
    }
    w
}

#[derive(Clone, Copy)]
struct Sample {
    t: f64,
    z: f64,
}

fn sample(t: f64) -> Sample {
    Sample { t, z: z_unchecked(t) }
}

fn sign_changes(points: &[Sample]) -> usize {
    points
        .windows(2)
        .filter(|w| (w[0].z < 0.0) != (w[1].z < 0.0))
        .count()
}

fn bisect(mut lo: Sample, mut hi: Sample) -> f64 {
    while hi.t - lo.t > BRACKET_WIDTH {
        let mid = sample(0.5 * (lo.t + hi.t));
        if (mid.z < 0.0) == (lo.z < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo.t + hi.t)
}

/// Finds the zeros of one Gram block given its sample points.
fn solve_block(mut points: Vec<Sample>, expected: usize) -> std::result::Result<Vec<f64>, usize> {
    let mut depth = 0;
    while sign_changes(&points) < expected {
        if depth == MAX_SUBDIVISION_DEPTH {
            return Err(sign_changes(&points));
        }
        depth += 1;
        let mut refined = Vec::with_capacity(points.len() * 2);
        for w in points.windows(2) {
            refined.push(w[0]);
            refined.push(sample(0.5 * (w[0].t + w[1].t)));
        }
        refined.push(*points.last().expect("block has endpoints"));
        points = refined;
    }
    let found = sign_changes(&points);
    if found != expected {
        return Err(found);
    }
    Ok(points
        .windows(2)
        .filter(|w| (w[0].z < 0.0) != (w[1].z < 0.0))
        .map(|w| bisect(w[0], w[1]))
        .collect())
}

struct Block {
    start_index: i64,
    end_index: i64,
    points: Vec<Sample>,
}

/// Computes the first `count` zero ordinates with a per-block certificate.
pub fn compute_zeros_certified(count: usize) -> Result<(ZeroTable, Vec<BlockCertificate>)> {
    if count > MAX_COUNT {
        return Err(Error::Domain(format!(
            "zero count {count} exceeds the limit {MAX_COUNT}"
        )));
    }
    let label = format!("first {count} zeros");
    if count == 0 {
        return Ok((ZeroTable::new(Vec::new(), Source::Computed, COMPUTED_PRECISION, label)?, Vec::new()));
    }

    let mut zeros: Vec<f64> = Vec::with_capacity(count + 16);
    let mut certificates = Vec::new();
    // Z(10) < 0 and no zero lies below 10: the start behaves like g_{-1}.
    let mut open = Block {
        start_index: -1,
        end_index: -1,
        points: vec![sample(MIN_HEIGHT)],
    };
    let mut next_k: i64 = 0;

    while zeros.len() < count {
        let batch: Vec<Sample> = (next_k..next_k + GRAM_BATCH as i64)
            .into_par_iter()
            .map(|k| gram_point(k).map(sample))
            .collect::<Result<_>>()?;

        let mut closed = Vec::new();
        for (offset, s) in batch.into_iter().enumerate() {
            let k = next_k + offset as i64;
            open.points.push(s);
            let good = if k % 2 == 0 { s.z > 0.0 } else { s.z < 0.0 };
            if good {
                open.end_index = k;
                let next = Block {
                    start_index: k,
                    end_index: k,
                    points: vec![s],
                };
                closed.push(std::mem::replace(&mut open, next));
            }
        }
        next_k += GRAM_BATCH as i64;

        let solved: Vec<Result<Vec<f64>>> = closed
            .par_iter()
            .map(|b| {
                let expected = (b.end_index - b.start_index) as usize;
                solve_block(b.points.clone(), expected).map_err(|found| Error::Incomplete {
                    start: b.points[0].t,
                    end: b.points[b.points.len() - 1].t,
                    found,
                    expected,
                })
            })
            .collect();
        for (block, roots) in closed.iter().zip(solved) {
            zeros.extend(roots?);
            certificates.push(BlockCertificate {
                start_index: block.start_index,
                end_index: block.end_index,
                start: block.points[0].t,
                end: block.points[block.points.len() - 1].t,
                cumulative: zeros.len(),
            });
        }
    }
    zeros.truncate(count);
    let table = ZeroTable::new(zeros, Source::Computed, COMPUTED_PRECISION, label)?;
    Ok((table, certificates))
}

/// Computes the first `count` zero ordinates, each within `1e-9`.
pub fn compute_zeros(count: usize) -> Result<ZeroTable> {
    compute_zeros_certified(count).map(|(table, _)| table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_gram_point() {
        let g0 = gram_point(0).unwrap();
        assert!((g0 - 17.84559954041086).abs() < 1e-11);
        assert!(gram_point(-1).is_err());
    }

    #[test]
    fn gram_points_increase() {
        let g: Vec<f64> = (0..200).map(|k| gram_point(k).unwrap()).collect();
        assert!(g.windows(2).all(|w| w[1] > w[0]));
        for (k, t) in g.iter().enumerate() {
            assert!((theta_unchecked(*t) - k as f64 * PI).abs() < 1e-9);
        }
    }

    #[test]
    fn lambert_w_inverts() {
        for x in [0.0, 0.05, 1.0, 7.5, 1e4] {
            let w = lambert_w(x);
            assert!((w * w.exp() - x).abs() <= 1e-12 * x.max(1.0));
        }
    }

    #[test]
    fn zero_count_is_empty() {
        let t = compute_zeros(0).unwrap();
        assert!(t.is_empty());
        assert_eq!(t.source(), Source::Computed);
    }

    #[test]
    fn first_zero() {
        let t = compute_zeros(1).unwrap();
        assert_eq!(t.len(), 1);
        assert!((t.ordinates()[0] - 14.134725141734694).abs() < 1e-9);
    }

    #[test]
    fn rejects_oversized_request() {
        assert!(matches!(compute_zeros(MAX_COUNT + 1), Err(Error::Domain(_))));
    }

    #[test]
    fn certificates_match_gram_counts() {
        let (table, certs) = compute_zeros_certified(500).unwrap();
        assert_eq!(table.len(), 500);
        for c in &certs {
            assert_eq!(c.cumulative as i64, c.end_index + 1);
            // round(θ(g)/π) + 1 at the block end
            let predicted = (theta_unchecked(c.end) / PI).round() as i64 + 1;
            assert_eq!(c.cumulative as i64, predicted);
        }
    }
}
