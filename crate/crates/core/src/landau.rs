//! Landau's exponential sum over the zero ordinates,
//! `λ_a(T) = Σ_{|t| <= T} e^{iat}`, and its residual against the
//! prime-power limit `−Λ(x) x^{−1/2} / 2π`.
//!
//! The ordinate set is symmetric, so the sum is evaluated as
//! `2 Σ_{0 < t <= T} cos(at)`. It is real by construction.

use crate::arithmetic::{predicted_landau_limit, Frequency};
use crate::error::{Error, Result};
use crate::summation::{reduce_chunked, NeumaierSum, DEFAULT_CHUNK};
use crate::zeros::ZeroTable;

/// One point of a frequency scan at fixed height.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct LandauScanPoint {
    pub a: f64,
    #[serde(rename = "T")]
    pub t: f64,
    pub lambda: f64,
    pub normalized: f64,
    pub predicted: f64,
    pub residual: f64,
}

impl LandauScanPoint {
    fn new(a: f64, t: f64, lambda: f64, predicted: f64) -> Self {
        let normalized = lambda / (2.0 * t);
        Self {
            a,
            t,
            lambda,
            normalized,
            predicted,
            residual: normalized - predicted,
        }
    }
}

fn check_frequency(a: f64) -> Result<()> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::Domain(format!("frequency must be positive, got {a}")));
    }
    Ok(())
}

/// `λ_a(T)` with compensated, thread-count-independent summation.
pub fn lambda_sum(table: &ZeroTable, a: f64, t: f64) -> Result<f64> {
    check_frequency(a)?;
    if !table.is_empty() {
        table.require_coverage(t)?;
    }
    let head = &table.ordinates()[..table.count_le(t)];
    Ok(2.0 * reduce_chunked(head, DEFAULT_CHUNK, |&s| (a * s).cos()))
}

/// Evaluates `λ_a(T)/2T` for each frequency of an ascending grid.
pub fn landau_scan(table: &ZeroTable, grid: &[Frequency], t: f64) -> Result<Vec<LandauScanPoint>> {
    if grid.is_empty() {
        return Err(Error::Domain("frequency grid is empty".into()));
    }
    if grid.windows(2).any(|w| w[1].a <= w[0].a) {
        return Err(Error::Domain("frequency grid must be strictly ascending".into()));
    }
    grid.iter()
        .map(|f| {
            let lambda = lambda_sum(table, f.a, t)?;
            Ok(LandauScanPoint::new(f.a, t, lambda, predicted_landau_limit(f)))
        })
        .collect()
}

/// Residuals at a ladder of heights, with the least-squares slope of
/// `log|residual|` against `log T`.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Convergence {
    pub points: Vec<LandauScanPoint>,
    /// `None` with fewer than two usable (nonzero-residual) heights.
    pub slope: Option<f64>,
    /// Sup of `|residual|` over `(T/2, T]` for each height.
    pub envelopes: Vec<f64>,
}

impl Convergence {
    /// True when each pointwise residual is at most `factor` times the
    /// previous one. The residual is signed and crosses zero, so this can
    /// fail while the envelopes decay.
    pub fn is_decaying_within(&self, factor: f64) -> bool {
        self.points
            .windows(2)
            .all(|w| w[1].residual.abs() <= factor * w[0].residual.abs())
    }

    /// True when each window envelope is at most `factor` times the previous one.
    pub fn envelope_decaying_within(&self, factor: f64) -> bool {
        self.envelopes.windows(2).all(|w| w[1] <= factor * w[0])
    }
}

pub fn landau_convergence(table: &ZeroTable, freq: &Frequency, heights: &[f64]) -> Result<Convergence> {
    if heights.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Domain("heights must be strictly ascending".into()));
    }
    let predicted = predicted_landau_limit(freq);
    let points = heights
        .iter()
        .map(|&t| {
            let lambda = lambda_sum(table, freq.a, t)?;
            Ok(LandauScanPoint::new(freq.a, t, lambda, predicted))
        })
        .collect::<Result<Vec<_>>>()?;
    let envelopes = heights
        .iter()
        .map(|&t| residual_envelope(table, freq, t / 2.0, t))
        .collect::<Result<Vec<_>>>()?;
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|p| p.residual != 0.0)
        .map(|p| (p.t.ln(), p.residual.abs().ln()))
        .collect();
    Ok(Convergence {
        slope: least_squares_slope(&logs),
        points,
        envelopes,
    })
}

/// Supremum of `|λ_a(T)/2T − predicted|` over `T ∈ (lo, hi]`.
///
/// `λ_a` is a step function, so on each interval between ordinates the
/// residual is monotone in `T` and the supremum is attained at interval
/// ends.
pub fn residual_envelope(table: &ZeroTable, freq: &Frequency, lo: f64, hi: f64) -> Result<f64> {
    check_frequency(freq.a)?;
    if !(lo > 0.0) || !(hi > lo) {
        return Err(Error::Domain(format!("envelope range ({lo}, {hi}] is empty")));
    }
    if !table.is_empty() {
        table.require_coverage(hi)?;
    }
    let predicted = predicted_landau_limit(freq);
    let ords = table.ordinates();
    let first = table.count_le(lo);
    let last = table.count_le(hi);
    // Half-sum Σ cos(a t) over t <= lo.
    let mut half = ords[..first].iter().map(|&s| (freq.a * s).cos()).collect::<NeumaierSum>();
    let residual = |s: f64, t: f64| (s / t - predicted).abs();
    let mut worst = residual(half.value(), lo.next_up());
    for &t in &ords[first..last] {
        worst = worst.max(residual(half.value(), t));
        half += (freq.a * t).cos();
        worst = worst.max(residual(half.value(), t));
    }
    Ok(worst.max(residual(half.value(), hi)))
}

fn least_squares_slope(xy: &[(f64, f64)]) -> Option<f64> {
    if xy.len() < 2 {
        return None;
    }
    let n = xy.len() as f64;
    let mx = xy.iter().map(|p| p.0).sum::<f64>() / n;
    let my = xy.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = xy.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = xy.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}
