//! Thresholds for the verification suite.
//!
//! Limits stated as requirements are used verbatim. Envelopes marked
//! *empirical* were measured on the first 100 000 zeros; nothing proves
//! the underlying limits, so they bound observed behaviour only.

/// Ordinate agreement with the reference table, first 100 zeros.
pub const ZERO_ORDINATE: f64 = 1e-6;

/// Wall-clock budget for computing 100 000 zeros, in seconds.
pub const ZERO_RUNTIME_SECS: f64 = 120.0;

/// `|N(T) − main term| <= COUNTING_LOG_FACTOR · log T` on `[100, T_max]`.
pub const COUNTING_LOG_FACTOR: f64 = 3.0;

/// `|λ_{log x}(T)/2T − predicted|` at `T ≈ 74920`.
pub const LANDAU_RESIDUAL: f64 = 0.005;

/// Allowed growth of the residual envelope from one height doubling to the next.
pub const LANDAU_MONOTONE_FACTOR: f64 = 3.0;

/// Bound on `|residual| · T / log T` for `T ∈ [10³, 74920]`
/// (empirical; measured maximum 0.33).
pub const LANDAU_LOG_ENVELOPE: f64 = 50.0;

/// Compensated versus double-double summation of `λ_a(T)`.
pub const SUMMATION_BUDGET: f64 = 1e-6;

/// `|Cesàro mean of η − predicted|` over `1 <= n < 8264`.
pub const CESARO_MEAN: f64 = 0.02;

/// Bound on `|error| · M / log M` for Cesàro means with `M >= 100`
/// (empirical; measured maximum 1.0).
pub const CESARO_LOG_ENVELOPE: f64 = 2.0;

/// Bound on `n · |η_{1,0}(n) − H_1((2n+1)π)|`, `n ∈ [100, 8000]`
/// (empirical; measured 0.49998, limit 1/2).
pub const GAP_ENVELOPE_A1: f64 = 0.55;

/// Same for `a = log 2` (empirical; measured 0.7213, limit 1/(2 log 2)).
pub const GAP_ENVELOPE_LOG2: f64 = 0.80;

/// Two-way split of an orbit stream, 50×50 bins (empirical; measured
/// 0.047–0.085).
pub const STATIONARITY_TV: f64 = 0.15;

/// Orbit histogram versus angularly averaged cycle histogram, `a = log 2`,
/// 40×40 bins (empirical; measured 0.037).
pub const CONVOLUTION_TV: f64 = 0.2;

/// Orbit histogram versus cycle histogram, `a = 1`, 40×40 bins
/// (empirical; measured 0.073).
pub const SAME_DENSITY_TV: f64 = 0.15;

/// Change in the averaged histogram when halving the angle count.
pub const ANGLE_RESOLUTION_TV: f64 = 1e-3;

/// Factor applied to the Landau and Cesàro thresholds in quick mode,
/// where heights are 8× lower and the `log T / T` error term about 6×
/// larger.
pub const QUICK_RELAXATION: f64 = 8.0;
