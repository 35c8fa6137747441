//! Sums over one cycle of the zeros and the continuous orbit function.
//!
//! For a frequency `a` and height shift `h`, cycle `n` collects the
//! shifted ordinates `t = s − h` with `⌊at/2π⌋ = n`:
//!
//! ```text
//! η_{a,h}(n) = (1/a) log(n/a) + Σ_{cycle n} (e^{iat} − 1)
//! H_a(τ)     = (1/a) log(τ/2πa) − Σ_{u ∈ τ−aS, |u| <= π} (1 + e^{−iu})
//! ν_a(τ)     = #((τ − aS) ∩ [−π, π])
//! ```
//!
//! `S` is the full symmetric ordinate set; its negative half is visited
//! only where it can reach the window or cycle.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::zeros::ZeroTable;

const TWO_PI: f64 = 2.0 * PI;

/// `||u| − π|` below this marks a window-boundary hit.
pub const BOUNDARY_FLAG: f64 = 1e-12;

/// One cycle sum `η_{a,h}(n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleSample {
    pub n: u64,
    pub a: f64,
    pub h: f64,
    pub value: Complex64,
}

/// One value of the orbit function `H_a(τ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitSample {
    pub tau: f64,
    pub a: f64,
    pub value: Complex64,
    pub nu: usize,
    /// `(1/a) log(τ/2πa) − ν`
    pub center: f64,
    /// Some `u` sat within [`BOUNDARY_FLAG`] of `±π`.
    pub on_boundary: bool,
}

fn check_frequency(a: f64) -> Result<()> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::Domain(format!("frequency must be positive, got {a}")));
    }
    Ok(())
}

/// Cycle sums for `n_min ..= n_max` in a single pass over the table.
///
/// `n = 0` is excluded: its drift term `log(0/a)` diverges.
pub fn eta_series(table: &ZeroTable, a: f64, h: f64, n_min: u64, n_max: u64) -> Result<Vec<CycleSample>> {
    check_frequency(a)?;
    if n_min < 1 {
        return Err(Error::Domain("cycle index must be >= 1".into()));
    }
    if n_max < n_min {
        return Ok(Vec::new());
    }
    let lo = h + TWO_PI * n_min as f64 / a;
    let hi = h + TWO_PI * (n_max + 1) as f64 / a;
    table.require_coverage(hi)?;

    let len = (n_max - n_min + 1) as usize;
    let mut sums = vec![Complex64::new(0.0, 0.0); len];
    let mut add = |s: f64| {
        let t = s - h;
        let n = (a * t / TWO_PI).floor();
        if n >= n_min as f64 && n <= n_max as f64 {
            sums[(n as u64 - n_min) as usize] += Complex64::from_polar(1.0, a * t) - 1.0;
        }
    };
    // Slightly widened slice; the floor test decides membership.
    let pad = 1e-9 * hi.abs().max(1.0);
    for &s in table.slice_between(lo - pad, hi + pad) {
        add(s);
    }
    // Mirrored ordinates −r lie in the range only when r <= −lo.
    if lo < 0.0 {
        for &r in table.slice_between(-hi - pad, -lo + pad).iter().rev() {
            add(-r);
        }
    }

    Ok(sums
        .into_iter()
        .enumerate()
        .map(|(i, sum)| {
            let n = n_min + i as u64;
            CycleSample {
                n,
                a,
                h,
                value: sum + (n as f64 / a).ln() / a,
            }
        })
        .collect())
}

/// Largest cycle index fully covered by the table for the given `a`, `h`.
pub fn max_covered_cycle(table: &ZeroTable, a: f64, h: f64) -> Option<u64> {
    let n = ((table.coverage() - h) * a / TWO_PI).floor() - 1.0;
    (n >= 1.0).then_some(n as u64)
}

struct Window {
    sum: Complex64,
    nu: usize,
    on_boundary: bool,
}

fn scan_window(table: &ZeroTable, a: f64, tau: f64) -> Result<Window> {
    check_frequency(a)?;
    if !(tau > 0.0) || !tau.is_finite() {
        return Err(Error::Domain(format!("tau must be positive, got {tau}")));
    }
    table.require_coverage((tau + PI) / a)?;
    let mut w = Window {
        sum: Complex64::new(0.0, 0.0),
        nu: 0,
        on_boundary: false,
    };
    let mut visit = |u: f64| {
        if u.abs() <= PI {
            w.sum += Complex64::from_polar(1.0, -u) + 1.0;
            w.nu += 1;
            if (u.abs() - PI).abs() <= BOUNDARY_FLAG {
                w.on_boundary = true;
            }
        }
    };
    let pad = 1e-9;
    for &t in table.slice_between((tau - PI) / a - pad, (tau + PI) / a + pad) {
        visit(tau - a * t);
    }
    // u = τ + a·r for the mirrored ordinate −r; reachable only when τ < π.
    if tau < PI {
        for &r in table.slice_between(0.0, (PI - tau) / a + pad) {
            visit(tau + a * r);
        }
    }
    Ok(w)
}

fn drift(a: f64, tau: f64) -> f64 {
    (tau / (TWO_PI * a)).ln() / a
}

/// `H_a(τ)` with `ν_a(τ)` and the orbit center.
pub fn h_sample(table: &ZeroTable, a: f64, tau: f64) -> Result<OrbitSample> {
    let w = scan_window(table, a, tau)?;
    let d = drift(a, tau);
    Ok(OrbitSample {
        tau,
        a,
        value: Complex64::new(d, 0.0) - w.sum,
        nu: w.nu,
        center: d - w.nu as f64,
        on_boundary: w.on_boundary,
    })
}

/// `ν_a(τ)`, the number of ordinates in the window `|τ − at| <= π`.
pub fn nu_count(table: &ZeroTable, a: f64, tau: f64) -> Result<usize> {
    scan_window(table, a, tau).map(|w| w.nu)
}

/// The `τ` grid of a trace: `samples` points, both endpoints included.
pub fn tau_grid(tau_start: f64, tau_end: f64, samples: usize) -> Result<Vec<f64>> {
    if samples < 2 {
        return Err(Error::Domain("a trace needs at least 2 samples".into()));
    }
    if !(tau_start >= PI) || !(tau_end >= tau_start) || !tau_end.is_finite() {
        return Err(Error::Domain(format!(
            "trace range [{tau_start}, {tau_end}] must satisfy pi <= start <= end"
        )));
    }
    let step = (tau_end - tau_start) / (samples - 1) as f64;
    Ok((0..samples)
        .map(|i| if i + 1 == samples { tau_end } else { tau_start + step * i as f64 })
        .collect())
}

/// `H_a` on an equally spaced grid over `[tau_start, tau_end]`.
pub fn h_trace(
    table: &ZeroTable,
    a: f64,
    tau_start: f64,
    tau_end: f64,
    samples: usize,
) -> Result<Vec<OrbitSample>> {
    check_frequency(a)?;
    let grid = tau_grid(tau_start, tau_end, samples)?;
    table.require_coverage((tau_end + PI) / a)?;
    grid.into_par_iter().map(|tau| h_sample(table, a, tau)).collect()
}

/// `|η_{a,h}(n) − H_a((2n+1)π + ah)|`
pub fn eta_h_gap(table: &ZeroTable, a: f64, h: f64, n: u64) -> Result<f64> {
    let eta = eta_series(table, a, h, n, n)?[0].value;
    let tau = (2 * n + 1) as f64 * PI + a * h;
    let orbit = h_sample(table, a, tau)?;
    Ok((eta - orbit.value).norm())
}

/// Gaps for every `n` in `n_min ..= n_max`, computed from one cycle pass.
pub fn eta_h_gaps(table: &ZeroTable, a: f64, h: f64, n_min: u64, n_max: u64) -> Result<Vec<(u64, f64)>> {
    let etas = eta_series(table, a, h, n_min, n_max)?;
    etas.par_iter()
        .map(|s| {
            let tau = (2 * s.n + 1) as f64 * PI + a * h;
            let orbit = h_sample(table, a, tau)?;
            Ok((s.n, (s.value - orbit.value).norm()))
        })
        .collect()
}

/// `∫₀ᵀ ν_a(τ) dτ`, evaluated as a sum of window-overlap lengths.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct NuIntegral {
    /// Windows lying entirely inside `[0, T]`; each contributes `2π`.
    pub full_windows: usize,
    /// Total length of the windows clipped by `0` or `T`.
    pub partial: f64,
    pub value: f64,
}

pub fn nu_integral(table: &ZeroTable, a: f64, t_end: f64) -> Result<NuIntegral> {
    check_frequency(a)?;
    if !(t_end > 0.0) {
        return Err(Error::Domain(format!("integration bound must be positive, got {t_end}")));
    }
    table.require_coverage((t_end + PI) / a)?;
    let mut full = 0usize;
    let mut partial = 0.0;
    let mut overlap = |center: f64| {
        let lo = center - PI;
        let hi = center + PI;
        if lo >= 0.0 && hi <= t_end {
            full += 1;
        } else {
            partial += (hi.min(t_end) - lo.max(0.0)).max(0.0);
        }
    };
    for &t in table.slice_between(0.0, (t_end + PI) / a) {
        overlap(a * t);
    }
    for &r in table.slice_between(0.0, PI / a) {
        overlap(-a * r);
    }
    Ok(NuIntegral {
        full_windows: full,
        partial,
        value: TWO_PI * full as f64 + partial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn synthetic(v: &[f64], cover: f64) -> ZeroTable {
        ZeroTable::synthetic(v.to_vec(), cover).unwrap()
    }

    #[test]
    fn eta_hand_evaluation() {
        let t = synthetic(&[1.25], 10.0);
        let s = eta_series(&t, TWO_PI, 0.0, 1, 1).unwrap()[0];
        assert!((s.value.re + 1.29250).abs() < 1e-5, "{}", s.value);
        assert!((s.value.im - 1.0).abs() < 1e-12);
    }

    #[test]
    fn empty_cycle_is_drift_only() {
        let t = synthetic(&[1.25], 50.0);
        let a = 1.0;
        let s = eta_series(&t, a, 0.0, 3, 3).unwrap()[0];
        assert_eq!(s.value, Complex64::new((3.0f64).ln(), 0.0));
    }

    #[test]
    fn eta_rejects_cycle_zero_and_overreach() {
        let t = synthetic(&[1.25], 10.0);
        assert!(matches!(eta_series(&t, 1.0, 0.0, 0, 1), Err(Error::Domain(_))));
        assert!(matches!(eta_series(&t, 1.0, 0.0, 1, 5), Err(Error::Coverage { .. })));
    }

    #[test]
    fn floor_ties_go_to_lower_cycle() {
        // a·t/2π = 2 exactly: the floor puts it in cycle 2, leaving cycle 1 empty.
        let t = synthetic(&[4.0], 10.0);
        let s = eta_series(&t, PI, 0.0, 1, 2).unwrap();
        assert_eq!(s[0].value, Complex64::new((1.0 / PI).ln() / PI, 0.0));
        assert!((s[1].value - (2.0 / PI).ln() / PI).norm() < 1e-15);
        assert_ne!(s[1].value.im, 0.0);
    }

    #[test]
    fn height_shift_moves_cycles() {
        // s = 5, h = 3 → t = 2; with a = π, cycle 1.
        let t = synthetic(&[5.0], 20.0);
        let s = eta_series(&t, PI, 3.0, 1, 1).unwrap()[0];
        let expected = (1.0 / PI).ln() / PI + Complex64::from_polar(1.0, 2.0 * PI) - 1.0;
        assert!((s.value - expected).norm() < 1e-12);
    }

    #[test]
    fn mirrored_ordinates_enter_for_negative_shift() {
        // s = −2 (mirror of 2), h = −4 → t = 2, a = π → cycle 1.
        let t = synthetic(&[2.0], 20.0);
        let s = eta_series(&t, PI, -4.0, 1, 1).unwrap()[0];
        // both s = 2 (t = 6, cycle 3) and s = −2 (t = 2, cycle 1) exist; only −2 lands in cycle 1
        let expected = (1.0 / PI).ln() / PI + Complex64::from_polar(1.0, 2.0 * PI) - 1.0;
        assert!((s.value - expected).norm() < 1e-12);
    }

    #[test]
    fn orbit_hand_evaluation() {
        let t = synthetic(&[10.0], 20.0);
        let o = h_sample(&t, 1.0, 10.0).unwrap();
        assert!((o.value.re + 1.53529).abs() < 1e-5);
        assert!(o.value.im.abs() < 1e-15);
        assert_eq!(o.nu, 1);
        assert_eq!(o.center, (10.0 / TWO_PI).ln() - 1.0);
    }

    #[test]
    fn empty_window_is_drift_only() {
        let t = synthetic(&[10.0], 40.0);
        let o = h_sample(&t, 1.0, 30.0).unwrap();
        assert_eq!(o.nu, 0);
        assert_eq!(o.value, Complex64::new((30.0 / TWO_PI).ln(), 0.0));
    }

    #[test]
    fn window_is_closed_and_flags_boundary() {
        let t = synthetic(&[10.0], 40.0);
        let o = h_sample(&t, 1.0, 10.0 + PI).unwrap();
        assert_eq!(o.nu, 1);
        assert!(o.on_boundary);
        assert!(!h_sample(&t, 1.0, 10.0).unwrap().on_boundary);
    }

    #[test]
    fn mirrored_ordinate_near_origin() {
        // a·r = 0.1 < π − τ for τ = 1: −r lands at u = 1.1.
        let t = synthetic(&[1.0], 50.0);
        let o = h_sample(&t, 0.1, 1.0).unwrap();
        // positive copy: u = 1 − 0.1 = 0.9; mirrored: u = 1.1
        assert_eq!(o.nu, 2);
    }

    #[test]
    fn trace_grid_includes_endpoints() {
        let g = tau_grid(PI, 100.0, 7).unwrap();
        assert_eq!(g.len(), 7);
        assert_eq!(g[0], PI);
        assert_eq!(g[6], 100.0);
        assert!(tau_grid(PI, 100.0, 1).is_err());
        assert!(tau_grid(1.0, 100.0, 5).is_err());
    }

    #[test]
    fn gap_vanishes_up_to_drift_when_windows_coincide() {
        let a = 1.0;
        let n = 5u64;
        // ordinate well inside cycle 5 = [10π, 12π)
        let t = synthetic(&[11.0 * PI + 0.3], 60.0);
        let gap = eta_h_gap(&t, a, 0.0, n).unwrap();
        let expected = ((n as f64 / a).ln() / a - drift(a, (2 * n + 1) as f64 * PI)).abs();
        assert!((gap - expected).abs() < 1e-13);
    }

    #[test]
    fn nu_integral_of_single_window() {
        let t = synthetic(&[10.0], 60.0);
        let i = nu_integral(&t, 1.0, 50.0).unwrap();
        assert_eq!(i.full_windows, 1);
        assert_eq!(i.value, TWO_PI);
        let i = nu_integral(&t, 1.0, 10.0).unwrap();
        assert_eq!(i.full_windows, 0);
        assert!((i.partial - PI).abs() < 1e-15);
    }
}
