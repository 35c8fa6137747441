//! Riemann–Siegel phase `θ(t)` and the real function `Z(t)`.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use super::euler_maclaurin::zeta_critical;
use crate::error::{Error, Result};

/// Lower edge of the asymptotic regime for both `θ` and `Z`.
pub const MIN_HEIGHT: f64 = 10.0;

const TWO_PI: f64 = 2.0 * PI;

fn check_height(t: f64) -> Result<()> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!("height must be positive, got {t}")));
    }
    if t < MIN_HEIGHT {
        return Err(Error::Domain(format!(
            "height {t} is below the asymptotic regime t >= {MIN_HEIGHT}"
        )));
    }
    Ok(())
}

/// `θ(t) = arg Γ(1/4 + it/2) − (t/2) log π` on the continuous branch.
///
/// Stirling expansion with terms through `t⁻⁹`; the truncation error is
/// below `1e-13` for `t >= 10`.
pub fn theta(t: f64) -> Result<f64> {
    check_height(t)?;
    Ok(theta_unchecked(t))
}

pub(crate) fn theta_unchecked(t: f64) -> f64 {
    let r = 1.0 / t;
    let r2 = r * r;
    let tail = r
        * (1.0 / 48.0
            + r2 * (7.0 / 5760.0
                + r2 * (31.0 / 80640.0 + r2 * (127.0 / 430080.0 + r2 * (511.0 / 1216512.0)))));
    0.5 * t * (t / TWO_PI).ln() - 0.5 * t - PI / 8.0 + tail
}

/// `θ'(t)`, used for Newton steps when locating Gram points.
pub(crate) fn theta_derivative(t: f64) -> f64 {
    0.5 * (t / TWO_PI).ln() - 1.0 / (48.0 * t * t)
}

/// Below this height `Z` is evaluated from an Euler–Maclaurin `ζ`.
pub const RIEMANN_SIEGEL_CROSSOVER: f64 = 1000.0;

/// Hardy's `Z(t) = e^{iθ(t)} ζ(1/2 + it)`, real for real `t`.
///
/// Uses the Riemann–Siegel formula from [`RIEMANN_SIEGEL_CROSSOVER`] up and
/// Euler–Maclaurin below it, giving absolute error under `1e-10` on
/// `[10, 1e5]`.
pub fn z(t: f64) -> Result<f64> {
    check_height(t)?;
    Ok(z_unchecked(t))
}

pub(crate) fn z_unchecked(t: f64) -> f64 {
    if t < RIEMANN_SIEGEL_CROSSOVER {
        let phase = Complex64::from_polar(1.0, theta_unchecked(t));
        (phase * zeta_critical(t)).re
    } else {
        riemann_siegel_unchecked(t)
    }
}

/// The Riemann–Siegel formula alone: main sum plus corrections `C₀ … C₄`.
///
/// Truncation error is roughly `0.017·t^(-11/4)`, so this is only accurate
/// to `1e-6` from about `t = 50`.
pub fn riemann_siegel_z(t: f64) -> Result<f64> {
    check_height(t)?;
    Ok(riemann_siegel_unchecked(t))
}

fn riemann_siegel_unchecked(t: f64) -> f64 {
    let tau = t / TWO_PI;
    let root = tau.sqrt();
    let n = root.floor() as usize;
    let p = root - n as f64;
    let th = theta_unchecked(t);

    let mut main = 0.0;
    for k in 1..=n {
        let kf = k as f64;
        main += (th - t * kf.ln()).cos() / kf.sqrt();
    }

    let x = p - 0.5;
    let w = 1.0 / root;
    let series = correction_series();
    let mut rem = 0.0;
    for c in series.iter().rev() {
        rem = rem * w + horner(c, x);
    }
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    2.0 * main + sign * rem / root.sqrt()
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Taylor terms kept for each correction polynomial in `x = p − 1/2`.
const SERIES_LEN: usize = 64;
/// Highest derivative of `Ψ` that enters `C₄`.
const MAX_DERIVATIVE: usize = 12;
/// Sample count of the contour used to expand `Ψ`.
const CONTOUR_POINTS: usize = 256;

/// `Ψ(p) = cos(2π(p² − p − 1/16)) / cos(2πp)` at `p = 1/2 + x`.
fn psi(x: Complex64) -> Complex64 {
    let phase = (x * x - 5.0 / 16.0) * TWO_PI;
    -phase.cos() / (x * TWO_PI).cos()
}

/// Taylor coefficients of the entire function `Ψ` about `p = 1/2`,
/// extracted by a discrete Cauchy integral on the unit circle.
fn psi_taylor(len: usize) -> Vec<f64> {
    let samples: Vec<Complex64> = (0..CONTOUR_POINTS)
        .map(|j| psi(Complex64::from_polar(1.0, TWO_PI * j as f64 / CONTOUR_POINTS as f64)))
        .collect();
    (0..len)
        .map(|n| {
            let acc: Complex64 = samples
                .iter()
                .enumerate()
                .map(|(j, s)| {
                    let angle = -TWO_PI * ((j * n) % CONTOUR_POINTS) as f64 / CONTOUR_POINTS as f64;
                    s * Complex64::from_polar(1.0, angle)
                })
                .sum();
            acc.re / CONTOUR_POINTS as f64
        })
        .collect()
}

/// Coefficients of `C₀ … C₄` as polynomials in `x = p − 1/2`.
fn correction_series() -> &'static [Vec<f64>; 5] {
    static SERIES: OnceLock<[Vec<f64>; 5]> = OnceLock::new();
    SERIES.get_or_init(|| {
        let psi = psi_taylor(SERIES_LEN + MAX_DERIVATIVE + 1);
        // k-th Taylor coefficient of the m-th derivative of Ψ.
        let deriv = |m: usize, k: usize| -> f64 {
            let falling: f64 = ((k + 1)..=(k + m)).map(|v| v as f64).product();
            psi[k + m] * falling
        };
        let pi2 = PI * PI;
        let pi4 = pi2 * pi2;
        let pi6 = pi4 * pi2;
        let pi8 = pi4 * pi4;
        let terms: [&[(usize, f64)]; 5] = [
            &[(0, 1.0)],
            &[(3, -1.0 / (96.0 * pi2))],
            &[(2, 1.0 / (64.0 * pi2)), (6, 1.0 / (18432.0 * pi4))],
            &[
                (1, -1.0 / (64.0 * pi2)),
                (5, -1.0 / (3840.0 * pi4)),
                (9, -1.0 / (5308416.0 * pi6)),
            ],
            &[
                (0, 1.0 / (128.0 * pi2)),
                (4, 19.0 / (24576.0 * pi4)),
                (8, 11.0 / (5898240.0 * pi6)),
                (12, 1.0 / (2038431744.0 * pi8)),
            ],
        ];
        terms.map(|combo| {
            (0..SERIES_LEN)
                .map(|k| combo.iter().map(|&(m, w)| w * deriv(m, k)).sum())
                .collect()
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_nonpositive_and_low_heights() {
        assert!(matches!(theta(0.0), Err(Error::Domain(_))));
        assert!(matches!(theta(-3.0), Err(Error::Domain(_))));
        assert!(matches!(z(5.0), Err(Error::Domain(_))));
        assert!(matches!(z(f64::NAN), Err(Error::Domain(_))));
    }

    #[test]
    fn psi_expansion_reproduces_closed_form() {
        let c = psi_taylor(SERIES_LEN);
        for &x in &[-0.5, -0.31, 0.0, 0.12, 0.49] {
            let direct = psi(Complex64::new(x, 0.0)).re;
            assert!((horner(&c, x) - direct).abs() < 1e-13, "x={x}");
        }
        // Removable singularity at p = 3/4.
        assert!(horner(&c, 0.25).is_finite());
    }

    #[test]
    fn psi_is_even_about_one_half() {
        let c = psi_taylor(SERIES_LEN);
        for k in (1..SERIES_LEN).step_by(2) {
            assert!(c[k].abs() < 1e-12);
        }
    }

    #[test]
    fn routes_agree_at_crossover() {
        let t = RIEMANN_SIEGEL_CROSSOVER;
        let em = (Complex64::from_polar(1.0, theta_unchecked(t)) * zeta_critical(t)).re;
        assert!((em - riemann_siegel_unchecked(t)).abs() < 1e-9);
    }

    #[test]
    fn z_is_continuous_across_sum_length_changes() {
        // The main sum gains a term at t = 2π n²; the correction term
        // flips sign there and must compensate.
        for n in [2usize, 5, 20] {
            let edge = TWO_PI * (n * n) as f64;
            let lo = riemann_siegel_unchecked(edge - 1e-9);
            let hi = riemann_siegel_unchecked(edge + 1e-9);
            assert!((lo - hi).abs() < 1e-6, "n={n}: {lo} vs {hi}");
        }
    }
}
