//! `ζ(1/2 + it)` by Euler–Maclaurin summation.
//!
//! Used for low heights, where the Riemann–Siegel correction series is too
//! short to reach `1e-10`. Cost grows linearly in `t`.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

/// Number of Bernoulli correction terms.
const TERMS: usize = 28;

/// `B_{2k} / (2k)!` for `k = 1..=TERMS`, via `ζ(2k)`.
fn bernoulli_ratios() -> &'static [f64; TERMS] {
    static RATIOS: OnceLock<[f64; TERMS]> = OnceLock::new();
    RATIOS.get_or_init(|| {
        let mut out = [0.0; TERMS];
        for (i, slot) in out.iter_mut().enumerate() {
            let k = i + 1;
            let zeta_2k = match k {
                1 => PI * PI / 6.0,
                2 => PI.powi(4) / 90.0,
                _ => {
                    let e = 2 * k as i32;
                    let cut = 2000u32;
                    let tail = (cut as f64).powi(1 - e) / (e - 1) as f64;
                    (1..=cut).rev().map(|n| (n as f64).powi(-e)).sum::<f64>() + tail
                }
            };
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            *slot = sign * 2.0 * zeta_2k / (2.0 * PI).powi(2 * k as i32);
        }
        out
    })
}

/// `ζ(1/2 + it)` for `t > 0`, absolute error around `1e-13` for `t <= 2000`.
pub fn zeta_critical(t: f64) -> Complex64 {
    let s = Complex64::new(0.5, t);
    let n_cut = (t / PI).ceil() as usize + 10;
    let mut head = Complex64::new(0.0, 0.0);
    for n in (1..n_cut).rev() {
        head += (-s * (n as f64).ln()).exp();
    }
    let big_n = n_cut as f64;
    let n_pow = (-s * big_n.ln()).exp();
    let mut total = head + n_pow * big_n / (s - 1.0) + 0.5 * n_pow;

    // Correction k: B_{2k}/(2k)! · s(s+1)…(s+2k−2) · N^{−s−2k+1}
    let inv_n2 = 1.0 / (big_n * big_n);
    let mut rising = s;
    let mut power = n_pow / big_n;
    for (k, ratio) in bernoulli_ratios().iter().enumerate() {
        if k > 0 {
            let j = (2 * k) as f64;
            rising *= (s + (j - 1.0)) * (s + j);
            power *= inv_n2;
        }
        total += rising * power * *ratio;
    }
    total
}
