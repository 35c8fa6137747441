//! Test-side oracles. Nothing here calls into the library's zero engine.
#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64;

/// `B_2 .. B_40` as exact fractions (numerator, denominator).
const BERNOULLI: [(f64, f64); 20] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
    (854513.0, 138.0),
    (-236364091.0, 2730.0),
    (8553103.0, 6.0),
    (-23749461029.0, 870.0),
    (8615841276005.0, 14322.0),
    (-7709321041217.0, 510.0),
    (2577687858367.0, 6.0),
    (-26315271553053477373.0, 1919190.0),
    (2929993913841559.0, 6.0),
    (-261082718496449122051.0, 13530.0),
];

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// `ζ(1/2 + it)` by Euler–Maclaurin with `N ≈ 1.6·t/2π` and 20 correction terms.
pub fn zeta_half(t: f64) -> Complex64 {
    let s = Complex64::new(0.5, t);
    let n = (t / 4.0).ceil() as u64 + 30;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 1..n {
        let lk = (k as f64).ln();
        sum += Complex64::from_polar((-0.5 * lk).exp(), -t * lk);
    }
    let nf = n as f64;
    let n_pow = Complex64::from_polar(nf.powf(-0.5), -t * nf.ln());
    sum += n_pow * nf / (s - 1.0) + n_pow * 0.5;
    // Rising product s(s+1)...(s+2k-2) times N^{-s-2k+1}.
    let mut rising = s;
    let mut power = n_pow / nf;
    for (k, &(p, q)) in BERNOULLI.iter().enumerate() {
        let k = k as u32 + 1;
        sum += rising * power * (p / q / factorial(2 * k));
        rising *= (s + (2 * k - 1) as f64) * (s + (2 * k) as f64);
        power /= nf * nf;
    }
    sum
}

/// Principal-branch `log Γ(z)` for `Re z > 0`, via a shift to `Re z >= 20`
/// and the Stirling series.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    let mut shift = Complex64::new(0.0, 0.0);
    let mut w = z;
    while w.re < 20.0 {
        shift += w.ln();
        w += 1.0;
    }
    let mut series = (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln();
    let inv = 1.0 / w;
    let inv2 = inv * inv;
    let mut p = inv;
    for (k, &(num, den)) in BERNOULLI.iter().take(10).enumerate() {
        let k = (k + 1) as f64;
        series += p * (num / den / (2.0 * k * (2.0 * k - 1.0)));
        p *= inv2;
    }
    series - shift
}

/// `θ(t) = Im log Γ(1/4 + it/2) − (t/2) log π`.
pub fn theta(t: f64) -> f64 {
    ln_gamma(Complex64::new(0.25, 0.5 * t)).im - 0.5 * t * PI.ln()
}

pub fn hardy_z(t: f64) -> f64 {
    (Complex64::from_polar(1.0, theta(t)) * zeta_half(t)).re
}

/// Root of `f` in `[lo, hi]` by bisection, assuming a sign change.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, width: f64) -> f64 {
    let mut flo = f(lo);
    assert!(flo * f(hi) <= 0.0, "no sign change on [{lo}, {hi}]");
    while hi - lo > width {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `(t, θ(t), Z(t))` from an arbitrary-precision evaluation.
#[allow(clippy::excessive_precision)]
pub const REFERENCE_POINTS: [(f64, f64, f64); 9] = [
    (10.0, -3.067074396289895291702, -1.549194546181022389085),
    (14.134725, -1.728670304117276702922, -1.124183502046137257655e-7),
    (17.8455995, -2.108939800646122789975e-8, 2.340181667690311016941),
    (20.0, 1.186894808444484044813, 1.147842412185197277635),
    (50.0, 26.46136607016140964745, -0.3407350059550249827533),
    (100.0, 87.97216523178721962548, 2.692697056664463474995),
    (1000.0, 2034.546428038031608703, 0.997794637521586613986),
    (10000.0, 31861.92383083582087295, -0.3413947242312085591769),
    (74920.0, 314150.3712181659034684, -5.562358571550408203293),
];

pub fn reference_zeros() -> Vec<f64> {
    include_str!("../fixtures/first_100_zeros.txt")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| l.trim().parse().unwrap())
        .collect()
}

/// Error-free double-double accumulator.
#[derive(Default, Clone, Copy)]
pub struct DoubleDouble {
    hi: f64,
    lo: f64,
}

impl DoubleDouble {
    pub fn add(&mut self, x: f64) {
        let s = self.hi + x;
        let bb = s - self.hi;
        let err = (self.hi - (s - bb)) + (x - bb);
        let lo = self.lo + err;
        self.hi = s + lo;
        self.lo = lo - (self.hi - s);
    }

    pub fn value(&self) -> f64 {
        self.hi + self.lo
    }
}
