//! The frequency `a = log x`, its prime-power classification, the von
//! Mangoldt function, and the limits predicted for the exponential sums.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative tolerance for recognising a floating `a` as `k log p`.
pub const DETECTION_TOLERANCE: f64 = 1e-9;

/// Integers above this are not tested for being prime powers.
pub const MAX_CLASSIFIED: u64 = 1_000_000_000_000;

/// Deterministic trial division (adequate for `n <= 10¹²`).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Returns `(p, k)` when `m = p^k` with `p` prime and `k >= 1`.
pub fn prime_power(m: u64) -> Option<(u64, u32)> {
    if m < 2 {
        return None;
    }
    // Smallest prime factor, then check m is a pure power of it.
    let p = if m.is_multiple_of(2) {
        2
    } else {
        let mut d = 3u64;
        loop {
            if d * d > m {
                break m;
            }
            if m.is_multiple_of(d) {
                break d;
            }
            d += 2;
        }
    };
    let mut rest = m;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// `Λ(m)`: `log p` when `m = p^k`, otherwise 0.
pub fn von_mangoldt(m: u64) -> Result<f64> {
    if m < 2 {
        return Err(Error::Domain(format!("von Mangoldt needs m >= 2, got {m}")));
    }
    Ok(prime_power(m).map_or(0.0, |(p, _)| (p as f64).ln()))
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FrequencyKind {
    /// `a = k log p`, exact by construction.
    PrimePower { p: u64, k: u32 },
    /// A floating `a`; `detected` is set when it lies within tolerance of
    /// some `k log p`.
    Numeric { detected: Option<(u64, u32)> },
}

/// How a frequency was requested.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FrequencySpec {
    Symbolic { p: u64, k: u32 },
    /// `a = log x` for an integer `x >= 2`, classified exactly.
    LogInteger(u64),
    Numeric(f64),
}

/// The frequency `a`, with `x = e^a` and `Λ(x)`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Frequency {
    pub a: f64,
    pub x: f64,
    pub kind: FrequencyKind,
    pub lambda_x: f64,
}

impl Frequency {
    pub fn prime_power(p: u64, k: u32) -> Result<Self> {
        classify_frequency(FrequencySpec::Symbolic { p, k })
    }

    pub fn numeric(a: f64) -> Result<Self> {
        classify_frequency(FrequencySpec::Numeric(a))
    }

    /// `a = log x` for an integer `x`.
    pub fn log_of(x: u64) -> Result<Self> {
        classify_frequency(FrequencySpec::LogInteger(x))
    }

    pub fn is_prime_power(&self) -> bool {
        self.lambda_x > 0.0
    }

    /// Radius `(Λ(x)/a)·e^{−a/2}` of the circle relating the two limiting
    /// densities.
    pub fn shift_radius(&self) -> f64 {
        self.lambda_x / self.a * (-0.5 * self.a).exp()
    }
}

impl fmt::Display for Frequency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FrequencyKind::PrimePower { p, k: 1 } => write!(f, "log({p})"),
            FrequencyKind::PrimePower { p, k } => write!(f, "log({p}^{k})"),
            FrequencyKind::Numeric { .. } => write!(f, "{}", self.a),
        }
    }
}

pub fn classify_frequency(spec: FrequencySpec) -> Result<Frequency> {
    match spec {
        FrequencySpec::Symbolic { p, k } => {
            if !is_prime(p) {
                return Err(Error::Domain(format!("{p} is not prime")));
            }
            if k == 0 {
                return Err(Error::Domain("prime-power exponent must be >= 1".into()));
            }
            let log_p = (p as f64).ln();
            let a = k as f64 * log_p;
            Ok(Frequency {
                a,
                x: a.exp(),
                kind: FrequencyKind::PrimePower { p, k },
                lambda_x: log_p,
            })
        }
        FrequencySpec::LogInteger(x) => {
            if x < 2 {
                return Err(Error::Domain(format!("log({x}) is not a positive frequency")));
            }
            match prime_power(x) {
                Some((p, k)) => classify_frequency(FrequencySpec::Symbolic { p, k }),
                None => {
                    let a = (x as f64).ln();
                    Ok(Frequency {
                        a,
                        x: x as f64,
                        kind: FrequencyKind::Numeric { detected: None },
                        lambda_x: 0.0,
                    })
                }
            }
        }
        FrequencySpec::Numeric(a) => {
            if !(a > 0.0) || !a.is_finite() {
                return Err(Error::Domain(format!("frequency must be positive, got {a}")));
            }
            let x = a.exp();
            let detected = detect_prime_power(a, x);
            Ok(Frequency {
                a,
                x,
                kind: FrequencyKind::Numeric { detected },
                lambda_x: detected.map_or(0.0, |(p, _)| (p as f64).ln()),
            })
        }
    }
}

fn detect_prime_power(a: f64, x: f64) -> Option<(u64, u32)> {
    if x * (1.0 + DETECTION_TOLERANCE) > MAX_CLASSIFIED as f64 {
        return None;
    }
    let lo = (x * (1.0 - DETECTION_TOLERANCE)).floor().max(2.0) as u64;
    let hi = (x * (1.0 + DETECTION_TOLERANCE)).ceil() as u64;
    (lo..=hi)
        .filter(|&m| (a - (m as f64).ln()).abs() <= DETECTION_TOLERANCE * a)
        .find_map(prime_power)
}

/// `−Λ(x) x^{−1/2} / 2π`, the limit of `λ_a(T)/2T`.
pub fn predicted_landau_limit(freq: &Frequency) -> f64 {
    if !freq.is_prime_power() {
        return 0.0;
    }
    -freq.lambda_x * (-0.5 * freq.a).exp() / (2.0 * PI)
}

/// `−(Λ(x)/log x)·x^{−(1/2 + ih)}`, the limit of the cycle-sum means.
pub fn predicted_eta_mean(freq: &Frequency, h: f64) -> Complex64 {
    if !freq.is_prime_power() {
        return Complex64::new(0.0, 0.0);
    }
    -Complex64::from_polar(freq.shift_radius(), -h * freq.a)
}

impl FromStr for FrequencySpec {
    type Err = Error;

    /// Accepts `1.5`, `log(8)` and `log(2^3)`.
    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let bad = || Error::Domain(format!("cannot parse frequency {s:?}"));
        if let Some(inner) = text.strip_prefix("log(").and_then(|r| r.strip_suffix(')')) {
            let inner = inner.trim();
            if let Some((base, exp)) = inner.split_once('^') {
                let p: u64 = base.trim().parse().map_err(|_| bad())?;
                let k: u32 = exp.trim().parse().map_err(|_| bad())?;
                return Ok(FrequencySpec::Symbolic { p, k });
            }
            let x: u64 = inner.parse().map_err(|_| bad())?;
            return Ok(FrequencySpec::LogInteger(x));
        }
        text.parse::<f64>().map(FrequencySpec::Numeric).map_err(|_| bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const LN2: f64 = std::f64::consts::LN_2;

    #[test]
    fn von_mangoldt_values() {
        assert_eq!(von_mangoldt(8).unwrap(), LN2);
        assert_eq!(von_mangoldt(6).unwrap(), 0.0);
        assert_eq!(von_mangoldt(7).unwrap(), 7f64.ln());
        assert_eq!(von_mangoldt(2).unwrap(), LN2);
        assert!(von_mangoldt(1).is_err());
        assert!(von_mangoldt(0).is_err());
    }

    #[test]
    fn prime_powers_of_small_primes() {
        for p in (2..=1000u64).filter(|&p| is_prime(p)) {
            let mut m = 1u64;
            for k in 1..=5 {
                m *= p;
                assert_eq!(von_mangoldt(m).unwrap(), von_mangoldt(p).unwrap());
                assert_eq!(prime_power(m), Some((p, k)));
            }
        }
    }

    #[test]
    fn chebyshev_psi_is_log_lcm() {
        use num_bigint::BigUint;
        use num_integer::Integer;
        use num_traits::ToPrimitive;

        let mut lcm = BigUint::from(1u32);
        let mut psi = 0.0;
        for n in 2..=100u32 {
            lcm = lcm.lcm(&BigUint::from(n));
            psi += von_mangoldt(n as u64).unwrap();
            let exact = lcm.to_f64().unwrap().ln();
            assert!((psi - exact).abs() < 1e-10, "n={n}");
        }
    }

    #[test]
    fn symbolic_classification() {
        let f = Frequency::prime_power(2, 1).unwrap();
        assert_eq!(f.a, std::f64::consts::LN_2);
        assert_eq!(f.lambda_x, LN2);
        let f = Frequency::prime_power(3, 2).unwrap();
        assert_eq!(f.a, 2.0 * 3f64.ln());
        assert_eq!(f.lambda_x, 3f64.ln());
        assert!(Frequency::prime_power(6, 1).is_err());
        assert!(Frequency::prime_power(2, 0).is_err());
    }

    #[test]
    fn numeric_classification() {
        let f = Frequency::numeric(1.0).unwrap();
        assert_eq!(f.x, std::f64::consts::E);
        assert_eq!(f.lambda_x, 0.0);
        let f = Frequency::numeric(LN2).unwrap();
        assert_eq!(f.kind, FrequencyKind::Numeric { detected: Some((2, 1)) });
        assert_eq!(f.lambda_x, LN2);
        let f = Frequency::numeric(6f64.ln()).unwrap();
        assert_eq!(f.lambda_x, 0.0);
        assert_eq!(Frequency::numeric(LN2 * (1.0 + 1e-7)).unwrap().lambda_x, 0.0);
        assert!(Frequency::numeric(0.0).is_err());
        assert!(Frequency::numeric(-1.0).is_err());
    }

    #[test]
    fn log_integer_is_exact() {
        let f = Frequency::log_of(4).unwrap();
        assert_eq!(f.kind, FrequencyKind::PrimePower { p: 2, k: 2 });
        assert_eq!(f.lambda_x, LN2);
        assert_eq!(Frequency::log_of(6).unwrap().lambda_x, 0.0);
        assert!(Frequency::log_of(1).is_err());
    }

    #[test]
    fn landau_limits() {
        let two = Frequency::log_of(2).unwrap();
        assert!((predicted_landau_limit(&two) + 0.078007).abs() < 1e-6);
        assert_eq!(predicted_landau_limit(&Frequency::numeric(1.0).unwrap()), 0.0);
        let four = Frequency::log_of(4).unwrap();
        assert!((predicted_landau_limit(&four) + LN2 / (4.0 * PI)).abs() < 1e-15);
    }

    #[test]
    fn eta_means() {
        let two = Frequency::log_of(2).unwrap();
        let m = predicted_eta_mean(&two, 0.0);
        assert!((m.re + 0.5f64.sqrt()).abs() < 1e-15 && m.im.abs() < 1e-15);
        let m = predicted_eta_mean(&two, PI / LN2);
        assert!((m.re - 0.5f64.sqrt()).abs() < 1e-15 && m.im.abs() < 1e-15);
        assert_eq!(predicted_eta_mean(&Frequency::numeric(1.0).unwrap(), 3.0).norm(), 0.0);
    }

    #[test]
    fn parses_frequency_syntax() {
        assert_eq!("1.5".parse::<FrequencySpec>().unwrap(), FrequencySpec::Numeric(1.5));
        assert_eq!("log(8)".parse::<FrequencySpec>().unwrap(), FrequencySpec::LogInteger(8));
        assert_eq!(
            "log(2^3)".parse::<FrequencySpec>().unwrap(),
            FrequencySpec::Symbolic { p: 2, k: 3 }
        );
        assert!("log(x)".parse::<FrequencySpec>().is_err());
        assert!("abc".parse::<FrequencySpec>().is_err());
    }
}
