//! The acceptance checks, run against one zero table.
//!
//! Each criterion yields a list of [`Check`]s. A criterion passes when all
//! of its gating checks pass, and is skipped when the table does not reach
//! the heights it needs. The report serializes to JSON.

use std::f64::consts::{LN_2, PI, SQRT_2};
use std::fmt;
use std::time::Instant;

use num_complex::Complex64;
use serde::Serialize;

use crate::arithmetic::{predicted_eta_mean, Frequency};
use crate::cycles::{eta_h_gaps, eta_series, h_trace, nu_integral};
use crate::distributions::{
    angular_convolve, build_histogram, compare_streams, histogram_distance, permutation_baseline, stationarity_split_test, Window,
    DEFAULT_ANGLE_STEPS, MIN_SPLIT_SAMPLES, WINDOW_SIGMAS,
};
use crate::error::{Error, Result};
use crate::figures::{figures, Figure, Recipe, TOP_HEIGHT};
use crate::landau::{landau_convergence, lambda_sum, residual_envelope};
use crate::tolerances as tol;
use crate::zeros::{compute_zeros_certified, parse_zero_file, BlockCertificate, ZeroTable};

/// First 100 ordinates to 20 digits, from an arbitrary-precision evaluation.
pub const REFERENCE_ZEROS: &str = include_str!("../data/first_100_zeros.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    /// 100 000 zeros, heights up to 74920.
    Full,
    /// 10 000 zeros, all heights and index ranges divided by 8.
    Quick,
}

/// Sizes derived from a preset.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Scale {
    pub zeros: usize,
    /// Multiplier on heights, cycle indices and sample counts.
    pub factor: f64,
    /// Multiplier on the Landau and Cesàro thresholds.
    pub relax: f64,
    /// Bins per axis for the split tests.
    pub split_bins: usize,
    /// Bins per axis for the density comparisons.
    pub density_bins: usize,
}

impl Preset {
    pub fn scale(self) -> Scale {
        match self {
            Preset::Full => Scale {
                zeros: 100_000,
                factor: 1.0,
                relax: 1.0,
                split_bins: 50,
                density_bins: 40,
            },
            // Bins shrink by √8 per axis so the samples per bin stay put.
            Preset::Quick => Scale {
                zeros: 10_000,
                factor: 0.125,
                relax: tol::QUICK_RELAXATION,
                split_bins: 18,
                density_bins: 14,
            },
        }
    }
}

impl Scale {
    pub fn top(&self) -> f64 {
        TOP_HEIGHT * self.factor
    }

    fn index(&self, n: u64) -> u64 {
        ((n as f64 * self.factor).round() as u64).max(1)
    }

    fn count(&self, n: usize) -> usize {
        ((n as f64 * self.factor).round() as usize).max(2)
    }

    /// A figure recipe with heights and counts scaled to this preset.
    pub fn recipe(&self, figure: &Figure) -> Recipe {
        if self.factor == 1.0 {
            return figure.recipe;
        }
        match figure.recipe {
            Recipe::Trace { a, start, end, samples } => {
                let (start, end) = if start == PI {
                    (PI, self.top() * a - PI)
                } else {
                    (start * self.factor, end * self.factor)
                };
                Recipe::Trace { a, start, end, samples: self.count(samples) }
            }
            Recipe::Eta { a, h, n_min, n_max } => Recipe::Eta { a, h, n_min, n_max: self.index(n_max) },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Bound {
    AtMost { value: f64 },
    Below { value: f64 },
    AtLeast { value: f64 },
    Equals { value: f64 },
    Within { lo: f64, hi: f64 },
}

impl Bound {
    pub fn admits(&self, x: f64) -> bool {
        match *self {
            Bound::AtMost { value } => x <= value,
            Bound::Below { value } => x < value,
            Bound::AtLeast { value } => x >= value,
            Bound::Equals { value } => x == value,
            Bound::Within { lo, hi } => lo <= x && x <= hi,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::AtMost { value } => write!(f, "<= {value:.6e}"),
            Bound::Below { value } => write!(f, "< {value:.6e}"),
            Bound::AtLeast { value } => write!(f, ">= {value}"),
            Bound::Equals { value } => write!(f, "== {value}"),
            Bound::Within { lo, hi } => write!(f, "in [{lo:.10e}, {hi:.10e}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub measured: f64,
    pub bound: Bound,
    pub passed: bool,
    /// Informational checks are reported but do not decide the criterion.
    pub gating: bool,
}

impl Check {
    fn new(name: impl Into<String>, measured: f64, bound: Bound) -> Self {
        Self {
            name: name.into(),
            measured,
            passed: bound.admits(measured),
            bound,
            gating: true,
        }
    }

    fn informational(mut self) -> Self {
        self.gating = false;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub status: Status,
    pub checks: Vec<Check>,
    /// Reason for a skip or an error.
    pub note: Option<String>,
}

impl CriterionResult {
    pub fn summary_line(&self) -> String {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        let gating = self.checks.iter().filter(|c| c.gating).count();
        let passed = self.checks.iter().filter(|c| c.gating && c.passed).count();
        match &self.note {
            Some(note) => format!("[{tag}] {}. {}: {note}", self.id, self.title),
            None => format!("[{tag}] {}. {} ({passed}/{gating} checks)", self.id, self.title),
        }
    }

    pub fn detail_lines(&self) -> Vec<String> {
        self.checks
            .iter()
            .map(|c| {
                let mark = match (c.gating, c.passed) {
                    (false, _) => "info",
                    (true, true) => "ok",
                    (true, false) => "FAIL",
                };
                format!("    {mark:>4}  {}: {:.6e} {}", c.name, c.measured, c.bound)
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub preset: Preset,
    pub zeros: usize,
    pub coverage: f64,
    pub criteria: Vec<CriterionResult>,
    /// True only if every criterion passed; skips count as failures.
    pub passed: bool,
}

/// A timed run of the zero engine.
#[derive(Debug, Clone)]
pub struct EngineRun {
    pub table: ZeroTable,
    pub certificates: Vec<BlockCertificate>,
    pub seconds: f64,
}

impl EngineRun {
    pub fn compute(count: usize) -> Result<Self> {
        let start = Instant::now();
        let (table, certificates) = compute_zeros_certified(count)?;
        Ok(Self {
            table,
            certificates,
            seconds: start.elapsed().as_secs_f64(),
        })
    }
}

const TITLES: [&str; 8] = [
    "zero engine",
    "Landau limits",
    "Cesaro means of cycle sums",
    "cycle sum versus orbit function",
    "integral of the window count",
    "stationarity of sample streams",
    "orbit and cycle densities",
    "figure data",
];

/// Runs every criterion. `engine` is computed here when not supplied.
pub fn run_suite(table: &ZeroTable, preset: Preset, engine: Option<&EngineRun>) -> Report {
    let scale = preset.scale();
    let mut criteria = Vec::with_capacity(TITLES.len());
    if table.is_empty() {
        for (i, title) in TITLES.iter().enumerate() {
            criteria.push(CriterionResult {
                id: i as u8 + 1,
                title,
                status: Status::Skipped,
                checks: Vec::new(),
                note: Some("zero table is empty".into()),
            });
        }
    } else {
        let mut ctx = Context {
            table,
            scale,
            engine,
            owned_engine: None,
            streams: None,
        };
        for (i, title) in TITLES.iter().enumerate() {
            let id = i as u8 + 1;
            let outcome = match id {
                1 => ctx.zero_engine(),
                2 => ctx.landau(),
                3 => ctx.cesaro(),
                4 => ctx.gaps(),
                5 => ctx.nu_bracket(),
                6 => ctx.stationarity(),
                7 => ctx.densities(),
                _ => ctx.figures(),
            };
            criteria.push(finish(id, title, outcome));
        }
    }
    Report {
        preset,
        zeros: table.len(),
        coverage: table.coverage(),
        passed: criteria.iter().all(|c| c.status == Status::Pass),
        criteria,
    }
}

fn finish(id: u8, title: &'static str, outcome: Result<Vec<Check>>) -> CriterionResult {
    match outcome {
        Ok(checks) => CriterionResult {
            id,
            title,
            status: if checks.iter().all(|c| c.passed || !c.gating) {
                Status::Pass
            } else {
                Status::Fail
            },
            checks,
            note: None,
        },
        Err(e @ Error::Coverage { .. }) => CriterionResult {
            id,
            title,
            status: Status::Skipped,
            checks: Vec::new(),
            note: Some(e.to_string()),
        },
        Err(e) => CriterionResult {
            id,
            title,
            status: Status::Fail,
            checks: Vec::new(),
            note: Some(e.to_string()),
        },
    }
}

struct Streams {
    h_one: Vec<Complex64>,
    h_half: Vec<Complex64>,
    h_log2: Vec<Complex64>,
}

struct Context<'a> {
    table: &'a ZeroTable,
    scale: Scale,
    engine: Option<&'a EngineRun>,
    owned_engine: Option<EngineRun>,
    streams: Option<Streams>,
}

fn reference_zeros() -> Vec<f64> {
    parse_zero_file(REFERENCE_ZEROS.as_bytes(), None, 1e-18, "reference")
        .expect("embedded reference table parses")
        .ordinates()
        .to_vec()
}

fn max_abs_diff(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    if v.len() % 2 == 1 {
        v[m]
    } else {
        0.5 * (v[m - 1] + v[m])
    }
}

fn values<T>(xs: &[T], f: impl Fn(&T) -> Complex64) -> Vec<Complex64> {
    xs.iter().map(f).collect()
}

impl Context<'_> {
    fn engine(&mut self) -> Result<&EngineRun> {
        if let Some(run) = self.engine {
            return Ok(run);
        }
        if self.owned_engine.is_none() {
            self.owned_engine = Some(EngineRun::compute(self.scale.zeros)?);
        }
        Ok(self.owned_engine.as_ref().expect("just computed"))
    }

    fn zero_engine(&mut self) -> Result<Vec<Check>> {
        let table = self.table;
        let target = self.scale.zeros;
        let n100 = table.count(100.0)? as f64;
        let reference = reference_zeros();
        let run = self.engine()?;
        let mut checks = vec![
            Check::new(
                "first 100 computed ordinates vs reference, max error",
                max_abs_diff(run.table.ordinates(), &reference),
                Bound::AtMost { value: tol::ZERO_ORDINATE },
            ),
            Check::new("N(100)", n100, Bound::Equals { value: 29.0 }),
        ];
        let failures = run
            .certificates
            .iter()
            .filter(|c| {
                let expected = (c.end_index + 1) as usize;
                let in_table = c.end > table.coverage() || table.count_le(c.end) == expected;
                c.cumulative != expected || !in_table
            })
            .count();
        let certified = run
            .certificates
            .last()
            .map_or(0, |c| c.cumulative.min(run.table.len()));
        checks.push(Check::new("Gram blocks failing the count", failures as f64, Bound::Equals { value: 0.0 }));
        checks.push(Check::new(
            "zeros covered by certified blocks",
            certified as f64,
            Bound::AtLeast { value: target as f64 },
        ));
        checks.push(Check::new(
            format!("seconds to compute {target} zeros"),
            run.seconds,
            Bound::AtMost { value: tol::ZERO_RUNTIME_SECS },
        ));
        if !std::ptr::eq(table, &run.table) && run.table.ordinates() != table.ordinates() {
            let common = table.len().min(run.table.len());
            checks.push(Check::new(
                "supplied vs computed ordinates, max difference",
                max_abs_diff(&table.ordinates()[..common], &run.table.ordinates()[..common]),
                Bound::AtMost { value: table.precision() + run.table.precision() },
            ));
        }
        Ok(checks)
    }

    fn landau(&mut self) -> Result<Vec<Check>> {
        let table = self.table;
        let top = self.scale.top();
        let ladder = [top / 8.0, top / 4.0, top / 2.0, top];
        let limit = tol::LANDAU_RESIDUAL * self.scale.relax;
        let freqs = [
            Frequency::log_of(2)?,
            Frequency::log_of(3)?,
            Frequency::log_of(4)?,
            Frequency::log_of(5)?,
            Frequency::numeric(1.0)?,
            Frequency::numeric(SQRT_2)?,
        ];
        table.require_coverage(top)?;
        let mut checks = Vec::new();
        for f in &freqs {
            let conv = landau_convergence(table, f, &ladder)?;
            let last = conv.points.last().expect("ladder is nonempty");
            checks.push(Check::new(
                format!("a = {f}: |residual| at T = {top}"),
                last.residual.abs(),
                Bound::AtMost { value: limit },
            ));
            let growth = |v: Vec<f64>| v.windows(2).map(|w| w[1] / w[0]).fold(0.0, f64::max);
            checks.push(Check::new(
                format!("a = {f}: max growth of the (T/2, T] envelope across doublings"),
                growth(conv.envelopes.clone()),
                Bound::AtMost { value: tol::LANDAU_MONOTONE_FACTOR },
            ));
            checks.push(
                Check::new(
                    format!("a = {f}: max growth of the pointwise residual across doublings"),
                    growth(conv.points.iter().map(|p| p.residual.abs()).collect()),
                    Bound::AtMost { value: tol::LANDAU_MONOTONE_FACTOR },
                )
                .informational(),
            );
            checks.push(Check::new(
                format!("a = {f}: sup |residual|·T/log T on [1000, {top}]"),
                log_weighted_envelope(table, f, 1000.0, top)?,
                Bound::AtMost { value: tol::LANDAU_LOG_ENVELOPE },
            ));
        }
        Ok(checks)
    }

    fn cesaro(&mut self) -> Result<Vec<Check>> {
        let table = self.table;
        let m = self.scale.index(8264);
        let limit = tol::CESARO_MEAN * self.scale.relax;
        let mut checks = Vec::new();
        for (freq, h) in [(Frequency::log_of(2)?, 0.0), (Frequency::log_of(2)?, 1.0), (Frequency::numeric(1.0)?, 0.0)] {
            let predicted = predicted_eta_mean(&freq, h);
            let etas = eta_series(table, freq.a, h, 1, m - 1)?;
            let mut sum = Complex64::new(0.0, 0.0);
            let mut weighted: f64 = 0.0;
            for (i, s) in etas.iter().enumerate() {
                sum += s.value;
                let count = (i + 1) as f64;
                if count + 1.0 >= 100.0 {
                    let mm = count + 1.0;
                    weighted = weighted.max((sum / count - predicted).norm() * mm / mm.ln());
                }
            }
            let err = (sum / etas.len() as f64 - predicted).norm();
            checks.push(Check::new(
                format!("a = {freq}, h = {h}: |mean over n < {m} - predicted|"),
                err,
                Bound::AtMost { value: limit },
            ));
            checks.push(Check::new(
                format!("a = {freq}, h = {h}: max |error|·M/log M for 100 <= M <= {m}"),
                weighted,
                Bound::AtMost { value: tol::CESARO_LOG_ENVELOPE },
            ));
        }
        Ok(checks)
    }

    fn gaps(&mut self) -> Result<Vec<Check>> {
        let s = self.scale;
        let (e0, e1) = (s.index(100), s.index(500));
        let (l0, l1) = (s.index(4000), s.index(8000));
        let mut checks = Vec::new();
        for (freq, envelope) in [
            (Frequency::numeric(1.0)?, tol::GAP_ENVELOPE_A1),
            (Frequency::log_of(2)?, tol::GAP_ENVELOPE_LOG2),
        ] {
            let gaps = eta_h_gaps(self.table, freq.a, 0.0, e0, l1)?;
            let pick = |lo: u64, hi: u64| -> Vec<f64> {
                gaps.iter().filter(|(n, _)| (lo..=hi).contains(n)).map(|g| g.1).collect()
            };
            let early = median(pick(e0, e1));
            let late = median(pick(l0, l1));
            checks.push(
                Check::new(format!("a = {freq}: median gap, n in [{e0}, {e1}]"), early, Bound::AtLeast { value: 0.0 })
                    .informational(),
            );
            checks.push(Check::new(
                format!("a = {freq}: median gap, n in [{l0}, {l1}]"),
                late,
                Bound::Below { value: early },
            ));
            checks.push(Check::new(
                format!("a = {freq}: max n·gap, n in [{e0}, {l1}]"),
                gaps.iter().map(|&(n, g)| n as f64 * g).fold(0.0, f64::max),
                Bound::AtMost { value: envelope },
            ));
        }
        Ok(checks)
    }

    fn nu_bracket(&mut self) -> Result<Vec<Check>> {
        let table = self.table;
        let mut checks = Vec::new();
        for (label, a) in [("1/2", 0.5), ("1", 1.0), ("log(2)", LN_2)] {
            let t = a * 74_000.0 * self.scale.factor;
            let integral = nu_integral(table, a, t)?;
            let lo = 2.0 * PI * table.count((t - PI) / a)? as f64;
            let hi = 2.0 * PI * table.count((t + PI) / a)? as f64;
            checks.push(Check::new(
                format!("a = {label}: integral of nu over [0, {t}]"),
                integral.value,
                Bound::Within { lo, hi },
            ));
        }
        Ok(checks)
    }

    fn streams(&mut self) -> Result<&Streams> {
        if self.streams.is_none() {
            let top = self.scale.top();
            let samples = self.scale.count(50_000);
            let trace = |a: f64| -> Result<Vec<Complex64>> {
                Ok(values(&h_trace(self.table, a, PI, top * a - PI, samples)?, |s| s.value))
            };
            self.streams = Some(Streams {
                h_one: trace(1.0)?,
                h_half: trace(0.5)?,
                h_log2: trace(LN_2)?,
            });
        }
        Ok(self.streams.as_ref().expect("just built"))
    }

    /// Recentered cycle sums `η + Λ/a·e^{−(1/2+ih)a}` over the cycles below the top height.
    fn recentered_eta(&self, freq: &Frequency, h: f64, n_max: Option<u64>) -> Result<Vec<Complex64>> {
        let n_max = n_max.unwrap_or_else(|| ((self.scale.top() - h) * freq.a / (2.0 * PI)).floor() as u64 - 1);
        let shift = predicted_eta_mean(freq, h);
        Ok(values(&eta_series(self.table, freq.a, h, 4, n_max)?, |s| s.value - shift))
    }

    fn stationarity(&mut self) -> Result<Vec<Check>> {
        let bins = self.scale.split_bins;
        let log2 = Frequency::log_of(2)?;
        let fig5_max = self.scale.index(8264);
        let eta0 = self.recentered_eta(&log2, 0.0, Some(fig5_max))?;
        let eta1 = self.recentered_eta(&log2, 1.0, None)?;
        // Below the quick preset's top height there are too few cycles to split.
        let split_eta = eta0.len() >= 2 * MIN_SPLIT_SAMPLES;
        let streams = self.streams()?;
        let split = |samples: &[Complex64]| -> Result<f64> {
            Ok(stationarity_split_test(samples, 2, bins, bins)?
                .iter()
                .map(|p| p.distance)
                .fold(0.0, f64::max))
        };
        let bound = Bound::AtMost { value: tol::STATIONARITY_TV };
        let mut checks = vec![
            Check::new(format!("H_1 stream, 2-way split TV at {bins}x{bins}"), split(&streams.h_one)?, bound),
            Check::new(format!("H_1/2 stream, 2-way split TV at {bins}x{bins}"), split(&streams.h_half)?, bound),
            Check::new(format!("H_log2 stream, 2-way split TV at {bins}x{bins}"), split(&streams.h_log2)?, bound),
        ];
        // About 4000 cycles per half over 2500 bins: sampling noise alone
        // exceeds the threshold, so the ordered split is reported next to
        // its shuffled baseline instead of gating.
        if split_eta {
            checks.push(
                Check::new(format!("eta_log2,0 n in [4, {fig5_max}], 2-way split TV"), split(&eta0)?, bound)
                    .informational(),
            );
            checks.push(
                Check::new(
                    "eta_log2,0 shuffled-split baseline TV",
                    permutation_baseline(&eta0, 2, bins, bins, 20, 1)?,
                    bound,
                )
                .informational(),
            );
        }
        checks.push(Check::new(
            "eta_log2 recentered, h = 1 vs h = 0 TV",
            compare_streams(&eta1, &eta0, bins, bins)?,
            bound,
        ));
        Ok(checks)
    }

    fn densities(&mut self) -> Result<Vec<Check>> {
        let bins = self.scale.density_bins;
        let log2 = Frequency::log_of(2)?;
        let one = Frequency::numeric(1.0)?;
        let eta_log2 = self.recentered_eta(&log2, 0.0, None)?;
        let eta_one: Vec<Vec<Complex64>> = [0.0, 1.0]
            .iter()
            .map(|&h| self.recentered_eta(&one, h, None))
            .collect::<Result<_>>()?;
        let streams = self.streams()?;

        let window = Window::from_samples(&streams.h_log2, WINDOW_SIGMAS)?;
        let orbit = build_histogram(&streams.h_log2, window, bins, bins)?;
        let cycles = build_histogram(&eta_log2, window, bins, bins)?;
        let radius = log2.shift_radius();
        let fine = angular_convolve(&cycles, radius, DEFAULT_ANGLE_STEPS)?;
        let coarse = angular_convolve(&cycles, radius, DEFAULT_ANGLE_STEPS / 2)?;
        let mut checks = vec![
            Check::new(
                format!("a = log(2): TV(H histogram, convolved eta histogram) at {bins}x{bins}"),
                histogram_distance(&orbit, &fine.grid)?,
                Bound::AtMost { value: tol::CONVOLUTION_TV },
            ),
            Check::new(
                "a = log(2): TV(H histogram, unconvolved eta histogram)",
                histogram_distance(&orbit, &cycles)?,
                Bound::AtLeast { value: 0.0 },
            )
            .informational(),
            Check::new(
                "a = log(2): fraction of mass convolved out of the window",
                fine.mass_out / cycles.in_window().max(1.0),
                Bound::AtLeast { value: 0.0 },
            )
            .informational(),
            Check::new(
                format!("a = log(2): TV between {} and {} angle steps", DEFAULT_ANGLE_STEPS, DEFAULT_ANGLE_STEPS / 2),
                histogram_distance(&fine.grid, &coarse.grid)?,
                Bound::Below { value: tol::ANGLE_RESOLUTION_TV },
            ),
        ];
        let window = Window::from_samples(&streams.h_one, WINDOW_SIGMAS)?;
        let orbit = build_histogram(&streams.h_one, window, bins, bins)?;
        for (h, eta) in [0.0, 1.0].iter().zip(&eta_one) {
            checks.push(Check::new(
                format!("a = 1, h = {h}: TV(H histogram, eta histogram) at {bins}x{bins}"),
                histogram_distance(&orbit, &build_histogram(eta, window, bins, bins)?)?,
                Bound::AtMost { value: tol::SAME_DENSITY_TV },
            ));
        }
        Ok(checks)
    }

    fn figures(&mut self) -> Result<Vec<Check>> {
        let pools: Vec<rayon::ThreadPool> = [1, 4, 1]
            .iter()
            .map(|&n| rayon::ThreadPoolBuilder::new().num_threads(n).build())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Validation(format!("thread pool: {e}")))?;
        let mut checks = Vec::new();
        for figure in figures() {
            let recipe = self.scale.recipe(&figure);
            let scaled = Figure { recipe, ..figure };
            let renders = pools
                .iter()
                .map(|pool| pool.install(|| scaled.render_csv(self.table)))
                .collect::<Result<Vec<String>>>()?;
            let distinct = 1 + renders.windows(2).filter(|w| w[0] != w[1]).count();
            let rows = renders[0].lines().count() - 1;
            let expected = match recipe {
                Recipe::Trace { samples, .. } => samples,
                Recipe::Eta { n_min, n_max, .. } => (n_max - n_min + 1) as usize,
            };
            checks.push(Check::new(
                format!("figure {}: distinct renderings over 1/4/1 threads", figure.number),
                distinct as f64,
                Bound::Equals { value: 1.0 },
            ));
            checks.push(Check::new(
                format!("figure {}: rows", figure.number),
                rows as f64,
                Bound::Equals { value: expected as f64 },
            ));
        }
        Ok(checks)
    }
}

/// Upper bound on `sup |residual(T)|·T/log T` over `[lo, hi]`, from
/// residual envelopes on windows of ratio `2^{1/8}`.
fn log_weighted_envelope(table: &ZeroTable, freq: &Frequency, lo: f64, hi: f64) -> Result<f64> {
    let ratio = 2f64.powf(0.125);
    let mut worst: f64 = 0.0;
    let mut a = lo;
    // T/log T increases for T > e, so each window is bounded at its right end.
    let first = (lambda_sum(table, freq.a, lo)? / (2.0 * lo) - crate::arithmetic::predicted_landau_limit(freq)).abs();
    worst = worst.max(first * lo / lo.ln());
    while a < hi {
        let b = (a * ratio).min(hi);
        worst = worst.max(residual_envelope(table, freq, a, b)? * b / b.ln());
        a = b;
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeros::Source;

    #[test]
    fn empty_table_skips_everything() {
        let report = run_suite(&ZeroTable::empty(Source::Ingested, "none"), Preset::Quick, None);
        assert_eq!(report.criteria.len(), 8);
        assert!(report.criteria.iter().all(|c| c.status == Status::Skipped));
        assert!(!report.passed);
    }

    #[test]
    fn short_table_skips_high_criteria() {
        let engine = EngineRun::compute(200).unwrap();
        let report = run_suite(&engine.table, Preset::Quick, Some(&engine));
        for c in &report.criteria[1..] {
            assert_eq!(c.status, Status::Skipped, "{}", c.summary_line());
        }
        // 200 zeros cannot satisfy the 10 000-zero certificate check.
        assert_eq!(report.criteria[0].status, Status::Fail);
    }

    #[test]
    fn reference_table_is_complete() {
        let r = reference_zeros();
        assert_eq!(r.len(), 100);
        assert_eq!(r.iter().filter(|&&t| t <= 100.0).count(), 29);
    }

    #[test]
    fn bounds() {
        assert!(Bound::Within { lo: 1.0, hi: 2.0 }.admits(2.0));
        assert!(!Bound::Below { value: 1.0 }.admits(1.0));
        assert!(Bound::Equals { value: 29.0 }.admits(29.0));
    }

    #[test]
    fn quick_recipes_fit_ten_thousand_zeros() {
        let s = Preset::Quick.scale();
        for f in figures() {
            let scaled = Figure { recipe: s.recipe(&f), ..f };
            assert!(scaled.required_coverage() <= 9877.0, "figure {}", f.number);
        }
    }
}
