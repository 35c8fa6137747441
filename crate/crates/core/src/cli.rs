//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a computation fails (or a verification
//! criterion does not pass), 2 when the arguments are invalid. Nothing is
//! written for invalid arguments, and output files are written only after
//! the computation has finished.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use crate::arithmetic::{classify_frequency, predicted_eta_mean, Frequency, FrequencySpec};
use crate::cycles::{eta_series, h_trace};
use crate::distributions::{angular_convolve, build_histogram, HistogramGrid, Window, DEFAULT_ANGLE_STEPS, WINDOW_SIGMAS};
use crate::error::Result;
use crate::landau::{landau_scan, LandauScanPoint};
use crate::output;
use crate::verify::{run_suite, EngineRun, Preset};
use crate::zeros::{self, parse_zero_file, write_zero_file, ZeroTable};

#[derive(Debug, Clone, Parser)]
#[command(name = "landau-lab", version, about = "Sums over the zeros of the Riemann zeta function")]
#[command(allow_negative_numbers = true)]
pub struct RunConfig {
    /// Worker threads (default: available parallelism). Results do not depend on it.
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Compute or ingest a zero table and write it in the zero-file format.
    Zeros {
        #[command(flatten)]
        source: SourceArgs,
        /// Significant digits per ordinate.
        #[arg(long, default_value_t = 12)]
        digits: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Landau's sum λ_a(T)/2T against its prime-power limit.
    Landau {
        #[command(flatten)]
        source: SourceArgs,
        /// Frequency, `<float>` or `log(<int>)`; repeatable.
        #[arg(long = "a", value_name = "A")]
        a: Vec<FrequencySpec>,
        /// Frequency `log x`; repeatable.
        #[arg(long = "x", value_name = "X")]
        x: Vec<u64>,
        /// Height; repeatable.
        #[arg(long = "T", value_name = "T", required = true)]
        heights: Vec<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Cycle sums η_{a,h}(n).
    Eta {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        freq: FrequencyArg,
        #[arg(long, default_value_t = 0.0)]
        h: f64,
        /// Cycle range `lo:hi`, inclusive.
        #[arg(long, value_parser = parse_index_range, value_name = "LO:HI")]
        n: (u64, u64),
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The orbit function H_a(τ) on an inclusive grid.
    Trace {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        freq: FrequencyArg,
        #[arg(long, value_parser = parse_range, value_name = "LO:HI")]
        tau: (f64, f64),
        #[arg(long)]
        samples: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Histogram of orbit values (`--tau`) or recentered cycle sums (`--n`).
    #[command(group(ArgGroup::new("stream").required(true).args(["tau", "n"])))]
    Hist {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        freq: FrequencyArg,
        #[arg(long, default_value_t = 0.0)]
        h: f64,
        /// Histogram H_a over this τ range.
        #[arg(long, value_parser = parse_range, value_name = "LO:HI")]
        tau: Option<(f64, f64)>,
        /// Histogram recentered η_{a,h}(n) over this cycle range.
        #[arg(long, value_parser = parse_index_range, value_name = "LO:HI")]
        n: Option<(u64, u64)>,
        /// Grid points for `--tau`.
        #[arg(long, default_value_t = 50_000)]
        samples: usize,
        #[arg(long, value_parser = parse_bins, value_name = "NX,NY", default_value = "50,50")]
        bins: (usize, usize),
        /// Real-axis window; defaults to mean ± 4σ.
        #[arg(long, value_parser = parse_range, value_name = "LO:HI", requires = "im")]
        re: Option<(f64, f64)>,
        /// Imaginary-axis window.
        #[arg(long, value_parser = parse_range, value_name = "LO:HI", requires = "re")]
        im: Option<(f64, f64)>,
        /// Average over the circle of radius (Λ(e^a)/a)e^{−a/2}.
        #[arg(long)]
        convolve: bool,
        /// Angle steps for `--convolve`.
        #[arg(long, default_value_t = DEFAULT_ANGLE_STEPS)]
        steps: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the acceptance checks and emit a JSON report.
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        /// 10 000 zeros and heights divided by 8.
        #[arg(long)]
        quick: bool,
        /// JSON report file (default: standard output).
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SourceArgs {
    /// Zero file: one ordinate per line, `#` comments, optional `BASE <offset>`.
    #[arg(long, value_name = "PATH", conflicts_with = "compute", required_unless_present = "compute")]
    pub zeros: Option<PathBuf>,
    /// Compute the first COUNT zeros (cached under $LANDAU_LAB_CACHE).
    #[arg(long, value_name = "COUNT")]
    pub compute: Option<usize>,
    /// Offset added to every ingested ordinate.
    #[arg(long, value_name = "OFFSET", requires = "zeros")]
    pub base_offset: Option<f64>,
    /// Declared absolute precision of ingested ordinates.
    #[arg(long, default_value_t = zeros::table::DEFAULT_INGEST_PRECISION)]
    pub precision: f64,
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct FrequencyArg {
    /// `<float>` or `log(<int>)`.
    #[arg(long = "a", value_name = "A")]
    pub a: Option<FrequencySpec>,
    /// Integer x for a = log x.
    #[arg(long = "x", value_name = "X")]
    pub x: Option<u64>,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output file (default: standard output).
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    SvgScatter,
}

fn parse_range(s: &str) -> std::result::Result<(f64, f64), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected LO:HI")?;
    let lo: f64 = lo.trim().parse().map_err(|_| format!("bad number {lo:?}"))?;
    let hi: f64 = hi.trim().parse().map_err(|_| format!("bad number {hi:?}"))?;
    if !(lo <= hi) {
        return Err(format!("range {lo}:{hi} is empty"));
    }
    Ok((lo, hi))
}

fn parse_index_range(s: &str) -> std::result::Result<(u64, u64), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected LO:HI")?;
    let lo: u64 = lo.trim().parse().map_err(|_| format!("bad index {lo:?}"))?;
    let hi: u64 = hi.trim().parse().map_err(|_| format!("bad index {hi:?}"))?;
    if lo > hi {
        return Err(format!("range {lo}:{hi} is empty"));
    }
    Ok((lo, hi))
}

fn parse_bins(s: &str) -> std::result::Result<(usize, usize), String> {
    let (x, y) = s.split_once(',').ok_or("expected NX,NY")?;
    let x: usize = x.trim().parse().map_err(|_| format!("bad bin count {x:?}"))?;
    let y: usize = y.trim().parse().map_err(|_| format!("bad bin count {y:?}"))?;
    if x == 0 || y == 0 {
        return Err("bin counts must be positive".into());
    }
    Ok((x, y))
}

impl FrequencyArg {
    fn resolve(&self) -> Result<Frequency> {
        match (self.a, self.x) {
            (Some(spec), _) => classify_frequency(spec),
            (None, Some(x)) => Frequency::log_of(x),
            (None, None) => unreachable!("clap requires one of --a/--x"),
        }
    }
}

/// Argument combinations clap cannot express.
fn check_config(config: &RunConfig) -> std::result::Result<(), String> {
    if config.threads == Some(0) {
        return Err("--threads must be at least 1".into());
    }
    match &config.command {
        Command::Zeros { output, .. } if output.format == Format::SvgScatter => {
            Err("zeros supports --format csv or json".into())
        }
        Command::Landau { a, x, .. } if a.is_empty() && x.is_empty() => Err("landau needs --a or --x".into()),
        Command::Trace { samples, .. } if *samples < 2 => Err("--samples must be at least 2".into()),
        Command::Hist { tau: Some(_), samples, .. } if *samples < 2 => Err("--samples must be at least 2".into()),
        Command::Hist { output, .. } if output.format == Format::SvgScatter => {
            Err("hist supports --format csv or json".into())
        }
        _ => Ok(()),
    }
}

fn load_table(source: &SourceArgs) -> Result<ZeroTable> {
    match (&source.zeros, source.compute) {
        (Some(path), _) => {
            let file = File::open(path)?;
            parse_zero_file(BufReader::new(file), source.base_offset, source.precision, path.display().to_string())
        }
        (None, Some(count)) => zeros::load_or_compute(count),
        (None, None) => unreachable!("clap requires a zero source"),
    }
}

#[derive(Serialize)]
struct GridJson<'a> {
    window: Window,
    nx: usize,
    ny: usize,
    total: f64,
    out_of_range: f64,
    /// Row-major by `iy`, then `ix`.
    counts: &'a [f64],
}

/// Bytes to emit and whether the run counts as a success.
struct Artifact {
    bytes: Vec<u8>,
    out: Option<PathBuf>,
    success: bool,
}

fn render(config: &RunConfig, log: &mut Vec<u8>) -> Result<Artifact> {
    let mut bytes = Vec::new();
    let out = match &config.command {
        Command::Zeros { source, digits, output } => {
            let table = load_table(source)?;
            match output.format {
                Format::Json => output::write_json(table.ordinates(), &mut bytes)?,
                _ => write_zero_file(&table, &mut bytes, Some(*digits))?,
            }
            output.out.clone()
        }
        Command::Landau { source, a, x, heights, output } => {
            let table = load_table(source)?;
            let mut grid = a.iter().map(|&s| classify_frequency(s)).collect::<Result<Vec<_>>>()?;
            grid.extend(x.iter().map(|&x| Frequency::log_of(x)).collect::<Result<Vec<_>>>()?);
            grid.sort_by(|p, q| p.a.total_cmp(&q.a));
            let mut points: Vec<LandauScanPoint> = Vec::new();
            for &t in heights {
                points.extend(landau_scan(&table, &grid, t)?);
            }
            match output.format {
                Format::Csv => output::write_landau_csv(&points, &mut bytes)?,
                Format::Json => output::write_json(&points, &mut bytes)?,
                Format::SvgScatter => {
                    let pts: Vec<Complex64> = points.iter().map(|p| Complex64::new(p.a, p.normalized)).collect();
                    output::write_svg_scatter(&pts, &mut bytes)?
                }
            }
            output.out.clone()
        }
        Command::Eta { source, freq, h, n, output } => {
            let table = load_table(source)?;
            let freq = freq.resolve()?;
            let samples = eta_series(&table, freq.a, *h, n.0, n.1)?;
            match output.format {
                Format::Csv => output::write_eta_csv(&samples, &mut bytes)?,
                Format::Json => output::write_eta_json(&samples, &mut bytes)?,
                Format::SvgScatter => {
                    let pts: Vec<Complex64> = samples.iter().map(|s| s.value).collect();
                    output::write_svg_scatter(&pts, &mut bytes)?
                }
            }
            output.out.clone()
        }
        Command::Trace { source, freq, tau, samples, output } => {
            let table = load_table(source)?;
            let freq = freq.resolve()?;
            let trace = h_trace(&table, freq.a, tau.0, tau.1, *samples)?;
            match output.format {
                Format::Csv => output::write_trace_csv(&trace, &mut bytes)?,
                Format::Json => output::write_trace_json(&trace, &mut bytes)?,
                Format::SvgScatter => {
                    let pts: Vec<Complex64> = trace.iter().map(|s| s.value).collect();
                    output::write_svg_scatter(&pts, &mut bytes)?
                }
            }
            output.out.clone()
        }
        Command::Hist { source, freq, h, tau, n, samples, bins, re, im, convolve, steps, output } => {
            let table = load_table(source)?;
            let freq = freq.resolve()?;
            let values: Vec<Complex64> = match (tau, n) {
                (Some(tau), _) => h_trace(&table, freq.a, tau.0, tau.1, *samples)?.iter().map(|s| s.value).collect(),
                (None, Some(n)) => {
                    let shift = predicted_eta_mean(&freq, *h);
                    eta_series(&table, freq.a, *h, n.0, n.1)?.iter().map(|s| s.value - shift).collect()
                }
                (None, None) => unreachable!("clap requires --tau or --n"),
            };
            let window = match (re, im) {
                (Some(re), Some(im)) => Window::new(*re, *im)?,
                _ => Window::from_samples(&values, WINDOW_SIGMAS)?,
            };
            let mut grid: HistogramGrid = build_histogram(&values, window, bins.0, bins.1)?;
            if *convolve {
                let c = angular_convolve(&grid, freq.shift_radius(), *steps)?;
                writeln!(log, "convolved with radius {}; mass leaving the window {}", freq.shift_radius(), c.mass_out)?;
                grid = c.grid;
            }
            match output.format {
                Format::Json => output::write_json(
                    &GridJson {
                        window: grid.window,
                        nx: grid.nx,
                        ny: grid.ny,
                        total: grid.total,
                        out_of_range: grid.out_of_range,
                        counts: &grid.counts,
                    },
                    &mut bytes,
                )?,
                _ => grid.write_csv(&mut bytes)?,
            }
            output.out.clone()
        }
        Command::Verify { source, quick, out } => {
            let preset = if *quick { Preset::Quick } else { Preset::Full };
            let (table, engine) = match (&source.zeros, source.compute) {
                (None, Some(count)) => {
                    let run = EngineRun::compute(count)?;
                    (run.table.clone(), Some(run))
                }
                _ => (load_table(source)?, None),
            };
            let report = run_suite(&table, preset, engine.as_ref());
            for c in &report.criteria {
                writeln!(log, "{}", c.summary_line())?;
                for line in c.detail_lines() {
                    writeln!(log, "{line}")?;
                }
            }
            output::write_json(&report, &mut bytes)?;
            return Ok(Artifact {
                bytes,
                out: out.clone(),
                success: report.passed,
            });
        }
    };
    Ok(Artifact {
        bytes,
        out,
        success: true,
    })
}

/// Runs a parsed configuration, returning the process exit status.
pub fn run(config: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    if let Err(message) = check_config(config) {
        let _ = writeln!(stderr, "error: {message}");
        return 2;
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = config.threads {
        builder = builder.num_threads(n);
    }
    let pool = match builder.build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 1;
        }
    };
    let mut log = Vec::new();
    let rendered = pool.install(|| render(config, &mut log));
    let _ = stderr.write_all(&log);
    let outcome = rendered.and_then(|artifact| {
        match &artifact.out {
            Some(path) => std::fs::write(path, &artifact.bytes)?,
            None => stdout.write_all(&artifact.bytes)?,
        }
        Ok(artifact.success)
    });
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

/// Parses `args` (including the program name) and runs them.
pub fn run_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config, stdout, stderr),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            code
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    run_args(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock())
}
