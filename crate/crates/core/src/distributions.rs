//! Empirical planar densities of cycle sums and orbit values.
//!
//! Histograms live on a rectangular window of the complex plane with
//! half-open bins `[lo, hi)` per axis. Sample histograms hold integral
//! counts; [`angular_convolve`] produces fractional ones.

use std::f64::consts::PI;
use std::io::{BufRead, Write};

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Default number of sample standard deviations on each side of the mean.
pub const WINDOW_SIGMAS: f64 = 4.0;

/// Default angular resolution of [`angular_convolve`].
pub const DEFAULT_ANGLE_STEPS: usize = 256;

/// Smallest allowed angular resolution.
pub const MIN_ANGLE_STEPS: usize = 8;

/// Smallest block accepted by [`stationarity_split_test`].
pub const MIN_SPLIT_SAMPLES: usize = 1000;

/// Rectangular window `[re.0, re.1) × [im.0, im.1)`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Window {
    pub re: (f64, f64),
    pub im: (f64, f64),
}

impl Window {
    pub fn new(re: (f64, f64), im: (f64, f64)) -> Result<Self> {
        for (name, (lo, hi)) in [("re", re), ("im", im)] {
            if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
                return Err(Error::Geometry(format!("{name} range [{lo}, {hi}) is degenerate")));
            }
        }
        Ok(Self { re, im })
    }

    /// Mean ± `sigmas` standard deviations per axis. A zero spread widens
    /// to ±1 so the window stays nondegenerate.
    pub fn from_samples(samples: &[Complex64], sigmas: f64) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::InsufficientSamples { needed: 1, got: 0 });
        }
        let n = samples.len() as f64;
        let mean = samples.iter().sum::<Complex64>() / n;
        let var_re = samples.iter().map(|z| (z.re - mean.re).powi(2)).sum::<f64>() / n;
        let var_im = samples.iter().map(|z| (z.im - mean.im).powi(2)).sum::<f64>() / n;
        let half = |var: f64| {
            let w = sigmas * var.sqrt();
            if w > 0.0 { w } else { 1.0 }
        };
        let (hr, hi) = (half(var_re), half(var_im));
        Window::new((mean.re - hr, mean.re + hr), (mean.im - hi, mean.im + hi))
    }

    pub fn contains(&self, z: Complex64) -> bool {
        z.re >= self.re.0 && z.re < self.re.1 && z.im >= self.im.0 && z.im < self.im.1
    }
}

/// 2-D histogram over a [`Window`].
#[derive(Debug, Clone, PartialEq)]
pub struct HistogramGrid {
    pub window: Window,
    pub nx: usize,
    pub ny: usize,
    /// Row-major by imaginary bin: index `iy * nx + ix`.
    pub counts: Vec<f64>,
    pub total: f64,
    pub out_of_range: f64,
}

impl HistogramGrid {
    fn zeroed(window: Window, nx: usize, ny: usize) -> Result<Self> {
        if nx == 0 || ny == 0 {
            return Err(Error::Geometry("histogram needs at least one bin per axis".into()));
        }
        Ok(Self {
            window,
            nx,
            ny,
            counts: vec![0.0; nx * ny],
            total: 0.0,
            out_of_range: 0.0,
        })
    }

    pub fn count(&self, ix: usize, iy: usize) -> f64 {
        self.counts[iy * self.nx + ix]
    }

    pub fn bin_size(&self) -> (f64, f64) {
        (
            (self.window.re.1 - self.window.re.0) / self.nx as f64,
            (self.window.im.1 - self.window.im.0) / self.ny as f64,
        )
    }

    pub fn bin_center(&self, ix: usize, iy: usize) -> Complex64 {
        let (dx, dy) = self.bin_size();
        Complex64::new(
            self.window.re.0 + (ix as f64 + 0.5) * dx,
            self.window.im.0 + (iy as f64 + 0.5) * dy,
        )
    }

    /// Bin holding `z`, or `None` outside the window.
    pub fn locate(&self, z: Complex64) -> Option<(usize, usize)> {
        if !self.window.contains(z) {
            return None;
        }
        let (dx, dy) = self.bin_size();
        let ix = (((z.re - self.window.re.0) / dx).floor() as usize).min(self.nx - 1);
        let iy = (((z.im - self.window.im.0) / dy).floor() as usize).min(self.ny - 1);
        Some((ix, iy))
    }

    /// Sum of the in-window counts.
    pub fn in_window(&self) -> f64 {
        self.counts.iter().sum()
    }

    /// Density estimate `count / (total · bin area)`; integrates to the
    /// in-window fraction.
    pub fn density(&self, ix: usize, iy: usize) -> f64 {
        let (dx, dy) = self.bin_size();
        if self.total == 0.0 {
            return 0.0;
        }
        self.count(ix, iy) / (self.total * dx * dy)
    }

    fn same_geometry(&self, other: &HistogramGrid) -> bool {
        self.window == other.window && self.nx == other.nx && self.ny == other.ny
    }

    /// Writes the geometry as `#` header lines, then `ix,iy,count` rows.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "# re_range,{},{}", self.window.re.0, self.window.re.1)?;
        writeln!(out, "# im_range,{},{}", self.window.im.0, self.window.im.1)?;
        writeln!(out, "# bins,{},{}", self.nx, self.ny)?;
        writeln!(out, "# total,{}", self.total)?;
        writeln!(out, "# out_of_range,{}", self.out_of_range)?;
        writeln!(out, "ix,iy,count")?;
        for iy in 0..self.ny {
            for ix in 0..self.nx {
                writeln!(out, "{},{},{}", ix, iy, self.count(ix, iy))?;
            }
        }
        Ok(())
    }

    pub fn read_csv<R: BufRead>(reader: R) -> Result<Self> {
        let mut re = None;
        let mut im = None;
        let mut bins = None;
        let mut total = 0.0;
        let mut out_of_range = 0.0;
        let mut grid: Option<HistogramGrid> = None;
        for (idx, line) in reader.lines().enumerate() {
            let line_no = idx + 1;
            let line = line?;
            let bad = |message: &str| Error::Parse {
                line: line_no,
                message: message.to_string(),
            };
            let num = |s: &str| s.trim().parse::<f64>().map_err(|_| bad("bad number"));
            if let Some(rest) = line.strip_prefix("# ") {
                let fields: Vec<&str> = rest.split(',').collect();
                match fields.as_slice() {
                    ["re_range", lo, hi] => re = Some((num(lo)?, num(hi)?)),
                    ["im_range", lo, hi] => im = Some((num(lo)?, num(hi)?)),
                    ["bins", nx, ny] => bins = Some((num(nx)? as usize, num(ny)? as usize)),
                    ["total", v] => total = num(v)?,
                    ["out_of_range", v] => out_of_range = num(v)?,
                    _ => return Err(bad("unknown header")),
                }
                continue;
            }
            if line.trim() == "ix,iy,count" {
                let (Some(re), Some(im), Some((nx, ny))) = (re, im, bins) else {
                    return Err(bad("geometry header incomplete"));
                };
                let mut g = HistogramGrid::zeroed(Window::new(re, im)?, nx, ny)?;
                g.total = total;
                g.out_of_range = out_of_range;
                grid = Some(g);
                continue;
            }
            let g = grid.as_mut().ok_or_else(|| bad("row before header"))?;
            let fields: Vec<&str> = line.split(',').collect();
            let [ix, iy, c] = fields.as_slice() else {
                return Err(bad("expected ix,iy,count"));
            };
            let (ix, iy) = (num(ix)? as usize, num(iy)? as usize);
            if ix >= g.nx || iy >= g.ny {
                return Err(bad("bin index out of range"));
            }
            g.counts[iy * g.nx + ix] = num(c)?;
        }
        grid.ok_or_else(|| Error::Parse {
            line: 0,
            message: "missing histogram body".into(),
        })
    }
}

/// Bins `samples` into an `nx × ny` grid over `window`.
pub fn build_histogram(samples: &[Complex64], window: Window, nx: usize, ny: usize) -> Result<HistogramGrid> {
    let mut grid = HistogramGrid::zeroed(window, nx, ny)?;
    let (counts, outside) = samples
        .par_chunks(8192)
        .map(|chunk| {
            let mut local = vec![0u64; nx * ny];
            let mut outside = 0u64;
            for &z in chunk {
                match grid.locate(z) {
                    Some((ix, iy)) => local[iy * nx + ix] += 1,
                    None => outside += 1,
                }
            }
            (local, outside)
        })
        .reduce(
            || (vec![0u64; nx * ny], 0u64),
            |(mut a, oa), (b, ob)| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                (a, oa + ob)
            },
        );
    grid.counts = counts.into_iter().map(|c| c as f64).collect();
    grid.total = samples.len() as f64;
    grid.out_of_range = outside as f64;
    Ok(grid)
}

/// Result of [`angular_convolve`]: the averaged grid and the mass pushed
/// outside the window.
#[derive(Debug, Clone, PartialEq)]
pub struct Convolved {
    pub grid: HistogramGrid,
    pub mass_out: f64,
}

/// Averages copies of the histogram shifted by `radius·e^{iθ}` over
/// `steps` equally spaced angles, depositing each shifted bin bilinearly.
pub fn angular_convolve(grid: &HistogramGrid, radius: f64, steps: usize) -> Result<Convolved> {
    if steps < MIN_ANGLE_STEPS {
        return Err(Error::Domain(format!("need at least {MIN_ANGLE_STEPS} angle steps")));
    }
    if !(radius >= 0.0) || !radius.is_finite() {
        return Err(Error::Domain(format!("radius must be nonnegative, got {radius}")));
    }
    if radius == 0.0 {
        return Ok(Convolved {
            grid: grid.clone(),
            mass_out: 0.0,
        });
    }
    let (nx, ny) = (grid.nx, grid.ny);
    let (dx, dy) = grid.bin_size();
    let shifts: Vec<(f64, f64)> = (0..steps)
        .map(|j| {
            let theta = 2.0 * PI * j as f64 / steps as f64;
            (radius * theta.cos() / dx, radius * theta.sin() / dy)
        })
        .collect();
    let share = 1.0 / steps as f64;

    let mut out = vec![0.0; nx * ny];
    let mut mass_out = 0.0;
    for iy in 0..ny {
        for ix in 0..nx {
            let w = grid.count(ix, iy);
            if w == 0.0 {
                continue;
            }
            let w = w * share;
            for &(sx, sy) in &shifts {
                // Position in bin-center coordinates.
                let fx = ix as f64 + sx;
                let fy = iy as f64 + sy;
                let (x0, y0) = (fx.floor(), fy.floor());
                let (tx, ty) = (fx - x0, fy - y0);
                for (cx, wx) in [(x0, 1.0 - tx), (x0 + 1.0, tx)] {
                    for (cy, wy) in [(y0, 1.0 - ty), (y0 + 1.0, ty)] {
                        let m = w * wx * wy;
                        if m == 0.0 {
                            continue;
                        }
                        if cx >= 0.0 && cy >= 0.0 && (cx as usize) < nx && (cy as usize) < ny {
                            out[cy as usize * nx + cx as usize] += m;
                        } else {
                            mass_out += m;
                        }
                    }
                }
            }
        }
    }
    Ok(Convolved {
        grid: HistogramGrid {
            window: grid.window,
            nx,
            ny,
            counts: out,
            total: grid.total,
            out_of_range: grid.out_of_range + mass_out,
        },
        mass_out,
    })
}

/// Total-variation distance `½ Σ |p₁ − p₂|` between the in-window
/// normalized histograms.
pub fn histogram_distance(g1: &HistogramGrid, g2: &HistogramGrid) -> Result<f64> {
    if !g1.same_geometry(g2) {
        return Err(Error::Geometry("histograms differ in window or bins".into()));
    }
    let (m1, m2) = (g1.in_window(), g2.in_window());
    if m1 <= 0.0 || m2 <= 0.0 {
        return Err(Error::Geometry("histogram has no in-window mass".into()));
    }
    let l1: f64 = g1
        .counts
        .iter()
        .zip(&g2.counts)
        .map(|(a, b)| (a / m1 - b / m2).abs())
        .sum();
    Ok((0.5 * l1).min(1.0))
}

/// Distance between blocks `i < j` of a split stream.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct PairDistance {
    pub i: usize,
    pub j: usize,
    pub distance: f64,
}

/// Cuts the ordered stream into `k` contiguous blocks, histograms each on
/// the stream's default window, and returns all pairwise distances.
pub fn stationarity_split_test(samples: &[Complex64], k: usize, nx: usize, ny: usize) -> Result<Vec<PairDistance>> {
    if k < 2 {
        return Err(Error::Domain("split test needs k >= 2".into()));
    }
    let per_block = samples.len() / k;
    if per_block < MIN_SPLIT_SAMPLES {
        return Err(Error::InsufficientSamples {
            needed: MIN_SPLIT_SAMPLES * k,
            got: samples.len(),
        });
    }
    let window = Window::from_samples(samples, WINDOW_SIGMAS)?;
    let grids = (0..k)
        .map(|b| {
            let lo = b * samples.len() / k;
            let hi = (b + 1) * samples.len() / k;
            build_histogram(&samples[lo..hi], window, nx, ny)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            out.push(PairDistance {
                i,
                j,
                distance: histogram_distance(&grids[i], &grids[j])?,
            });
        }
    }
    Ok(out)
}

/// Mean over `trials` random shuffles of the largest pairwise distance
/// from [`stationarity_split_test`].
///
/// A shuffled stream is stationary by construction, so this is the
/// distance that finite sample size alone produces at the given binning.
/// The shuffles are seeded and reproducible.
pub fn permutation_baseline(
    samples: &[Complex64],
    k: usize,
    nx: usize,
    ny: usize,
    trials: usize,
    seed: u64,
) -> Result<f64> {
    if trials == 0 {
        return Err(Error::Domain("permutation baseline needs at least one trial".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut shuffled = samples.to_vec();
    let mut total = 0.0;
    for _ in 0..trials {
        shuffled.shuffle(&mut rng);
        total += stationarity_split_test(&shuffled, k, nx, ny)?
            .iter()
            .map(|p| p.distance)
            .fold(0.0, f64::max);
    }
    Ok(total / trials as f64)
}

/// Distance between two streams on the default window of their union.
pub fn compare_streams(first: &[Complex64], second: &[Complex64], nx: usize, ny: usize) -> Result<f64> {
    let union: Vec<Complex64> = first.iter().chain(second).copied().collect();
    let window = Window::from_samples(&union, WINDOW_SIGMAS)?;
    histogram_distance(
        &build_histogram(first, window, nx, ny)?,
        &build_histogram(second, window, nx, ny)?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_window() -> Window {
        Window::new((0.0, 1.0), (0.0, 1.0)).unwrap()
    }

    #[test]
    fn single_sample_at_center() {
        let g = build_histogram(&[Complex64::new(0.5, 0.5)], unit_window(), 3, 3).unwrap();
        assert_eq!(g.count(1, 1), 1.0);
        assert_eq!(g.in_window(), 1.0);
        assert_eq!(g.total, 1.0);
    }

    #[test]
    fn bin_edges_go_up() {
        let g = build_histogram(&[Complex64::new(0.25, 0.5)], unit_window(), 4, 4).unwrap();
        assert_eq!(g.count(1, 2), 1.0);
        // The window's upper edge is outside.
        let g = build_histogram(&[Complex64::new(1.0, 0.5)], unit_window(), 4, 4).unwrap();
        assert_eq!(g.out_of_range, 1.0);
    }

    #[test]
    fn empty_samples_give_empty_grid() {
        let g = build_histogram(&[], unit_window(), 2, 2).unwrap();
        assert_eq!(g.total, 0.0);
        assert_eq!(g.in_window(), 0.0);
    }

    #[test]
    fn geometry_validation() {
        assert!(Window::new((1.0, 1.0), (0.0, 1.0)).is_err());
        assert!(build_histogram(&[], unit_window(), 0, 2).is_err());
    }

    #[test]
    fn density_integrates_to_in_window_fraction() {
        let samples = [Complex64::new(0.1, 0.1), Complex64::new(0.9, 0.6), Complex64::new(3.0, 0.0)];
        let g = build_histogram(&samples, unit_window(), 5, 5).unwrap();
        let (dx, dy) = g.bin_size();
        let mut integral = 0.0;
        for iy in 0..5 {
            for ix in 0..5 {
                integral += g.density(ix, iy) * dx * dy;
            }
        }
        assert!((integral - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn zero_radius_is_identity() {
        let samples = [Complex64::new(0.2, 0.3), Complex64::new(0.7, 0.1)];
        let g = build_histogram(&samples, unit_window(), 4, 4).unwrap();
        let c = angular_convolve(&g, 0.0, 64).unwrap();
        assert_eq!(c.grid, g);
        assert_eq!(c.mass_out, 0.0);
        assert!(angular_convolve(&g, 0.5, 4).is_err());
    }

    #[test]
    fn convolution_accounts_for_all_mass() {
        let samples: Vec<Complex64> = (0..400)
            .map(|k| Complex64::new((k % 20) as f64 / 20.0, (k / 20) as f64 / 20.0))
            .collect();
        let g = build_histogram(&samples, unit_window(), 10, 10).unwrap();
        let c = angular_convolve(&g, 0.15, 64).unwrap();
        assert!((c.grid.in_window() + c.mass_out - g.in_window()).abs() < 1e-9);
        assert!(c.mass_out > 0.0);
        assert!((c.grid.in_window() + c.grid.out_of_range - c.grid.total).abs() < 1e-9);
    }

    #[test]
    fn convolution_spreads_a_point_onto_a_ring() {
        let w = Window::new((-2.0, 2.0), (-2.0, 2.0)).unwrap();
        let g = build_histogram(&[Complex64::new(0.01, 0.01)], w, 40, 40).unwrap();
        let c = angular_convolve(&g, 1.0, 256).unwrap();
        let center = c.grid.count(20, 20);
        let ring = c.grid.count(30, 20) + c.grid.count(29, 20);
        assert_eq!(center, 0.0);
        assert!(ring > 0.0);
    }

    #[test]
    fn distance_extremes() {
        let a = build_histogram(&[Complex64::new(0.1, 0.1)], unit_window(), 2, 2).unwrap();
        let b = build_histogram(&[Complex64::new(0.9, 0.9)], unit_window(), 2, 2).unwrap();
        assert_eq!(histogram_distance(&a, &a).unwrap(), 0.0);
        assert_eq!(histogram_distance(&a, &b).unwrap(), 1.0);
        let c = build_histogram(&[Complex64::new(0.9, 0.9)], unit_window(), 3, 2).unwrap();
        assert!(matches!(histogram_distance(&a, &c), Err(Error::Geometry(_))));
    }

    #[test]
    fn split_test_on_constant_stream() {
        let samples = vec![Complex64::new(1.0, -2.0); 3000];
        let d = stationarity_split_test(&samples, 3, 10, 10).unwrap();
        assert_eq!(d.len(), 3);
        assert!(d.iter().all(|p| p.distance == 0.0));
        assert!(matches!(
            stationarity_split_test(&samples, 4, 10, 10),
            Err(Error::InsufficientSamples { .. })
        ));
        assert!(stationarity_split_test(&samples, 1, 10, 10).is_err());
    }

    #[test]
    fn csv_round_trip() {
        let samples = [Complex64::new(0.2, 0.3), Complex64::new(0.7, 0.1), Complex64::new(5.0, 5.0)];
        let g = build_histogram(&samples, unit_window(), 3, 2).unwrap();
        let c = angular_convolve(&g, 0.1, 16).unwrap().grid;
        for grid in [g, c] {
            let mut buf = Vec::new();
            grid.write_csv(&mut buf).unwrap();
            assert_eq!(HistogramGrid::read_csv(buf.as_slice()).unwrap(), grid);
        }
    }

    #[test]
    fn shuffled_baseline_matches_an_exchangeable_stream() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let samples: Vec<Complex64> = (0..4000)
            .map(|_| {
                use rand::Rng;
                Complex64::new(rng.gen::<f64>(), rng.gen::<f64>())
            })
            .collect();
        let ordered = stationarity_split_test(&samples, 2, 10, 10).unwrap()[0].distance;
        let base = permutation_baseline(&samples, 2, 10, 10, 30, 3).unwrap();
        assert!((ordered - base).abs() < 0.05, "{ordered} vs {base}");
        assert_eq!(base, permutation_baseline(&samples, 2, 10, 10, 30, 3).unwrap());
    }
}
