//! Parameter sets for the published orbit and cycle-sum plots.
//!
//! Each recipe is a trace or cycle-sum run at fixed parameters; rendering
//! goes through the same writers the CLI uses, so the CSV a recipe
//! produces is byte-identical to the corresponding command's output.

use std::f64::consts::{LN_2, PI};

use crate::cycles::{eta_series, h_trace};
use crate::error::Result;
use crate::output;
use crate::zeros::ZeroTable;

/// Height `T` of the last of the first 100 000 zeros, rounded down.
pub const TOP_HEIGHT: f64 = 74920.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Recipe {
    /// `H_a(τ)` at `samples` grid points of `[start, end]`.
    Trace { a: f64, start: f64, end: f64, samples: usize },
    /// `η_{a,h}(n)` for `n_min ..= n_max`.
    Eta { a: f64, h: f64, n_min: u64, n_max: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Figure {
    pub number: u8,
    pub title: &'static str,
    /// How `--a` is spelled on the command line.
    pub frequency: &'static str,
    pub recipe: Recipe,
}

pub fn figures() -> [Figure; 5] {
    [
        Figure {
            number: 1,
            frequency: "1",
            title: "H_1 locus, 50000 <= tau <= 50600",
            recipe: Recipe::Trace { a: 1.0, start: 50_000.0, end: 50_600.0, samples: 600 },
        },
        Figure {
            number: 2,
            frequency: "1",
            title: "H_1 samples",
            recipe: Recipe::Trace { a: 1.0, start: PI, end: TOP_HEIGHT - PI, samples: 50_000 },
        },
        Figure {
            number: 3,
            frequency: "0.5",
            title: "H_{1/2} samples",
            recipe: Recipe::Trace { a: 0.5, start: PI, end: TOP_HEIGHT / 2.0 - PI, samples: 50_000 },
        },
        Figure {
            number: 4,
            frequency: "log(2)",
            title: "H_{log 2} samples",
            recipe: Recipe::Trace { a: LN_2, start: PI, end: TOP_HEIGHT * LN_2 - PI, samples: 50_000 },
        },
        Figure {
            number: 5,
            frequency: "log(2)",
            title: "eta_{log 2, 0}(n), 4 <= n <= 8264",
            recipe: Recipe::Eta { a: LN_2, h: 0.0, n_min: 4, n_max: 8264 },
        },
    ]
}

impl Figure {
    /// Equivalent `landau-lab` arguments. Endpoints are printed in the
    /// shortest form that parses back to the same `f64`.
    pub fn command(&self) -> String {
        match self.recipe {
            Recipe::Trace { start, end, samples, .. } => {
                format!("trace --a {} --tau {start}:{end} --samples {samples}", self.frequency)
            }
            Recipe::Eta { h, n_min, n_max, .. } => {
                format!("eta --a {} --h {h} --n {n_min}:{n_max}", self.frequency)
            }
        }
    }

    /// Highest ordinate the recipe touches.
    pub fn required_coverage(&self) -> f64 {
        match self.recipe {
            Recipe::Trace { a, end, .. } => (end + PI) / a,
            Recipe::Eta { a, h, n_max, .. } => h + 2.0 * PI * (n_max + 1) as f64 / a,
        }
    }

    pub fn render_csv(&self, table: &ZeroTable) -> Result<String> {
        let mut buf = Vec::new();
        match self.recipe {
            Recipe::Trace { a, start, end, samples } => {
                output::write_trace_csv(&h_trace(table, a, start, end, samples)?, &mut buf)?;
            }
            Recipe::Eta { a, h, n_min, n_max } => {
                output::write_eta_csv(&eta_series(table, a, h, n_min, n_max)?, &mut buf)?;
            }
        }
        Ok(String::from_utf8(buf).expect("CSV writers emit ASCII"))
    }
}
