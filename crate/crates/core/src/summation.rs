//! Compensated summation and a reduction whose result does not depend on
//! the number of worker threads.
//!
//! Inputs are cut into fixed-size chunks. Each chunk is summed with a
//! Neumaier accumulator, and the per-chunk partials are combined by a
//! pairwise tree in index order. Chunk boundaries depend only on the input
//! length, so any thread pool produces bit-identical results.

use std::ops::AddAssign;

use rayon::prelude::*;

/// Default number of terms per chunk in [`reduce_chunked`].
pub const DEFAULT_CHUNK: usize = 4096;

/// Kahan–Neumaier running sum.
#[derive(Debug, Default, Clone, Copy, PartialEq)]
pub struct NeumaierSum {
    sum: f64,
    carry: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }

    /// Merges another partial sum, keeping both compensation terms.
    pub fn merge(&mut self, other: NeumaierSum) {
        *self += other.sum;
        *self += other.carry;
    }
}

impl AddAssign<f64> for NeumaierSum {
    fn add_assign(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }
}

impl FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = NeumaierSum::new();
        for x in iter {
            acc += x;
        }
        acc
    }
}

/// Combines partial sums pairwise: `((p0+p1)+(p2+p3))+...`.
pub fn pairwise_merge(mut parts: Vec<NeumaierSum>) -> NeumaierSum {
    if parts.is_empty() {
        return NeumaierSum::new();
    }
    while parts.len() > 1 {
        parts = parts
            .chunks(2)
            .map(|pair| {
                let mut acc = pair[0];
                if let Some(&rhs) = pair.get(1) {
                    acc.merge(rhs);
                }
                acc
            })
            .collect();
    }
    parts[0]
}

/// Sums `term(x)` over `items` with compensated chunks and a pairwise tree.
pub fn reduce_chunked<T, F>(items: &[T], chunk: usize, term: F) -> f64
where
    T: Sync,
    F: Fn(&T) -> f64 + Sync,
{
    let chunk = chunk.max(1);
    let parts: Vec<NeumaierSum> = items
        .par_chunks(chunk)
        .map(|c| c.iter().map(&term).collect::<NeumaierSum>())
        .collect();
    pairwise_merge(parts).value()
}
