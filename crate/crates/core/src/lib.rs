//! Numerical experiments on the zeros of the Riemann zeta function.
//!
//! The crate computes (or ingests) zero ordinates and evaluates three
//! families of sums over them:
//!
//! * Landau's exponential sum `λ_a(T)`, which grows linearly exactly when
//!   `a = k log p` ([`landau`]);
//! * cycle sums `η_{a,h}(n)` and the continuous orbit function `H_a(τ)`
//!   ([`cycles`]);
//! * empirical planar densities of those values and their stationarity
//!   ([`distributions`]).
//!
//! [`verify`] bundles the quantitative checks into a single report, and
//! [`cli`] backs the `landau-lab` binary.
//!
//! ```no_run
//! use landau_lab::{arithmetic::Frequency, landau, zeros};
//!
//! let table = zeros::compute_zeros(10_000)?;
//! let freq = Frequency::log_of(2)?;
//! let scan = landau::landau_scan(&table, &[freq], 9_000.0)?;
//! println!("{:?}", scan[0]);
//! # Ok::<(), landau_lab::Error>(())
//! ```

// `!(x > 0.0)` deliberately rejects NaN along with nonpositive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod arithmetic;
pub mod cli;
pub mod cycles;
pub mod distributions;
pub mod error;
pub mod figures;
pub mod landau;
pub mod output;
pub mod summation;
pub mod tolerances;
pub mod verify;
pub mod zeros;

pub use error::{Error, Result};
