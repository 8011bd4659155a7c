//! Simulation and analysis toolkit for quasi-phase-matched sum-frequency
//! generation (SFG) between single-photon-level fields in a nonlinear
//! waveguide.
//!
//! The crate is organised around four computational layers:
//!
//! - [`dispersion`]: Sellmeier dispersion of congruent lithium niobate,
//!   quasi-phase-matching kinematics, poling-period solving and temporal
//!   walk-off.
//! - [`conversion`]: sinc² QPM response, SHG tuning curves, the
//!   single-photon-level SFG efficiency matrix and spectral-overlap
//!   effective efficiency.
//! - [`budget`]: deterministic photon and rate accounting — photons per
//!   pulse, transmission chains, SHG noise rates, the β product and
//!   efficiency extraction.
//! - [`simkit`]: seeded Monte Carlo of the pulse-train experiment —
//!   coincidence histograms with side peaks, delay scans and the heralded
//!   g²(0) estimator.
//!
//! [`config`] parses experiment description files into a validated
//! [`simkit::ExperimentConfig`]; [`report`] assembles the full budget
//! report.

pub mod budget;
pub mod config;
pub mod constants;
pub mod conversion;
pub mod dispersion;
pub mod error;
mod numerics;
pub mod report;
pub mod simkit;

pub use error::{Error, Result};

/// Crate version embedded in every emitted artifact.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
