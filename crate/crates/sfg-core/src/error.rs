//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the dispersion, conversion, budget and simulation
/// layers.
#[derive(Debug, Error)]
pub enum Error {
    /// Wavelength outside (or, where a derivative is needed, not strictly
    /// inside) the validity window of a dispersion model.
    #[error("wavelength {lambda_nm} nm outside Sellmeier validity window [{min_nm}, {max_nm}] nm")]
    WavelengthOutOfWindow {
        lambda_nm: f64,
        min_nm: f64,
        max_nm: f64,
    },

    /// A physical quantity that must be strictly positive was not.
    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    /// Bracketed root finding failed because the bracket does not straddle
    /// a sign change.
    #[error("no sign change in bracket [{lo}, {hi}]: f(lo) = {f_lo:e}, f(hi) = {f_hi:e}")]
    BracketWithoutRoot { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    /// A spectral density extends beyond the efficiency grid it is being
    /// integrated against.
    #[error("spectra escape the efficiency grid: fraction {escaped_fraction:e} of the spectral weight lies outside")]
    SpectrumCoverage { escaped_fraction: f64 },

    /// One or more validation failures; every problem found is listed.
    #[error("invalid configuration:\n  - {}", .0.join("\n  - "))]
    Validation(Vec<String>),

    /// A histogram is too short for the requested peak analysis.
    #[error("histogram spans {span_ns} ns, shorter than one clock period ({period_ns} ns)")]
    HistogramTooShort { span_ns: f64, period_ns: f64 },

    /// A Monte Carlo estimate cannot be formed from the events recorded.
    #[error("insufficient statistics: {0}")]
    Statistics(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Single-message validation error.
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(vec![msg.into()])
    }
}

pub type Result<T> = std::result::Result<T, Error>;
