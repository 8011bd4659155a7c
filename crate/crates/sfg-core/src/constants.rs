//! Physical constants (CODATA exact values) and small unit helpers.

/// Speed of light in vacuum, m/s (exact).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Planck constant, J·s (exact).
pub const PLANCK: f64 = 6.626_070_15e-34;

/// h·c, J·m.
pub const PLANCK_C: f64 = PLANCK * SPEED_OF_LIGHT;

/// Exact seconds per hour used for all counts/hour ↔ Hz conversions.
pub const SECONDS_PER_HOUR: f64 = 3600.0;

/// Energy of a single photon at the given vacuum wavelength, in joules.
pub fn photon_energy_j(wavelength_nm: f64) -> f64 {
    PLANCK_C / (wavelength_nm * 1e-9)
}

/// Rate in Hz expressed as counts per hour.
pub fn hz_to_per_hour(rate_hz: f64) -> f64 {
    rate_hz * SECONDS_PER_HOUR
}

/// Counts per hour expressed as a rate in Hz.
pub fn per_hour_to_hz(per_hour: f64) -> f64 {
    per_hour / SECONDS_PER_HOUR
}
