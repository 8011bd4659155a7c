//! Chromatic dispersion of congruent lithium niobate and quasi-phase-matching
//! kinematics.
//!
//! The extraordinary refractive index follows the temperature-dependent
//! Sellmeier form
//!
//! ```text
//! n² = a1 + b1·f + (a2 + b2·f)/(λ² − (a3 + b3·f)²) + (a4 + b4·f)/(λ² − a5²) − a6·λ²
//! f  = (T − 24.5)(T + 570.82),   λ in µm, T in °C
//! ```
//!
//! Coefficient sets are plain data: the built-in default is the published
//! congruent-LiNbO₃ extraordinary-index set, and alternative sets can be
//! loaded from a TOML file (see [`SellmeierCoefficients`] for the key names).
//! All operations are pure functions of immutable inputs.

use serde::{Deserialize, Serialize};

use crate::constants::SPEED_OF_LIGHT;
use crate::error::{Error, Result};
use crate::numerics;

/// Sellmeier coefficient set for the µm-based dispersion formula above.
///
/// When loaded from a file the keys are exactly the field names:
/// `a1`..`a6`, `b1`..`b4` (dimensionless in the µm convention) and the
/// validity window `window_min_um`, `window_max_um` in µm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SellmeierCoefficients {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub a4: f64,
    pub a5: f64,
    pub a6: f64,
    pub b1: f64,
    pub b2: f64,
    pub b3: f64,
    pub b4: f64,
    /// Lower edge of the validity window, µm.
    pub window_min_um: f64,
    /// Upper edge of the validity window, µm.
    pub window_max_um: f64,
}

/// Published coefficients for the extraordinary index of congruent LiNbO₃.
pub const CONGRUENT_LINBO3_EXTRAORDINARY: SellmeierCoefficients = SellmeierCoefficients {
    a1: 5.35583,
    a2: 0.100473,
    a3: 0.20692,
    a4: 100.0,
    a5: 11.34927,
    a6: 1.5334e-2,
    b1: 4.629e-7,
    b2: 3.862e-8,
    b3: -0.89e-8,
    b4: 2.657e-5,
    window_min_um: 0.4,
    window_max_um: 5.0,
};

/// A Sellmeier coefficient set evaluated at a fixed temperature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SellmeierModel {
    pub coefficients: SellmeierCoefficients,
    /// Operating temperature, °C.
    pub temperature_c: f64,
}

impl SellmeierModel {
    /// Built-in congruent lithium niobate extraordinary-index model.
    pub fn congruent_linbo3(temperature_c: f64) -> Self {
        Self {
            coefficients: CONGRUENT_LINBO3_EXTRAORDINARY,
            temperature_c,
        }
    }

    /// Load a coefficient set from TOML text.
    pub fn from_toml_str(text: &str, temperature_c: f64) -> Result<Self> {
        let coefficients: SellmeierCoefficients = toml::from_str(text)
            .map_err(|e| Error::validation(format!("sellmeier coefficient file: {e}")))?;
        if coefficients.window_min_um <= 0.0 || coefficients.window_max_um <= coefficients.window_min_um {
            return Err(Error::validation(format!(
                "sellmeier validity window [{}, {}] µm is not a positive interval",
                coefficients.window_min_um, coefficients.window_max_um
            )));
        }
        Ok(Self {
            coefficients,
            temperature_c,
        })
    }

    /// Validity window in nm.
    pub fn window_nm(&self) -> (f64, f64) {
        (
            self.coefficients.window_min_um * 1e3,
            self.coefficients.window_max_um * 1e3,
        )
    }

    fn check_in_window(&self, lambda_nm: f64) -> Result<f64> {
        let (min_nm, max_nm) = self.window_nm();
        if !(lambda_nm >= min_nm && lambda_nm <= max_nm) {
            return Err(Error::WavelengthOutOfWindow {
                lambda_nm,
                min_nm,
                max_nm,
            });
        }
        Ok(lambda_nm * 1e-3)
    }

    fn check_strictly_inside(&self, lambda_nm: f64) -> Result<f64> {
        let (min_nm, max_nm) = self.window_nm();
        if !(lambda_nm > min_nm && lambda_nm < max_nm) {
            return Err(Error::WavelengthOutOfWindow {
                lambda_nm,
                min_nm,
                max_nm,
            });
        }
        Ok(lambda_nm * 1e-3)
    }

    fn temperature_parameter(&self) -> f64 {
        (self.temperature_c - 24.5) * (self.temperature_c + 570.82)
    }

    fn n_squared(&self, lambda_um: f64) -> f64 {
        let c = &self.coefficients;
        let f = self.temperature_parameter();
        let l2 = lambda_um * lambda_um;
        c.a1 + c.b1 * f
            + (c.a2 + c.b2 * f) / (l2 - (c.a3 + c.b3 * f) * (c.a3 + c.b3 * f))
            + (c.a4 + c.b4 * f) / (l2 - c.a5 * c.a5)
            - c.a6 * l2
    }

    /// d(n²)/dλ in µm⁻¹, analytic.
    fn n_squared_derivative(&self, lambda_um: f64) -> f64 {
        let c = &self.coefficients;
        let f = self.temperature_parameter();
        let l2 = lambda_um * lambda_um;
        let a3f = (c.a3 + c.b3 * f) * (c.a3 + c.b3 * f);
        let d2 = l2 - a3f;
        let d5 = l2 - c.a5 * c.a5;
        -2.0 * lambda_um * (c.a2 + c.b2 * f) / (d2 * d2)
            - 2.0 * lambda_um * (c.a4 + c.b4 * f) / (d5 * d5)
            - 2.0 * c.a6 * lambda_um
    }

    /// Extraordinary refractive index at the model temperature.
    pub fn refractive_index(&self, lambda_nm: f64) -> Result<f64> {
        let lambda_um = self.check_in_window(lambda_nm)?;
        Ok(self.n_squared(lambda_um).sqrt())
    }

    /// Group index n_g = n − λ·dn/dλ, with the derivative taken analytically
    /// from the Sellmeier form. Requires λ strictly inside the window.
    pub fn group_index(&self, lambda_nm: f64) -> Result<f64> {
        let lambda_um = self.check_strictly_inside(lambda_nm)?;
        let n = self.n_squared(lambda_um).sqrt();
        let dn_dlambda = self.n_squared_derivative(lambda_um) / (2.0 * n);
        Ok(n - lambda_um * dn_dlambda)
    }
}

/// Periodic poling grating of a quasi-phase-matched waveguide.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QpmGrating {
    /// Poling period Λ, µm.
    pub poling_period_um: f64,
    /// Interaction length L, cm.
    pub length_cm: f64,
    /// Grating order, odd positive integer.
    pub order: u32,
    /// Temperature the grating was calibrated at, °C.
    pub temperature_c: f64,
}

impl QpmGrating {
    pub fn new(poling_period_um: f64, length_cm: f64, order: u32, temperature_c: f64) -> Result<Self> {
        let grating = Self {
            poling_period_um,
            length_cm,
            order,
            temperature_c,
        };
        grating.validate()?;
        Ok(grating)
    }

    pub fn validate(&self) -> Result<()> {
        let mut problems = Vec::new();
        if !(self.poling_period_um > 0.0) {
            problems.push(format!("poling period must be > 0 µm, got {}", self.poling_period_um));
        }
        if !(self.length_cm > 0.0) {
            problems.push(format!("grating length must be > 0 cm, got {}", self.length_cm));
        }
        if self.order % 2 == 0 || self.order == 0 {
            problems.push(format!("grating order must be an odd positive integer, got {}", self.order));
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(Error::Validation(problems))
        }
    }
}

/// Sum-frequency wavelength 1/λ₃ = 1/λ₁ + 1/λ₂, in nm.
pub fn sum_frequency_nm(lambda1_nm: f64, lambda2_nm: f64) -> f64 {
    1.0 / (1.0 / lambda1_nm + 1.0 / lambda2_nm)
}

/// Quasi-phase-matched phase mismatch for SFG of λ₁ and λ₂, rad/m:
/// Δk = 2π[n(λ₃)/λ₃ − n(λ₁)/λ₁ − n(λ₂)/λ₂ − m/Λ].
pub fn phase_mismatch(
    model: &SellmeierModel,
    grating: &QpmGrating,
    lambda1_nm: f64,
    lambda2_nm: f64,
) -> Result<f64> {
    let lambda3_nm = sum_frequency_nm(lambda1_nm, lambda2_nm);
    let n1 = model.refractive_index(lambda1_nm)?;
    let n2 = model.refractive_index(lambda2_nm)?;
    let n3 = model.refractive_index(lambda3_nm)?;
    // carrier terms in µm⁻¹, then rad/m
    let per_um = n3 / (lambda3_nm * 1e-3)
        - n1 / (lambda1_nm * 1e-3)
        - n2 / (lambda2_nm * 1e-3)
        - f64::from(grating.order) / grating.poling_period_um;
    Ok(2.0 * std::f64::consts::PI * per_um * 1e6)
}

/// Default poling-period search bracket, µm.
const POLING_BRACKET_UM: (f64, f64) = (2.0, 200.0);

/// Poling period Λ (µm) that phase-matches degenerate SHG at `lambda_peak_nm`,
/// found by bracketed bisection; the residual satisfies |Δk| < 1e-6 rad/m.
pub fn solve_poling_period(model: &SellmeierModel, lambda_peak_nm: f64, order: u32) -> Result<f64> {
    solve_poling_period_in(model, lambda_peak_nm, order, POLING_BRACKET_UM.0, POLING_BRACKET_UM.1)
}

/// As [`solve_poling_period`] with an explicit bracket in µm.
pub fn solve_poling_period_in(
    model: &SellmeierModel,
    lambda_peak_nm: f64,
    order: u32,
    bracket_lo_um: f64,
    bracket_hi_um: f64,
) -> Result<f64> {
    if order % 2 == 0 || order == 0 {
        return Err(Error::validation(format!(
            "grating order must be an odd positive integer, got {order}"
        )));
    }
    let lambda3_nm = sum_frequency_nm(lambda_peak_nm, lambda_peak_nm);
    let n_peak = model.refractive_index(lambda_peak_nm)?;
    let n_sum = model.refractive_index(lambda3_nm)?;
    let carrier_per_um = n_sum / (lambda3_nm * 1e-3) - 2.0 * n_peak / (lambda_peak_nm * 1e-3);
    let mismatch = |period_um: f64| carrier_per_um - f64::from(order) / period_um;
    let period = numerics::bisect(mismatch, bracket_lo_um, bracket_hi_um, 200)?;

    let grating = QpmGrating::new(period, 1.0, order, model.temperature_c)?;
    let residual = phase_mismatch(model, &grating, lambda_peak_nm, lambda_peak_nm)?;
    debug_assert!(residual.abs() < 1e-6, "poling solve residual {residual} rad/m");
    Ok(period)
}

/// Temporal walk-off L·|n_g(λa) − n_g(λb)|/c over the grating length, in ps.
pub fn temporal_walkoff_ps(
    model: &SellmeierModel,
    lambda_a_nm: f64,
    lambda_b_nm: f64,
    length_cm: f64,
) -> Result<f64> {
    if !(length_cm > 0.0) {
        return Err(Error::NonPositive {
            name: "length_cm",
            value: length_cm,
        });
    }
    let ng_a = model.group_index(lambda_a_nm)?;
    let ng_b = model.group_index(lambda_b_nm)?;
    Ok((ng_a - ng_b).abs() * (length_cm * 1e-2) / SPEED_OF_LIGHT * 1e12)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn model() -> SellmeierModel {
        SellmeierModel::congruent_linbo3(25.0)
    }

    #[test]
    fn index_matches_published_value_at_1550() {
        // Evaluated independently from the published coefficient set.
        let n = model().refractive_index(1550.0).unwrap();
        assert_relative_eq!(n, 2.13788013, max_relative = 1e-6);
        assert!((n - 2.138).abs() < 0.002);
    }

    #[test]
    fn normal_dispersion_in_transparency_window() {
        let m = model();
        assert!(m.refractive_index(775.0).unwrap() > m.refractive_index(1550.0).unwrap());
        // strictly decreasing over [0.7, 1.7] µm on a 1 nm grid
        let mut previous = m.refractive_index(700.0).unwrap();
        let mut lambda = 701.0;
        while lambda <= 1700.0 {
            let n = m.refractive_index(lambda).unwrap();
            assert!(n < previous, "n not decreasing at {lambda} nm");
            assert!(n > 1.0);
            previous = n;
            lambda += 1.0;
        }
    }

    #[test]
    fn out_of_window_error_names_the_window() {
        let err = model().refractive_index(399.0).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("399"), "{msg}");
        assert!(msg.contains("400") && msg.contains("5000"), "{msg}");
    }

    #[test]
    fn group_index_exceeds_phase_index() {
        let m = model();
        for lambda in [700.0, 1000.0, 1300.0, 1560.0, 1700.0] {
            assert!(m.group_index(lambda).unwrap() >= m.refractive_index(lambda).unwrap());
        }
    }

    #[test]
    fn group_index_matches_finite_difference() {
        // Central finite difference with a 0.01 nm step is the oracle.
        let m = model();
        let step_nm = 0.01;
        for i in 0..100 {
            let lambda = 500.0 + 40.0 * i as f64;
            let n_plus = m.refractive_index(lambda + step_nm).unwrap();
            let n_minus = m.refractive_index(lambda - step_nm).unwrap();
            let dn = (n_plus - n_minus) / (2.0 * step_nm * 1e-3);
            let ng_fd = m.refractive_index(lambda).unwrap() - lambda * 1e-3 * dn;
            let ng = m.group_index(lambda).unwrap();
            assert_relative_eq!(ng, ng_fd, max_relative = 1e-6);
        }
    }

    #[test]
    fn group_index_regression_anchor_at_1560() {
        let ng = model().group_index(1560.0).unwrap();
        assert_relative_eq!(ng, 2.18219468, max_relative = 1e-6);
    }

    #[test]
    fn group_index_rejects_window_edge() {
        assert!(model().group_index(400.0).is_err());
        assert!(model().group_index(5000.0).is_err());
    }

    #[test]
    fn phase_mismatch_is_symmetric() {
        let m = model();
        let grating = QpmGrating::new(19.0, 4.5, 1, 25.0).unwrap();
        let a = phase_mismatch(&m, &grating, 1560.0, 1551.0).unwrap();
        let b = phase_mismatch(&m, &grating, 1551.0, 1560.0).unwrap();
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn phase_mismatch_rejects_sum_frequency_outside_window() {
        let m = model();
        let grating = QpmGrating::new(19.0, 4.5, 1, 25.0).unwrap();
        // λ₃ = 395 nm falls below the window although both inputs are inside.
        let err = phase_mismatch(&m, &grating, 790.0, 790.0).unwrap_err();
        assert!(matches!(err, Error::WavelengthOutOfWindow { .. }));
    }

    #[test]
    fn solved_period_zeroes_the_mismatch() {
        let m = model();
        let period = solve_poling_period(&m, 1556.0, 1).unwrap();
        let grating = QpmGrating::new(period, 4.5, 1, 25.0).unwrap();
        let residual = phase_mismatch(&m, &grating, 1556.0, 1556.0).unwrap();
        assert!(residual.abs() < 1e-6, "residual {residual} rad/m");
    }

    #[test]
    fn poling_period_regression_anchor() {
        let period = solve_poling_period(&model(), 1556.0, 1).unwrap();
        assert!((14.0..=20.0).contains(&period));
        assert_relative_eq!(period, 19.13867212, max_relative = 1e-6);
    }

    #[test]
    fn poling_period_increases_with_peak_wavelength() {
        let m = model();
        let mut previous = solve_poling_period(&m, 1540.0, 1).unwrap();
        let mut lambda = 1541.0;
        while lambda <= 1570.0 {
            let period = solve_poling_period(&m, lambda, 1).unwrap();
            assert!(period > previous, "Λ not increasing at {lambda} nm");
            previous = period;
            lambda += 1.0;
        }
    }

    #[test]
    fn poling_solver_reports_bad_bracket() {
        let err = solve_poling_period_in(&model(), 1556.0, 1, 2.0, 3.0).unwrap_err();
        match err {
            Error::BracketWithoutRoot { lo, hi, .. } => assert_eq!((lo, hi), (2.0, 3.0)),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn poling_solver_is_deterministic() {
        let a = solve_poling_period(&model(), 1556.0, 1).unwrap();
        let b = solve_poling_period(&model(), 1556.0, 1).unwrap();
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn mismatch_sign_flips_once_across_the_phase_matched_point() {
        let m = model();
        let period = solve_poling_period(&m, 1556.0, 1).unwrap();
        let grating = QpmGrating::new(period, 4.5, 1, 25.0).unwrap();
        let mut signs = Vec::new();
        let mut lambda = 1546.0;
        while lambda <= 1566.0 {
            let dk = phase_mismatch(&m, &grating, lambda, 1556.0).unwrap();
            if dk != 0.0 {
                signs.push(dk.signum());
            }
            lambda += 0.25;
        }
        let flips = signs.windows(2).filter(|w| w[0] != w[1]).count();
        assert_eq!(flips, 1, "expected a single sign change along the scan");
    }

    #[test]
    fn walkoff_identity_and_linearity() {
        let m = model();
        assert_eq!(temporal_walkoff_ps(&m, 1560.0, 1560.0, 4.5).unwrap(), 0.0);
        let single = temporal_walkoff_ps(&m, 1560.0, 780.0, 4.5).unwrap();
        let double = temporal_walkoff_ps(&m, 1560.0, 780.0, 9.0).unwrap();
        assert_relative_eq!(double, 2.0 * single, max_relative = 1e-14);
    }

    #[test]
    fn walkoff_regression_anchor() {
        // Exceeds the 10 ps pulse duration: the device length is walk-off limited.
        let wo = temporal_walkoff_ps(&model(), 1560.0, 780.0, 4.5).unwrap();
        assert_relative_eq!(wo, 13.456553, max_relative = 1e-6);
    }

    #[test]
    fn grating_validation() {
        assert!(QpmGrating::new(19.0, 4.5, 1, 25.0).is_ok());
        assert!(QpmGrating::new(19.0, 4.5, 3, 25.0).is_ok());
        assert!(QpmGrating::new(-1.0, 4.5, 1, 25.0).is_err());
        assert!(QpmGrating::new(19.0, 0.0, 1, 25.0).is_err());
        assert!(QpmGrating::new(19.0, 4.5, 2, 25.0).is_err());
    }

    #[test]
    fn coefficients_load_from_toml() {
        let text = r#"
            a1 = 5.35583
            a2 = 0.100473
            a3 = 0.20692
            a4 = 100.0
            a5 = 11.34927
            a6 = 0.015334
            b1 = 4.629e-7
            b2 = 3.862e-8
            b3 = -0.89e-8
            b4 = 2.657e-5
            window_min_um = 0.4
            window_max_um = 5.0
        "#;
        let m = SellmeierModel::from_toml_str(text, 25.0).unwrap();
        assert_relative_eq!(
            m.refractive_index(1550.0).unwrap(),
            SellmeierModel::congruent_linbo3(25.0).refractive_index(1550.0).unwrap(),
            max_relative = 1e-12
        );
        assert!(SellmeierModel::from_toml_str("a1 = 1.0\nbogus = 2.0", 25.0).is_err());
    }

    #[test]
    fn energy_conservation_in_sum_frequency() {
        let l3 = sum_frequency_nm(1560.0, 1551.0);
        let lhs = 1.0 / l3;
        let rhs = 1.0 / 1560.0 + 1.0 / 1551.0;
        assert_relative_eq!(lhs, rhs, max_relative = 1e-15);
    }
}
