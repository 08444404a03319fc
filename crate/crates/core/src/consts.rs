//! Numeric constants shared across modules. Every π-dependent value is
//! derived from [`std::f64::consts::PI`].

use std::f64::consts::PI;

/// Upper end of the two-sided band, π²/2.
pub const UPPER_BAND: f64 = PI * PI / 2.0;

/// Lower end of the two-sided band, π²/4.
pub const LOWER_BAND: f64 = PI * PI / 4.0;

/// Sharp odd coefficient bound 8/π².
pub const ODD_COEFFICIENT_BOUND: f64 = 8.0 / (PI * PI);

/// Default tolerance for floating-point identity residuals.
pub const IDENTITY_TOL: f64 = 1e-10;

/// Default root-solver tolerance.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Default slack for inequality checks.
pub const DEFAULT_SLACK: f64 = 1e-9;
