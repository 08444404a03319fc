//! Verification toolkit for the normalized curvature `W²|K|` of the
//! Scherk-type comparison family of minimal graphs.
//!
//! The crate is organized around the objects that enter the sharp estimate
//! `π²/4 ≤ W²|K| ≤ π²/2`:
//!
//! * [`params`]: the parameter algebra `(A, B, κ, ε, μ, α)` and the admissible
//!   interval `[L, R]`;
//! * [`scalar`]: the scalar function `G_{A,B}`, its admissible zero and the
//!   barrier argument behind `G′/π ≥ √(2(1+AB))`;
//! * [`harmonic`]: harmonic measures of boundary arcs and the distinguished
//!   zero point `z∘`;
//! * [`weierstrass`]: curvature formulas, the lower-bound identity and the
//!   log-subharmonicity check;
//! * [`bernstein`]: exact rational Bernstein certificates;
//! * [`oddmap`]: odd circle lifts and the sharp odd coefficient bound `8/π²`;
//! * [`sweep`]: parameter sweeps producing CSV tables.
//!
//! ```
//! use scherk_hopf::{params::ScherkParams, scalar, weierstrass};
//!
//! let p = ScherkParams::from_ab(0.6, 0.95).unwrap();
//! let zero = scalar::solve_zero(&p, 1e-12).unwrap();
//! let wk = weierstrass::wk_scalar(&p, zero.s).unwrap();
//! assert!(wk.value > std::f64::consts::PI.powi(2) / 4.0);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bernstein;
pub mod cli;
pub mod consts;
pub mod error;
pub mod harmonic;
pub mod oddmap;
pub mod params;
pub mod rational;
pub mod scalar;
pub mod sweep;
pub mod weierstrass;

pub use error::{Error, Result};
