//! Curvature formulas built from the Enneper–Weierstrass data of the Scherk
//! comparison graphs: the geometric and scalar expressions for `W²|K|` at the
//! distinguished point, the lower-bound identity, and the finite-difference
//! check that `W²|K|` is log-subharmonic while `|K|` is log-superharmonic.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::One;
use serde::Serialize;

use crate::consts::{LOWER_BAND, UPPER_BAND};
use crate::error::{Error, Result};
use crate::harmonic::{DiskPoint, ZeroSolution};
use crate::params::ScherkParams;
use crate::rational::Rational;
use crate::scalar::solve_zero;

/// Disk automorphism `g(z) = e^{iϑ}(z − a)/(1 − ā z)` with `|a| < 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GaussAutomorphism {
    pub a: Complex64,
    pub theta: f64,
}

impl GaussAutomorphism {
    pub fn new(a: Complex64, theta: f64) -> Result<Self> {
        if !(a.norm() < 1.0) || !theta.is_finite() {
            return Err(Error::Domain(format!(
                "automorphism needs |a| < 1, got |a|={}",
                a.norm()
            )));
        }
        Ok(Self { a, theta })
    }

    pub fn identity() -> Self {
        Self {
            a: Complex64::new(0.0, 0.0),
            theta: 0.0,
        }
    }

    pub fn delta(&self) -> f64 {
        self.a.arg()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        Complex64::from_polar(1.0, self.theta) * (z - self.a) / (Complex64::one() - self.a.conj() * z)
    }

    pub fn derivative(&self, z: Complex64) -> Complex64 {
        let d = Complex64::one() - self.a.conj() * z;
        Complex64::from_polar(1.0, self.theta) * (1.0 - self.a.norm_sqr()) / (d * d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Geometric,
    Scalar,
}

/// Intermediate factors of a curvature evaluation; unused ones are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Components {
    /// `|1 − z²| |z² − e^{2iα}|`.
    pub numerator: Option<f64>,
    #[serde(rename = "D0")]
    pub d0: Option<f64>,
    pub r: Option<f64>,
    #[serde(rename = "S")]
    pub s: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NormalizedCurvature {
    pub value: f64,
    pub route: Route,
    pub components: Components,
}

fn zero_numerator(z: DiskPoint, alpha: f64) -> f64 {
    let w = z.to_complex().powi(2);
    (Complex64::one() - w).norm() * (w - Complex64::from_polar(1.0, 2.0 * alpha)).norm()
}

/// `(π²/4)((1+μ²)/μ²) |1−z²|²|z²−e^{2iα}|² / ((1−r²)² D∘²)`.
pub fn wk_geometric(z: DiskPoint, params: &ScherkParams, d0: f64) -> Result<NormalizedCurvature> {
    if !(z.r >= 0.0 && z.r < 1.0) {
        return Err(Error::Domain(format!("disk point needs r < 1, got r={}", z.r)));
    }
    if !(d0 > 0.0) {
        return Err(Error::Domain(format!("D∘ must be positive, got {d0}")));
    }
    let mu2 = params.mu * params.mu;
    let numerator = zero_numerator(z, params.alpha);
    let q = numerator / ((1.0 - z.r * z.r) * d0);
    Ok(NormalizedCurvature {
        value: LOWER_BAND * (1.0 + mu2) / mu2 * q * q,
        route: Route::Geometric,
        components: Components {
            numerator: Some(numerator),
            d0: Some(d0),
            r: Some(z.r),
            s: None,
        },
    })
}

/// `π²(1+AB)/S²`.
pub fn wk_scalar(params: &ScherkParams, s: f64) -> Result<NormalizedCurvature> {
    if !(s > 0.0) {
        return Err(Error::Domain(format!("S must be positive, got {s}")));
    }
    Ok(NormalizedCurvature {
        value: PI * PI * (1.0 + params.a * params.b) / (s * s),
        route: Route::Scalar,
        components: Components {
            s: Some(s),
            ..Components::default()
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TwoSided {
    pub value: f64,
    pub in_band: bool,
}

pub fn in_band(value: f64, slack: f64) -> bool {
    LOWER_BAND - slack <= value && value <= UPPER_BAND + slack
}

/// `π²/4 ≤ W²|K| ≤ π²/2` through the scalar route.
pub fn two_sided_check(params: &ScherkParams, tol: f64, slack: f64) -> Result<TwoSided> {
    let zero = solve_zero(params, tol)?;
    let value = wk_scalar(params, zero.s)?.value;
    Ok(TwoSided {
        value,
        in_band: in_band(value, slack),
    })
}

/// `4(1+AB) − (A+B+Bκ+Aε)² − (κε+κ+ε−1−AB)²` for `A, B ∈ [0, 1]`.
pub fn lower_identity_residual(a: f64, b: f64) -> f64 {
    let k = ((1.0 - a) * (1.0 + a)).sqrt();
    let e = ((1.0 - b) * (1.0 + b)).sqrt();
    4.0 * (1.0 + a * b) - (a + b + b * k + a * e).powi(2) - (k * e + k + e - 1.0 - a * b).powi(2)
}

/// The same residual in exact arithmetic; zero whenever `A²+κ² = B²+ε² = 1`.
pub fn lower_identity_residual_exact(a: &Rational, kappa: &Rational, b: &Rational, epsilon: &Rational) -> Rational {
    let one = Rational::one();
    let four = Rational::from_integer(4.into());
    let s = a + b + b * kappa + a * epsilon;
    let d = kappa * epsilon + kappa + epsilon - &one - a * b;
    four * (&one + a * b) - &s * &s - &d * &d
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZeroControl {
    /// `|1 − z∘²| |z∘² − e^{2iα}|`.
    pub lhs: f64,
    /// `√(2μ²/(1+μ²)) (1 − r²) D∘`.
    pub rhs: f64,
    pub holds: bool,
    pub wk_below_upper: bool,
    pub agree: bool,
}

/// The zero-control form of the upper bound and its agreement with
/// `W²|K| ≤ π²/2` at a solved point.
pub fn zero_control(sol: &ZeroSolution, params: &ScherkParams, slack: f64) -> ZeroControl {
    let mu2 = params.mu * params.mu;
    let lhs = zero_numerator(sol.z, params.alpha);
    let rhs = (2.0 * mu2 / (1.0 + mu2)).sqrt() * (1.0 - sol.z.r * sol.z.r) * sol.d0;
    let holds = lhs <= rhs * (1.0 + slack);
    let wk_below_upper = sol.wk <= UPPER_BAND * (1.0 + 2.0 * slack);
    ZeroControl {
        lhs,
        rhs,
        holds,
        wk_below_upper,
        agree: holds == wk_below_upper,
    }
}

/// Five-point finite-difference Laplacian of `f` at `z` with step `h`.
pub fn five_point_laplacian(f: impl Fn(Complex64) -> f64, z: Complex64, h: f64) -> f64 {
    let e = Complex64::new(h, 0.0);
    let i = Complex64::new(0.0, h);
    (f(z + e) + f(z - e) + f(z + i) + f(z - i) - 4.0 * f(z)) / (h * h)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LogSubharmonicity {
    pub lap_fd: f64,
    pub lap_exact: f64,
    #[serde(rename = "lapK_fd")]
    pub lapk_fd: f64,
    #[serde(rename = "lapK_exact")]
    pub lapk_exact: f64,
}

impl LogSubharmonicity {
    pub fn relative_error(&self) -> f64 {
        relative_error(self.lap_fd, self.lap_exact)
    }

    pub fn relative_error_k(&self) -> f64 {
        relative_error(self.lapk_fd, self.lapk_exact)
    }
}

/// `|fd − exact| / max(|exact|, 1)`.
pub fn relative_error(fd: f64, exact: f64) -> f64 {
    (fd - exact).abs() / exact.abs().max(1.0)
}

/// Compares finite-difference Laplacians of `log(W²|K|)` and `log|K|` for the
/// Gauss map `g` (with `φ ≡ 1`) against
/// `Δ log(W²|K|) = 32|g|²|g′|²/(1−|g|⁴)²` and `Δ log|K| = −16|g′|²/(1+|g|²)²`.
pub fn log_subharmonicity_check(g: &GaussAutomorphism, z: Complex64, h: f64) -> Result<LogSubharmonicity> {
    if !(h > 0.0) || !(z.norm() < 1.0 - 4.0 * h) {
        return Err(Error::Domain(format!(
            "need h > 0 and |z| < 1 − 4h, got |z|={}, h={h}",
            z.norm()
        )));
    }
    let gp = g.derivative(z);
    if gp.norm() == 0.0 {
        return Err(Error::Domain("g′ vanishes at the evaluation point".into()));
    }
    let log_wk = |w: Complex64| {
        let m2 = g.eval(w).norm_sqr();
        (4.0 * g.derivative(w).norm_sqr()).ln() - 2.0 * (1.0 - m2 * m2).ln()
    };
    let log_k = |w: Complex64| {
        let m2 = g.eval(w).norm_sqr();
        (4.0 * g.derivative(w).norm_sqr()).ln() - 4.0 * (1.0 + m2).ln()
    };
    let m2 = g.eval(z).norm_sqr();
    let gp2 = gp.norm_sqr();
    Ok(LogSubharmonicity {
        lap_fd: five_point_laplacian(log_wk, z, h),
        lap_exact: 32.0 * m2 * gp2 / (1.0 - m2 * m2).powi(2),
        lapk_fd: five_point_laplacian(log_k, z, h),
        lapk_exact: -16.0 * gp2 / (1.0 + m2).powi(2),
    })
}

/// Errors at steps `h` and `h/2` and the observed convergence order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Richardson {
    pub h: f64,
    pub error_h: f64,
    pub error_half: f64,
    pub order: f64,
}

pub fn richardson_pair(g: &GaussAutomorphism, z: Complex64, h: f64) -> Result<Richardson> {
    let coarse = log_subharmonicity_check(g, z, h)?;
    let fine = log_subharmonicity_check(g, z, 0.5 * h)?;
    let error_h = (coarse.lap_fd - coarse.lap_exact).abs();
    let error_half = (fine.lap_fd - fine.lap_exact).abs();
    Ok(Richardson {
        h,
        error_h,
        error_half,
        order: (error_h / error_half).log2(),
    })
}
