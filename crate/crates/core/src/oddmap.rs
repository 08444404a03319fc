//! Odd circle lifts and the sharp odd coefficient estimate.
//!
//! An [`OddLift`] samples a nondecreasing `θ: ℝ → ℝ` with `θ(t+π) = θ(t)+π`
//! on a uniform grid of `[0, 2π)`. For `F(e^{it}) = e^{iθ(t)}` with Fourier
//! coefficients `c_n`, the first-mode energy `S₁ = |c₁|² + |c₋₁|²` is at least
//! `8/π²`, with equality in the limit of the four-point collapse
//! `F = iᵏ` on quarter arcs.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustfft::FftPlanner;
use serde::Serialize;
use statrs::function::erf::erf;

use crate::consts::{ODD_COEFFICIENT_BOUND, UPPER_BAND};
use crate::error::{Error, Result};

/// Default number of samples, `2¹⁴`.
pub const GRID: usize = 1 << 14;

/// Simpson intervals used on `[0, π/4]` by the averaging check.
const HALL_INTERVALS: usize = 512;

#[derive(Debug, Clone, PartialEq)]
pub struct OddLift {
    samples: Vec<f64>,
}

impl OddLift {
    /// Samples `f` on the first half of the grid and fills the second half
    /// with `f + π`, so the odd periodicity holds exactly.
    pub fn from_fn(n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        check_grid(n)?;
        let half = n / 2;
        let step = TAU / n as f64;
        let mut samples: Vec<f64> = (0..half).map(|k| f(k as f64 * step)).collect();
        samples.extend_from_within(..);
        for s in &mut samples[half..] {
            *s += PI;
        }
        Self::from_samples(samples)
    }

    /// Validates raw samples: power-of-two length, odd periodicity and
    /// monotonicity including the wrap `θ(2π) = θ(0) + 2π`.
    pub fn from_samples(samples: Vec<f64>) -> Result<Self> {
        check_grid(samples.len())?;
        let lift = Self { samples };
        if !lift.samples.iter().all(|x| x.is_finite()) {
            return Err(Error::Domain("lift samples must be finite".into()));
        }
        if lift.odd_defect() > 1e-12 {
            return Err(Error::Domain(format!(
                "lift violates θ(t+π) = θ(t)+π by {:e}",
                lift.odd_defect()
            )));
        }
        if lift.min_increment() < 0.0 {
            return Err(Error::Domain("lift is not nondecreasing".into()));
        }
        Ok(lift)
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, |t| t)
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn step(&self) -> f64 {
        TAU / self.len() as f64
    }

    /// `θ` at grid index `i`, extended by `θ(t + 2π) = θ(t) + 2π`.
    pub fn at_index(&self, i: isize) -> f64 {
        let n = self.len() as isize;
        let wraps = i.div_euclid(n);
        self.samples[i.rem_euclid(n) as usize] + TAU * wraps as f64
    }

    pub fn min_increment(&self) -> f64 {
        (0..self.len() as isize)
            .map(|k| self.at_index(k + 1) - self.at_index(k))
            .fold(f64::INFINITY, f64::min)
    }

    /// `max_k |θ(t_k + π) − θ(t_k) − π|`.
    pub fn odd_defect(&self) -> f64 {
        let half = self.len() / 2;
        (0..half)
            .map(|k| (self.samples[k + half] - self.samples[k] - PI).abs())
            .fold(0.0, f64::max)
    }

    /// Samples of `s ↦ θ(s + t)` on the grid. Grid multiples shift indices;
    /// other shifts interpolate the periodic part `θ(s) − s` spectrally.
    pub fn shifted(&self, t: f64) -> Vec<f64> {
        let n = self.len();
        if let Some(k) = grid_multiple(t, self.step()) {
            return (0..n as isize).map(|i| self.at_index(i + k)).collect();
        }
        let step = self.step();
        let mut buf: Vec<Complex64> = self
            .samples
            .iter()
            .enumerate()
            .map(|(k, th)| Complex64::new(th - k as f64 * step, 0.0))
            .collect();
        let mut planner = FftPlanner::new();
        planner.plan_fft_forward(n).process(&mut buf);
        for (k, c) in buf.iter_mut().enumerate() {
            let freq = if k < n / 2 { k as f64 } else { k as f64 - n as f64 };
            *c *= if k == n / 2 {
                Complex64::new((freq * t).cos(), 0.0)
            } else {
                Complex64::from_polar(1.0, freq * t)
            };
        }
        planner.plan_fft_inverse(n).process(&mut buf);
        buf.iter()
            .enumerate()
            .map(|(k, c)| c.re / n as f64 + k as f64 * step + t)
            .collect()
    }
}

fn check_grid(n: usize) -> Result<()> {
    if n < 4 || !n.is_power_of_two() {
        return Err(Error::Domain(format!("grid size must be a power of two ≥ 4, got {n}")));
    }
    Ok(())
}

fn grid_multiple(t: f64, step: f64) -> Option<isize> {
    let k = (t / step).round();
    ((t - k * step).abs() <= 1e-12 * step.max(t.abs())).then_some(k as isize)
}

/// `θ(t) = t + Σ a_k sin(2kt + φ_k)` with random phases and `Σ 2k|a_k|`
/// scaled to `min(amplitude, 0.95)`, so `θ′ ≥ 0.05`. Only even frequencies
/// occur, which gives `θ(t+π) = θ(t)+π`.
pub fn random_odd_lift(seed: u64, modes: usize, amplitude: f64) -> Result<OddLift> {
    random_odd_lift_on(GRID, seed, modes, amplitude)
}

pub fn random_odd_lift_on(n: usize, seed: u64, modes: usize, amplitude: f64) -> Result<OddLift> {
    if modes == 0 || !(amplitude >= 0.0) {
        return Err(Error::Domain(format!(
            "need modes ≥ 1 and amplitude ≥ 0, got modes={modes}, amplitude={amplitude}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let raw: Vec<(f64, f64)> = (1..=modes)
        .map(|_| (rng.random_range(-1.0..1.0), rng.random_range(0.0..TAU)))
        .collect();
    let slope: f64 = raw
        .iter()
        .enumerate()
        .map(|(k, (a, _))| 2.0 * (k + 1) as f64 * a.abs())
        .sum();
    let scale = if slope > 0.0 { amplitude.min(0.95) / slope } else { 0.0 };
    let terms: Vec<(f64, f64, f64)> = raw
        .iter()
        .enumerate()
        .map(|(k, &(a, phi))| (2.0 * (k + 1) as f64, a * scale, phi))
        .collect();
    OddLift::from_fn(n, |t| {
        t + terms.iter().map(|&(w, a, phi)| a * (w * t + phi).sin()).sum::<f64>()
    })
}

/// Coefficients `c_n` of `e^{iθ}` in FFT order (index `n mod N`).
pub fn fourier_coefficients(lift: &OddLift) -> Vec<Complex64> {
    let n = lift.len();
    let mut buf: Vec<Complex64> = lift.samples.iter().map(|&th| Complex64::from_polar(1.0, th)).collect();
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);
    for c in &mut buf {
        *c /= n as f64;
    }
    buf
}

/// `S₁ = |c₁|² + |c₋₁|²`.
pub fn fourier_s1(lift: &OddLift) -> f64 {
    let c = fourier_coefficients(lift);
    c[1].norm_sqr() + c[lift.len() - 1].norm_sqr()
}

/// `S_n = |c_n|² + |c₋ₙ|²` for `n = 0..=N/2`; `S₀ = |c₀|²` and the Nyquist
/// coefficient is counted once.
pub fn mode_energies(lift: &OddLift) -> Vec<f64> {
    let c = fourier_coefficients(lift);
    let n = lift.len();
    (0..=n / 2)
        .map(|k| {
            if k == 0 || k == n / 2 {
                c[k].norm_sqr()
            } else {
                c[k].norm_sqr() + c[n - k].norm_sqr()
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Autocorrelation {
    /// `C(t) = (1/2π)∫ cos(θ(s+t) − θ(s−t)) ds`.
    pub c: f64,
    /// `J(t) = (1/2π)∫ sin²((θ(s+t) − θ(s−t))/2) ds`.
    pub j: f64,
}

fn autocorrelation_from(plus: &[f64], minus: &[f64]) -> Autocorrelation {
    let n = plus.len() as f64;
    let (mut c, mut j) = (0.0, 0.0);
    for (p, m) in plus.iter().zip(minus) {
        let d = p - m;
        c += d.cos();
        j += (0.5 * d).sin().powi(2);
    }
    Autocorrelation { c: c / n, j: j / n }
}

/// Trapezoidal quadrature of `C(t)` and `J(t)`.
pub fn autocorrelation(lift: &OddLift, t: f64) -> Autocorrelation {
    autocorrelation_from(&lift.shifted(t), &lift.shifted(-t))
}

fn autocorrelation_at_index(lift: &OddLift, k: isize) -> Autocorrelation {
    let n = lift.len() as isize;
    let plus: Vec<f64> = (0..n).map(|i| lift.at_index(i + k)).collect();
    let minus: Vec<f64> = (0..n).map(|i| lift.at_index(i - k)).collect();
    autocorrelation_from(&plus, &minus)
}

/// `Σ_n S_n cos(2nt)` up to the Nyquist mode.
pub fn autocorrelation_series(energies: &[f64], t: f64) -> f64 {
    energies
        .iter()
        .enumerate()
        .map(|(n, s)| s * (2.0 * n as f64 * t).cos())
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HallCheck {
    /// `∫₀^{π/4} J(τ) cos 2τ dτ`.
    pub lhs: f64,
    /// `(2/π)∫₀^{π/4} τ cos 2τ dτ` by the same quadrature.
    pub rhs: f64,
    /// Closed form `1/4 − 1/(2π)` of the right side.
    pub rhs_exact: f64,
    pub holds: bool,
    /// `max (J(τ) − τ)` over the nodes of `[0, π/2]`.
    pub max_j_excess: f64,
    pub pointwise_holds: bool,
}

fn simpson(values: &[f64], h: f64) -> f64 {
    let last = values.len() - 1;
    let inner: f64 = values[1..last]
        .iter()
        .enumerate()
        .map(|(k, v)| if k % 2 == 0 { 4.0 * v } else { 2.0 * v })
        .sum();
    (values[0] + values[last] + inner) * h / 3.0
}

/// Averaging inequality with the weight `M(τ) = cos 2τ` on `[0, π/4]`, and
/// the pointwise bound `J(τ) ≤ τ`, on nodes that are grid multiples.
pub fn hall_inequality_check(lift: &OddLift, slack: f64) -> Result<HallCheck> {
    let eighth = lift.len() / 8;
    if eighth < HALL_INTERVALS || !eighth.is_multiple_of(HALL_INTERVALS) {
        return Err(Error::Domain(format!(
            "averaging check needs a grid of at least {} samples",
            8 * HALL_INTERVALS
        )));
    }
    let stride = eighth / HALL_INTERVALS;
    let h = stride as f64 * lift.step();
    let nodes = 2 * HALL_INTERVALS;
    let js: Vec<f64> = (0..=nodes)
        .map(|m| autocorrelation_at_index(lift, (m * stride) as isize).j)
        .collect();
    let lhs_vals: Vec<f64> = (0..=HALL_INTERVALS)
        .map(|m| js[m] * (2.0 * m as f64 * h).cos())
        .collect();
    let rhs_vals: Vec<f64> = (0..=HALL_INTERVALS)
        .map(|m| {
            let tau = m as f64 * h;
            2.0 / PI * tau * (2.0 * tau).cos()
        })
        .collect();
    let lhs = simpson(&lhs_vals, h);
    let rhs = simpson(&rhs_vals, h);
    let max_j_excess = js
        .iter()
        .enumerate()
        .map(|(m, j)| j - m as f64 * h)
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(HallCheck {
        lhs,
        rhs,
        rhs_exact: 0.25 - 0.5 / PI,
        holds: lhs <= rhs + slack,
        max_j_excess,
        pointwise_holds: max_j_excess <= 1e-10,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FoldingCheck {
    pub r: u32,
    /// `B = (π/2)/2^r`.
    pub b: f64,
    /// `max_τ L(τ) + L(B−τ)` over grid nodes `0 ≤ τ ≤ B/2`, `L = J − 2τ/π`.
    pub max_sum: f64,
    pub holds: bool,
}

/// Two-point folding inequality `L(τ) + L(B−τ) ≤ 0`.
pub fn folding_check(lift: &OddLift, r: u32, slack: f64) -> Result<FoldingCheck> {
    let quarter = lift.len() / 4;
    let span = quarter >> r;
    if span < 2 || span << r != quarter {
        return Err(Error::Domain(format!("grid too coarse for folding level {r}")));
    }
    let h = lift.step();
    let l = |k: usize| autocorrelation_at_index(lift, k as isize).j - 2.0 * k as f64 * h / PI;
    let max_sum = (0..=span / 2)
        .map(|k| l(k) + l(span - k))
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(FoldingCheck {
        r,
        b: span as f64 * h,
        max_sum,
        holds: max_sum <= slack,
    })
}

/// Mollified four-point collapse: `θ` rises by `π/2` across each `t = jπ/2`
/// along an error-function profile of width `smoothing`.
pub fn extremal_sequence(smoothing: f64) -> Result<OddLift> {
    extremal_sequence_on(GRID, smoothing)
}

pub fn extremal_sequence_on(n: usize, smoothing: f64) -> Result<OddLift> {
    if !(smoothing > 0.0 && smoothing <= 0.1) {
        return Err(Error::Domain(format!(
            "smoothing must lie in (0, 0.1], got {smoothing}"
        )));
    }
    OddLift::from_fn(n, |t| {
        let j = (t / FRAC_PI_2).round();
        FRAC_PI_2 * (j - 1.0 + 0.5 * (1.0 + erf((t - j * FRAC_PI_2) / smoothing)))
    })
}

/// First coefficient `2(1−i)/π` of the exact collapse.
pub fn extremal_a1() -> Complex64 {
    Complex64::new(2.0, -2.0) / PI
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CentralChain {
    pub r: f64,
    /// `4|q′|² / (|P|²(1−r²)²(1+r²)²)`.
    pub wk: f64,
    /// `4 / (|P|²(1+r²)²)`.
    pub bound: f64,
    /// `|a₁|² + |b₁|² = |P|²(1 + r⁴)`.
    pub coefficient_sum: f64,
    pub wk_le_bound: bool,
    pub coefficient_hypothesis: bool,
    pub below_upper_band: bool,
    pub holds: bool,
}

/// Inequality chain at the center of a centrally symmetric graph with
/// `P(0) = p0`, `q(0) = q0`, `q′(0) = q0_deriv`.
pub fn central_chain_check(p0: Complex64, q0: Complex64, q0_deriv: Complex64, slack: f64) -> Result<CentralChain> {
    let r = q0.norm();
    if !(r < 1.0) {
        return Err(Error::Precondition(format!("|q(0)| must be < 1, got {r}")));
    }
    let r2 = r * r;
    if q0_deriv.norm() > (1.0 - r2) * (1.0 + 1e-12) {
        return Err(Error::Precondition(format!(
            "Schwarz–Pick violated: |q′(0)| = {} > 1 − r² = {}",
            q0_deriv.norm(),
            1.0 - r2
        )));
    }
    let pp = p0.norm_sqr();
    if !(pp > 0.0) {
        return Err(Error::Precondition("P(0) must be nonzero".into()));
    }
    let wk = 4.0 * q0_deriv.norm_sqr() / (pp * (1.0 - r2).powi(2) * (1.0 + r2).powi(2));
    let bound = 4.0 / (pp * (1.0 + r2).powi(2));
    let b1 = q0 * q0 * p0;
    let coefficient_sum = pp + b1.norm_sqr();
    let wk_le_bound = wk <= bound * (1.0 + slack) + slack;
    let coefficient_hypothesis = coefficient_sum >= ODD_COEFFICIENT_BOUND - slack;
    let below_upper_band = wk <= UPPER_BAND + slack;
    Ok(CentralChain {
        r,
        wk,
        bound,
        coefficient_sum,
        wk_le_bound,
        coefficient_hypothesis,
        below_upper_band,
        holds: wk_le_bound && (!coefficient_hypothesis || below_upper_band),
    })
}
