//! The scalar function
//!
//! ```text
//! G_{A,B}(U) = B cos(πM(U)) − A cos(πN(U)) − (A+B) cos(πU),
//! M(U) = κ(P − U),   N(U) = ε(U + κ²/(A(A+B))),
//! ```
//!
//! its admissible zero on `[L, R]`, and the barrier argument proving
//! `G′(U)/π ≥ √(2(1+AB))` at that zero.

use std::f64::consts::PI;

use num_traits::One;
use serde::Serialize;

use crate::consts::DEFAULT_SLACK;
use crate::error::{Error, Result};
use crate::params::{ExactParams, ScherkParams};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GValue {
    pub g: f64,
    pub m: f64,
    pub n: f64,
}

/// `M(U)`; may leave `[0, 1/2]` outside the admissible interval.
pub fn m_of(params: &ScherkParams, u: f64) -> f64 {
    params.kappa * (params.m_root - u)
}

pub fn n_of(params: &ScherkParams, u: f64) -> f64 {
    params.epsilon * (u + params.n_offset())
}

pub fn g_eval(params: &ScherkParams, u: f64) -> GValue {
    let m = m_of(params, u);
    let n = n_of(params, u);
    let g = params.b * (PI * m).cos() - params.a * (PI * n).cos() - (params.a + params.b) * (PI * u).cos();
    GValue { g, m, n }
}

/// `S(U) = G′(U)/π = (A+B) sin πU + Bκ sin πM + Aε sin πN`.
pub fn s_eval(params: &ScherkParams, u: f64) -> f64 {
    let GValue { m, n, .. } = g_eval(params, u);
    (params.a + params.b) * (PI * u).sin()
        + params.b * params.kappa * (PI * m).sin()
        + params.a * params.epsilon * (PI * n).sin()
}

/// The admissible zero of `G_{A,B}` with the derived coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScalarZero {
    #[serde(rename = "U")]
    pub u: f64,
    #[serde(rename = "M")]
    pub m: f64,
    #[serde(rename = "N")]
    pub n: f64,
    /// `V = c_p (P − U)`.
    #[serde(rename = "V")]
    pub v: f64,
    /// `T = −d_q (U + κ²/(A(A+B)))`.
    #[serde(rename = "T")]
    pub t: f64,
    #[serde(rename = "S")]
    pub s: f64,
    /// `|G(U)|`.
    pub residual: f64,
}

impl ScalarZero {
    fn at(params: &ScherkParams, u: f64) -> Self {
        let GValue { g, m, n } = g_eval(params, u);
        let (c_p, d_q) = params.signed_cosines();
        Self {
            u,
            m,
            n,
            v: c_p * (params.m_root - u),
            t: -d_q * (u + params.n_offset()),
            s: s_eval(params, u),
            residual: g.abs(),
        }
    }
}

const BISECTION_WIDTH: f64 = 1e-12;
const NEWTON_STEPS: usize = 5;

/// Finds the admissible zero by bisection on `[L, R]` followed by a
/// bracketed Newton polish.
///
/// `G` is increasing on the admissible interval, so a sign change brackets a
/// unique root. `A = B = 1` is returned analytically as `U = 1/2`.
pub fn solve_zero(params: &ScherkParams, tol: f64) -> Result<ScalarZero> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    if params.is_equality_case() {
        return Ok(ScalarZero::at(params, 0.5));
    }
    let iv = params.interval();
    if !iv.nonempty {
        return Err(Error::NotAdmissible {
            a: params.a,
            b: params.b,
            left: iv.left,
            right: iv.right,
        });
    }
    let g = |u: f64| g_eval(params, u).g;
    let (g_left, g_right) = (g(iv.left), g(iv.right));
    let no_sign_change = Error::NoSignChange {
        a: params.a,
        b: params.b,
        g_left,
        g_right,
    };
    if iv.left == iv.right {
        return if g_left.abs() <= tol {
            Ok(ScalarZero::at(params, iv.left))
        } else {
            Err(no_sign_change)
        };
    }
    if g_left > tol || g_right < -tol {
        return Err(no_sign_change);
    }

    let (mut lo, mut hi) = (iv.left, iv.right);
    let mut iterations = 0;
    while hi - lo > BISECTION_WIDTH && iterations < 200 {
        let mid = 0.5 * (lo + hi);
        if g(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    let mut u = 0.5 * (lo + hi);
    for _ in 0..NEWTON_STEPS {
        let gu = g(u);
        if gu == 0.0 {
            break;
        }
        let slope = PI * s_eval(params, u);
        let next = u - gu / slope;
        if !(lo..=hi).contains(&next) || next == u {
            break;
        }
        u = next;
    }

    let zero = ScalarZero::at(params, u);
    if zero.residual > tol * (PI * zero.s).max(1.0) {
        return Err(Error::NonConvergence {
            what: "scalar zero",
            iterations,
            residual: zero.residual,
        });
    }
    Ok(zero)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DerivativeInequality {
    #[serde(rename = "S")]
    pub s: f64,
    pub sigma: f64,
    /// `S − √(2(1+AB))`.
    pub margin: f64,
    pub holds: bool,
}

/// The sharp inequality `S(U) ≥ √(2(1+AB))` at a solved zero.
pub fn derivative_inequality_at(params: &ScherkParams, zero: &ScalarZero, slack: f64) -> DerivativeInequality {
    let sigma = params.sigma();
    let margin = zero.s - sigma;
    DerivativeInequality {
        s: zero.s,
        sigma,
        margin,
        holds: margin >= -slack,
    }
}

pub fn derivative_inequality(params: &ScherkParams, tol: f64) -> Result<DerivativeInequality> {
    let zero = solve_zero(params, tol)?;
    Ok(derivative_inequality_at(params, &zero, DEFAULT_SLACK))
}

/// `H_R(U) = (A+B)(1−U) + BκM(U) + AεN(U)`.
pub fn h_right(params: &ScherkParams, u: f64) -> f64 {
    (params.a + params.b) * (1.0 - u)
        + params.b * params.kappa * m_of(params, u)
        + params.a * params.epsilon * n_of(params, u)
}

/// `H_L(U) = (A+B)U + BκM(U) + AεN(U)`.
pub fn h_left(params: &ScherkParams, u: f64) -> f64 {
    (params.a + params.b) * u + params.b * params.kappa * m_of(params, u) + params.a * params.epsilon * n_of(params, u)
}

/// `H_R − BC(P − U)` in exact arithmetic; only `κ²` and `ε²` enter.
pub fn h_right_identity_exact(ex: &ExactParams, u: &Rational) -> Rational {
    let one = Rational::one();
    let (a, b) = (&ex.a, &ex.b);
    let k2 = &ex.kappa * &ex.kappa;
    let e2 = &ex.epsilon * &ex.epsilon;
    let x = ex.m_root() - u;
    let h_r = (a + b) * (&one - u) + b * &k2 * &x + a * &e2 * (u + ex.n_offset());
    let c = Rational::from_integer(2.into()) + a * b - a * a;
    h_r - b * c * x
}

/// `Y(A,B) = (2+AB−A²)(2+AB−B²) − 2(A+B)`.
pub fn y_value(a: f64, b: f64) -> f64 {
    (2.0 + a * b - a * a) * (2.0 + a * b - b * b) - 2.0 * (a + b)
}

/// `Z(A,B) = C[2(C−A−B) + (A+B)(1−AB)/2] − (5/2)(1−A²)(1+AB)`.
pub fn z_value(a: f64, b: f64) -> f64 {
    let c = 2.0 + a * b - a * a;
    c * (2.0 * (c - a - b) + 0.5 * (a + b) * (1.0 - a * b)) - 2.5 * (1.0 - a * a) * (1.0 + a * b)
}

/// Residuals and booleans of the barrier argument at one parameter pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BarrierReport {
    pub sigma: f64,
    pub c: f64,
    pub x_star: f64,
    pub u_star: f64,
    /// Max of `|H_R − BC(P−U)|` over 20 samples of `[L, R]`.
    pub h_r_identity_residual: f64,
    pub u_star_ge_half: bool,
    pub u_star_below_right: bool,
    /// `G(U*)`, reported only when `U* < R`.
    pub g_at_u_star: Option<f64>,
    /// `2/B − 2(A+B)x* − (π²/2)Bκ²x*²`, the lower bound for `G(U*)`.
    pub g_lower_bound: f64,
    pub g_u_star_nonnegative: bool,
    pub h_right_at_root: f64,
    pub h_left_at_root: f64,
    pub linear_estimates_hold: bool,
    /// `G_{B,A}(1−U) + G_{A,B}(U)` at the root.
    pub swap_residual: f64,
    pub y: f64,
    pub z: f64,
}

pub fn barrier_chain_check(params: &ScherkParams, tol: f64) -> Result<BarrierReport> {
    let zero = solve_zero(params, tol)?;
    let iv = params.interval();
    let (a, b) = (params.a, params.b);
    let sigma = params.sigma();
    let c = params.barrier_c();
    let x_star = sigma / (2.0 * b * c);
    let u_star = params.m_root - x_star;

    let h_r_identity_residual = (0..20)
        .map(|k| {
            let u = iv.left + (iv.right - iv.left) * k as f64 / 19.0;
            (h_right(params, u) - b * c * (params.m_root - u)).abs()
        })
        .fold(0.0, f64::max);

    let u_star_below_right = u_star < iv.right;
    let g_at_u_star = u_star_below_right.then(|| g_eval(params, u_star).g);
    let g_lower_bound = 2.0 / b - 2.0 * (a + b) * x_star - 0.5 * PI * PI * b * params.kappa.powi(2) * x_star * x_star;

    let h_right_at_root = h_right(params, zero.u);
    let h_left_at_root = h_left(params, zero.u);
    let swapped = params.swapped();
    let swap_residual = g_eval(&swapped, 1.0 - zero.u).g + g_eval(params, zero.u).g;

    Ok(BarrierReport {
        sigma,
        c,
        x_star,
        u_star,
        h_r_identity_residual,
        u_star_ge_half: u_star >= 0.5 - 1e-15,
        u_star_below_right,
        g_at_u_star,
        g_lower_bound,
        g_u_star_nonnegative: g_at_u_star.is_none_or(|g| g >= -1e-12),
        h_right_at_root,
        h_left_at_root,
        linear_estimates_hold: h_right_at_root >= 0.5 * sigma - DEFAULT_SLACK
            && h_left_at_root >= 0.5 * sigma - DEFAULT_SLACK,
        swap_residual,
        y: y_value(a, b),
        z: z_value(a, b),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{pythagorean_pairs, threshold_b0};
    use crate::rational::ratio;
    use proptest::prelude::*;

    fn params(a: f64, b: f64) -> ScherkParams {
        ScherkParams::from_ab(a, b).unwrap()
    }

    #[test]
    fn equality_case() {
        let p = params(1.0, 1.0);
        let v = g_eval(&p, 0.5);
        assert_eq!((v.m, v.n), (0.0, 0.0));
        assert!(v.g.abs() < 1e-15);
        assert!((s_eval(&p, 0.5) - 2.0).abs() < 1e-15);
        let z = solve_zero(&p, 1e-12).unwrap();
        assert_eq!(z.u, 0.5);
        let d = derivative_inequality(&p, 1e-12).unwrap();
        assert!(d.margin.abs() < 1e-12 && d.holds);
    }

    #[test]
    fn symmetric_pairs_vanish_at_half() {
        for a in [0.3, 0.7, 0.95, 1.0] {
            let p = params(a, a);
            assert!(g_eval(&p, 0.5).g.abs() < 1e-14);
        }
        // A = B = 0.7 lies below the threshold B₀, so only the formula vanishes there
        assert!(matches!(
            solve_zero(&params(0.7, 0.7), 1e-12),
            Err(Error::NotAdmissible { .. })
        ));
        let z = solve_zero(&params(0.97, 0.97), 1e-12).unwrap();
        assert!((z.u - 0.5).abs() < 1e-12);
    }

    #[test]
    fn reference_values() {
        // 40-digit evaluations of the closed forms
        let p = params(0.6, 0.95);
        assert!((g_eval(&p, 0.5).g + 0.096_698_03).abs() < 1e-8);
        let z = solve_zero(&p, 1e-12).unwrap();
        assert!((z.u - 0.512_451_057_019_306_7).abs() < 1e-12);
        assert!((z.s - 2.469_731_026_310_639).abs() < 1e-10);
        let d = derivative_inequality(&p, 1e-12).unwrap();
        assert!((d.margin - 0.697_726_511_643_704_5).abs() < 1e-10);

        let p = params(0.95, 0.95);
        assert!((s_eval(&p, 0.5) - 2.206_787_444).abs() < 1e-8);
        let d = derivative_inequality(&p, 1e-12).unwrap();
        assert!((d.margin - 0.256_146_523_946_685_6).abs() < 1e-10);
    }

    #[test]
    fn solver_errors() {
        assert!(matches!(
            solve_zero(&params(0.5, 0.5), 1e-12),
            Err(Error::NotAdmissible { .. })
        ));
        assert!(matches!(solve_zero(&params(0.6, 0.95), 0.0), Err(Error::Domain(_))));
    }

    #[test]
    fn barrier_chain_at_reference_points() {
        let r = barrier_chain_check(&params(0.6, 0.95), 1e-12).unwrap();
        assert!(r.h_r_identity_residual < 1e-12);
        assert!(r.u_star_ge_half && r.g_u_star_nonnegative && r.linear_estimates_hold);
        assert!(r.swap_residual.abs() < 1e-12);
        assert!(r.y >= 0.0 && r.z >= 0.0);

        let r = barrier_chain_check(&params(1.0, 1.0), 1e-12).unwrap();
        assert_eq!((r.sigma, r.c, r.x_star, r.u_star), (2.0, 2.0, 0.5, 0.5));
    }

    #[test]
    fn h_right_identity_is_exact() {
        let u = ratio(1, 2);
        for (a, k) in pythagorean_pairs() {
            for (b, e) in pythagorean_pairs() {
                let ex = ExactParams::new(a.clone(), k.clone(), b.clone(), e.clone()).unwrap();
                assert_eq!(h_right_identity_exact(&ex, &u), Rational::from_integer(0.into()));
                assert_eq!(
                    h_right_identity_exact(&ex, &ratio(7, 11)),
                    Rational::from_integer(0.into())
                );
            }
        }
    }

    fn admissible() -> impl Strategy<Value = (f64, f64)> {
        (0.05f64..=1.0, 0.0f64..=1.0).prop_map(|(a, s)| {
            let b0 = threshold_b0(a, ((1.0 - a) * (1.0 + a)).sqrt());
            (a, (b0 + s * (1.0 - b0)).clamp(1e-3, 1.0))
        })
    }

    proptest! {
        #[test]
        fn g_is_increasing_on_the_interval((a, b) in admissible(), s in 0.0f64..1.0, w in 0.0f64..1.0) {
            let p = params(a, b);
            let iv = p.interval();
            prop_assume!(iv.nonempty && iv.right - iv.left > 1e-9);
            let u1 = iv.left + s * (iv.right - iv.left);
            let u2 = u1 + w.max(1e-3) * (iv.right - u1);
            prop_assume!(u2 > u1 + 1e-9);
            prop_assert!(g_eval(&p, u1).g < g_eval(&p, u2).g);
        }

        #[test]
        fn solved_root_is_bracketed((a, b) in admissible()) {
            let p = params(a, b);
            if let Ok(z) = solve_zero(&p, 1e-12) {
                let iv = p.interval();
                prop_assert!(iv.left <= z.u && z.u <= iv.right);
                prop_assert!(z.m >= -1e-12 && z.m <= 0.5 + 1e-12);
                prop_assert!(z.n >= -1e-12 && z.n <= 0.5 + 1e-12);
                prop_assert!((z.v.abs() - z.m).abs() < 1e-14 && (z.t.abs() - z.n).abs() < 1e-14);
                prop_assert!(derivative_inequality_at(&p, &z, 1e-9).holds);
            }
        }

        #[test]
        fn derivative_matches_difference_quotient((a, b) in admissible(), u in 0.05f64..0.95) {
            let p = params(a, b);
            let h = 1e-5;
            let fd = (g_eval(&p, u + h).g - g_eval(&p, u - h).g) / (2.0 * h);
            let exact = PI * s_eval(&p, u);
            prop_assert!((fd - exact).abs() <= 1e-7 * exact.abs().max(1.0));
        }

        #[test]
        fn swap_symmetry((a, b) in admissible()) {
            let p = params(a, b);
            if let Ok(z) = solve_zero(&p, 1e-12) {
                let q = p.swapped();
                prop_assert!((g_eval(&q, 1.0 - z.u).g + g_eval(&p, z.u).g).abs() < 1e-12);
                let zs = solve_zero(&q, 1e-12).unwrap();
                prop_assert!((zs.u - (1.0 - z.u)).abs() < 2e-12);
            }
        }
    }
}
