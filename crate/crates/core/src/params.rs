//! Parameter algebra of the Scherk comparison family.
//!
//! A pair `(A, B)` in `(0, 1]²` fixes `κ = √(1−A²)`, `ε = √(1−B²)`, `μ = √(AB)`,
//! the arc parameter `α` with `tan²(α/2) = A/B`, and the admissible interval
//! `[L(A,B), R(A,B)]` for the scalar zero. Angle data `(p, q)` is optional and
//! only needed by the geometric pipeline, which uses the signed cosines
//! `c_p = cos p` and `d_q = cos(q − p)`.

use std::f64::consts::{FRAC_PI_2, PI};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Angle description of a Scherk pair: `A = sin p`, `B = sin(q − p)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AngleData {
    pub p: f64,
    pub q: f64,
    /// `cos p`, signed.
    pub c_p: f64,
    /// `cos(q − p)`, signed.
    pub d_q: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScherkParams {
    pub a: f64,
    pub b: f64,
    pub kappa: f64,
    pub epsilon: f64,
    /// `μ = √(AB)`.
    pub mu: f64,
    /// `P(A,B) = (1 + AB) / (B(A + B))`, the zero of `M(U) = κ(P − U)`.
    pub m_root: f64,
    /// Arc parameter with `tan²(α/2) = A/B`, in `(0, π)`.
    pub alpha: f64,
    /// `h = α/2`.
    pub h: f64,
    pub angles: Option<AngleData>,
}

impl ScherkParams {
    /// Scalar-side constructor; accepts the whole square `(0, 1]²`.
    pub fn from_ab(a: f64, b: f64) -> Result<Self> {
        check_unit(a, "A")?;
        check_unit(b, "B")?;
        let kappa = ((1.0 - a) * (1.0 + a)).sqrt();
        let epsilon = ((1.0 - b) * (1.0 + b)).sqrt();
        Ok(Self::assemble(a, b, kappa, epsilon, None))
    }

    /// Builds the parameters from the angles `0 < p < q ≤ π`.
    ///
    /// The closed end `q = π` admits the corner `p = π/2, q = π`, i.e. `A = B = 1`.
    ///
    /// `κ = |cos p|` and `ε = |cos(q − p)|`; the signed cosines are kept in
    /// [`AngleData`]. The geometric pipeline further requires the restricted
    /// convention `p ≤ π/2`, `q − p ≤ π/2` (see [`ScherkParams::is_restricted`]).
    pub fn from_angles(p: f64, q: f64) -> Result<Self> {
        if !(p.is_finite() && q.is_finite()) || !(0.0 < p && p < q && q <= PI) {
            return Err(Error::Domain(format!(
                "angles must satisfy 0 < p < q ≤ π, got p={p}, q={q}"
            )));
        }
        let d = q - p;
        let (a, c_p) = (p.sin(), p.cos());
        let (b, d_q) = (d.sin(), d.cos());
        let angles = AngleData { p, q, c_p, d_q };
        Ok(Self::assemble(
            a.min(1.0),
            b.min(1.0),
            c_p.abs(),
            d_q.abs(),
            Some(angles),
        ))
    }

    /// Attaches the restricted-convention angles `p = asin A`, `q = p + asin B`,
    /// so that `c_p = κ` and `d_q = ε` exactly.
    pub fn with_restricted_angles(mut self) -> Self {
        let p = self.a.asin();
        let q = p + self.b.asin();
        self.angles = Some(AngleData {
            p,
            q,
            c_p: self.kappa,
            d_q: self.epsilon,
        });
        self
    }

    fn assemble(a: f64, b: f64, kappa: f64, epsilon: f64, angles: Option<AngleData>) -> Self {
        let alpha = 2.0 * (a / b).sqrt().atan();
        Self {
            a,
            b,
            kappa,
            epsilon,
            mu: (a * b).sqrt(),
            m_root: (1.0 + a * b) / (b * (a + b)),
            alpha,
            h: 0.5 * alpha,
            angles,
        }
    }

    /// The pair with `A` and `B` interchanged (no angle data).
    pub fn swapped(&self) -> Self {
        Self::assemble(self.b, self.a, self.epsilon, self.kappa, None)
    }

    /// `true` when `A = B = 1`, where the admissible interval collapses to `{1/2}`.
    pub fn is_equality_case(&self) -> bool {
        self.a == 1.0 && self.b == 1.0
    }

    /// `κ²/(A(A+B))`, the offset in `N(U) = ε(U + κ²/(A(A+B)))`.
    pub fn n_offset(&self) -> f64 {
        self.kappa * self.kappa / (self.a * (self.a + self.b))
    }

    /// `σ = √(2(1 + AB))`.
    pub fn sigma(&self) -> f64 {
        (2.0 * (1.0 + self.a * self.b)).sqrt()
    }

    /// `C = 2 + AB − A²`.
    pub fn barrier_c(&self) -> f64 {
        2.0 + self.a * self.b - self.a * self.a
    }

    /// Signed cosines `(c_p, d_q)`; without angle data the restricted
    /// convention `(κ, ε)` is used.
    pub fn signed_cosines(&self) -> (f64, f64) {
        match self.angles {
            Some(ang) => (ang.c_p, ang.d_q),
            None => (self.kappa, self.epsilon),
        }
    }

    /// Restricted-angle convention: both signed cosines nonnegative.
    pub fn is_restricted(&self) -> bool {
        let (c_p, d_q) = self.signed_cosines();
        c_p >= 0.0 && d_q >= 0.0
    }

    pub(crate) fn require_restricted(&self) -> Result<()> {
        if self.is_restricted() {
            Ok(())
        } else {
            Err(Error::Domain(
                "geometric pipeline requires p ≤ π/2 and q − p ≤ π/2".into(),
            ))
        }
    }

    pub fn interval(&self) -> AdmissibleInterval {
        admissible_interval(self)
    }
}

fn check_unit(x: f64, name: &str) -> Result<()> {
    if x.is_finite() && x > 0.0 && x <= 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must lie in (0, 1], got {x}")))
    }
}

/// The admissible interval `[L, R]` together with the threshold `B₀(A)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AdmissibleInterval {
    #[serde(rename = "L")]
    pub left: f64,
    #[serde(rename = "R")]
    pub right: f64,
    pub nonempty: bool,
    #[serde(rename = "B0")]
    pub b0: f64,
}

/// `L(A,B) = κ/(1+κ) · (1+AB)/(B(A+B))`.
pub fn left_endpoint(a: f64, b: f64, kappa: f64) -> f64 {
    kappa / (1.0 + kappa) * (1.0 + a * b) / (b * (a + b))
}

/// `R(A,B) = (1 − εκ²/[A(A+B)]) / (1 + ε)`.
pub fn right_endpoint(a: f64, b: f64, kappa: f64, epsilon: f64) -> f64 {
    (1.0 - epsilon * kappa * kappa / (a * (a + b))) / (1.0 + epsilon)
}

/// `B₀(A)`, the positive root of `(1+κ)B² + A(1−κ)B − 2κ`.
pub fn threshold_b0(a: f64, kappa: f64) -> f64 {
    let disc = a * a * (1.0 - kappa) * (1.0 - kappa) + 8.0 * kappa * (1.0 + kappa);
    (-a * (1.0 - kappa) + disc.sqrt()) / (2.0 * (1.0 + kappa))
}

pub fn admissible_interval(params: &ScherkParams) -> AdmissibleInterval {
    let left = left_endpoint(params.a, params.b, params.kappa);
    let right = right_endpoint(params.a, params.b, params.kappa, params.epsilon);
    AdmissibleInterval {
        left,
        right,
        nonempty: left <= right,
        b0: threshold_b0(params.a, params.kappa),
    }
}

/// Residuals of the three assertions of the admissible-domain lemma.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DomainReport {
    /// `1 − R(A,B) − L(B,A)`.
    pub swap_residual: f64,
    pub left_le_right: bool,
    pub left_le_half: bool,
    pub b_ge_b0: bool,
    pub characterizations_agree: bool,
    /// `P − R(A,B)`.
    pub p_minus_r: f64,
    /// `P − R` minus its closed form `ε(Aε+A+B)/(AB(A+B)(1+ε))`.
    pub p_minus_r_residual: f64,
    pub p_minus_r_nonnegative: bool,
    /// `(1+κ)B₀² + A(1−κ)B₀ − 2κ`.
    pub b0_residual: f64,
}

pub fn domain_lemma_checks(params: &ScherkParams) -> DomainReport {
    let ScherkParams {
        a,
        b,
        kappa,
        epsilon,
        m_root,
        ..
    } = *params;
    let iv = admissible_interval(params);
    let swap_residual = 1.0 - iv.right - left_endpoint(b, a, epsilon);
    let left_le_right = iv.left <= iv.right;
    let left_le_half = iv.left <= 0.5;
    let b_ge_b0 = b >= iv.b0;
    let p_minus_r = m_root - iv.right;
    let closed = epsilon * (a * epsilon + a + b) / (a * b * (a + b) * (1.0 + epsilon));
    let b0 = iv.b0;
    DomainReport {
        swap_residual,
        left_le_right,
        left_le_half,
        b_ge_b0,
        characterizations_agree: left_le_right == left_le_half && left_le_half == b_ge_b0,
        p_minus_r,
        p_minus_r_residual: p_minus_r - closed,
        p_minus_r_nonnegative: p_minus_r >= -1e-12,
        b0_residual: (1.0 + kappa) * b0 * b0 + a * (1.0 - kappa) * b0 - 2.0 * kappa,
    }
}

/// Exact parameters on Pythagorean rationals: `A² + κ² = 1`, `B² + ε² = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactParams {
    pub a: Rational,
    pub kappa: Rational,
    pub b: Rational,
    pub epsilon: Rational,
}

impl ExactParams {
    pub fn new(a: Rational, kappa: Rational, b: Rational, epsilon: Rational) -> Result<Self> {
        let one = Rational::one();
        if &a * &a + &kappa * &kappa != one || &b * &b + &epsilon * &epsilon != one {
            return Err(Error::Domain(
                "exact parameters must satisfy A² + κ² = 1 and B² + ε² = 1".into(),
            ));
        }
        let zero = Rational::zero();
        if a <= zero || b <= zero || kappa < zero || epsilon < zero {
            return Err(Error::Domain("exact parameters must be positive".into()));
        }
        Ok(Self { a, kappa, b, epsilon })
    }

    pub fn swapped(&self) -> Self {
        Self {
            a: self.b.clone(),
            kappa: self.epsilon.clone(),
            b: self.a.clone(),
            epsilon: self.kappa.clone(),
        }
    }

    pub fn m_root(&self) -> Rational {
        (Rational::one() + &self.a * &self.b) / (&self.b * (&self.a + &self.b))
    }

    pub fn n_offset(&self) -> Rational {
        &self.kappa * &self.kappa / (&self.a * (&self.a + &self.b))
    }

    pub fn left(&self) -> Rational {
        &self.kappa / (Rational::one() + &self.kappa) * self.m_root()
    }

    pub fn right(&self) -> Rational {
        (Rational::one() - &self.epsilon * self.n_offset()) / (Rational::one() + &self.epsilon)
    }

    pub fn to_float(&self) -> Result<ScherkParams> {
        ScherkParams::from_ab(rational::to_f64(&self.a), rational::to_f64(&self.b))
    }
}

/// Exact residuals of the identities `1 − R(A,B) = L(B,A)` and
/// `P − R = ε(Aε+A+B)/(AB(A+B)(1+ε))`; both must vanish.
pub fn exact_domain_identities(ex: &ExactParams) -> (Rational, Rational) {
    let one = Rational::one();
    let swap = &one - ex.right() - ex.swapped().left();
    let (a, b, e) = (&ex.a, &ex.b, &ex.epsilon);
    let closed = e * (a * e + a + b) / (a * b * (a + b) * (&one + e));
    let pr = ex.m_root() - ex.right() - closed;
    (swap, pr)
}

/// The Pythagorean pairs `(A, κ)` used in exact checks.
pub fn pythagorean_pairs() -> Vec<(Rational, Rational)> {
    use crate::rational::ratio;
    vec![
        (ratio(3, 5), ratio(4, 5)),
        (ratio(4, 5), ratio(3, 5)),
        (ratio(5, 13), ratio(12, 13)),
        (ratio(12, 13), ratio(5, 13)),
        (ratio(8, 17), ratio(15, 17)),
        (ratio(15, 17), ratio(8, 17)),
    ]
}

/// Largest angle accepted by the restricted geometric convention.
pub const RESTRICTED_MAX_ANGLE: f64 = FRAC_PI_2;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use std::f64::consts::FRAC_PI_4;

    fn close(x: f64, y: f64, tol: f64) -> bool {
        (x - y).abs() <= tol
    }

    #[test]
    fn angles_at_the_equality_case() {
        let p = ScherkParams::from_angles(FRAC_PI_2, PI).unwrap();
        assert_eq!(p.a, 1.0);
        assert_eq!(p.b, 1.0);
        assert!(p.kappa < 1e-15 && p.epsilon < 1e-15);
        assert_eq!(p.mu, 1.0);
        assert!(close(p.alpha, FRAC_PI_2, 1e-15));
        assert!(close(p.m_root, 1.0, 1e-15));
    }

    #[test]
    fn symmetric_angles_give_right_angle_arc() {
        let p = ScherkParams::from_angles(FRAC_PI_4, FRAC_PI_2).unwrap();
        assert!(close(p.a, 0.5f64.sqrt(), 1e-15));
        assert!(close(p.b, 0.5f64.sqrt(), 1e-15));
        assert!(close(p.alpha, FRAC_PI_2, 1e-15));
    }

    #[test]
    fn angles_match_high_precision_sines() {
        // sin(0.6435011) and sin(1.9643394 - 0.6435011), 40-digit evaluation
        let p = ScherkParams::from_angles(0.6435011, 1.9643394).unwrap();
        assert!(close(p.a, 0.599_999_992_965_372_5, 1e-12));
        assert!(close(p.b, 0.968_922_805_194_276_2, 1e-12));
        assert!(close(p.a, 0.6, 1e-6));
    }

    #[test]
    fn rejects_bad_angles() {
        assert!(ScherkParams::from_angles(1.0, 0.5).is_err());
        assert!(ScherkParams::from_angles(0.0, 0.5).is_err());
        assert!(ScherkParams::from_angles(1.0, PI + 0.1).is_err());
        assert!(ScherkParams::from_ab(0.0, 0.5).is_err());
        assert!(ScherkParams::from_ab(0.5, 1.5).is_err());
        assert!(ScherkParams::from_ab(f64::NAN, 0.5).is_err());
    }

    #[test]
    fn obtuse_angles_are_flagged_unrestricted() {
        let p = ScherkParams::from_angles(2.0, 2.5).unwrap();
        assert!(p.angles.unwrap().c_p < 0.0);
        assert!(!p.is_restricted());
        assert!(close(p.kappa, 2.0f64.cos().abs(), 1e-15));
        assert!(ScherkParams::from_angles(0.5, 1.2).unwrap().is_restricted());
    }

    #[test]
    fn alpha_satisfies_both_characterizations() {
        for &(a, b) in &[(0.3, 0.9), (1.0, 0.2), (0.6, 0.95)] {
            let p = ScherkParams::from_ab(a, b).unwrap();
            assert!(close((p.alpha / 2.0).tan().powi(2), a / b, 1e-13));
            assert!(close(p.alpha.sin(), 2.0 * p.mu / (a + b), 1e-14));
            assert!(close(p.mu * p.mu, a * b, 1e-15));
        }
    }

    #[test]
    fn interval_at_the_corner() {
        let iv = ScherkParams::from_ab(1.0, 1.0).unwrap().interval();
        assert_eq!((iv.left, iv.right, iv.b0), (0.0, 1.0, 0.0));
        assert!(iv.nonempty);
    }

    #[test]
    fn interval_reference_values() {
        // closed forms evaluated at 40 digits
        let iv = ScherkParams::from_ab(0.5, 0.5).unwrap().interval();
        assert!(close(iv.left, 1.160_254_04, 1e-8));
        assert!(!iv.nonempty);
        assert!(close(iv.b0, 0.945_651_04, 1e-8));

        let iv = ScherkParams::from_ab(0.6, 0.95).unwrap().interval();
        assert!(close(iv.left, 0.473_872_85, 1e-8));
        assert!(close(iv.right, 0.598_299_42, 1e-8));
        assert!(close(iv.b0, 0.910_064_78, 1e-8));
        assert!(iv.nonempty && iv.left <= 0.5 && 0.5 <= iv.right);
    }

    #[test]
    fn domain_checks_at_reference_points() {
        let r = domain_lemma_checks(&ScherkParams::from_ab(1.0, 1.0).unwrap());
        assert_eq!(r.swap_residual, 0.0);
        assert_eq!(r.p_minus_r, 0.0);
        assert!(r.characterizations_agree);

        let r = domain_lemma_checks(&ScherkParams::from_ab(0.6, 0.95).unwrap());
        assert!(r.swap_residual.abs() < 1e-12);
        assert!(r.p_minus_r_residual.abs() < 1e-12);
        assert!(r.characterizations_agree && r.p_minus_r_nonnegative);
        assert!(r.b0_residual.abs() < 1e-12);
    }

    #[test]
    fn exact_identities_vanish_on_pythagorean_parameters() {
        let ex = ExactParams::new(ratio(3, 5), ratio(4, 5), ratio(5, 13), ratio(12, 13)).unwrap();
        let (swap, pr) = exact_domain_identities(&ex);
        assert!(swap.is_zero());
        assert!(pr.is_zero());
        for (a, k) in pythagorean_pairs() {
            for (b, e) in pythagorean_pairs() {
                let ex = ExactParams::new(a.clone(), k.clone(), b.clone(), e.clone()).unwrap();
                let (swap, pr) = exact_domain_identities(&ex);
                assert!(swap.is_zero() && pr.is_zero());
            }
        }
    }

    #[test]
    fn exact_params_reject_non_pythagorean() {
        assert!(ExactParams::new(ratio(1, 2), ratio(1, 2), ratio(3, 5), ratio(4, 5)).is_err());
    }
}
