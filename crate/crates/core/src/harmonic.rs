//! Harmonic measures of boundary arcs of the unit disk and the distinguished
//! zero point `z∘` of the four-arc harmonic map.
//!
//! The fixed arcs are `I₁ = (0, α)`, `I₂ = (α, π)`, `I₃ = (π, π+α)` and
//! `I₄ = (π+α, 2π)`. The point `z∘` is characterized by its four harmonic
//! measures, which are prescribed by the scalar zero through
//! `Ω₁ = (U+V)/2`, `Ω₂ = (1−U−T)/2`, `Ω₃ = (U−V)/2`, `Ω₄ = (1−U+T)/2`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::ScherkParams;
use crate::scalar::ScalarZero;
use crate::weierstrass;

/// Largest radius accepted for a solved zero point.
pub const MAX_ZERO_RADIUS: f64 = 0.995;
const MAX_ITERATIONS: usize = 50;

/// A point `r e^{it}` of the open unit disk with `t ∈ [0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiskPoint {
    pub r: f64,
    pub t: f64,
}

impl DiskPoint {
    pub fn new(r: f64, t: f64) -> Result<Self> {
        if !(r.is_finite() && t.is_finite()) || !(0.0..1.0).contains(&r) {
            return Err(Error::Domain(format!("disk point needs 0 ≤ r < 1, got r={r}")));
        }
        Ok(Self {
            r,
            t: t.rem_euclid(TAU),
        })
    }

    pub fn origin() -> Self {
        Self { r: 0.0, t: 0.0 }
    }

    pub fn from_complex(z: Complex64) -> Result<Self> {
        Self::new(z.norm(), z.im.atan2(z.re))
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::from_polar(self.r, self.t)
    }
}

/// Arc of the unit circle centered at `phi` with half-length `s ∈ (0, π)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ArcSpec {
    pub phi: f64,
    pub s: f64,
}

impl ArcSpec {
    pub fn new(phi: f64, s: f64) -> Result<Self> {
        if !(s > 0.0 && s < PI) {
            return Err(Error::Domain(format!("arc half-length must lie in (0, π), got {s}")));
        }
        Ok(Self { phi, s })
    }
}

/// Harmonic measure of `arc` seen from `z`:
/// `cot(πω) = ((1+r²) cos s − 2r cos(t−φ)) / ((1−r²) sin s)`.
pub fn arc_measure(z: DiskPoint, arc: ArcSpec) -> Result<f64> {
    if !(z.r >= 0.0 && z.r < 1.0) {
        return Err(Error::Domain(format!("disk point needs r < 1, got r={}", z.r)));
    }
    if !(arc.s > 0.0 && arc.s < PI) {
        return Err(Error::Domain(format!(
            "arc half-length must lie in (0, π), got {}",
            arc.s
        )));
    }
    let r2 = z.r * z.r;
    let num = (1.0 - r2) * arc.s.sin();
    let den = (1.0 + r2) * arc.s.cos() - 2.0 * z.r * (z.t - arc.phi).cos();
    Ok(num.atan2(den) / PI)
}

/// `πω` and its gradient in Cartesian coordinates `(x, y)` of the point.
fn arc_measure_with_gradient(x: f64, y: f64, arc: ArcSpec) -> (f64, [f64; 2]) {
    let (ss, cs) = arc.s.sin_cos();
    let (sp, cp) = arc.phi.sin_cos();
    let rr = x * x + y * y;
    let num = (1.0 - rr) * ss;
    let den = (1.0 + rr) * cs - 2.0 * (x * cp + y * sp);
    let q = num * num + den * den;
    let d = |dnum: f64, dden: f64| (den * dnum - num * dden) / q;
    let gx = d(-2.0 * x * ss, 2.0 * x * cs - 2.0 * cp);
    let gy = d(-2.0 * y * ss, 2.0 * y * cs - 2.0 * sp);
    (num.atan2(den), [gx, gy])
}

/// The arcs `I₁..I₄` for the parameter `α ∈ (0, π)`.
pub fn fixed_arcs(alpha: f64) -> Result<[ArcSpec; 4]> {
    if !(alpha > 0.0 && alpha < PI) {
        return Err(Error::Domain(format!("α must lie in (0, π), got {alpha}")));
    }
    let h = 0.5 * alpha;
    Ok([
        ArcSpec { phi: h, s: h },
        ArcSpec {
            phi: h + FRAC_PI_2,
            s: FRAC_PI_2 - h,
        },
        ArcSpec { phi: h + PI, s: h },
        ArcSpec {
            phi: h + 3.0 * FRAC_PI_2,
            s: FRAC_PI_2 - h,
        },
    ])
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FourMeasures {
    pub omega: [f64; 4],
    /// `Ω₁ + Ω₃`.
    #[serde(rename = "U")]
    pub u: f64,
    /// `Ω₁ − Ω₃`.
    #[serde(rename = "V")]
    pub v: f64,
    /// `Ω₄ − Ω₂`.
    #[serde(rename = "T")]
    pub t: f64,
}

impl FourMeasures {
    pub fn from_omega(omega: [f64; 4]) -> Self {
        Self {
            omega,
            u: omega[0] + omega[2],
            v: omega[0] - omega[2],
            t: omega[3] - omega[1],
        }
    }

    /// The measures prescribed by the coordinates `(U, V, T)`.
    pub fn from_uvt(u: f64, v: f64, t: f64) -> Self {
        Self {
            omega: [0.5 * (u + v), 0.5 * (1.0 - u - t), 0.5 * (u - v), 0.5 * (1.0 - u + t)],
            u,
            v,
            t,
        }
    }

    pub fn sum(&self) -> f64 {
        self.omega.iter().sum()
    }
}

pub fn measures4(z: DiskPoint, alpha: f64) -> Result<FourMeasures> {
    let arcs = fixed_arcs(alpha)?;
    let mut omega = [0.0; 4];
    for (w, arc) in omega.iter_mut().zip(arcs) {
        *w = arc_measure(z, arc)?;
    }
    Ok(FourMeasures::from_omega(omega))
}

/// The cross-ratio identity `sin πΩ₁ sin πΩ₃ / (sin πΩ₂ sin πΩ₄) = tan²(α/2)`
/// with denominators cleared:
/// `sin πΩ₁ sin πΩ₃ cos²(α/2) − sin πΩ₂ sin πΩ₄ sin²(α/2)`.
pub fn cross_ratio_residual(z: DiskPoint, alpha: f64) -> Result<f64> {
    let m = measures4(z, alpha)?;
    let s = |k: usize| (PI * m.omega[k]).sin();
    let (sin_h, cos_h) = (0.5 * alpha).sin_cos();
    Ok(s(0) * s(2) * cos_h * cos_h - s(1) * s(3) * sin_h * sin_h)
}

/// `sin πU − (1−r⁴) sin α / (|1−z²| |z²−e^{2iα}|)`.
pub fn sin_u_identity_residual(z: DiskPoint, alpha: f64) -> Result<f64> {
    let m = measures4(z, alpha)?;
    let w = z.to_complex().powi(2);
    let rhs = (1.0 - z.r.powi(4)) * alpha.sin()
        / ((Complex64::new(1.0, 0.0) - w).norm() * (w - Complex64::from_polar(1.0, 2.0 * alpha)).norm());
    Ok((PI * m.u).sin() - rhs)
}

/// The automorphism parameter `a` of the Gauss map and its phase.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Phase {
    pub a: Complex64,
    pub delta: f64,
    pub a_mod: f64,
    /// `cos(δ−h) + c_p√B/√((1−AB)(A+B))`.
    pub cos_residual: f64,
    /// `sin(δ−h) + d_q√A/√((1−AB)(A+B))`.
    pub sin_residual: f64,
    /// `|a| − √((1−μ)/(1+μ))`.
    pub modulus_residual: f64,
}

/// `a = (A d_q − B c_p − i√(AB)(c_p + d_q)) / ((1+√(AB))(A+B))`.
pub fn phase_param(params: &ScherkParams) -> Result<Phase> {
    params.require_restricted()?;
    let ab = params.a * params.b;
    if ab >= 1.0 {
        return Err(Error::Degenerate("AB = 1: a = 0 and its phase is undefined".into()));
    }
    let (a, b, mu) = (params.a, params.b, params.mu);
    let (c_p, d_q) = params.signed_cosines();
    let a_param = Complex64::new(a * d_q - b * c_p, -mu * (c_p + d_q)) / ((1.0 + mu) * (a + b));
    let delta = a_param.arg();
    let scale = ((1.0 - ab) * (a + b)).sqrt();
    let a_mod = a_param.norm();
    Ok(Phase {
        a: a_param,
        delta,
        a_mod,
        cos_residual: (delta - params.h).cos() + c_p * b.sqrt() / scale,
        sin_residual: (delta - params.h).sin() + d_q * a.sqrt() / scale,
        modulus_residual: a_mod - ((1.0 - mu) / (1.0 + mu)).sqrt(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveMethod {
    Analytic,
    GaussNewton,
    Mobius,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZeroSolution {
    pub z: DiskPoint,
    pub measures: FourMeasures,
    /// Max deviation of the four measures at `z` from their targets.
    pub measure_residual: f64,
    #[serde(rename = "D0")]
    pub d0: f64,
    pub delta: f64,
    pub a_mod: f64,
    #[serde(rename = "WK")]
    pub wk: f64,
    pub master_lhs: f64,
    /// `|(1−U)c_p + iTA| − |U d_q + iVB|`.
    pub modulus_gap: f64,
    pub iterations: usize,
    pub method: SolveMethod,
}

/// `D∘ = 1 + r² − 2√(1−μ²) r cos(t − δ)`.
pub fn d_circ(z: DiskPoint, mu: f64, delta: f64) -> f64 {
    1.0 + z.r * z.r - 2.0 * (1.0 - mu * mu).max(0.0).sqrt() * z.r * (z.t - delta).cos()
}

/// `sin πU (1 − √(1−μ²) (2r/(1+r²)) cos(t − δ))`.
pub fn master_lhs(u: f64, z: DiskPoint, mu: f64, delta: f64) -> f64 {
    let r = z.r;
    (PI * u).sin() * (1.0 - (1.0 - mu * mu).max(0.0).sqrt() * (2.0 * r / (1.0 + r * r)) * (z.t - delta).cos())
}

fn modulus_gap(params: &ScherkParams, zero: &ScalarZero) -> f64 {
    let (c_p, d_q) = params.signed_cosines();
    let lhs = Complex64::new((1.0 - zero.u) * c_p, zero.t * params.a).norm();
    let rhs = Complex64::new(zero.u * d_q, zero.v * params.b).norm();
    lhs - rhs
}

/// Closed-form preimage of the origin under the Möbius map sending the arc
/// endpoints `1, e^{iα}, −1` to the points that split the circle into arcs of
/// lengths `2πΩ₁, 2πΩ₂, 2πΩ₃`.
pub fn mobius_zero_point(alpha: f64, target: &FourMeasures) -> Result<Complex64> {
    let o = target.omega;
    let eta = [0.0, o[0], o[0] + o[1]].map(|c| Complex64::from_polar(1.0, TAU * c));
    let zeta = [
        Complex64::new(1.0, 0.0),
        Complex64::from_polar(1.0, alpha),
        Complex64::new(-1.0, 0.0),
    ];
    let w = (-eta[0] * (eta[1] - eta[2])) / (-eta[2] * (eta[1] - eta[0]));
    let k1 = zeta[1] - zeta[2];
    let k2 = zeta[1] - zeta[0];
    let den = k1 - w * k2;
    if den.norm() < 1e-300 {
        return Err(Error::Degenerate("Möbius preimage at infinity".into()));
    }
    Ok((zeta[0] * k1 - w * zeta[2] * k2) / den)
}

fn residuals(x: f64, y: f64, arcs: &[ArcSpec; 4], target: &FourMeasures) -> ([f64; 4], [[f64; 2]; 4]) {
    let mut res = [0.0; 4];
    let mut jac = [[0.0; 2]; 4];
    for k in 0..4 {
        let (pw, g) = arc_measure_with_gradient(x, y, arcs[k]);
        res[k] = pw / PI - target.omega[k];
        jac[k] = [g[0] / PI, g[1] / PI];
    }
    (res, jac)
}

fn sq_norm(v: &[f64; 4]) -> f64 {
    v.iter().map(|x| x * x).sum()
}

/// Gauss–Newton on the four measure residuals, started at the origin.
fn gauss_newton(arcs: &[ArcSpec; 4], target: &FourMeasures, tol: f64) -> Option<(Complex64, usize)> {
    let (mut x, mut y) = (0.0, 0.0);
    let (mut res, mut jac) = residuals(x, y, arcs, target);
    for it in 1..=MAX_ITERATIONS {
        let (mut a11, mut a12, mut a22, mut g1, mut g2) = (0.0, 0.0, 0.0, 0.0, 0.0);
        for k in 0..4 {
            a11 += jac[k][0] * jac[k][0];
            a12 += jac[k][0] * jac[k][1];
            a22 += jac[k][1] * jac[k][1];
            g1 += jac[k][0] * res[k];
            g2 += jac[k][1] * res[k];
        }
        let det = a11 * a22 - a12 * a12;
        if !(det.abs() > 0.0) {
            return None;
        }
        let dx = -(a22 * g1 - a12 * g2) / det;
        let dy = -(a11 * g2 - a12 * g1) / det;

        let current = sq_norm(&res);
        let mut lambda = 1.0;
        let mut accepted = None;
        for _ in 0..30 {
            let (mut nx, mut ny) = (x + lambda * dx, y + lambda * dy);
            let nr = nx.hypot(ny);
            if nr > MAX_ZERO_RADIUS {
                nx *= MAX_ZERO_RADIUS / nr;
                ny *= MAX_ZERO_RADIUS / nr;
            }
            let (nres, njac) = residuals(nx, ny, arcs, target);
            if sq_norm(&nres) < current || sq_norm(&nres) == 0.0 {
                accepted = Some((nx, ny, nres, njac));
                break;
            }
            lambda *= 0.5;
        }
        let Some((nx, ny, nres, njac)) = accepted else {
            let max_res = res.iter().fold(0.0f64, |m, r| m.max(r.abs()));
            return (max_res <= tol).then_some((Complex64::new(x, y), it));
        };
        let step = (nx - x).hypot(ny - y);
        (x, y, res, jac) = (nx, ny, nres, njac);
        let max_res = res.iter().fold(0.0f64, |m, r| m.max(r.abs()));
        if max_res <= tol.min(1e-14) || (step < 1e-15 && max_res <= tol) {
            return Some((Complex64::new(x, y), it));
        }
    }
    let max_res = res.iter().fold(0.0f64, |m, r| m.max(r.abs()));
    (max_res <= tol).then_some((Complex64::new(x, y), MAX_ITERATIONS))
}

/// Locates `z∘` from the scalar zero and evaluates the quantities attached to
/// it: `D∘`, the phase `δ`, the master inequality left side and the
/// geometric `W²|K|`.
pub fn solve_zero_point(params: &ScherkParams, zero: &ScalarZero, tol: f64) -> Result<ZeroSolution> {
    params.require_restricted()?;
    let iv = params.interval();
    if !iv.nonempty {
        return Err(Error::NotAdmissible {
            a: params.a,
            b: params.b,
            left: iv.left,
            right: iv.right,
        });
    }
    let target = FourMeasures::from_uvt(zero.u, zero.v, zero.t);
    let gap = modulus_gap(params, zero);

    if params.a * params.b >= 1.0 {
        let z = DiskPoint::origin();
        let measures = measures4(z, params.alpha)?;
        let wk = weierstrass::wk_geometric(z, params, 1.0)?;
        return Ok(ZeroSolution {
            z,
            measure_residual: max_deviation(&measures, &target),
            measures,
            d0: 1.0,
            delta: 0.0,
            a_mod: 0.0,
            wk: wk.value,
            master_lhs: master_lhs(measures.u, z, params.mu, 0.0),
            modulus_gap: gap,
            iterations: 0,
            method: SolveMethod::Analytic,
        });
    }

    let arcs = fixed_arcs(params.alpha)?;
    let (point, iterations, method) = match gauss_newton(&arcs, &target, tol) {
        Some((z, it)) => (z, it, SolveMethod::GaussNewton),
        None => (
            mobius_zero_point(params.alpha, &target)?,
            MAX_ITERATIONS,
            SolveMethod::Mobius,
        ),
    };
    if !(point.norm() <= MAX_ZERO_RADIUS) {
        return Err(Error::NonConvergence {
            what: "zero point",
            iterations,
            residual: point.norm(),
        });
    }
    let z = DiskPoint::from_complex(point)?;
    let measures = measures4(z, params.alpha)?;
    let measure_residual = max_deviation(&measures, &target);
    if !(measure_residual <= tol) {
        return Err(Error::NonConvergence {
            what: "zero point",
            iterations,
            residual: measure_residual,
        });
    }

    let phase = phase_param(params)?;
    let d0 = d_circ(z, params.mu, phase.delta);
    let wk = weierstrass::wk_geometric(z, params, d0)?;
    Ok(ZeroSolution {
        z,
        measures,
        measure_residual,
        d0,
        delta: phase.delta,
        a_mod: phase.a_mod,
        wk: wk.value,
        master_lhs: master_lhs(measures.u, z, params.mu, phase.delta),
        modulus_gap: gap,
        iterations,
        method,
    })
}

fn max_deviation(m: &FourMeasures, target: &FourMeasures) -> f64 {
    m.omega
        .iter()
        .zip(target.omega)
        .fold(0.0, |acc, (x, y)| acc.max((x - y).abs()))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MasterCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// `sin πU (1 − √(1−μ²)(2r/(1+r²)) cos(t∘−δ)) ≥ √(2(1+μ²))/(A+B)`.
pub fn master_inequality_check(sol: &ZeroSolution, params: &ScherkParams, slack: f64) -> MasterCheck {
    let lhs = sol.master_lhs;
    let rhs = params.sigma() / (params.a + params.b);
    MasterCheck {
        lhs,
        rhs,
        holds: lhs >= rhs - slack,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::solve_zero;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_PI_4;

    fn pt(r: f64, t: f64) -> DiskPoint {
        DiskPoint::new(r, t).unwrap()
    }

    /// Composite Simpson rule for the Poisson integral over an arc.
    fn poisson_oracle(z: DiskPoint, arc: ArcSpec) -> f64 {
        let n = 20_000;
        let (a, b) = (arc.phi - arc.s, arc.phi + arc.s);
        let h = (b - a) / n as f64;
        let f = |th: f64| (1.0 - z.r * z.r) / (1.0 - 2.0 * z.r * (th - z.t).cos() + z.r * z.r);
        let mut sum = f(a) + f(b);
        for k in 1..n {
            sum += f(a + k as f64 * h) * if k % 2 == 1 { 4.0 } else { 2.0 };
        }
        sum * h / 3.0 / TAU
    }

    #[test]
    fn origin_sees_normalized_arclength() {
        let w = arc_measure(DiskPoint::origin(), ArcSpec::new(0.3, FRAC_PI_4).unwrap()).unwrap();
        assert!((w - 0.25).abs() < 1e-15);
        let m = measures4(DiskPoint::origin(), FRAC_PI_2).unwrap();
        for w in m.omega {
            assert!((w - 0.25).abs() < 1e-15);
        }
        let m = measures4(DiskPoint::origin(), 1.0).unwrap();
        assert!((m.omega[0] - 1.0 / TAU).abs() < 1e-15);
        assert!((m.omega[1] - (PI - 1.0) / TAU).abs() < 1e-15);
    }

    #[test]
    fn arc_measure_off_center() {
        // adaptive quadrature of the Poisson kernel at 1e-14
        let w = arc_measure(pt(0.5, 0.0), ArcSpec::new(0.0, FRAC_PI_4).unwrap()).unwrap();
        assert!((w - 0.568_611_667_367_830_7).abs() < 1e-12);
    }

    #[test]
    fn measures_against_quadrature() {
        let z = pt(0.3, 1.0);
        let m = measures4(z, PI / 3.0).unwrap();
        assert!((m.sum() - 1.0).abs() < 1e-12);
        for (w, arc) in m.omega.iter().zip(fixed_arcs(PI / 3.0).unwrap()) {
            assert!((w - poisson_oracle(z, arc)).abs() < 1e-9);
        }
        assert!((m.omega[0] - 0.266_244_792_714_584_2).abs() < 1e-12);
    }

    #[test]
    fn rejects_boundary_points() {
        assert!(DiskPoint::new(1.0, 0.0).is_err());
        assert!(arc_measure(DiskPoint { r: 1.0, t: 0.0 }, ArcSpec { phi: 0.0, s: 1.0 }).is_err());
        assert!(ArcSpec::new(0.0, PI).is_err());
        assert!(fixed_arcs(0.0).is_err());
    }

    #[test]
    fn identities_at_fixed_points() {
        assert!(cross_ratio_residual(DiskPoint::origin(), PI / 3.0).unwrap().abs() < 1e-15);
        assert!(cross_ratio_residual(pt(0.7, 2.5), 1.1).unwrap().abs() < 1e-10);
        assert!(sin_u_identity_residual(pt(0.5, 0.3), FRAC_PI_2).unwrap().abs() < 1e-10);
        assert!(sin_u_identity_residual(pt(0.9, 4.0), 0.4).unwrap().abs() < 1e-9);
    }

    #[test]
    fn gradient_matches_difference_quotient() {
        let arc = ArcSpec::new(0.4, 0.9).unwrap();
        let (x, y, h) = (0.3, -0.2, 1e-6);
        let (_, g) = arc_measure_with_gradient(x, y, arc);
        let fx = (arc_measure_with_gradient(x + h, y, arc).0 - arc_measure_with_gradient(x - h, y, arc).0) / (2.0 * h);
        let fy = (arc_measure_with_gradient(x, y + h, arc).0 - arc_measure_with_gradient(x, y - h, arc).0) / (2.0 * h);
        assert!((g[0] - fx).abs() < 1e-8 && (g[1] - fy).abs() < 1e-8);
    }

    #[test]
    fn phase_of_symmetric_pair() {
        let p = ScherkParams::from_ab(0.8, 0.8).unwrap();
        let ph = phase_param(&p).unwrap();
        assert!(ph.a.re.abs() < 1e-16);
        assert!((ph.delta + FRAC_PI_2).abs() < 1e-15);
        let expected = -p.mu * 2.0 * p.kappa / ((1.0 + p.mu) * 2.0 * p.a);
        assert!((ph.a.im - expected).abs() < 1e-15);
        assert!(phase_param(&ScherkParams::from_ab(1.0, 1.0).unwrap()).is_err());
    }

    #[test]
    fn phase_modulus() {
        let ph = phase_param(&ScherkParams::from_ab(0.6, 0.95).unwrap()).unwrap();
        assert!(ph.modulus_residual.abs() < 1e-12);
        assert!(ph.cos_residual.abs() < 1e-12 && ph.sin_residual.abs() < 1e-12);
    }

    #[test]
    fn equality_case_zero_point() {
        let p = ScherkParams::from_ab(1.0, 1.0).unwrap();
        let zero = solve_zero(&p, 1e-12).unwrap();
        let sol = solve_zero_point(&p, &zero, 1e-10).unwrap();
        assert_eq!(sol.z.r, 0.0);
        assert_eq!(sol.d0, 1.0);
        assert!((sol.master_lhs - 1.0).abs() < 1e-15);
        let chk = master_inequality_check(&sol, &p, 1e-9);
        assert!((chk.rhs - 1.0).abs() < 1e-15 && chk.holds);
    }

    #[test]
    fn zero_point_reproduces_targets() {
        for (a, b) in [(0.6, 0.95), (0.95, 0.95), (0.9, 0.7)] {
            let p = ScherkParams::from_ab(a, b).unwrap();
            let zero = solve_zero(&p, 1e-12).unwrap();
            let sol = solve_zero_point(&p, &zero, 1e-10).unwrap();
            assert_eq!(sol.method, SolveMethod::GaussNewton);
            assert!((sol.measures.v - zero.v).abs() < 1e-9);
            assert!(sol.modulus_gap.abs() < 1e-9);
            assert!(((a + b) * sol.master_lhs - zero.s).abs() < 1e-8);
            assert!(master_inequality_check(&sol, &p, 1e-9).holds);
            let mob = mobius_zero_point(p.alpha, &FourMeasures::from_uvt(zero.u, zero.v, zero.t)).unwrap();
            assert!((mob - sol.z.to_complex()).norm() < 1e-9);
        }
    }

    #[test]
    fn symmetric_pair_has_balanced_coordinates() {
        let p = ScherkParams::from_ab(0.95, 0.95).unwrap();
        let zero = solve_zero(&p, 1e-12).unwrap();
        let sol = solve_zero_point(&p, &zero, 1e-10).unwrap();
        assert!((sol.measures.u - 0.5).abs() < 1e-10);
        assert!((sol.measures.v.abs() - sol.measures.t.abs()).abs() < 1e-10);
    }

    proptest! {
        #[test]
        fn cross_ratio_holds_everywhere(r in 0.0f64..0.99, t in 0.0f64..TAU, alpha in 0.05f64..3.09) {
            prop_assert!(cross_ratio_residual(pt(r, t), alpha).unwrap().abs() < 1e-10);
        }

        #[test]
        fn measures_partition_unity(r in 0.0f64..0.99, t in 0.0f64..TAU, alpha in 0.05f64..3.09) {
            let m = measures4(pt(r, t), alpha).unwrap();
            prop_assert!((m.sum() - 1.0).abs() < 1e-12);
            prop_assert!(m.omega.iter().all(|w| *w > 0.0 && *w < 1.0));
            prop_assert!(m.v.abs() <= m.u + 1e-15);
            prop_assert!(m.t.abs() <= 1.0 - m.u + 1e-15);
        }

        #[test]
        fn phase_is_on_the_unit_circle(a in 0.05f64..1.0, b in 0.05f64..0.999) {
            let ph = phase_param(&ScherkParams::from_ab(a, b).unwrap()).unwrap();
            prop_assert!(ph.cos_residual.abs() < 1e-12 && ph.sin_residual.abs() < 1e-12);
            prop_assert!(ph.modulus_residual.abs() < 1e-12);
        }
    }
}
