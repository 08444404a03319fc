mod support;

use std::f64::consts::{FRAC_PI_2, PI};

use scherk_hopf::bernstein::{published_y, published_z2, y_polynomial, z2_polynomial};
use scherk_hopf::consts::{LOWER_BAND, UPPER_BAND};
use scherk_hopf::harmonic::{measures4, solve_zero_point, DiskPoint, FourMeasures};
use scherk_hopf::params::ScherkParams;
use scherk_hopf::rational::to_f64;
use scherk_hopf::scalar::{solve_zero, y_value, z_value};
use scherk_hopf::sweep::{run_sweep, summarize, RowStatus, SweepConfig, SweepMode};
use scherk_hopf::weierstrass::wk_scalar;
use support::Lcg;

#[test]
fn root_matches_plain_bisection() {
    let mut rng = Lcg(11);
    let mut checked = 0;
    while checked < 200 {
        let (a, b) = (rng.range(0.2, 1.0), rng.range(0.2, 1.0));
        let p = ScherkParams::from_ab(a, b).unwrap();
        let iv = p.interval();
        if !iv.nonempty || p.is_equality_case() {
            continue;
        }
        let (gl, gr) = (support::g(a, b, iv.left), support::g(a, b, iv.right));
        if !(gl < 0.0 && gr > 0.0) {
            continue;
        }
        let z = solve_zero(&p, 1e-12).unwrap();
        let u = support::bisect(a, b, iv.left, iv.right);
        assert!((z.u - u).abs() < 1e-11, "A={a} B={b}: {} vs {u}", z.u);
        assert!((z.s - support::s(a, b, u)).abs() < 1e-9);
        checked += 1;
    }
}

#[test]
fn reference_root() {
    let p = ScherkParams::from_ab(0.6, 0.95).unwrap();
    let z = solve_zero(&p, 1e-12).unwrap();
    assert!((z.u - 0.5124510570193067).abs() < 1e-12);
    assert!((z.s - 2.469731026310639).abs() < 1e-11);
    let wk = wk_scalar(&p, z.s).unwrap().value;
    assert!((wk - 2.54038817485378).abs() < 1e-11);
    assert!(LOWER_BAND < wk && wk < UPPER_BAND);
}

#[test]
fn measures_match_poisson_quadrature() {
    let mut rng = Lcg(3);
    for _ in 0..60 {
        let r = rng.range(0.0, 0.95);
        let t = rng.range(0.0, 2.0 * PI);
        let alpha = rng.range(0.05, PI - 0.05);
        let m = measures4(DiskPoint::new(r, t).unwrap(), alpha).unwrap();
        let q = support::four_measures(r, t, alpha);
        for k in 0..4 {
            assert!((m.omega[k] - q[k]).abs() < 1e-9, "r={r} t={t} alpha={alpha} k={k}");
        }
    }
}

#[test]
fn zero_point_reproduces_targets_under_quadrature() {
    for (a, b) in [(0.6, 0.95), (0.95, 0.95), (0.9, 0.8), (0.85, 0.99)] {
        let p = ScherkParams::from_ab(a, b).unwrap().with_restricted_angles();
        let zero = solve_zero(&p, 1e-12).unwrap();
        let sol = solve_zero_point(&p, &zero, 1e-10).unwrap();
        let target = FourMeasures::from_uvt(zero.u, zero.v, zero.t);
        let q = support::four_measures(sol.z.r, sol.z.t, p.alpha);
        for k in 0..4 {
            assert!((q[k] - target.omega[k]).abs() < 1e-9, "A={a} B={b} k={k}");
        }
        let scalar = wk_scalar(&p, zero.s).unwrap().value;
        assert!((scalar - sol.wk).abs() < 1e-8);
    }
}

#[test]
fn angle_construction() {
    let p = ScherkParams::from_angles(FRAC_PI_2, PI).unwrap();
    assert_eq!((p.a, p.b), (1.0, 1.0));
    let p = ScherkParams::from_angles(0.6435011, 1.9643394).unwrap();
    assert!((p.a - 0.6).abs() < 1e-6);
    assert!((p.b - 0.9689228051942762).abs() < 1e-9);
}

#[test]
fn certificates_bound_polynomials_on_the_square() {
    let y = published_y();
    let z2 = published_z2();
    let y_min = y.coeffs.iter().flatten().map(to_f64).fold(f64::INFINITY, f64::min);
    let z_min = z2.coeffs.iter().flatten().map(to_f64).fold(f64::INFINITY, f64::min);
    let (yp, zp) = (y_polynomial(), z2_polynomial());
    let mut rng = Lcg(5);
    for _ in 0..10_000 {
        let (t, v) = (rng.next_f64(), rng.next_f64());
        let (a, b) = (1.0 - t, 1.0 - v);
        let yv = y_value(a, b);
        let zv = 2.0 * z_value(a, b);
        assert!((yp.eval_f64(t, v) - yv).abs() < 1e-12);
        assert!((zp.eval_f64(t, v) - zv).abs() < 1e-12);
        assert!(yv >= y_min - 1e-12 && zv >= z_min - 1e-12);
        assert!(yv >= -1e-12 && zv >= -1e-12);
    }
}

#[test]
fn coarse_sweep_in_band() {
    for mode in [SweepMode::Ab, SweepMode::Pq] {
        let rows = run_sweep(&SweepConfig::new(40, mode)).unwrap();
        let s = summarize(&rows);
        assert!(s.ok > 0);
        assert_eq!(s.out_of_band, 0);
        assert_eq!(s.no_sign_change, 0);
        assert!(s.max_route_gap.unwrap() < 1e-8);
        for row in rows.iter().filter(|r| r.status == RowStatus::Ok) {
            assert!(row.margin.unwrap() >= -1e-9);
            assert!(row.master_gap.unwrap() < 1e-8);
        }
    }
}
