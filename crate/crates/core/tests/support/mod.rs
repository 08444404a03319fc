//! Reference computations that share no code with the library: direct
//! quadrature of the Poisson kernel and a from-scratch bisection of `G`.

#![allow(dead_code)]

use std::f64::consts::PI;

/// Poisson kernel `(1−r²)/(2π(1 − 2r cos(s−t) + r²))`.
pub fn poisson(r: f64, t: f64, s: f64) -> f64 {
    (1.0 - r * r) / (2.0 * PI * (1.0 - 2.0 * r * (s - t).cos() + r * r))
}

fn simpson(a: f64, fa: f64, fm: f64, b: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adaptive(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    fa: f64,
    m: f64,
    fm: f64,
    b: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, fa, flm, m, fm);
    let right = simpson(m, fm, frm, b, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    adaptive(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1)
        + adaptive(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1)
}

/// Adaptive Simpson quadrature of `f` over `[a, b]`.
pub fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    // split first so narrow kernel peaks are never missed
    let pieces = 64;
    let h = (b - a) / pieces as f64;
    (0..pieces)
        .map(|k| {
            let (x0, x1) = (a + k as f64 * h, a + (k + 1) as f64 * h);
            let xm = 0.5 * (x0 + x1);
            let (f0, fm, f1) = (f(x0), f(xm), f(x1));
            let whole = simpson(x0, f0, fm, x1, f1);
            adaptive(f, x0, f0, xm, fm, x1, f1, whole, tol / pieces as f64, 24)
        })
        .sum()
}

/// Harmonic measure at `r e^{it}` of the arc from `s0` to `s1` (counterclockwise).
pub fn arc_measure(r: f64, t: f64, s0: f64, s1: f64) -> f64 {
    integrate(&|s| poisson(r, t, s), s0, s1, 1e-11)
}

/// Measures of `(0, α)`, `(α, π)`, `(π, π+α)`, `(π+α, 2π)`.
pub fn four_measures(r: f64, t: f64, alpha: f64) -> [f64; 4] {
    [
        arc_measure(r, t, 0.0, alpha),
        arc_measure(r, t, alpha, PI),
        arc_measure(r, t, PI, PI + alpha),
        arc_measure(r, t, PI + alpha, 2.0 * PI),
    ]
}

/// `G_{A,B}(U)` from its defining formula.
pub fn g(a: f64, b: f64, u: f64) -> f64 {
    let kappa = (1.0 - a * a).sqrt();
    let eps = (1.0 - b * b).sqrt();
    let m = kappa * ((1.0 + a * b) / (b * (a + b)) - u);
    let n = eps * (u + kappa * kappa / (a * (a + b)));
    b * (PI * m).cos() - a * (PI * n).cos() - (a + b) * (PI * u).cos()
}

/// `S = G′/π` from its defining formula.
pub fn s(a: f64, b: f64, u: f64) -> f64 {
    let kappa = (1.0 - a * a).sqrt();
    let eps = (1.0 - b * b).sqrt();
    let m = kappa * ((1.0 + a * b) / (b * (a + b)) - u);
    let n = eps * (u + kappa * kappa / (a * (a + b)));
    (a + b) * (PI * u).sin() + b * kappa * (PI * m).sin() + a * eps * (PI * n).sin()
}

/// Plain bisection of `G` on `[lo, hi]` down to width `1e-14`.
pub fn bisect(a: f64, b: f64, mut lo: f64, mut hi: f64) -> f64 {
    while hi - lo > 1e-14 {
        let mid = 0.5 * (lo + hi);
        if g(a, b, mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Simple deterministic generator for test inputs.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next_f64(&mut self) -> f64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (self.0 >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}
