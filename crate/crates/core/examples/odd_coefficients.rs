//! First Fourier coefficient of odd circle lifts against the sharp bound `8/π²`.

use scherk_hopf::consts::ODD_COEFFICIENT_BOUND;
use scherk_hopf::oddmap::{
    extremal_sequence, folding_check, fourier_s1, hall_inequality_check, random_odd_lift, OddLift, GRID,
};

fn main() -> scherk_hopf::Result<()> {
    let identity = OddLift::identity(GRID)?;
    println!("identity: S1 = {:.12}", fourier_s1(&identity));

    let mut min_s1 = f64::INFINITY;
    for seed in 0..200 {
        let lift = random_odd_lift(seed, 1 + (seed as usize) % 8, 0.9)?;
        min_s1 = min_s1.min(fourier_s1(&lift));
    }
    println!("200 random lifts: min S1 = {min_s1:.12}, bound 8/pi^2 = {ODD_COEFFICIENT_BOUND:.12}");

    for w in [0.1, 0.01, 0.001] {
        let s1 = fourier_s1(&extremal_sequence(w)?);
        println!(
            "four-point collapse, smoothing {w}: S1 - 8/pi^2 = {:.3e}",
            s1 - ODD_COEFFICIENT_BOUND
        );
    }

    let lift = random_odd_lift(42, 5, 0.8)?;
    let hall = hall_inequality_check(&lift, 1e-9)?;
    println!(
        "averaging: {:.12} <= {:.12}, max J(tau) - tau = {:.2e}",
        hall.lhs, hall.rhs, hall.max_j_excess
    );
    for r in 0..=3 {
        let f = folding_check(&lift, r, 1e-9)?;
        println!("folding B = {:.6}: max L(tau) + L(B - tau) = {:.3e}", f.b, f.max_sum);
    }
    Ok(())
}
