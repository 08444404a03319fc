//! The symmetric corner `A = B = 1`, where the bound `π²/2` is attained.

use scherk_hopf::consts::UPPER_BAND;
use scherk_hopf::harmonic::{phase_param, solve_zero_point};
use scherk_hopf::params::ScherkParams;
use scherk_hopf::scalar::{derivative_inequality, solve_zero};
use scherk_hopf::weierstrass::wk_scalar;

fn main() -> scherk_hopf::Result<()> {
    let p = ScherkParams::from_ab(1.0, 1.0)?.with_restricted_angles();
    let zero = solve_zero(&p, 1e-12)?;
    let d = derivative_inequality(&p, 1e-12)?;
    let wk = wk_scalar(&p, zero.s)?;
    println!("U = {}, S = {}, sqrt(2(1+AB)) = {}", zero.u, zero.s, d.sigma);
    println!("W^2|K| = {:.15} (pi^2/2 = {:.15})", wk.value, UPPER_BAND);

    // at AB = 1 the phase degenerates; the zero point sits at the origin
    println!(
        "phase: {}",
        phase_param(&p)
            .map(|_| "defined".to_string())
            .unwrap_or_else(|e| e.to_string())
    );
    let sol = solve_zero_point(&p, &zero, 1e-10)?;
    println!("zero point r = {}, method = {:?}", sol.z.r, sol.method);
    Ok(())
}
