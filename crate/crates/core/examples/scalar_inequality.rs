//! Scalar zero of `G_{A,B}` on the admissible interval and the derivative
//! inequality `S ≥ √(2(1+AB))` at a few parameter pairs.

use scherk_hopf::params::ScherkParams;
use scherk_hopf::scalar::{barrier_chain_check, derivative_inequality_at, solve_zero};
use scherk_hopf::Error;

fn main() -> scherk_hopf::Result<()> {
    println!(
        "{:>5} {:>5} {:>10} {:>10} {:>10} {:>10}",
        "A", "B", "L", "R", "U", "margin"
    );
    for (a, b) in [(0.6, 0.95), (0.8, 0.9), (0.95, 0.95), (0.99, 0.7), (0.5, 0.5)] {
        let p = ScherkParams::from_ab(a, b)?;
        let iv = p.interval();
        match solve_zero(&p, 1e-12) {
            Ok(zero) => {
                let d = derivative_inequality_at(&p, &zero, 1e-9);
                println!(
                    "{a:>5} {b:>5} {:>10.6} {:>10.6} {:>10.6} {:>10.6}",
                    iv.left, iv.right, zero.u, d.margin
                );
            }
            Err(Error::NotAdmissible { .. }) => {
                println!("{a:>5} {b:>5} {:>10.6} {:>10.6}   empty interval", iv.left, iv.right)
            }
            Err(e) => return Err(e),
        }
    }

    let rep = barrier_chain_check(&ScherkParams::from_ab(0.9, 0.97)?, 1e-12)?;
    println!(
        "barrier at (0.9, 0.97): U* = {:.6}, G(U*) = {:?}, lower bound {:.6}, Y = {:.6}, Z = {:.6}",
        rep.u_star, rep.g_at_u_star, rep.g_lower_bound, rep.y, rep.z
    );
    Ok(())
}
