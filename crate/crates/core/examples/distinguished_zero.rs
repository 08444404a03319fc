//! Locates the zero point `z∘` with prescribed arc measures and compares the
//! geometric and scalar expressions for `W²|K|`.

use scherk_hopf::harmonic::{master_inequality_check, solve_zero_point};
use scherk_hopf::params::ScherkParams;
use scherk_hopf::scalar::solve_zero;
use scherk_hopf::weierstrass::{wk_scalar, zero_control};

fn main() -> scherk_hopf::Result<()> {
    for (a, b) in [(0.6, 0.95), (0.95, 0.95), (0.9, 0.8), (0.85, 0.99)] {
        let p = ScherkParams::from_ab(a, b)?.with_restricted_angles();
        let zero = solve_zero(&p, 1e-12)?;
        let sol = solve_zero_point(&p, &zero, 1e-10)?;
        let scalar = wk_scalar(&p, zero.s)?.value;
        let master = master_inequality_check(&sol, &p, 1e-9);
        let control = zero_control(&sol, &p, 1e-9);
        println!(
            "A={a} B={b}: z = {:.6}e^({:.6}i) via {:?}, WK geometric {:.12} scalar {:.12}, master {:.6} >= {:.6}, below pi^2/2: {}",
            sol.z.r, sol.z.t, sol.method, sol.wk, scalar, master.lhs, master.rhs, control.wk_below_upper
        );
    }
    Ok(())
}
