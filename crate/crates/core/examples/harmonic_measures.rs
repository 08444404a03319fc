//! Harmonic measures of the four boundary arcs and the cross-ratio identity.

use std::f64::consts::PI;

use scherk_hopf::harmonic::{
    arc_measure, cross_ratio_residual, measures4, sin_u_identity_residual, ArcSpec, DiskPoint,
};

fn main() -> scherk_hopf::Result<()> {
    let half_disk = arc_measure(DiskPoint::new(0.5, 0.0)?, ArcSpec::new(0.0, PI / 2.0)?)?;
    println!("measure of the right half circle seen from 1/2: {half_disk:.16}");

    let alpha = PI / 3.0;
    for (r, t) in [(0.0, 0.0), (0.3, 1.0), (0.8, 2.5), (0.98, -0.4)] {
        let z = DiskPoint::new(r, t)?;
        let m = measures4(z, alpha)?;
        println!(
            "z = {r}e^({t}i): omega = [{:.6}, {:.6}, {:.6}, {:.6}] sum {:.1e} off, cross-ratio {:.1e}, sin(pi U) {:.1e}",
            m.omega[0],
            m.omega[1],
            m.omega[2],
            m.omega[3],
            m.sum() - 1.0,
            cross_ratio_residual(z, alpha)?,
            sin_u_identity_residual(z, alpha)?,
        );
    }
    Ok(())
}
