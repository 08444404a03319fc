//! Five-point Laplacians of `log(W²|K|)` and `log|K|` for disk automorphisms
//! as Gauss maps, with the observed convergence order.

use num_complex::Complex64;
use scherk_hopf::weierstrass::{log_subharmonicity_check, richardson_pair, GaussAutomorphism};

fn main() -> scherk_hopf::Result<()> {
    let g = GaussAutomorphism::new(Complex64::new(0.3, -0.4), 0.7)?;
    let z = Complex64::new(0.2, 0.5);
    println!(
        "{:>8} {:>16} {:>16} {:>12} {:>12}",
        "h", "lap fd", "lap exact", "rel err", "rel err K"
    );
    for h in [1e-2, 5e-3, 1e-3, 5e-4] {
        let c = log_subharmonicity_check(&g, z, h)?;
        println!(
            "{h:>8} {:>16.10} {:>16.10} {:>12.3e} {:>12.3e}",
            c.lap_fd,
            c.lap_exact,
            c.relative_error(),
            c.relative_error_k()
        );
    }
    let r = richardson_pair(&g, z, 1e-3)?;
    println!("observed order {:.4}", r.order);
    Ok(())
}
