//! Exact Bernstein certificates for the two polynomial inequalities on the
//! unit square, plus a generic positivity check by degree elevation.

use scherk_hopf::bernstein::{certify_nonneg, verify_appendix_certificates, BiPoly, Positivity};
use scherk_hopf::rational::{ratio, to_fraction_string};

fn print(name: &str, rows: &[Vec<scherk_hopf::rational::Rational>]) {
    println!("{name}:");
    for row in rows {
        let cells: Vec<String> = row.iter().map(to_fraction_string).collect();
        println!("  {}", cells.join("  "));
    }
}

fn main() -> scherk_hopf::Result<()> {
    let report = verify_appendix_certificates()?;
    print("Y(1-t, 1-v), bidegree (3, 3)", &report.y.coeffs);
    print("2Z(1-t, 1-v), bidegree (4, 4)", &report.z2.coeffs);
    println!("all coefficients nonnegative: {}", report.passed());

    // (t - 1/2)^2 touches zero inside the square, so no elevation certifies it
    let t = BiPoly::t();
    let shifted = t.sub(&BiPoly::constant(ratio(1, 2)));
    let touching = shifted.mul(&shifted);
    let lifted = touching.add(&BiPoly::constant(ratio(1, 16)));
    for (name, poly) in [("(t-1/2)^2", &touching), ("(t-1/2)^2 + 1/16", &lifted)] {
        match certify_nonneg(poly, 12) {
            Positivity::Certificate(form) => println!("{name}: certified at bidegree ({}, {})", form.m, form.n),
            Positivity::Inconclusive { best_min, m, n } => {
                println!(
                    "{name}: inconclusive, best min coefficient {} at ({m}, {n})",
                    to_fraction_string(&best_min)
                )
            }
        }
    }
    Ok(())
}
