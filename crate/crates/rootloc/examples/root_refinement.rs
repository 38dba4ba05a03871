//! The oracle side of the crate: simultaneous Ehrlich-Aberth refinement of
//! all roots, initialized from a cheap annulus. Residuals are reported
//! relative to the termwise evaluation scale at each root.
//!
//! Run with: cargo run --example root_refinement

use rootloc::{aberth_roots, AberthConfig, Polynomial};

fn main() {
    let p = Polynomial::from_real(&[-4.0, 6.0, -2.0, -1.0, 1.0]).unwrap();
    let roots = aberth_roots(&p, &AberthConfig::default());

    println!("roots of x^4 - x^3 - 2x^2 + 6x - 4 (sorted by modulus):\n");
    println!("{:>10} {:>10} {:>10} {:>10} {:>10}", "re", "im", "|z|", "residual", "ok");
    for ((z, &res), &ok) in roots
        .roots
        .iter()
        .zip(&roots.residuals)
        .zip(&roots.converged)
    {
        println!(
            "{:>10.6} {:>10.6} {:>10.6} {:>10.1e} {:>10}",
            z.re,
            z.im,
            z.norm(),
            res,
            ok
        );
    }

    // zero roots are deflated exactly and re-appended
    let with_zeros = Polynomial::from_real(&[0.0, 0.0, -1.0, 1.0]).unwrap(); // x^3 - x^2
    let roots = aberth_roots(&with_zeros, &AberthConfig::default());
    println!("\nx^3 - x^2 has a double zero root handled by deflation:");
    for z in &roots.roots {
        println!("  {z}");
    }
}
