//! Tightening the annulus with matrix powers: N(C^k)^(1/k) converges to the
//! spectral radius, so higher powers squeeze both radii toward the true
//! extremal root moduli.
//!
//! Run with: cargo run --example power_annulus

use rootloc::{annulus, NormKind, Polynomial};

fn main() {
    // degree-8 fixture with root moduli 1, 1, 1, 1, 2, sqrt(10), sqrt(10), 4
    let p = Polynomial::from_real(&[80.0, 28.0, -14.0, -8.0, -81.0, -28.0, 14.0, 8.0, 1.0]).unwrap();

    println!("annulus containing all roots (true moduli span [1, 4]):\n");
    println!("{:>4} {:>12} {:>12}", "k", "r_lo", "r_hi");
    for k in [1u32, 2, 8, 16, 32, 64] {
        let a = annulus(&p, k, k, &NormKind::ALL, 0).unwrap();
        println!("{k:>4} {:>12.4} {:>12.4}", a.r_lo, a.r_hi);
    }
    println!("\nthe k = 64 annulus [0.99, 4.32] already hugs the true [1, 4]");
}
