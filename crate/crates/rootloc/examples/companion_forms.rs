//! Different companion matrices of the same polynomial give different
//! bounds, and no single form wins at every power: the max-of-norms
//! comparison b_k can favor one matrix at k = 1 and the other at k = 2.
//!
//! Run with: cargo run --example companion_forms

use rootloc::{
    bk, char_poly, custom_companion, frobenius_transpose, verify_companion, Matrix, Polynomial,
};

fn main() {
    // two distinct companions of x^3 - (3/4)x^2 - (1/2)x + 1/4
    let p = Polynomial::from_real(&[0.25, -0.5, -0.75, 1.0]).unwrap();
    let c = frobenius_transpose(&p).unwrap();
    let l = custom_companion(Matrix::from_real_rows(&[
        vec![0.0, 1.0, 0.0],
        vec![0.0, 0.75, 1.0],
        vec![-0.25, 0.5, 0.0],
    ]))
    .unwrap();

    assert!(verify_companion(&c, &p, 1e-12).unwrap());
    assert!(verify_companion(&l, &p, 1e-12).unwrap());
    println!("both matrices verify as companions of the same cubic\n");

    println!("characteristic polynomial of the sparse form:");
    let cp = char_poly(&l).unwrap();
    for (i, coeff) in cp.coeffs().iter().enumerate() {
        println!("  x^{i}: {:+.4}", coeff.re);
    }

    println!("\nmax-of-norms comparison b_k = max(one, inf, fro) root norms:");
    println!("{:>4} {:>10} {:>10}", "k", "b_k(C)", "b_k(L)");
    for k in [1u32, 2, 4, 8] {
        println!("{k:>4} {:>10.4} {:>10.4}", bk(&c, k), bk(&l, k));
    }
    println!("\nb_1 ranks L above C, b_2 ranks C above L: neither order is stable");
}
