//! First-power bounds: every submultiplicative norm of the companion matrix
//! bounds the largest root modulus from above, and reciprocal norms of the
//! reversal polynomial's companion bound the smallest from below.
//!
//! Run with: cargo run --example norm_bounds

use rootloc::{companion_power, frobenius_transpose, root_norm, NormKind, Polynomial};

fn main() {
    // p(x) = x^4 - x^3 - 2x^2 + 6x - 4, roots 1, 1 +- i, -2
    let p = Polynomial::from_real(&[-4.0, 6.0, -2.0, -1.0, 1.0]).unwrap();
    let c1 = companion_power(&frobenius_transpose(&p).unwrap(), 1);
    let q = p.reversal().unwrap();
    let c2 = companion_power(&frobenius_transpose(&q).unwrap(), 1);

    println!("quartic with root moduli 1, sqrt(2), sqrt(2), 2\n");
    println!("upper bounds on the largest root modulus:");
    for nk in NormKind::ALL {
        println!("  |C1|_{}  = {:.4}", nk, root_norm(&c1, nk));
    }
    println!("lower bounds on the smallest root modulus:");
    for nk in NormKind::ALL {
        println!("  1/|C2|_{} = {:.4}", nk, 1.0 / root_norm(&c2, nk));
    }
    println!("\nbest annulus at k = 1: 0.4216 <= |z| <= 7");
}
