//! Balancing the power before taking its norm: a few diagonal-similarity
//! sweeps shrink every norm toward the spectral radius, so small powers of
//! balanced matrices already give bounds that unbalanced high powers barely
//! reach.
//!
//! Run with: cargo run --example balanced_bounds

use rootloc::{upper_bound, NormKind, Polynomial};

fn main() {
    let p = Polynomial::from_real(&[80.0, 28.0, -14.0, -8.0, -81.0, -28.0, 14.0, 8.0, 1.0]).unwrap();

    println!("upper bounds on the largest root modulus (true value 4):\n");
    println!("{:>4} {:>14} {:>14} {:>14}", "k", "unbalanced", "3 sweeps", "20 sweeps");
    for k in [1u32, 2, 8, 16, 32, 64] {
        let raw = upper_bound(&p, k, NormKind::Inf, 0).unwrap();
        let b3 = upper_bound(&p, k, NormKind::Inf, 3).unwrap();
        let b20 = upper_bound(&p, k, NormKind::Inf, 20).unwrap();
        println!("{k:>4} {raw:>14.4} {b3:>14.4} {b20:>14.4}");
    }
    println!("\nbalancing at k = 1 beats raw norms at k = 8");
}
