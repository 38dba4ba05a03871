//! Spread quantities from the same bounds: U - L caps the difference of
//! extreme root moduli, 2U caps the maximum pairwise root distance, and
//! (U - L, U + L) brackets the distance between the extreme roots when they
//! are not collinear with the origin (for sufficiently large k).
//!
//! Run with: cargo run --example spread_estimates

use rootloc::{aberth_roots, spread_bounds, AberthConfig, NormKind, Polynomial};

fn main() {
    let p = Polynomial::from_real(&[80.0, 28.0, -14.0, -8.0, -81.0, -28.0, 14.0, 8.0, 1.0]).unwrap();

    let s = spread_bounds(&p, 64, 64, NormKind::Inf, 0).unwrap();
    println!("degree-8 fixture, k = 64, infinity norm, no balancing:");
    println!("  modulus spread bound |z_max| - |z_min| <= {:.4}", s.abs_spread_upper);
    println!("  pairwise distance bound              <= {:.4}", s.root_spread_upper);
    println!(
        "  extreme-root distance bracket: ({:.4}, {:.4})  [asymptotic: {}]",
        s.distance_bracket.0, s.distance_bracket.1, s.asymptotic
    );

    let roots = aberth_roots(&p, &AberthConfig::default());
    let spread = roots
        .roots
        .iter()
        .flat_map(|a| roots.roots.iter().map(move |b| (a - b).norm()))
        .fold(0.0f64, f64::max);
    let extreme = (roots.roots.last().unwrap() - roots.roots.first().unwrap()).norm();
    println!("\nrefined roots say: max pairwise distance = {spread:.4}");
    println!("extreme-root distance |z_max - z_min|    = {extreme:.4} (inside the bracket)");
}
