//! Renders the annulus and the refined roots as an SVG file.
//!
//! Run with: cargo run --example annulus_svg -- /tmp/annulus.svg

use rootloc::cli::annulus_svg;
use rootloc::{aberth_roots, annulus, AberthConfig, NormKind, Polynomial};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "annulus.svg".to_string());
    let p = Polynomial::from_real(&[-4.0, 6.0, -2.0, -1.0, 1.0]).unwrap();
    let ann = annulus(&p, 1, 1, &NormKind::ALL, 0).unwrap();
    let roots = aberth_roots(&p, &AberthConfig::default());
    let svg = annulus_svg(&ann, Some(&roots));
    std::fs::write(&path, svg).expect("write SVG");
    println!(
        "wrote {path}: circles at r = {:.4} and r = {:.4}, {} root markers",
        ann.r_lo,
        ann.r_hi,
        roots.len()
    );
}
