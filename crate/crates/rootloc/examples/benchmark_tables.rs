//! Reproduces the built-in benchmark tables: exact-arithmetic generators for
//! four hard polynomials, bound grids over powers, and wide-precision
//! reference headers. The degree-100 fixtures take a minute or two each.
//!
//! Run with: cargo run --release --example benchmark_tables -- ones50
//! (names: laguerre100, toeplitz100, ones50, lsr1, example1, example2)

use rootloc::{BenchName, ExperimentSpec, MatrixSide, NormKind};
use std::str::FromStr;

fn main() {
    let name = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "example2".to_string());
    let name = BenchName::from_str(&name).unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(2);
    });
    let spec = ExperimentSpec::defaults_for(name);
    println!(
        "experiment {name}: k = {:?}, norms = {:?}, {} balancing sweeps",
        spec.ks, spec.norms, spec.balance_iters
    );
    let result = rootloc::run_experiment(&spec).expect("reference refinement converges");
    println!(
        "reference extremal root moduli: {:.6e} down to {:.6e}\n",
        result.ref_max_modulus, result.ref_min_modulus
    );
    println!(
        "{:>5} {:>14} {:>14} {:>14} {:>14}",
        "k", "U raw", "U balanced", "L raw", "L balanced"
    );
    let nk = spec.norms[0];
    for &k in &spec.ks {
        let cell = |side, balanced| {
            result
                .table
                .get(k, nk, side, balanced)
                .map(|v| format!("{v:.4e}"))
                .unwrap_or_default()
        };
        println!(
            "{k:>5} {:>14} {:>14} {:>14} {:>14}",
            cell(MatrixSide::C1, false),
            cell(MatrixSide::C1, true),
            cell(MatrixSide::C2, false),
            cell(MatrixSide::C2, true),
        );
    }
    let _ = NormKind::ALL;
}
