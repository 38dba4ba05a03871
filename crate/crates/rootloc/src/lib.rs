//! Localize the roots of a real or complex polynomial inside an annulus
//! without ever computing them.
//!
//! The method: every submultiplicative norm of a companion matrix bounds the
//! largest root modulus from above, and reciprocal norms of the monic
//! reversal polynomial's companion bound the smallest from below. Taking
//! k-th roots of norms of k-th matrix powers tightens both sides toward the
//! true extremal moduli (Gelfand's formula), and diagonally balancing each
//! power before taking its norm gets most of the benefit at small k. The
//! crate also derives root-spread bounds and a distance bracket for the
//! extreme roots, ships exact generators for a set of hard benchmark
//! polynomials, and carries a simultaneous Ehrlich-Aberth refiner as an
//! independent check on everything.
//!
//! Powers are stored as `2^e * body` with explicit exponents and norms are
//! taken in the log domain, so polynomials whose coefficient or root scales
//! span thousands of binary orders run without overflow.
//!
//! Start with the runnable examples (`cargo run --example power_annulus`) or
//! the `rootloc` binary (`rootloc annulus --poly p.json --k 64`).

pub mod balance;
pub mod bench;
pub mod bounds;
pub mod cli;
pub mod companion;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod powers;
mod wide;

pub use balance::{balance, balance_sweep, DiagonalScaling};
pub use bench::{
    gen_laguerre, gen_lsr1, gen_ones, gen_toeplitz_charpoly, polynomial_for, run_experiment,
    BenchName, ExperimentResult, ExperimentSpec,
};
pub use bounds::{
    annulus, bk, bound_table, deflate_zero_roots, lower_bound, spread_bounds, upper_bound,
    Annulus, BoundCell, BoundError, BoundTable, DeflationRecord, MatrixSide, SpreadBounds,
};
pub use companion::{
    char_poly, custom_companion, frobenius, frobenius_transpose, verify_companion,
    CompanionError, CompanionForm, CompanionMatrix,
};
pub use matrix::{Matrix, NormKind};
pub use oracle::{
    aberth_roots, spectral_radius_reference, spectral_radius_reference_wide, AberthConfig,
    OracleError,
};
pub use poly::{PolyError, Polynomial, RootSet};
pub use powers::{companion_power, norm, root_norm, LogMagnitude, ScaledMatrix};
