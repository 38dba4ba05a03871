//! Benchmark polynomial generators and the experiment harness.
//!
//! The four hard fixtures (a degree-100 Laguerre-recurrence polynomial, the
//! characteristic polynomial of a 100x100 banded complex Toeplitz matrix, the
//! multiplicity-50 polynomial (x-1)^50, and a sparse polynomial whose root
//! moduli span sixty decades) are generated exactly — integer recurrences or
//! Gaussian-rational elimination — and rounded to double precision once, so
//! repeated generation is bit-identical. Reference extremal root moduli come
//! from the wide-precision refiner running on the exact coefficients.

mod exact;

use crate::bounds::{bound_table, BoundTable};
use crate::matrix::NormKind;
use crate::oracle::{self, OracleError};
use crate::poly::Polynomial;
use crate::wide;
use exact::{det_shifted, interpolate, BandSpec, GRat};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::str::FromStr;

/// Built-in experiment fixtures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BenchName {
    Laguerre100,
    Toeplitz100,
    Ones50,
    Lsr1,
    Example1,
    Example2,
}

impl BenchName {
    pub const ALL: [BenchName; 6] = [
        BenchName::Laguerre100,
        BenchName::Toeplitz100,
        BenchName::Ones50,
        BenchName::Lsr1,
        BenchName::Example1,
        BenchName::Example2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BenchName::Laguerre100 => "laguerre100",
            BenchName::Toeplitz100 => "toeplitz100",
            BenchName::Ones50 => "ones50",
            BenchName::Lsr1 => "lsr1",
            BenchName::Example1 => "example1",
            BenchName::Example2 => "example2",
        }
    }
}

impl std::fmt::Display for BenchName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BenchName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BenchName::ALL
            .into_iter()
            .find(|n| n.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| format!("unknown experiment `{s}`"))
    }
}

/// What to run: fixture, powers, norms and balancing sweeps.
#[derive(Clone, Debug)]
pub struct ExperimentSpec {
    pub name: BenchName,
    pub ks: Vec<u32>,
    pub norms: Vec<NormKind>,
    pub balance_iters: u32,
}

impl ExperimentSpec {
    /// Default grids: the degree-100 fixtures use the published one-norm rows
    /// k = 1..5, 10, 100; the small examples use all norms at k = 1..64.
    pub fn defaults_for(name: BenchName) -> Self {
        match name {
            BenchName::Example1 | BenchName::Example2 => ExperimentSpec {
                name,
                ks: vec![1, 2, 8, 16, 32, 64],
                norms: NormKind::ALL.to_vec(),
                balance_iters: 20,
            },
            _ => ExperimentSpec {
                name,
                ks: vec![1, 2, 3, 4, 5, 10, 100],
                norms: vec![NormKind::One],
                balance_iters: 20,
            },
        }
    }
}

/// A bound grid plus the reference extremal root moduli it is judged against.
#[derive(Clone, Debug)]
pub struct ExperimentResult {
    pub table: BoundTable,
    /// Largest root modulus (the spectral radius of the companion matrix).
    pub ref_max_modulus: f64,
    /// Smallest root modulus (reciprocal spectral radius of the reversal's).
    pub ref_min_modulus: f64,
}

/// Monic integer coefficients of the Laguerre-style recurrence
/// L0 = 1, L1 = 1 - x, L_{i+1} = (2i+1-x) L_i - i^2 L_{i-1},
/// sign-normalized so the leading coefficient is +1.
fn laguerre_exact(n: usize) -> Vec<BigInt> {
    assert!((1..=120).contains(&n), "degree out of range");
    let mut prev: Vec<BigInt> = vec![BigInt::one()];
    let mut cur: Vec<BigInt> = vec![BigInt::one(), -BigInt::one()];
    for i in 1..n {
        let scale = BigInt::from(2 * i as i64 + 1);
        let isq = BigInt::from((i * i) as i64);
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (j, c) in cur.iter().enumerate() {
            next[j] += &scale * c; // (2i+1) L_i
            next[j + 1] -= c; // -x L_i
        }
        for (j, c) in prev.iter().enumerate() {
            next[j] -= &isq * c; // -i^2 L_{i-1}
        }
        prev = std::mem::replace(&mut cur, next);
    }
    // leading coefficient is (-1)^n; flip signs for odd n
    if n % 2 == 1 {
        for c in &mut cur {
            *c = -c.clone();
        }
    }
    cur
}

/// Exact binomial coefficients of (x - 1)^n, ascending.
fn ones_exact(n: usize) -> Vec<BigInt> {
    assert!((1..=64).contains(&n), "degree out of range");
    let mut coeffs = vec![BigInt::zero(); n + 1];
    let mut binom = BigInt::one();
    for k in 0..=n {
        coeffs[k] = if (n - k) % 2 == 0 {
            binom.clone()
        } else {
            -binom.clone()
        };
        if k < n {
            binom = binom * BigInt::from((n - k) as i64) / BigInt::from((k + 1) as i64);
        }
    }
    coeffs
}

fn big_to_f64(x: &BigInt) -> f64 {
    wide::rational_to_wf(&BigRational::from_integer(x.clone()), 128)
        .to_f64()
        .value()
}

/// Degree-n polynomial from the Laguerre recurrence, generated in exact
/// integer arithmetic and rounded to doubles once.
pub fn gen_laguerre(n: usize) -> Polynomial {
    let coeffs = laguerre_exact(n);
    Polynomial::new(
        coeffs
            .iter()
            .map(|c| Complex64::new(big_to_f64(c), 0.0))
            .collect(),
    )
    .expect("nonzero polynomial")
}

/// (x - 1)^n with exact binomial coefficients.
pub fn gen_ones(n: usize) -> Polynomial {
    let coeffs = ones_exact(n);
    Polynomial::new(
        coeffs
            .iter()
            .map(|c| Complex64::new(big_to_f64(c), 0.0))
            .collect(),
    )
    .expect("nonzero polynomial")
}

/// (x^50 + 1)(x^2 + a x + 1/a): six nonzero coefficients, root moduli from
/// roughly 1/a^2 up to a.
pub fn gen_lsr1(a: f64) -> Polynomial {
    assert!(a > 0.0 && a.is_finite());
    let mut coeffs = vec![Complex64::new(0.0, 0.0); 53];
    let inv = 1.0 / a;
    coeffs[0] = Complex64::new(inv, 0.0);
    coeffs[1] = Complex64::new(a, 0.0);
    coeffs[2] = Complex64::new(1.0, 0.0);
    coeffs[50] = Complex64::new(inv, 0.0);
    coeffs[51] = Complex64::new(a, 0.0);
    coeffs[52] = Complex64::new(1.0, 0.0);
    Polynomial::new(coeffs).expect("nonzero polynomial")
}

fn lsr1_exact(a: f64) -> Vec<(BigRational, BigRational)> {
    let p = gen_lsr1(a);
    p.coeffs()
        .iter()
        .map(|c| {
            (
                BigRational::from_float(c.re).expect("finite"),
                BigRational::from_float(c.im).expect("finite"),
            )
        })
        .collect()
}

/// The 100x100 banded complex Toeplitz benchmark matrix: diagonal offsets
/// -2..6 carry (-i, -3, 0, 10, 1, i, 28, -3, 1), exactly as published.
fn toeplitz_band() -> BandSpec {
    BandSpec {
        lo: -2,
        hi: 6,
        values: vec![
            GRat::from_ints(0, -1),
            GRat::from_ints(-3, 0),
            GRat::from_ints(0, 0),
            GRat::from_ints(10, 0),
            GRat::from_ints(1, 0),
            GRat::from_ints(0, 1),
            GRat::from_ints(28, 0),
            GRat::from_ints(-3, 0),
            GRat::from_ints(1, 0),
        ],
    }
}

const TOEPLITZ_DIM: usize = 100;

fn toeplitz_exact() -> Vec<(BigRational, BigRational)> {
    toeplitz_exact_n(TOEPLITZ_DIM)
}

/// Exact Gaussian-integer coefficients of det(xI - A) for the n x n Toeplitz
/// benchmark matrix, via evaluation at n + 1 integer points and exact Newton
/// interpolation. Structural checks (monic, integer coefficients, zero trace
/// term, independent determinant at an unused node) run on every call.
fn toeplitz_exact_n(n: usize) -> Vec<(BigRational, BigRational)> {
    let band = toeplitz_band();
    // n + 1 small symmetric integer nodes (1, -1, 2, -2, ...), skipping 0 so
    // the constant term stays available as an independent cross-check
    let nodes: Vec<BigInt> = (1..)
        .flat_map(|m| [m, -m])
        .take(n + 1)
        .map(BigInt::from)
        .collect();
    assert_eq!(nodes.len(), n + 1);
    // node evaluations are independent; split them across threads
    let workers = std::thread::available_parallelism().map_or(1, |p| p.get());
    let chunk = nodes.len().div_ceil(workers);
    let values: Vec<GRat> = std::thread::scope(|s| {
        let band = &band;
        let handles: Vec<_> = nodes
            .chunks(chunk)
            .map(|part| s.spawn(move || part.iter().map(|z| det_shifted(band, n, z)).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker")).collect()
    });
    let coeffs = interpolate(&nodes, &values);
    assert_eq!(coeffs.len(), n + 1);
    assert!(
        coeffs.iter().all(GRat::is_gaussian_integer),
        "characteristic polynomial of a Gaussian-integer matrix must have integer coefficients"
    );
    assert_eq!(coeffs[n], GRat::from_ints(1, 0), "must be monic");
    // trace of the band matrix is 100 * 0, so the x^99 coefficient vanishes
    assert!(coeffs[n - 1].is_zero(), "x^99 coefficient must be zero");
    // independent check: constant term equals det(-A) at the unused node 0
    let det0 = det_shifted(&band, n, &BigInt::zero());
    assert_eq!(coeffs[0], det0, "constant term must equal det(-A)");
    coeffs
        .into_iter()
        .map(|c| (c.re, c.im))
        .collect()
}

/// Monic degree-100 characteristic polynomial of the banded Toeplitz
/// benchmark matrix, exact until the final rounding to doubles.
pub fn gen_toeplitz_charpoly() -> Polynomial {
    let coeffs = toeplitz_exact();
    Polynomial::new(
        coeffs
            .iter()
            .map(|(re, im)| {
                Complex64::new(
                    wide::rational_to_wf(re, 128).to_f64().value(),
                    wide::rational_to_wf(im, 128).to_f64().value(),
                )
            })
            .collect(),
    )
    .expect("nonzero polynomial")
}

/// The two small worked fixtures: a quartic with roots 1, 1 +- i, -2 and a
/// degree-8 polynomial with root moduli 1, 1, 1, 1, 2, sqrt(10), sqrt(10), 4.
pub fn polynomial_for(name: BenchName) -> Polynomial {
    match name {
        BenchName::Laguerre100 => gen_laguerre(100),
        BenchName::Toeplitz100 => gen_toeplitz_charpoly(),
        BenchName::Ones50 => gen_ones(50),
        BenchName::Lsr1 => gen_lsr1(1e20),
        BenchName::Example1 => Polynomial::from_real(&[-4.0, 6.0, -2.0, -1.0, 1.0]).unwrap(),
        BenchName::Example2 => {
            Polynomial::from_real(&[80.0, 28.0, -14.0, -8.0, -81.0, -28.0, 14.0, 8.0, 1.0]).unwrap()
        }
    }
}

/// Exact rational coefficients of a fixture, as taken by the wide-precision
/// reference refiner. The generated polynomials are exact by construction;
/// the small example fixtures have exactly representable double coefficients.
pub fn exact_reference_coeffs(name: BenchName) -> Vec<(BigRational, BigRational)> {
    match name {
        BenchName::Laguerre100 => int_rationals(&laguerre_exact(100)),
        BenchName::Toeplitz100 => toeplitz_exact(),
        BenchName::Ones50 => int_rationals(&ones_exact(50)),
        BenchName::Lsr1 => lsr1_exact(1e20),
        BenchName::Example1 | BenchName::Example2 => polynomial_for(name)
            .coeffs()
            .iter()
            .map(|c| {
                (
                    BigRational::from_float(c.re).expect("finite"),
                    BigRational::from_float(c.im).expect("finite"),
                )
            })
            .collect(),
    }
}

fn int_rationals(coeffs: &[BigInt]) -> Vec<(BigRational, BigRational)> {
    coeffs
        .iter()
        .map(|c| (BigRational::from_integer(c.clone()), BigRational::zero()))
        .collect()
}

/// Runs the named experiment: computes the full bound grid and the reference
/// extremal moduli. The reference path is the double-precision refiner for
/// the small fixtures and the wide-precision refiner on exact coefficients
/// for the degree-100 benchmarks.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentResult, OracleError> {
    let p = polynomial_for(spec.name);
    let table = bound_table(&p, &spec.ks, &spec.norms, spec.balance_iters)
        .expect("generated benchmark polynomials satisfy the pipeline preconditions");
    let (hi, lo) = match spec.name {
        BenchName::Example1 | BenchName::Example2 => oracle::spectral_radius_reference(&p)?,
        BenchName::Laguerre100 | BenchName::Toeplitz100 => {
            oracle::spectral_radius_reference_wide(&exact_reference_coeffs(spec.name), 384, 600)?
        }
        BenchName::Ones50 => {
            oracle::spectral_radius_reference_wide(&exact_reference_coeffs(spec.name), 512, 900)?
        }
        BenchName::Lsr1 => {
            oracle::spectral_radius_reference_wide(&exact_reference_coeffs(spec.name), 384, 400)?
        }
    };
    Ok(ExperimentResult {
        table,
        ref_max_modulus: hi,
        ref_min_modulus: lo,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laguerre_smallest_cases() {
        // L1 = 1 - x, monicized to x - 1
        let p1 = gen_laguerre(1);
        assert_eq!(p1.coeffs().iter().map(|c| c.re).collect::<Vec<_>>(), vec![-1.0, 1.0]);
        // one recurrence step: (3 - x)(1 - x) - 1 = x^2 - 4x + 2
        let p2 = gen_laguerre(2);
        assert_eq!(p2.coeffs().iter().map(|c| c.re).collect::<Vec<_>>(), vec![2.0, -4.0, 1.0]);
    }

    #[test]
    fn laguerre_recurrence_matches_closed_form() {
        // coefficient of x^k is (-1)^k C(n,k) n!/k!, up to the (-1)^n
        // monicization applied by the generator
        for n in 1..=30usize {
            let got = laguerre_exact(n);
            let mut factorial = BigInt::one();
            for i in 1..=n {
                factorial *= BigInt::from(i as i64);
            }
            let mut binom = BigInt::one();
            let mut kfact = BigInt::one();
            for k in 0..=n {
                if k > 0 {
                    binom = binom.clone() * BigInt::from((n - k + 1) as i64) / BigInt::from(k as i64);
                    kfact *= BigInt::from(k as i64);
                }
                let mut want = &binom * (&factorial / &kfact);
                if k % 2 == 1 {
                    want = -want;
                }
                if n % 2 == 1 {
                    want = -want;
                }
                assert_eq!(got[k], want, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn laguerre_generation_is_deterministic() {
        let a = gen_laguerre(100);
        let b = gen_laguerre(100);
        assert_eq!(a.coeffs(), b.coeffs());
    }

    #[test]
    fn ones_fixture_binomials() {
        let p2 = gen_ones(2);
        assert_eq!(p2.coeffs().iter().map(|c| c.re).collect::<Vec<_>>(), vec![1.0, -2.0, 1.0]);
        let exact = ones_exact(50);
        assert_eq!(exact[25], -BigInt::from(126_410_606_437_752i64));
    }

    #[test]
    fn lsr1_sparse_layout() {
        let p = gen_lsr1(1e20);
        assert_eq!(p.degree(), 52);
        assert_eq!(p.coeff(0).re, 1e-20);
        assert_eq!(p.coeff(1).re, 1e20);
        assert_eq!(p.coeff(2).re, 1.0);
        assert_eq!(p.coeff(50).re, 1e-20);
        assert_eq!(p.coeff(51).re, 1e20);
        assert_eq!(p.coeff(52).re, 1.0);
        assert!((3..50).all(|i| p.coeff(i).re == 0.0));
        // a = 1: all roots on the unit circle
        let unit = gen_lsr1(1.0);
        assert_eq!(unit.coeff(0).re, 1.0);
        assert_eq!(unit.coeff(1).re, 1.0);
    }

    #[test]
    fn small_band_charpoly_matches_dense_reference() {
        // independent route: dense Faddeev-LeVerrier on the same band
        use crate::companion::{char_poly, custom_companion};
        use crate::matrix::Matrix;
        let band = toeplitz_band();
        for n in [8usize, 11, 14] {
            let exact = toeplitz_exact_n(n);
            let rows: Vec<Vec<Complex64>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let v = band.value(j as isize - i as isize);
                            Complex64::new(
                                wide::rational_to_wf(&v.re, 64).to_f64().value(),
                                wide::rational_to_wf(&v.im, 64).to_f64().value(),
                            )
                        })
                        .collect()
                })
                .collect();
            let m = custom_companion(Matrix::from_rows(&rows)).unwrap();
            let reference = char_poly(&m).unwrap();
            let scale = reference.coeffs().iter().map(|c| c.norm()).fold(1.0f64, f64::max);
            for (i, (re, im)) in exact.iter().enumerate() {
                let got = Complex64::new(
                    wide::rational_to_wf(re, 128).to_f64().value(),
                    wide::rational_to_wf(im, 128).to_f64().value(),
                );
                let want = reference.coeff(i);
                assert!(
                    (got - want).norm() <= 1e-9 * scale,
                    "n={n} coeff {i}: exact {got}, dense {want}"
                );
            }
        }
    }

    #[test]
    fn big_companions_have_exact_last_columns() {
        use crate::companion::{frobenius_transpose, last_column_matches};
        for name in [BenchName::Laguerre100, BenchName::Ones50, BenchName::Lsr1] {
            let p = polynomial_for(name);
            let c = frobenius_transpose(&p).unwrap();
            assert!(last_column_matches(&c, &p), "{name}");
        }
    }
}
