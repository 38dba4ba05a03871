//! End-to-end root localization: upper bounds on the largest root modulus
//! from norms of powers of the companion matrix, lower bounds on the smallest
//! from powers of the reversal's companion, annulus construction, root-spread
//! bounds, distance brackets, and the max-of-norms comparison function.

use crate::balance::balance_scaled;
use crate::companion::{self, CompanionError, CompanionMatrix};
use crate::matrix::NormKind;
use crate::poly::{PolyError, Polynomial};
use crate::powers::{companion_power, root_norm, ScaledMatrix};
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum BoundError {
    #[error("constant term is zero; deflate zero roots first")]
    ZeroConstantTerm,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("bound pipeline needs degree >= 2, got {0}")]
    DegreeTooSmall(usize),
}

impl From<PolyError> for BoundError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::ZeroConstantTerm => BoundError::ZeroConstantTerm,
            _ => BoundError::NotMonic,
        }
    }
}

impl From<CompanionError> for BoundError {
    fn from(_: CompanionError) -> Self {
        BoundError::NotMonic
    }
}

/// Which side of the bound grid a cell belongs to: powers of the polynomial's
/// own companion (C1, upper bounds) or of its reversal's companion (C2,
/// reciprocal lower bounds).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixSide {
    C1,
    C2,
}

impl MatrixSide {
    pub fn name(self) -> &'static str {
        match self {
            MatrixSide::C1 => "C1",
            MatrixSide::C2 => "C2",
        }
    }
}

/// Origin-centered annulus guaranteed to contain every root.
#[derive(Clone, Debug)]
pub struct Annulus {
    pub r_lo: f64,
    pub r_hi: f64,
    pub provenance: Provenance,
}

/// How an annulus was produced.
#[derive(Clone, Debug)]
pub struct Provenance {
    pub k1: u32,
    pub k2: u32,
    pub norms: Vec<NormKind>,
    pub balance_iters: u32,
}

/// One cell of a bound grid: U_k = N(C1^k)^(1/k) on the C1 side, or
/// L_k = N(C2^k)^(-1/k) on the C2 side, optionally after balancing the power.
#[derive(Clone, Copy, Debug)]
pub struct BoundCell {
    pub k: u32,
    pub norm: NormKind,
    pub side: MatrixSide,
    pub balanced: bool,
    pub value: f64,
}

/// Grid of bound values indexed by (k, norm, side, balanced).
#[derive(Clone, Debug)]
pub struct BoundTable {
    pub ks: Vec<u32>,
    pub balance_iters: u32,
    pub cells: Vec<BoundCell>,
}

impl BoundTable {
    pub fn get(&self, k: u32, norm: NormKind, side: MatrixSide, balanced: bool) -> Option<f64> {
        self.cells
            .iter()
            .find(|c| c.k == k && c.norm == norm && c.side == side && c.balanced == balanced)
            .map(|c| c.value)
    }
}

/// Upper bounds on the root spread quantities plus the asymptotic distance
/// bracket for |lambda_n - lambda_1|.
#[derive(Clone, Copy, Debug)]
pub struct SpreadBounds {
    /// Bounds |lambda_n| - |lambda_1|.
    pub abs_spread_upper: f64,
    /// Bounds the maximum pairwise root distance.
    pub root_spread_upper: f64,
    /// Brackets |lambda_n - lambda_1| when the extreme roots and the origin
    /// are not collinear, for sufficiently large k.
    pub distance_bracket: (f64, f64),
    /// Always true: no computable threshold k is available for the bracket.
    pub asymptotic: bool,
}

/// Result of stripping zero roots so the reversal polynomial exists.
#[derive(Clone, Debug)]
pub struct DeflationRecord {
    pub zero_root_multiplicity: usize,
    pub deflated: Polynomial,
}

/// Strips the factor x^m from a monic polynomial, recording m.
pub fn deflate_zero_roots(p: &Polynomial) -> DeflationRecord {
    let zero = num_complex::Complex64::new(0.0, 0.0);
    let m = p.coeffs().iter().take_while(|&&c| c == zero).count();
    let deflated = Polynomial::new(p.coeffs()[m..].to_vec()).expect("leading coefficient nonzero");
    DeflationRecord {
        zero_root_multiplicity: m,
        deflated,
    }
}

fn check_pipeline_input(p: &Polynomial) -> Result<(), BoundError> {
    if !p.is_monic() {
        return Err(BoundError::NotMonic);
    }
    if p.degree() < 2 {
        return Err(BoundError::DegreeTooSmall(p.degree()));
    }
    if p.constant() == num_complex::Complex64::new(0.0, 0.0) {
        return Err(BoundError::ZeroConstantTerm);
    }
    Ok(())
}

/// Power of `c`, balanced in place when requested.
fn balanced_power(c: &CompanionMatrix, k: u32, balance_iters: u32) -> ScaledMatrix {
    let mut m = companion_power(c, k);
    if balance_iters > 0 {
        balance_scaled(&mut m, balance_iters);
    }
    m
}

/// Root-norm bounds for a prepared companion matrix, one value per norm.
/// Exposed so callers can pick a companion form other than the default.
pub fn upper_bounds_for(
    c: &CompanionMatrix,
    k: u32,
    norms: &[NormKind],
    balance_iters: u32,
) -> Vec<(NormKind, f64)> {
    let m = balanced_power(c, k, balance_iters);
    norms.iter().map(|&nk| (nk, root_norm(&m, nk))).collect()
}

/// Reciprocal root-norm bounds for a prepared reversal companion.
pub fn lower_bounds_for(
    c2: &CompanionMatrix,
    k: u32,
    norms: &[NormKind],
    balance_iters: u32,
) -> Vec<(NormKind, f64)> {
    let m = balanced_power(c2, k, balance_iters);
    norms
        .iter()
        .map(|&nk| {
            let rn = root_norm(&m, nk);
            (nk, if rn > 0.0 { 1.0 / rn } else { 0.0 })
        })
        .collect()
}

/// N(C1^k)^(1/k) for the subdiagonal companion of p, an upper bound on the
/// modulus of every root. Balancing the power first usually tightens it.
pub fn upper_bound(
    p: &Polynomial,
    k: u32,
    which: NormKind,
    balance_iters: u32,
) -> Result<f64, BoundError> {
    check_pipeline_input(p)?;
    let c1 = companion::frobenius_transpose(p)?;
    Ok(upper_bounds_for(&c1, k, &[which], balance_iters)[0].1)
}

/// N(C2^k)^(-1/k) for the companion of the monic reversal polynomial, a lower
/// bound on the modulus of every root.
pub fn lower_bound(
    p: &Polynomial,
    k: u32,
    which: NormKind,
    balance_iters: u32,
) -> Result<f64, BoundError> {
    check_pipeline_input(p)?;
    let c2 = companion::frobenius_transpose(&p.reversal()?)?;
    Ok(lower_bounds_for(&c2, k, &[which], balance_iters)[0].1)
}

/// Annulus containing all roots: the outer radius is the best (smallest)
/// upper bound over the requested norms at power k1, the inner radius the
/// best (largest) lower bound at power k2.
pub fn annulus(
    p: &Polynomial,
    k1: u32,
    k2: u32,
    norms: &[NormKind],
    balance_iters: u32,
) -> Result<Annulus, BoundError> {
    check_pipeline_input(p)?;
    assert!(!norms.is_empty(), "at least one norm required");
    let c1 = companion::frobenius_transpose(p)?;
    let c2 = companion::frobenius_transpose(&p.reversal()?)?;
    let r_hi = upper_bounds_for(&c1, k1, norms, balance_iters)
        .into_iter()
        .map(|(_, v)| v)
        .fold(f64::INFINITY, f64::min);
    let r_lo = lower_bounds_for(&c2, k2, norms, balance_iters)
        .into_iter()
        .map(|(_, v)| v)
        .fold(0.0, f64::max);
    Ok(Annulus {
        r_lo,
        r_hi,
        provenance: Provenance {
            k1,
            k2,
            norms: norms.to_vec(),
            balance_iters,
        },
    })
}

/// Full grid of bounds: for every k and norm, unbalanced cells on both sides,
/// plus balanced cells when `balance_iters > 0`.
pub fn bound_table(
    p: &Polynomial,
    ks: &[u32],
    norms: &[NormKind],
    balance_iters: u32,
) -> Result<BoundTable, BoundError> {
    check_pipeline_input(p)?;
    let c1 = companion::frobenius_transpose(p)?;
    let c2 = companion::frobenius_transpose(&p.reversal()?)?;
    let mut cells = Vec::new();
    for &k in ks {
        for (side, c) in [(MatrixSide::C1, &c1), (MatrixSide::C2, &c2)] {
            let raw = companion_power(c, k);
            let variants: Vec<(bool, ScaledMatrix)> = if balance_iters > 0 {
                let mut b = raw.clone();
                balance_scaled(&mut b, balance_iters);
                vec![(false, raw), (true, b)]
            } else {
                vec![(false, raw)]
            };
            for (balanced, m) in &variants {
                for &nk in norms {
                    let rn = root_norm(m, nk);
                    let value = match side {
                        MatrixSide::C1 => rn,
                        MatrixSide::C2 => 1.0 / rn,
                    };
                    cells.push(BoundCell {
                        k,
                        norm: nk,
                        side,
                        balanced: *balanced,
                        value,
                    });
                }
            }
        }
    }
    Ok(BoundTable {
        ks: ks.to_vec(),
        balance_iters,
        cells,
    })
}

/// Spread quantities from the (k1, k2) bounds: U - L bounds the modulus
/// spread, 2U the maximum pairwise distance, and (max(0, U - L), U + L)
/// brackets |lambda_n - lambda_1| asymptotically in the non-collinear case.
pub fn spread_bounds(
    p: &Polynomial,
    k1: u32,
    k2: u32,
    which: NormKind,
    balance_iters: u32,
) -> Result<SpreadBounds, BoundError> {
    let u = upper_bound(p, k1, which, balance_iters)?;
    let l = lower_bound(p, k2, which, balance_iters)?;
    Ok(SpreadBounds {
        abs_spread_upper: u - l,
        root_spread_upper: 2.0 * u,
        distance_bracket: ((u - l).max(0.0), u + l),
        asymptotic: true,
    })
}

/// Max of the three root-norms of c^k: a single number that compares
/// companion forms of the same polynomial at a given power.
pub fn bk(c: &CompanionMatrix, k: u32) -> f64 {
    assert!(k >= 1);
    let m = companion_power(c, k);
    NormKind::ALL
        .iter()
        .map(|&nk| root_norm(&m, nk))
        .fold(0.0, f64::max)
}
