//! Companion matrices of monic polynomials and characteristic polynomials of
//! small matrices, used both to build the bound pipeline inputs and to check
//! that a claimed companion form really represents a given polynomial.

use crate::matrix::Matrix;
use crate::poly::Polynomial;
use num_complex::Complex64;
use thiserror::Error;

/// `char_poly` refuses matrices beyond this order; the determinant recurrences
/// cost O(n^3)-O(n^4).
pub const CHAR_POLY_MAX_DIM: usize = 64;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CompanionError {
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("matrix is not square")]
    NonSquare,
    #[error("matrix order {0} exceeds the characteristic-polynomial limit {CHAR_POLY_MAX_DIM}")]
    TooLarge(usize),
}

/// Which companion layout a matrix carries. The subdiagonal form (ones below
/// the diagonal, negated coefficients in the last column) is the pipeline
/// default; its transpose and arbitrary user-supplied companions are tagged
/// so the power routines know when the sparse fast path applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompanionForm {
    FrobeniusTranspose,
    Frobenius,
    Custom,
}

/// A square matrix whose characteristic polynomial is (claimed to be) a given
/// monic polynomial.
#[derive(Clone, Debug)]
pub struct CompanionMatrix {
    entries: Matrix,
    form: CompanionForm,
    source_degree: usize,
}

impl CompanionMatrix {
    pub fn entries(&self) -> &Matrix {
        &self.entries
    }

    pub fn form(&self) -> CompanionForm {
        self.form
    }

    pub fn n(&self) -> usize {
        self.source_degree
    }
}

/// Transposed Frobenius companion of a monic polynomial: ones on the
/// subdiagonal and `-a_i` down the last column.
pub fn frobenius_transpose(p: &Polynomial) -> Result<CompanionMatrix, CompanionError> {
    if !p.is_monic() {
        return Err(CompanionError::NotMonic);
    }
    let n = p.degree();
    assert!(n >= 1, "companion matrix needs degree >= 1");
    let mut m = Matrix::zeros(n, n);
    for i in 0..n.saturating_sub(1) {
        m[(i + 1, i)] = Complex64::new(1.0, 0.0);
    }
    for i in 0..n {
        m[(i, n - 1)] = -p.coeff(i);
    }
    Ok(CompanionMatrix {
        entries: m,
        form: CompanionForm::FrobeniusTranspose,
        source_degree: n,
    })
}

/// Classical Frobenius companion, the transpose of [`frobenius_transpose`].
pub fn frobenius(p: &Polynomial) -> Result<CompanionMatrix, CompanionError> {
    let t = frobenius_transpose(p)?;
    Ok(CompanionMatrix {
        entries: t.entries.transpose(),
        form: CompanionForm::Frobenius,
        source_degree: t.source_degree,
    })
}

/// Wraps an arbitrary square matrix as a custom companion candidate. No
/// validation happens here; pair with [`verify_companion`].
pub fn custom_companion(entries: Matrix) -> Result<CompanionMatrix, CompanionError> {
    if !entries.is_square() {
        return Err(CompanionError::NonSquare);
    }
    let n = entries.rows();
    Ok(CompanionMatrix {
        entries,
        form: CompanionForm::Custom,
        source_degree: n,
    })
}

fn is_upper_hessenberg(m: &Matrix) -> bool {
    let n = m.rows();
    for i in 2..n {
        for j in 0..i - 1 {
            if m[(i, j)] != Complex64::new(0.0, 0.0) {
                return false;
            }
        }
    }
    true
}

/// Characteristic polynomial det(xI - M), monic of degree n.
///
/// Hessenberg matrices (every printed companion fixture is one) go through a
/// leading-principal-minor recurrence; everything else falls back to the
/// Faddeev-LeVerrier trace recursion.
pub fn char_poly(m: &CompanionMatrix) -> Result<Polynomial, CompanionError> {
    let n = m.entries.rows();
    if n > CHAR_POLY_MAX_DIM {
        return Err(CompanionError::TooLarge(n));
    }
    let a = &m.entries;
    let coeffs = if is_upper_hessenberg(a) {
        hessenberg_char_poly(a)
    } else if is_upper_hessenberg(&a.transpose()) {
        hessenberg_char_poly(&a.transpose())
    } else {
        faddeev_leverrier(a)
    };
    Ok(Polynomial::new(coeffs).expect("characteristic polynomial is monic"))
}

/// Leading-principal-minor recurrence for upper Hessenberg H:
/// p_k = (x - H[k-1][k-1]) p_{k-1} - sum_m H[m-1][k-1] (prod of subdiagonals) p_{m-1}.
fn hessenberg_char_poly(h: &Matrix) -> Vec<Complex64> {
    let n = h.rows();
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    // minors[k] holds the char poly of the leading k x k block, ascending.
    let mut minors: Vec<Vec<Complex64>> = vec![vec![one]];
    for k in 1..=n {
        let prev = &minors[k - 1];
        // (x - h_kk) * prev
        let hkk = h[(k - 1, k - 1)];
        let mut p = vec![zero; prev.len() + 1];
        for (i, &c) in prev.iter().enumerate() {
            p[i + 1] += c;
            p[i] -= hkk * c;
        }
        let mut prod = one;
        for m in (1..k).rev() {
            prod *= h[(m, m - 1)];
            let w = h[(m - 1, k - 1)] * prod;
            for (i, &c) in minors[m - 1].iter().enumerate() {
                p[i] -= w * c;
            }
        }
        minors.push(p);
    }
    minors.pop().unwrap()
}

/// Faddeev-LeVerrier trace recursion; O(n^4) but adequate for small n.
fn faddeev_leverrier(a: &Matrix) -> Vec<Complex64> {
    let n = a.rows();
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
    coeffs[n] = Complex64::new(1.0, 0.0);
    let mut m = Matrix::zeros(n, n); // M_0 = 0
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut mk = a.mul(&m);
        let c_prev = coeffs[n - k + 1];
        for i in 0..n {
            mk[(i, i)] += c_prev;
        }
        // c_{n-k} = -tr(A M_k) / k, with the trace taken entrywise
        let mut trace = Complex64::new(0.0, 0.0);
        for i in 0..n {
            for j in 0..n {
                trace += a[(i, j)] * mk[(j, i)];
            }
        }
        coeffs[n - k] = -trace / k as f64;
        m = mk;
    }
    coeffs
}

/// True when the characteristic polynomial of `m` matches `p` coefficientwise
/// within `tol * (1 + max |a_i|)`.
pub fn verify_companion(
    m: &CompanionMatrix,
    p: &Polynomial,
    tol: f64,
) -> Result<bool, CompanionError> {
    if m.n() != p.degree() {
        return Ok(false);
    }
    let cp = char_poly(m)?;
    let scale = 1.0 + p.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max);
    let max_diff = cp
        .coeffs()
        .iter()
        .zip(p.coeffs())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    Ok(max_diff <= tol * scale)
}

/// Dual route for validating degree-n companions too large for `char_poly`:
/// a subdiagonal-form companion is correct iff its last column is exactly the
/// negated ascending coefficient vector.
pub fn last_column_matches(m: &CompanionMatrix, p: &Polynomial) -> bool {
    if m.form != CompanionForm::FrobeniusTranspose || m.n() != p.degree() {
        return false;
    }
    let n = m.n();
    (0..n).all(|i| m.entries[(i, n - 1)] == -p.coeff(i))
}
