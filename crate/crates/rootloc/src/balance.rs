//! Diagonal-similarity balancing. One sweep computes a diagonal D from
//! explicit row/column sum formulas (earlier indices enter with their already
//! updated scale factors) and replaces A by D A D^-1; iterating sweeps
//! typically shrinks every norm toward the spectral radius while leaving the
//! eigenvalues untouched.

use crate::matrix::{scale_exp2, Matrix};
use crate::powers::{Body, ScaledMatrix, Sf};

/// Positive diagonal of a balancing transformation D.
#[derive(Clone, Debug)]
pub struct DiagonalScaling {
    pub d: Vec<f64>,
}

/// One balancing sweep over a plain matrix: returns `D A D^-1` and D.
///
/// Index i's scale factor is sqrt(column-sum / row-sum), where entries at
/// already-visited indices s < i are weighted by d_s (columns) or 1/d_s
/// (rows) and the diagonal never participates. An index whose numerator or
/// denominator vanishes keeps d_i = 1.
pub fn balance_sweep(a: &Matrix) -> (Matrix, DiagonalScaling) {
    assert!(a.is_square(), "balancing needs a square matrix");
    let n = a.rows();
    let mut d = vec![1.0f64; n];
    for i in 0..n {
        let mut num = 0.0;
        let mut den = 0.0;
        for s in 0..n {
            if s == i {
                continue;
            }
            let col_entry = a[(s, i)].norm();
            let row_entry = a[(i, s)].norm();
            if s < i {
                num += col_entry * d[s];
                den += row_entry / d[s];
            } else {
                num += col_entry;
                den += row_entry;
            }
        }
        if num > 0.0 && den > 0.0 && num.is_finite() && den.is_finite() {
            d[i] = (num / den).sqrt();
        }
    }
    let mut out = a.clone();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out[(i, j)] = a[(i, j)] * (d[i] / d[j]);
            }
        }
    }
    (out, DiagonalScaling { d })
}

/// Applies `iterations` balancing sweeps; zero iterations returns the input
/// unchanged.
pub fn balance(a: &Matrix, iterations: u32) -> Matrix {
    let mut m = a.clone();
    for _ in 0..iterations {
        m = balance_sweep(&m).0;
    }
    m
}

/// Balances the body of a scaled matrix power in place. Diagonal similarity
/// commutes with the scalar 2^e, so the exponent only moves through the
/// renormalization that keeps the stored body inside the f64 range.
pub(crate) fn balance_scaled(m: &mut ScaledMatrix, iterations: u32) {
    for _ in 0..iterations {
        match &mut m.body {
            Body::Dense(body) => {
                let g = sweep_dense_log(body);
                m.exponent += g;
            }
            Body::Structured { shift, cols } => {
                let g = sweep_structured_log(shift, cols, m.exponent, m.k as usize);
                m.exponent += g;
            }
        }
    }
}

/// Log-domain sweep on a dense body. Returns the exponent shift that keeps
/// the rescaled body's largest modulus near one.
fn sweep_dense_log(body: &mut Matrix) -> i64 {
    let n = body.rows();
    let mut d = vec![0.0f64; n]; // log2 of the diagonal scale factors
    for i in 0..n {
        let mut num = 0.0f64;
        let mut den = 0.0f64;
        for s in 0..n {
            if s == i {
                continue;
            }
            let col_entry = body[(s, i)].norm();
            let row_entry = body[(i, s)].norm();
            if s < i {
                num += col_entry * f64::exp2(d[s]);
                den += row_entry * f64::exp2(-d[s]);
            } else {
                num += col_entry;
                den += row_entry;
            }
        }
        if num > 0.0 && den > 0.0 && num.is_finite() && den.is_finite() {
            d[i] = (num.log2() - den.log2()) / 2.0;
        }
    }
    apply_log_scaling(body, |i, j| d[i] - d[j])
}

/// Log-domain sweep on a structured body: the shift block lives in true
/// scale while the dense columns carry 2^e, so the sums run through
/// scaled-float accumulators.
fn sweep_structured_log(shift: &mut [f64], cols: &mut Matrix, e: i64, k: usize) -> i64 {
    let n = cols.rows();
    let nk = n - k;
    let mut d = vec![0.0f64; n];
    for i in 0..n {
        let mut num = Sf::zero();
        let mut den = Sf::zero();
        // column i
        if i < nk {
            // single shift entry at row k + i, always below the diagonal
            num = num.add(Sf::new(shift[i].abs(), 0));
        } else {
            let c = i - nk;
            for s in 0..n {
                if s == i {
                    continue;
                }
                let term = Sf::new(cols[(s, c)].norm(), e);
                num = num.add(if s < i { term.mul_exp2(d[s]) } else { term });
            }
        }
        // row i
        if i >= k {
            let j = i - k; // shift entry column, always left of the diagonal
            den = den.add(Sf::new(shift[j].abs(), 0).mul_exp2(-d[j]));
        }
        for c in 0..k {
            let j = nk + c;
            if j == i {
                continue;
            }
            let term = Sf::new(cols[(i, c)].norm(), e);
            den = den.add(if j < i { term.mul_exp2(-d[j]) } else { term });
        }
        if !num.is_zero() && !den.is_zero() {
            d[i] = (num.log2() - den.log2()) / 2.0;
        }
    }
    for j in 0..nk {
        shift[j] = scale_exp2(num_complex::Complex64::new(shift[j], 0.0), d[k + j] - d[j]).re;
    }
    apply_log_scaling(cols, |i, c| d[i] - d[nk + c])
}

/// Rescales entries by exp2(delta(i, j) - g), where g re-centers the largest
/// resulting modulus near one; returns g for the caller's exponent.
fn apply_log_scaling(m: &mut Matrix, delta: impl Fn(usize, usize) -> f64) -> i64 {
    let rows = m.rows();
    let cols = m.cols();
    let mut gmax = f64::NEG_INFINITY;
    for i in 0..rows {
        for j in 0..cols {
            let a = m[(i, j)].norm();
            if a > 0.0 {
                gmax = gmax.max(a.log2() + delta(i, j));
            }
        }
    }
    if !gmax.is_finite() {
        return 0;
    }
    let g = gmax.ceil() as i64;
    for i in 0..rows {
        for j in 0..cols {
            let z = m[(i, j)];
            if z.norm() > 0.0 {
                m[(i, j)] = scale_exp2(z, delta(i, j) - g as f64);
            }
        }
    }
    g
}
