//! Dense complex matrices and the entrywise matrix norms used by the bound
//! pipeline.

use num_complex::Complex64;
use std::fmt;
use std::ops::{Index, IndexMut};

/// Matrix norm selector. The induced one and infinity norms and the Frobenius
/// norm all have closed forms in the entries, and all three are
/// submultiplicative, so each bounds the spectral radius from above.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NormKind {
    /// Maximum absolute column sum.
    One,
    /// Maximum absolute row sum.
    Inf,
    /// Square root of the sum of squared entry moduli.
    Fro,
}

impl NormKind {
    pub const ALL: [NormKind; 3] = [NormKind::One, NormKind::Inf, NormKind::Fro];

    pub fn name(self) -> &'static str {
        match self {
            NormKind::One => "one",
            NormKind::Inf => "inf",
            NormKind::Fro => "fro",
        }
    }
}

impl fmt::Display for NormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for NormKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "one" | "1" => Ok(NormKind::One),
            "inf" | "infinity" => Ok(NormKind::Inf),
            "fro" | "frobenius" => Ok(NormKind::Fro),
            other => Err(format!("unknown norm `{other}` (expected one, inf or fro)")),
        }
    }
}

/// Dense row-major complex matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix from row slices. Panics if the rows are ragged.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Self {
        let complex: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|row| row.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Matrix::from_rows(&complex)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }

    pub fn norm(&self, kind: NormKind) -> f64 {
        match kind {
            NormKind::One => (0..self.cols)
                .map(|j| (0..self.rows).map(|i| self[(i, j)].norm()).sum())
                .fold(0.0, f64::max),
            NormKind::Inf => (0..self.rows)
                .map(|i| (0..self.cols).map(|j| self[(i, j)].norm()).sum())
                .fold(0.0, f64::max),
            NormKind::Fro => {
                // Scale by the largest modulus so squaring cannot overflow.
                let m = self.max_abs();
                if m == 0.0 {
                    return 0.0;
                }
                let sum: f64 = self
                    .data
                    .iter()
                    .map(|z| {
                        let r = z.re / m;
                        let i = z.im / m;
                        r * r + i * i
                    })
                    .sum();
                m * sum.sqrt()
            }
        }
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&mut self, s: f64) {
        for z in &mut self.data {
            *z *= s;
        }
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub(crate) fn data_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{:.4}{:+.4}i", self[(i, j)].re, self[(i, j)].im))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Complex division that stays accurate when |b|^2 would overflow. The naive
/// quotient divides by re^2 + im^2, which is infinite for |b| above ~1.3e154;
/// scaling by the dominant component first keeps the divisor near |b|.
pub(crate) fn robust_div(a: Complex64, b: Complex64) -> Complex64 {
    if b.im.abs() <= b.re.abs() {
        let r = b.im / b.re;
        let den = b.re + b.im * r;
        Complex64::new((a.re + a.im * r) / den, (a.im - a.re * r) / den)
    } else {
        let r = b.re / b.im;
        let den = b.im + b.re * r;
        Complex64::new((a.re * r + a.im) / den, (a.im * r - a.re) / den)
    }
}

/// Multiplies a complex value by `exp2(t)` without overflowing intermediates.
///
/// Any finite nonzero f64 input and representable result is at most
/// 2^2098 away, so two chunks of at most 970 always suffice.
pub(crate) fn scale_exp2(z: Complex64, t: f64) -> Complex64 {
    if (-960.0..=960.0).contains(&t) {
        return z * f64::exp2(t);
    }
    let half = if t > 0.0 { 960.0 } else { -960.0 };
    let mut out = z;
    let mut rest = t;
    while rest.abs() > 960.0 {
        out *= f64::exp2(half);
        rest -= half;
    }
    out * f64::exp2(rest)
}
