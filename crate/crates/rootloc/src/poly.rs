//! Complex polynomials stored in ascending coefficient order, together with
//! the root multiset type returned by the root-refinement oracle.

use crate::matrix::robust_div;
use num_complex::Complex64;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("all coefficients are zero")]
    AllZero,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("constant term is zero; deflate zero roots first")]
    ZeroConstantTerm,
}

/// Polynomial with coefficients in ascending order: `coeffs()[i]` multiplies
/// `x^i`, so the constant term sits at index 0 and the leading coefficient at
/// index `degree()`.
///
/// Constructed values always have a nonzero leading coefficient. The one
/// exception is the zero polynomial (`coeffs == [0]`), which only arises as
/// the derivative of a constant.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    /// Validates a coefficient vector: trims trailing (high-order) zeros and
    /// rejects the all-zero input.
    pub fn new(mut coeffs: Vec<Complex64>) -> Result<Self, PolyError> {
        while coeffs.len() > 1 && coeffs.last() == Some(&Complex64::new(0.0, 0.0)) {
            coeffs.pop();
        }
        if coeffs.is_empty() || coeffs.iter().all(|c| *c == Complex64::new(0.0, 0.0)) {
            return Err(PolyError::AllZero);
        }
        Ok(Polynomial { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self, PolyError> {
        Polynomial::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Complex64 {
        self.coeffs.get(i).copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn leading(&self) -> Complex64 {
        *self.coeffs.last().unwrap()
    }

    pub fn constant(&self) -> Complex64 {
        self.coeffs[0]
    }

    /// Leading coefficient is exactly `1 + 0i`.
    pub fn is_monic(&self) -> bool {
        self.leading() == Complex64::new(1.0, 0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Complex64::new(0.0, 0.0)
    }

    /// Divides through by the leading coefficient; the result's leading
    /// coefficient is set to exactly one.
    pub fn monicize(&self) -> Polynomial {
        if self.is_monic() {
            return self.clone();
        }
        let lead = self.leading();
        let mut coeffs: Vec<Complex64> = self.coeffs.iter().map(|&c| robust_div(c, lead)).collect();
        *coeffs.last_mut().unwrap() = Complex64::new(1.0, 0.0);
        Polynomial { coeffs }
    }

    /// Monic reversal polynomial: for monic p with nonzero constant term a0,
    /// returns q(x) = x^n p(1/x) / a0, whose roots are the reciprocals of the
    /// roots of p.
    pub fn reversal(&self) -> Result<Polynomial, PolyError> {
        if !self.is_monic() {
            return Err(PolyError::NotMonic);
        }
        if self.constant() == Complex64::new(0.0, 0.0) {
            return Err(PolyError::ZeroConstantTerm);
        }
        let a0 = self.constant();
        let mut coeffs: Vec<Complex64> = self.coeffs.iter().rev().map(|&c| robust_div(c, a0)).collect();
        *coeffs.last_mut().unwrap() = Complex64::new(1.0, 0.0);
        Ok(Polynomial { coeffs })
    }

    /// Horner evaluation. Each step runs on fused multiply-adds, so the real
    /// and imaginary accumulators round at most twice per coefficient.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        let mut sr = 0.0f64;
        let mut si = 0.0f64;
        for a in self.coeffs.iter().rev() {
            let re = sr.mul_add(z.re, (-si).mul_add(z.im, a.re));
            let im = sr.mul_add(z.im, si.mul_add(z.re, a.im));
            sr = re;
            si = im;
        }
        Complex64::new(sr, si)
    }

    /// Coefficientwise derivative. The derivative of a constant is the zero
    /// polynomial of degree 0.
    pub fn derivative(&self) -> Polynomial {
        if self.degree() == 0 {
            return Polynomial {
                coeffs: vec![Complex64::new(0.0, 0.0)],
            };
        }
        let coeffs: Vec<Complex64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * i as f64)
            .collect();
        Polynomial { coeffs }
    }

    /// Sum of |a_i| r^i, the natural residual scale for a point of modulus r.
    pub fn abs_term_sum(&self, r: f64) -> f64 {
        let mut s = 0.0f64;
        for a in self.coeffs.iter().rev() {
            s = s.mul_add(r, a.norm());
        }
        s
    }
}

/// Root multiset sorted by non-decreasing modulus, with the residual |p(z)|
/// and a convergence flag recorded per root.
#[derive(Clone, Debug)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    pub residuals: Vec<f64>,
    pub converged: Vec<bool>,
}

impl RootSet {
    /// Sorts the three parallel vectors by (modulus, re, im).
    pub(crate) fn new_sorted(
        roots: Vec<Complex64>,
        residuals: Vec<f64>,
        converged: Vec<bool>,
    ) -> Self {
        let mut idx: Vec<usize> = (0..roots.len()).collect();
        idx.sort_by(|&a, &b| {
            let ka = (roots[a].norm(), roots[a].re, roots[a].im);
            let kb = (roots[b].norm(), roots[b].re, roots[b].im);
            ka.partial_cmp(&kb).unwrap_or(std::cmp::Ordering::Equal)
        });
        RootSet {
            roots: idx.iter().map(|&i| roots[i]).collect(),
            residuals: idx.iter().map(|&i| residuals[i]).collect(),
            converged: idx.iter().map(|&i| converged[i]).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn max_modulus(&self) -> f64 {
        self.roots.last().map_or(0.0, |z| z.norm())
    }

    pub fn min_modulus(&self) -> f64 {
        self.roots.first().map_or(0.0, |z| z.norm())
    }

    pub fn all_converged(&self) -> bool {
        self.converged.iter().all(|&c| c)
    }
}
