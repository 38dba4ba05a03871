//! Exact complex-rational arithmetic for the benchmark generators: banded
//! determinants of a shifted Toeplitz matrix and Newton interpolation, both
//! over Gaussian rationals so the degree-100 characteristic polynomial comes
//! out exact before a single rounding to double precision.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Complex number with exact rational components.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct GRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GRat {
    pub fn zero() -> Self {
        GRat {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GRat {
            re: BigRational::from_integer(BigInt::from(re)),
            im: BigRational::from_integer(BigInt::from(im)),
        }
    }

    pub fn from_big(re: BigInt) -> Self {
        GRat {
            re: BigRational::from_integer(re),
            im: BigRational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &GRat) -> GRat {
        GRat {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn sub(&self, o: &GRat) -> GRat {
        GRat {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn mul(&self, o: &GRat) -> GRat {
        GRat {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    pub fn div(&self, o: &GRat) -> GRat {
        let den = &o.re * &o.re + &o.im * &o.im;
        GRat {
            re: (&self.re * &o.re + &self.im * &o.im) / &den,
            im: (&self.im * &o.re - &self.re * &o.im) / &den,
        }
    }

    pub fn neg(&self) -> GRat {
        GRat {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn is_gaussian_integer(&self) -> bool {
        self.re.is_integer() && self.im.is_integer()
    }
}

/// Toeplitz band: `value(d)` is the constant on diagonal offset d = j - i.
pub(crate) struct BandSpec {
    pub lo: isize,
    pub hi: isize,
    pub values: Vec<GRat>,
}

impl BandSpec {
    pub fn value(&self, d: isize) -> GRat {
        if d < self.lo || d > self.hi {
            GRat::zero()
        } else {
            self.values[(d - self.lo) as usize].clone()
        }
    }
}

/// Exact determinant of (zI - A) for the banded Toeplitz matrix A.
///
/// Gaussian elimination with first-nonzero pivoting, confined to the band:
/// with lower bandwidth 2, fill never extends a row past column i + 8, so
/// each step touches O(bandwidth^2) entries.
pub(crate) fn det_shifted(band: &BandSpec, n: usize, z: &BigInt) -> GRat {
    let zq = GRat::from_big(z.clone());
    let mut m: Vec<Vec<GRat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let a = band.value(j as isize - i as isize);
                    if i == j {
                        zq.sub(&a)
                    } else {
                        a.neg()
                    }
                })
                .collect()
        })
        .collect();

    let lower = (-band.lo) as usize; // nonzero rows below a pivot
    let reach = (band.hi - band.lo) as usize; // worst-case fill extent past the pivot
    let mut sign_flip = false;
    let mut pivots: Vec<GRat> = Vec::with_capacity(n);
    for k in 0..n {
        let last_row = (k + lower).min(n - 1);
        let pivot_row = (k..=last_row).find(|&r| !m[r][k].is_zero());
        let pivot_row = match pivot_row {
            Some(r) => r,
            None => return GRat::zero(),
        };
        if pivot_row != k {
            m.swap(pivot_row, k);
            sign_flip = !sign_flip;
        }
        let last_col = (k + reach).min(n - 1);
        for r in k + 1..=last_row {
            if m[r][k].is_zero() {
                continue;
            }
            let f = m[r][k].div(&m[k][k]);
            for j in k..=last_col {
                let sub = f.mul(&m[k][j]);
                m[r][j] = m[r][j].sub(&sub);
            }
        }
        pivots.push(m[k][k].clone());
    }
    let mut det = pivots
        .into_iter()
        .fold(GRat::from_ints(1, 0), |acc, p| acc.mul(&p));
    if sign_flip {
        det = det.neg();
    }
    det
}

/// Exact Newton interpolation through (nodes[i], values[i]). Returns the
/// ascending coefficients of the unique degree n-1 polynomial.
pub(crate) fn interpolate(nodes: &[BigInt], values: &[GRat]) -> Vec<GRat> {
    let n = nodes.len();
    assert_eq!(values.len(), n);
    let mut dd: Vec<GRat> = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = dd[i].sub(&dd[i - 1]);
            let den = GRat::from_big(&nodes[i] - &nodes[i - level]);
            dd[i] = num.div(&den);
        }
    }
    // expand the Newton form from the highest divided difference down
    let mut poly = vec![dd[n - 1].clone()];
    for i in (0..n - 1).rev() {
        let node = GRat::from_big(nodes[i].clone());
        let mut next = vec![GRat::zero(); poly.len() + 1];
        for (j, c) in poly.iter().enumerate() {
            next[j + 1] = next[j + 1].add(c);
            let shift = node.mul(c);
            next[j] = next[j].sub(&shift);
        }
        next[0] = next[0].add(&dd[i]);
        poly = next;
    }
    poly
}
