//! Integer powers of companion matrices that never overflow: the matrix is
//! held as `2^e * body` with an explicit exponent, and norms come back in the
//! log domain. Subdiagonal companions use the block structure of their powers
//! (only the last k columns are dense) for an O(nk) representation when k < n.

use crate::companion::{CompanionForm, CompanionMatrix};
use crate::matrix::{scale_exp2, Matrix, NormKind};
use num_complex::Complex64;

/// Base-2 logarithm of a nonnegative magnitude; negative infinity encodes
/// zero. Keeping norms in the log domain lets quantities like 10^2000 flow
/// through the k-th-root bound formulas without overflow.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogMagnitude {
    pub log2_value: f64,
}

impl LogMagnitude {
    pub fn zero() -> Self {
        LogMagnitude {
            log2_value: f64::NEG_INFINITY,
        }
    }

    pub fn is_zero(self) -> bool {
        self.log2_value == f64::NEG_INFINITY
    }

    /// exp2 of the stored log; may overflow to infinity for huge magnitudes.
    pub fn value(self) -> f64 {
        self.log2_value.exp2()
    }
}

/// A matrix power stored as `2^exponent * body`, where `body` is either dense
/// or the structured form of a subdiagonal-companion power.
///
/// In the structured form the true matrix is
///   column j (j < n-k): single entry `shift[j]` at row k+j, held in true
///   scale (it starts as the exact 1 of the power's shift block);
///   columns n-k..n-1: `2^exponent * cols`.
/// The dense body is renormalized so its largest entry modulus stays in
/// [1/2, 2) after every multiplication.
#[derive(Clone, Debug)]
pub struct ScaledMatrix {
    pub(crate) body: Body,
    pub(crate) exponent: i64,
    pub(crate) k: u32,
    pub(crate) n: usize,
}

#[derive(Clone, Debug)]
pub(crate) enum Body {
    Dense(Matrix),
    Structured { shift: Vec<f64>, cols: Matrix },
}

/// Scaled-float accumulator: `m * 2^e` with unbounded exponent, enough to add
/// row/column sums whose scales differ by thousands of binary orders.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Sf {
    m: f64,
    e: i64,
}

impl Sf {
    pub(crate) fn zero() -> Self {
        Sf { m: 0.0, e: 0 }
    }

    pub(crate) fn new(m: f64, e: i64) -> Self {
        Sf { m, e }.renorm()
    }

    fn renorm(mut self) -> Self {
        if self.m == 0.0 {
            self.e = 0;
            return self;
        }
        while self.m.abs() >= 1e100 {
            self.m *= 2f64.powi(-256);
            self.e += 256;
        }
        while self.m.abs() < 1e-100 {
            self.m *= 2f64.powi(256);
            self.e -= 256;
        }
        self
    }

    pub(crate) fn add(self, other: Sf) -> Sf {
        if self.m == 0.0 {
            return other;
        }
        if other.m == 0.0 {
            return self;
        }
        let (hi, lo) = if self.e >= other.e { (self, other) } else { (other, self) };
        let shift = lo.e - hi.e; // <= 0
        let m = if shift < -2000 {
            hi.m
        } else {
            hi.m + lo.m * f64::exp2(shift as f64)
        };
        Sf { m, e: hi.e }.renorm()
    }

    /// Multiplies by exp2(t) for real t.
    pub(crate) fn mul_exp2(self, t: f64) -> Sf {
        if self.m == 0.0 {
            return self;
        }
        let ti = t.floor();
        Sf {
            m: self.m * f64::exp2(t - ti),
            e: self.e + ti as i64,
        }
        .renorm()
    }

    pub(crate) fn is_zero(self) -> bool {
        self.m == 0.0
    }

    pub(crate) fn log2(self) -> f64 {
        if self.m == 0.0 {
            f64::NEG_INFINITY
        } else {
            self.m.log2() + self.e as f64
        }
    }
}

/// Brings the dense matrix's largest modulus into [1, 2), returning the
/// exponent shift applied. Scaling is by a power of two, hence exact.
fn normalize(m: &mut Matrix) -> i64 {
    let max = m.max_abs();
    if max == 0.0 || !max.is_finite() {
        return 0;
    }
    let shift = max.log2().floor() as i64;
    if shift != 0 {
        let factor = f64::exp2(-shift as f64);
        m.scale(factor);
    }
    shift
}

impl ScaledMatrix {
    /// Wraps a plain matrix as `2^e * body` with e chosen by normalization.
    pub fn from_matrix(m: Matrix, k: u32) -> Self {
        let n = m.rows();
        let mut body = m;
        let exponent = normalize(&mut body);
        ScaledMatrix {
            body: Body::Dense(body),
            exponent,
            k,
            n,
        }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_structured(&self) -> bool {
        matches!(self.body, Body::Structured { .. })
    }

    /// Materializes the true matrix. Entries outside the f64 range come back
    /// as infinities or zeros; intended for tests and small powers.
    pub fn to_dense_true(&self) -> Matrix {
        let n = self.n;
        match &self.body {
            Body::Dense(m) => {
                let mut out = m.clone();
                for z in out.data_mut() {
                    *z = scale_exp2(*z, self.exponent as f64);
                }
                out
            }
            Body::Structured { shift, cols } => {
                let k = self.k as usize;
                let mut out = Matrix::zeros(n, n);
                for (j, &s) in shift.iter().enumerate() {
                    out[(k + j, j)] = Complex64::new(s, 0.0);
                }
                for i in 0..n {
                    for c in 0..k {
                        out[(i, n - k + c)] = scale_exp2(cols[(i, c)], self.exponent as f64);
                    }
                }
                out
            }
        }
    }

    /// Exact-value norm, valid while the true norm fits in f64. Used for the
    /// k = 1 fast path where callers expect plain entry sums.
    pub(crate) fn norm_value(&self, kind: NormKind) -> f64 {
        let e = self.exponent as f64;
        match &self.body {
            Body::Dense(m) => {
                let b = m.norm(kind);
                b * f64::exp2(e)
            }
            Body::Structured { shift, cols } => {
                let k = self.k as usize;
                let n = self.n;
                match kind {
                    NormKind::One => {
                        let s = shift.iter().fold(0.0f64, |a, &x| a.max(x.abs()));
                        let d = (0..k)
                            .map(|c| (0..n).map(|i| cols[(i, c)].norm()).sum::<f64>())
                            .fold(0.0, f64::max)
                            * f64::exp2(e);
                        s.max(d)
                    }
                    NormKind::Inf => (0..n)
                        .map(|i| {
                            let sh = if i >= k { shift[i - k].abs() } else { 0.0 };
                            let row: f64 = (0..k).map(|c| cols[(i, c)].norm()).sum();
                            sh + row * f64::exp2(e)
                        })
                        .fold(0.0, f64::max),
                    NormKind::Fro => {
                        let s2: f64 = shift.iter().map(|&x| x * x).sum();
                        let d: f64 = cols.norm(NormKind::Fro);
                        let d_scaled = d * f64::exp2(e);
                        (s2 + d_scaled * d_scaled).sqrt()
                    }
                }
            }
        }
    }
}

/// Raises a companion matrix to the k-th power, k >= 1.
///
/// Subdiagonal companions use the column-append recurrence at every k: each
/// step of C^(t+1) = C^t C shifts the columns left and appends one new
/// column, so a power costs O(n^2) per step and each column suffers the
/// cancellation of exactly one accumulated sum. (Square-and-multiply is both
/// slower here and numerically much worse: squaring compounds the
/// cancellation noise of these sign-alternating powers.) Below k = n the
/// untouched columns form an exact shifted identity and only the last k
/// columns are stored. Other companion forms go through square-and-multiply.
/// Every path renormalizes the stored exponent after every multiplication.
pub fn companion_power(c: &CompanionMatrix, k: u32) -> ScaledMatrix {
    assert!(k >= 1, "power must be at least 1");
    let n = c.n();
    if c.form() == CompanionForm::FrobeniusTranspose && n >= 2 {
        appended_power(c, k)
    } else {
        dense_power(c.entries(), k, n)
    }
}

fn appended_power(c: &CompanionMatrix, k: u32) -> ScaledMatrix {
    let n = c.n();
    let b: Vec<Complex64> = (0..n).map(|i| c.entries()[(i, n - 1)]).collect();
    // columns n - min(t, n) .. n-1 of C^t, oldest first, in body units
    let mut cols: Vec<Vec<Complex64>> = vec![b.clone()];
    let mut exponent = normalize_cols(&mut cols);
    for t in 1..k as usize {
        let stored = cols.len(); // min(t, n)
        let mut newcol = vec![Complex64::new(0.0, 0.0); n];
        for (i, entry) in newcol.iter_mut().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for (c_idx, col) in cols.iter().enumerate() {
                // col holds column n - stored + c_idx of C^t
                acc += col[i] * b[n - stored + c_idx];
            }
            if t < n && i >= t {
                // true-scale shift contribution, folded into body units
                acc += scale_exp2(b[i - t], -(exponent as f64));
            }
            *entry = acc;
        }
        cols.push(newcol);
        if cols.len() > n {
            cols.remove(0);
        }
        exponent += normalize_cols(&mut cols);
    }
    let stored = cols.len();
    let mut block = Matrix::zeros(n, stored);
    for (c_idx, col) in cols.iter().enumerate() {
        for (i, &z) in col.iter().enumerate() {
            block[(i, c_idx)] = z;
        }
    }
    if (k as usize) < n {
        ScaledMatrix {
            body: Body::Structured {
                shift: vec![1.0; n - k as usize],
                cols: block,
            },
            exponent,
            k,
            n,
        }
    } else {
        ScaledMatrix {
            body: Body::Dense(block),
            exponent,
            k,
            n,
        }
    }
}

/// Brings the largest modulus across the column set into [1, 2).
fn normalize_cols(cols: &mut [Vec<Complex64>]) -> i64 {
    let max = cols
        .iter()
        .flatten()
        .map(|z| z.norm())
        .fold(0.0f64, f64::max);
    if max == 0.0 || !max.is_finite() {
        return 0;
    }
    let shift = max.log2().floor() as i64;
    if shift != 0 {
        let factor = f64::exp2(-shift as f64);
        for col in cols.iter_mut() {
            for z in col {
                *z *= factor;
            }
        }
    }
    shift
}

fn dense_power(base: &Matrix, k: u32, n: usize) -> ScaledMatrix {
    let mut base_body = base.clone();
    let mut base_exp = normalize(&mut base_body);
    let mut acc: Option<(Matrix, i64)> = None;
    let mut remaining = k;
    loop {
        if remaining & 1 == 1 {
            acc = Some(match acc {
                None => (base_body.clone(), base_exp),
                Some((m, e)) => {
                    let mut prod = m.mul(&base_body);
                    let shift = normalize(&mut prod);
                    (prod, e + base_exp + shift)
                }
            });
        }
        remaining >>= 1;
        if remaining == 0 {
            break;
        }
        let mut sq = base_body.mul(&base_body);
        let shift = normalize(&mut sq);
        base_exp = 2 * base_exp + shift;
        base_body = sq;
    }
    let (body, exponent) = acc.expect("k >= 1");
    ScaledMatrix {
        body: Body::Dense(body),
        exponent,
        k,
        n,
    }
}

/// Log-domain norm of the true matrix `2^e * body`. The structured path sums
/// the implicit shift-block columns without materializing them.
pub fn norm(m: &ScaledMatrix, kind: NormKind) -> LogMagnitude {
    let e = m.exponent;
    match &m.body {
        Body::Dense(body) => {
            let b = body.norm(kind);
            if b == 0.0 {
                LogMagnitude::zero()
            } else {
                LogMagnitude {
                    log2_value: b.log2() + e as f64,
                }
            }
        }
        Body::Structured { shift, cols } => {
            let k = m.k as usize;
            let n = m.n;
            match kind {
                NormKind::One => {
                    let best_shift = shift.iter().fold(0.0f64, |a, &x| a.max(x.abs()));
                    let best_dense = (0..k)
                        .map(|c| (0..n).map(|i| cols[(i, c)].norm()).sum::<f64>())
                        .fold(0.0, f64::max);
                    let a = Sf::new(best_shift, 0);
                    let b = Sf::new(best_dense, e);
                    let log = a.log2().max(b.log2());
                    LogMagnitude { log2_value: log }
                }
                NormKind::Inf => {
                    let mut best = f64::NEG_INFINITY;
                    for i in 0..n {
                        let row: f64 = (0..k).map(|c| cols[(i, c)].norm()).sum();
                        let mut sum = Sf::new(row, e);
                        if i >= k {
                            sum = sum.add(Sf::new(shift[i - k].abs(), 0));
                        }
                        best = best.max(sum.log2());
                    }
                    LogMagnitude { log2_value: best }
                }
                NormKind::Fro => {
                    let s2: f64 = shift.iter().map(|&x| x * x).sum();
                    let d = cols.norm(NormKind::Fro);
                    let total = Sf::new(s2, 0).add(Sf::new(d * d, 2 * e));
                    LogMagnitude {
                        log2_value: total.log2() / 2.0,
                    }
                }
            }
        }
    }
}

/// k-th root of the named norm, N(C^k)^(1/k), evaluated in the log domain so
/// the intermediate norm may exceed the f64 range. At k = 1 this returns the
/// plain norm value exactly.
pub fn root_norm(m: &ScaledMatrix, kind: NormKind) -> f64 {
    if m.k == 1 {
        let v = m.norm_value(kind);
        if v.is_finite() {
            return v;
        }
    }
    let lm = norm(m, kind);
    if lm.is_zero() {
        return 0.0;
    }
    f64::exp2(lm.log2_value / m.k as f64)
}
