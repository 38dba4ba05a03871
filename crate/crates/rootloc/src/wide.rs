//! Multi-hundred-bit complex arithmetic and a wide-precision variant of the
//! simultaneous root refiner. The benchmark generators hand exact rational
//! coefficients to this module so reference root moduli can be computed to
//! far better than double precision, matching how the published reference
//! values were produced.

use dashu_float::ops::SquareRoot;
use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::{IBig, UBig};
use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_rational::BigRational;

pub(crate) type WF = FBig<HalfEven, 2>;

pub(crate) fn bigint_to_ibig(x: &BigInt) -> IBig {
    let (sign, bytes) = x.to_bytes_le();
    let mag = IBig::from(UBig::from_le_bytes(&bytes));
    if sign == Sign::Minus {
        -mag
    } else {
        mag
    }
}

pub(crate) fn rational_to_wf(q: &BigRational, prec: usize) -> WF {
    let num = WF::from(bigint_to_ibig(q.numer())).with_precision(prec).value();
    let den = WF::from(bigint_to_ibig(q.denom())).with_precision(prec).value();
    num / den
}

pub(crate) fn f64_to_wf(x: f64, prec: usize) -> WF {
    WF::try_from(x)
        .expect("finite f64")
        .with_precision(prec)
        .value()
}

fn wf_zero(prec: usize) -> WF {
    WF::from(0).with_precision(prec).value()
}

/// Complex number over wide floats.
#[derive(Clone, Debug)]
pub(crate) struct WC {
    pub re: WF,
    pub im: WF,
}

impl WC {
    pub fn zero(prec: usize) -> Self {
        WC {
            re: wf_zero(prec),
            im: wf_zero(prec),
        }
    }

    pub fn from_rationals(re: &BigRational, im: &BigRational, prec: usize) -> Self {
        WC {
            re: rational_to_wf(re, prec),
            im: rational_to_wf(im, prec),
        }
    }

    pub fn from_c64(z: Complex64, prec: usize) -> Self {
        WC {
            re: f64_to_wf(z.re, prec),
            im: f64_to_wf(z.im, prec),
        }
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64().value(), self.im.to_f64().value())
    }

    pub fn add(&self, o: &WC) -> WC {
        WC {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn sub(&self, o: &WC) -> WC {
        WC {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn mul(&self, o: &WC) -> WC {
        WC {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    pub fn div(&self, o: &WC) -> WC {
        let den = o.abs2();
        WC {
            re: (&self.re * &o.re + &self.im * &o.im) / &den,
            im: (&self.im * &o.re - &self.re * &o.im) / &den,
        }
    }

    pub fn scale(&self, s: &WF) -> WC {
        WC {
            re: &self.re * s,
            im: &self.im * s,
        }
    }

    pub fn abs2(&self) -> WF {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn abs(&self) -> WF {
        self.abs2().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.re.repr().is_zero() && self.im.repr().is_zero()
    }
}

fn horner(coeffs: &[WC], z: &WC) -> WC {
    let mut acc = WC::zero(z.re.precision());
    for c in coeffs.iter().rev() {
        acc = acc.mul(z).add(c);
    }
    acc
}

fn horner_abs(abs_coeffs: &[WF], r: &WF) -> WF {
    let mut acc = wf_zero(r.precision());
    for c in abs_coeffs.iter().rev() {
        acc = acc * r + c;
    }
    acc
}

pub(crate) struct WideRoots {
    pub roots: Vec<Complex64>,
    pub moduli: Vec<f64>,
    pub converged: Vec<bool>,
}

/// Simultaneous (Jacobi-style) Ehrlich-Aberth refinement over wide floats.
///
/// `coeffs` must be monic and ascending. A root freezes once its residual
/// drops below 2^-(prec-20) of the termwise evaluation scale, or once its
/// correction stagnates near the arithmetic noise floor; the returned flags
/// redo the residual test at the final positions.
pub(crate) fn aberth_wide(
    coeffs: &[WC],
    init: &[Complex64],
    prec: usize,
    max_iters: u32,
) -> WideRoots {
    let n = coeffs.len() - 1;
    assert_eq!(init.len(), n);
    let deriv: Vec<WC> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.scale(&f64_to_wf(i as f64, prec)))
        .collect();
    let abs_coeffs: Vec<WF> = coeffs.iter().map(WC::abs).collect();
    let res_tol = pow2_wf(-((prec as isize) - 20), prec);
    let step_tol2 = pow2_wf(-(3 * prec as isize / 2), prec); // squared threshold
    let one = f64_to_wf(1.0, prec);

    let debug = std::env::var_os("ROOTLOC_WIDE_DEBUG").is_some();
    let mut z: Vec<WC> = init.iter().map(|&p| WC::from_c64(p, prec)).collect();
    let mut frozen = vec![false; n];
    for _iter in 0..max_iters {
        if debug && _iter % 25 == 0 {
            let nf = frozen.iter().filter(|&&f| f).count();
            let active: Vec<String> = z
                .iter()
                .zip(&frozen)
                .filter(|(_, &f)| !f)
                .take(4)
                .map(|(zi, _)| format!("{:.3e}", zi.abs().to_f64().value()))
                .collect();
            eprintln!("[wide] iter={_iter} frozen={nf}/{n} active moduli: {active:?}");
        }
        if frozen.iter().all(|&f| f) {
            break;
        }
        let mut deltas: Vec<Option<WC>> = vec![None; n];
        for i in 0..n {
            if frozen[i] {
                continue;
            }
            let pz = horner(coeffs, &z[i]);
            let r = z[i].abs();
            let ts = horner_abs(&abs_coeffs, &r);
            let bound = &res_tol * &ts;
            if pz.abs2() <= &bound * &bound {
                frozen[i] = true;
                continue;
            }
            let dz = horner(&deriv, &z[i]);
            if dz.is_zero() {
                // nudge off a stationary point
                deltas[i] = Some(WC {
                    re: -(&one + &r) * pow2_wf(-20, prec),
                    im: wf_zero(prec),
                });
                continue;
            }
            let w = pz.div(&dz);
            let mut s = WC::zero(prec);
            for (j, zj) in z.iter().enumerate() {
                if j == i {
                    continue;
                }
                let diff = z[i].sub(zj);
                if !diff.is_zero() {
                    s = s.add(&WC {
                        re: one.clone(),
                        im: wf_zero(prec),
                    }
                    .div(&diff));
                }
            }
            let denom = WC {
                re: &one - &(w.re.clone() * &s.re - w.im.clone() * &s.im),
                im: -(w.re.clone() * &s.im + w.im.clone() * &s.re),
            };
            let delta = if denom.is_zero() { w } else { w.div(&denom) };
            // stagnation at the noise floor counts as frozen
            let scale2 = &one + &z[i].abs2();
            if delta.abs2() <= &step_tol2 * &scale2 {
                frozen[i] = true;
                continue;
            }
            deltas[i] = Some(delta);
        }
        for i in 0..n {
            if let Some(d) = deltas[i].take() {
                z[i] = z[i].sub(&d);
            }
        }
    }

    let mut roots = Vec::with_capacity(n);
    let mut moduli = Vec::with_capacity(n);
    let mut converged = Vec::with_capacity(n);
    for zi in &z {
        let pz = horner(coeffs, zi);
        let r = zi.abs();
        let ts = horner_abs(&abs_coeffs, &r);
        let bound = &res_tol * &ts;
        converged.push(pz.abs2() <= &bound * &bound);
        roots.push(zi.to_c64());
        moduli.push(r.to_f64().value());
    }
    WideRoots {
        roots,
        moduli,
        converged,
    }
}

fn pow2_wf(exp: isize, prec: usize) -> WF {
    WF::from_parts(IBig::from(1), exp).with_precision(prec).value()
}
