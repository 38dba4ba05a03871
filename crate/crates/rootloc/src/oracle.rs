//! Independent root refinement via simultaneous Ehrlich-Aberth iteration.
//! This is the ground-truth side of the crate: everything the bound pipeline
//! claims is checked against roots produced here.

use crate::bounds;
use crate::matrix::{robust_div, NormKind};
use crate::poly::{Polynomial, RootSet};
use crate::wide;

use num_complex::Complex64;
use num_rational::BigRational;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Clone, Debug, Error)]
pub enum OracleError {
    #[error("root refinement did not converge for the extremal roots")]
    DidNotConverge { partial: RootSet },
}

/// Refinement settings. The tolerance is relative to the termwise evaluation
/// scale sum |a_i| |z|^i at each root.
#[derive(Clone, Debug)]
pub struct AberthConfig {
    pub tol: f64,
    pub max_iters: u32,
    pub init_radius_hint: Option<f64>,
}

impl Default for AberthConfig {
    fn default() -> Self {
        AberthConfig {
            tol: 1e-12,
            max_iters: 200,
            init_radius_hint: None,
        }
    }
}

/// Finds all roots of p simultaneously. Zero roots are deflated up front and
/// re-appended exactly. Roots that fail the residual test after `max_iters`
/// sweeps come back flagged rather than as an error.
///
/// Initial guesses sit equally spaced on the circle whose radius is the
/// geometric mean of a cheap k = 1 annulus (or the caller's hint), with a
/// fixed angular offset so real-axis symmetry cannot trap the iteration.
pub fn aberth_roots(p: &Polynomial, cfg: &AberthConfig) -> RootSet {
    assert!(p.degree() >= 1, "degree must be at least 1");
    let monic = p.monicize();
    let record = bounds::deflate_zero_roots(&monic);
    let work = record.deflated;
    let n = work.degree();

    let (mut roots, mut converged) = if n == 0 {
        (Vec::new(), Vec::new())
    } else if n == 1 {
        (vec![-work.coeff(0)], vec![true])
    } else {
        let radius = cfg
            .init_radius_hint
            .filter(|r| r.is_finite() && *r > 0.0)
            .unwrap_or_else(|| {
                bounds::annulus(&work, 1, 1, &NormKind::ALL, 0)
                    .map(|a| (a.r_lo * a.r_hi).sqrt())
                    .ok()
                    .filter(|r| r.is_finite() && *r > 0.0)
                    .unwrap_or(1.0)
            });
        let init: Vec<Complex64> = (0..n)
            .map(|j| {
                let theta = 2.0 * PI * j as f64 / n as f64 + 0.43;
                radius * Complex64::new(theta.cos(), theta.sin())
            })
            .collect();
        iterate(&work, init, cfg)
    };

    // zero roots re-appended with exact residuals
    let mut residuals: Vec<f64> = roots.iter().map(|&z| p.evaluate(z).norm()).collect();
    for _ in 0..record.zero_root_multiplicity {
        roots.push(Complex64::new(0.0, 0.0));
        residuals.push(p.evaluate(Complex64::new(0.0, 0.0)).norm());
        converged.push(true);
    }
    RootSet::new_sorted(roots, residuals, converged)
}

fn iterate(work: &Polynomial, mut z: Vec<Complex64>, cfg: &AberthConfig) -> (Vec<Complex64>, Vec<bool>) {
    let n = z.len();
    let deriv = work.derivative();
    let mut frozen = vec![false; n];
    for _ in 0..cfg.max_iters {
        if frozen.iter().all(|&f| f) {
            break;
        }
        let mut deltas = vec![Complex64::new(0.0, 0.0); n];
        for i in 0..n {
            if frozen[i] {
                continue;
            }
            let pz = work.evaluate(z[i]);
            if pz.norm() <= cfg.tol * work.abs_term_sum(z[i].norm()) {
                frozen[i] = true;
                continue;
            }
            let dz = deriv.evaluate(z[i]);
            let w = if dz.norm() > 0.0 && dz.is_finite() {
                robust_div(pz, dz)
            } else {
                // stationary point: push the guess slightly outward
                deltas[i] = Complex64::new(-1e-6 * (1.0 + z[i].norm()), 0.0);
                continue;
            };
            let mut s = Complex64::new(0.0, 0.0);
            for (j, &zj) in z.iter().enumerate() {
                if j == i {
                    continue;
                }
                let diff = z[i] - zj;
                if diff.norm() > 0.0 {
                    s += robust_div(Complex64::new(1.0, 0.0), diff);
                } else {
                    // exact collision: repel at a resolution-scale distance
                    s += Complex64::new(1.0 / (1e-12 * (1.0 + z[i].norm())), 0.0);
                }
            }
            let denom = Complex64::new(1.0, 0.0) - w * s;
            let delta = if denom.norm() > 0.0 { robust_div(w, denom) } else { w };
            deltas[i] = if delta.is_finite() { delta } else { w };
        }
        for i in 0..n {
            if !frozen[i] {
                z[i] -= deltas[i];
            }
        }
    }
    let converged: Vec<bool> = z
        .iter()
        .map(|&zi| work.evaluate(zi).norm() <= cfg.tol * work.abs_term_sum(zi.norm()))
        .collect();
    (z, converged)
}

/// Extremal root moduli (max, min) from the double-precision refiner. The
/// max-modulus value bounds the spectral radius of the polynomial's
/// companion matrix; the min-modulus value is the reciprocal of the
/// reversal companion's spectral radius.
pub fn spectral_radius_reference(p: &Polynomial) -> Result<(f64, f64), OracleError> {
    let cfg = AberthConfig {
        max_iters: 400,
        ..AberthConfig::default()
    };
    let roots = aberth_roots(p, &cfg);
    let ok = roots.converged.first().copied().unwrap_or(false)
        && roots.converged.last().copied().unwrap_or(false);
    if !ok {
        return Err(OracleError::DidNotConverge { partial: roots });
    }
    Ok((roots.max_modulus(), roots.min_modulus()))
}

/// Extremal root moduli computed from exact rational coefficients in
/// `precision_bits`-bit arithmetic. Benchmark polynomials whose double
/// rounding destroys root accuracy (tightly clustered or wildly scaled
/// roots) get their reference headers from this path.
///
/// Initial guesses take one radius per root from the Newton polygon of the
/// rounded coefficients (upper convex hull of (i, log|a_i|)), so clusters of
/// wildly different moduli all receive nearby starting points; a balanced
/// annulus spread is the fallback when the hull degenerates.
pub fn spectral_radius_reference_wide(
    exact_coeffs: &[(BigRational, BigRational)],
    precision_bits: usize,
    max_iters: u32,
) -> Result<(f64, f64), OracleError> {
    let n = exact_coeffs.len() - 1;
    assert!(n >= 1);
    let rounded = rounded_polynomial(exact_coeffs, precision_bits);
    let radii = newton_polygon_radii(&rounded).unwrap_or_else(|| {
        let (r_lo, r_hi) = init_annulus(&rounded);
        (0..n)
            .map(|j| {
                let frac = if n == 1 { 0.5 } else { j as f64 / (n - 1) as f64 };
                r_lo * (r_hi / r_lo).powf(frac)
            })
            .collect()
    });
    let golden = 2.0 * PI * (1.0 - 1.0 / 1.618_033_988_749_895);
    let init: Vec<Complex64> = radii
        .iter()
        .enumerate()
        .map(|(j, &r)| {
            let theta = golden * j as f64 + 0.43;
            r * Complex64::new(theta.cos(), theta.sin())
        })
        .collect();
    let coeffs: Vec<wide::WC> = exact_coeffs
        .iter()
        .map(|(re, im)| wide::WC::from_rationals(re, im, precision_bits))
        .collect();
    let out = wide::aberth_wide(&coeffs, &init, precision_bits, max_iters);

    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| out.moduli[a].partial_cmp(&out.moduli[b]).unwrap());
    let (lo, hi) = (idx[0], idx[n - 1]);
    if !(out.converged[lo] && out.converged[hi]) {
        let residuals = vec![f64::NAN; n];
        let partial = RootSet::new_sorted(out.roots, residuals, out.converged);
        return Err(OracleError::DidNotConverge { partial });
    }
    Ok((out.moduli[hi], out.moduli[lo]))
}

fn rounded_polynomial(exact: &[(BigRational, BigRational)], prec: usize) -> Polynomial {
    let coeffs: Vec<Complex64> = exact
        .iter()
        .map(|(re, im)| {
            Complex64::new(
                wide::rational_to_wf(re, prec).to_f64().value(),
                wide::rational_to_wf(im, prec).to_f64().value(),
            )
        })
        .collect();
    Polynomial::new(coeffs).expect("nonzero exact polynomial")
}

/// One root-modulus estimate per root from the Newton polygon: each upper
/// convex hull segment of (i, log2 |a_i|) spanning indices i1..i2 contributes
/// i2 - i1 roots of modulus roughly (|a_i1| / |a_i2|)^(1/(i2-i1)).
fn newton_polygon_radii(p: &Polynomial) -> Option<Vec<f64>> {
    let pts: Vec<(usize, f64)> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.norm() > 0.0)
        .map(|(i, c)| (i, c.norm().log2()))
        .collect();
    if pts.first()?.0 != 0 || pts.last()?.0 != p.degree() {
        return None;
    }
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &(i, y) in &pts {
        while hull.len() >= 2 {
            let (i1, y1) = hull[hull.len() - 2];
            let (i2, y2) = hull[hull.len() - 1];
            let t = (i2 - i1) as f64 / (i - i1) as f64;
            if y2 <= y1 + t * (y - y1) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push((i, y));
    }
    let mut radii = Vec::with_capacity(p.degree());
    for w in hull.windows(2) {
        let (i1, y1) = w[0];
        let (i2, y2) = w[1];
        let r = f64::exp2((y1 - y2) / (i2 - i1) as f64);
        if !r.is_finite() || r <= 0.0 {
            return None;
        }
        radii.extend(std::iter::repeat(r).take(i2 - i1));
    }
    (radii.len() == p.degree()).then_some(radii)
}

fn init_annulus(rounded: &Polynomial) -> (f64, f64) {
    let fallback = (0.5, 2.0);
    if rounded.degree() < 2 {
        return fallback;
    }
    let monic = rounded.monicize();
    match bounds::annulus(&monic, 8, 8, &NormKind::ALL, 20) {
        Ok(a) if a.r_lo.is_finite() && a.r_hi.is_finite() && a.r_lo > 0.0 && a.r_hi >= a.r_lo => {
            (a.r_lo, a.r_hi)
        }
        _ => match bounds::annulus(&monic, 1, 1, &NormKind::ALL, 0) {
            Ok(a) if a.r_lo > 0.0 && a.r_hi.is_finite() => (a.r_lo, a.r_hi),
            _ => fallback,
        },
    }
}
