//! Polynomial roots by Aberth–Ehrlich simultaneous iteration, and roots on the
//! unit circle as sorted angles.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::arcset::reduce_angle;
use crate::error::{Error, Result};
use crate::poly::{Polynomial, DEGREE_FLOOR};

pub const MAX_ITERATIONS: usize = 500;
/// Iteration stops once every correction is below this (relative to `max(1, |z|)`).
pub const STEP_TOL: f64 = 1e-13;
/// Returned roots satisfy `|p(z)| ≤ RESIDUAL_TOL · Σ|p[k]| max(1, |z|)^k`.
pub const RESIDUAL_TOL: f64 = 1e-9;
/// Circle roots closer than this are reported once.
pub const CLUSTER_TOL: f64 = 1e-7;

const INITIAL_ROTATION: f64 = 0.4;
const RETRY_SEED: u64 = 0x00ab_e47e;

/// Largest `k` with `|p[k]| > floor · max|p|`; `None` for the zero polynomial.
pub fn effective_degree(p: &Polynomial, floor: f64) -> Option<usize> {
    p.effective_degree(floor)
}

/// All complex roots of `p`, with multiplicity.
///
/// Coefficients below the relative degree floor are dropped first, so the
/// number of roots is the effective degree. A constant polynomial has no
/// roots; the zero polynomial is an error.
pub fn roots(p: &Polynomial) -> Result<Vec<Complex64>> {
    let p = p.trimmed(DEGREE_FLOOR);
    let degree = match p.len() {
        0 => return Err(Error::ZeroPolynomial),
        len => len - 1,
    };
    match degree {
        0 => Ok(Vec::new()),
        1 => Ok(vec![-p[0] / p[1]]),
        _ => {
            let radius = (1.0 + p[0].norm() / p[degree].norm()).powf(1.0 / degree as f64);
            let first = initial_guesses(degree, radius, |_| INITIAL_ROTATION);
            if let Some(found) = aberth(&p, first) {
                return Ok(found);
            }
            let mut rng = StdRng::seed_from_u64(RETRY_SEED);
            let jitter: Vec<f64> = (0..degree).map(|_| rng.gen_range(0.0..0.5)).collect();
            let second = initial_guesses(degree, radius * rng.gen_range(0.8..1.25), |k| jitter[k]);
            aberth(&p, second).ok_or(Error::NoConvergence {
                what: "Aberth-Ehrlich iteration",
                iterations: MAX_ITERATIONS,
            })
        }
    }
}

/// Roots of `p` on the unit circle, as sorted angles in `[0, 2π)`.
///
/// Every root must satisfy `||z| - 1| ≤ tol_circle`, otherwise the result is
/// [`Error::OffCircleRoot`]. Roots within [`CLUSTER_TOL`] of each other are
/// collapsed to their mean angle.
pub fn circle_roots(p: &Polynomial, tol_circle: f64) -> Result<Vec<f64>> {
    let all = roots(p)?;
    let on_circle: Vec<Complex64> = all
        .iter()
        .copied()
        .filter(|z| (z.norm() - 1.0).abs() <= tol_circle)
        .collect();
    if on_circle.len() != all.len() {
        return Err(Error::OffCircleRoot {
            found: on_circle.len(),
            expected: all.len(),
        });
    }
    let mut angles: Vec<f64> = on_circle.iter().map(|z| reduce_angle(z.arg())).collect();
    angles.sort_by(f64::total_cmp);
    Ok(collapse_clusters(angles))
}

fn initial_guesses(degree: usize, radius: f64, offset: impl Fn(usize) -> f64) -> Vec<Complex64> {
    (0..degree)
        .map(|k| Complex64::from_polar(radius, TAU * k as f64 / degree as f64 + offset(k)))
        .collect()
}

fn aberth(p: &Polynomial, mut z: Vec<Complex64>) -> Option<Vec<Complex64>> {
    let n = z.len();
    for _ in 0..MAX_ITERATIONS {
        let mut converged = true;
        for i in 0..n {
            let (value, slope) = p.eval_with_derivative(z[i]);
            if value == Complex64::new(0.0, 0.0) {
                continue;
            }
            let newton = value / slope;
            let repulsion: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = newton / (Complex64::new(1.0, 0.0) - newton * repulsion);
            if !step.is_finite() {
                return None;
            }
            z[i] -= step;
            if step.norm() > STEP_TOL * z[i].norm().max(1.0) {
                converged = false;
            }
        }
        if converged {
            break;
        }
    }
    let residual_ok = z
        .iter()
        .all(|&r| p.eval(r).norm() <= RESIDUAL_TOL * p.abs_eval(r.norm().max(1.0)));
    residual_ok.then_some(z)
}

fn collapse_clusters(angles: Vec<f64>) -> Vec<f64> {
    let mut groups: Vec<Vec<f64>> = Vec::new();
    for a in angles {
        match groups.last_mut() {
            Some(g) if a - g[g.len() - 1] <= CLUSTER_TOL => g.push(a),
            _ => groups.push(vec![a]),
        }
    }
    // a cluster straddling angle zero
    if groups.len() > 1 {
        let first = groups[0][0];
        let last_group = groups.last().unwrap();
        if first + TAU - last_group[last_group.len() - 1] <= CLUSTER_TOL {
            let tail = groups.pop().unwrap();
            let head = &mut groups[0];
            let shifted: Vec<f64> = tail.into_iter().map(|a| a - TAU).collect();
            head.splice(0..0, shifted);
        }
    }
    let mut out: Vec<f64> = groups
        .into_iter()
        .map(|g| reduce_angle(g.iter().sum::<f64>() / g.len() as f64))
        .collect();
    out.sort_by(f64::total_cmp);
    out
}
