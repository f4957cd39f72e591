//! Independent oracles shared by the integration tests. Nothing here calls
//! into the code paths it is used to check.

#![allow(dead_code)]

use std::f64::consts::{PI, TAU};

use arcfourier::ArcUnion;
use num_complex::Complex64;
use rand::Rng;

/// Adaptive Simpson quadrature of a real function on `[a, b]`.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(fa: f64, fm: f64, fb: f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = simpson(fa, flm, fm, a, m);
        let right = simpson(fm, frm, fb, m, b);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            left + right + delta / 15.0
        } else {
            recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
                + recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
        }
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    recurse(f, a, b, fa, fm, fb, simpson(fa, fm, fb, a, b), tol, 40)
}

/// `(1/2π) ∫_E e^{-ikt} dt` by quadrature over each arc.
pub fn quadrature_coefficient(e: &ArcUnion, k: usize) -> Complex64 {
    if e.is_full() {
        return Complex64::new(if k == 0 { 1.0 } else { 0.0 }, 0.0);
    }
    let kf = k as f64;
    let mut total = Complex64::new(0.0, 0.0);
    for arc in e.arcs() {
        let re = adaptive_simpson(&|t| (kf * t).cos(), arc.start, arc.end, 1e-15);
        let im = adaptive_simpson(&|t| -(kf * t).sin(), arc.start, arc.end, 1e-15);
        total += Complex64::new(re, im) / TAU;
    }
    total
}

/// `(1/2π) ∫_E P_r(t - s) ds` with the Poisson kernel
/// `P_r(θ) = (1 - r²) / (1 - 2r cos θ + r²)`.
pub fn poisson_quadrature(e: &ArcUnion, r: f64, t: f64) -> f64 {
    let kernel = |s: f64| (1.0 - r * r) / (1.0 - 2.0 * r * (t - s).cos() + r * r);
    if e.is_full() {
        return 1.0;
    }
    e.arcs()
        .iter()
        .map(|arc| {
            // split at the kernel peak so the adaptive rule sees it
            let mut cuts = vec![arc.start, arc.end];
            for shift in [-TAU, 0.0, TAU] {
                let peak = t + shift;
                if peak > arc.start && peak < arc.end {
                    cuts.insert(1, peak);
                }
            }
            cuts.windows(2)
                .map(|w| adaptive_simpson(&kernel, w[0], w[1], 1e-12))
                .sum::<f64>()
        })
        .sum::<f64>()
        / TAU
}

/// Taylor coefficients of an analytic `f`, scaled by `r^k`, recovered from
/// `samples` equispaced values on `|z| = r` by a direct DFT.
pub fn sampled_modes(f: &dyn Fn(Complex64) -> Complex64, n: usize, r: f64, samples: usize) -> Vec<Complex64> {
    let values: Vec<Complex64> = (0..samples)
        .map(|j| f(Complex64::from_polar(r, TAU * j as f64 / samples as f64)))
        .collect();
    (0..=n)
        .map(|k| {
            values
                .iter()
                .enumerate()
                .map(|(j, v)| v * Complex64::from_polar(1.0, -TAU * (j * k) as f64 / samples as f64))
                .sum::<Complex64>()
                / samples as f64
        })
        .collect()
}

/// Largest singular value of a dense matrix by power iteration on `A*A`.
pub fn power_iteration_norm(a: &[Vec<Complex64>], iterations: usize) -> f64 {
    let n = a.len();
    let mut v: Vec<Complex64> = (0..n)
        .map(|i| Complex64::new(1.0 + 0.1 * i as f64, 0.3 * i as f64))
        .collect();
    let mut sigma = 0.0;
    for _ in 0..iterations {
        let av: Vec<Complex64> = (0..n).map(|i| (0..n).map(|j| a[i][j] * v[j]).sum()).collect();
        let w: Vec<Complex64> = (0..n).map(|j| (0..n).map(|i| a[i][j].conj() * av[i]).sum()).collect();
        let norm = w.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return 0.0;
        }
        let vnorm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        sigma = (norm / vnorm).sqrt();
        v = w.into_iter().map(|x| x / norm).collect();
    }
    sigma
}

/// A random point in the disk of radius `max_r`, uniform in angle.
pub fn random_disk_point<R: Rng>(rng: &mut R, max_r: f64) -> Complex64 {
    Complex64::from_polar(rng.gen_range(0.0..max_r), rng.gen_range(0.0..TAU))
}

pub fn random_complex<R: Rng>(rng: &mut R, scale: f64) -> Complex64 {
    Complex64::new(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale))
}

pub const HALF_CIRCLE_C1: Complex64 = Complex64::new(0.0, -1.0 / PI);

/// `b_E(z)` from the single-arc closed form of `exp(2πi h_E)`:
/// `exp(2πi h_E) = Π e^{i(b-a)/2} (1 - e^{-ib} z) / (1 - e^{-ia} z) = N / D`,
/// so `b_E = (-iN - D) / (-iN + D)`. Independent of the series machinery.
pub fn closed_form_blaschke(e: &ArcUnion, z: Complex64) -> Complex64 {
    let i = Complex64::new(0.0, 1.0);
    if e.is_full() {
        return i;
    }
    let one = Complex64::new(1.0, 0.0);
    let (mut num, mut den) = (one, one);
    for arc in e.arcs() {
        num *= Complex64::from_polar(1.0, 0.5 * arc.length()) * (one - Complex64::from_polar(1.0, -arc.end) * z);
        den *= one - Complex64::from_polar(1.0, -arc.start) * z;
    }
    (-i * num - den) / (-i * num + den)
}

/// Number of eigenvalues of the Hermitian `a` below `x`, from the signs of
/// the pivots of an unpivoted `LDL*` factorization of `a - xI`.
pub fn eigenvalues_below(a: &[Vec<Complex64>], x: f64) -> usize {
    let n = a.len();
    let mut m: Vec<Vec<Complex64>> = a.to_vec();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= x;
    }
    let mut negatives = 0;
    for k in 0..n {
        let pivot = m[k][k].re;
        if pivot < 0.0 {
            negatives += 1;
        }
        let (done, rest) = m.split_at_mut(k + 1);
        let pivot_row = &done[k];
        for row in rest.iter_mut() {
            let factor = row[k] / pivot;
            for (x, p) in row[k + 1..].iter_mut().zip(&pivot_row[k + 1..]) {
                *x -= factor * p;
            }
        }
    }
    negatives
}
