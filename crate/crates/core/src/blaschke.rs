//! Finite Blaschke products stored as a quotient of polynomials.
//!
//! A finite Blaschke product `λ Π (z - a_j)/(1 - conj(a_j) z)` is, up to a
//! common scalar, the quotient `p/q` with `p = λ Π (z - a_j)` and
//! `q = Π (1 - conj(a_j) z)`. Conversely, a rational `p/q` with no poles in the
//! closed disk and `|p| = |q|` on the circle is a Blaschke product whose order
//! is the number of zeros of `p` in the disk. [`RationalBlaschke::from_quotient`]
//! checks exactly those conditions.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::arcset::ArcUnion;
use crate::error::{Error, Result};
use crate::poly::{Polynomial, DEGREE_FLOOR};
use crate::polyroot::{circle_roots, roots};
use crate::series::TruncatedSeries;

/// Largest tolerated `||p(z)|/|q(z)| - 1|` on the circle.
pub const UNIMODULAR_TOL: f64 = 1e-8;
/// Roots of `q` must have modulus at least `1 + POLE_MARGIN`.
pub const POLE_MARGIN: f64 = 1e-8;
/// Default tolerance for roots counted as lying on the circle.
pub const DEFAULT_TOL_CIRCLE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct RationalBlaschke {
    p: Polynomial,
    q: Polynomial,
    order: usize,
}

impl RationalBlaschke {
    /// Validates `p/q` as a Blaschke product.
    ///
    /// The order is `max(deg p, deg q)`; for a genuine Blaschke product in
    /// lowest terms this is `deg p`, since a zero at the origin contributes
    /// to `p` but not to `q`.
    pub fn from_quotient(p: Polynomial, q: Polynomial) -> Result<Self> {
        let q = q.trimmed(DEGREE_FLOOR);
        if q.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        let p = p.trimmed(DEGREE_FLOOR);
        let order = p.len().max(q.len()).saturating_sub(1);

        let samples = 4 * (order + 2);
        let mut worst: f64 = 0.0;
        for k in 0..samples {
            let z = Complex64::from_polar(1.0, TAU * (k as f64 + 0.25) / samples as f64);
            let (pz, qz) = (p.eval(z).norm(), q.eval(z).norm());
            let err = if qz > 0.0 { (pz / qz - 1.0).abs() } else { f64::INFINITY };
            worst = worst.max(err);
        }
        if worst.is_nan() || worst > UNIMODULAR_TOL {
            return Err(Error::NotUnimodularOnCircle { error: worst });
        }

        if let Some(pole) = roots(&q)?
            .into_iter()
            .map(|r| r.norm())
            .find(|&m| m < 1.0 + POLE_MARGIN)
        {
            return Err(Error::PoleInDisk { modulus: pole });
        }

        let inside = roots(&p)?.into_iter().filter(|r| r.norm() < 1.0).count();
        if inside != order {
            return Err(Error::ZeroCountMismatch { inside, order });
        }

        Ok(RationalBlaschke { p, q, order })
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.p
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.q
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.p.eval(z) / self.q.eval(z)
    }

    /// `z b'(z) / b(z)`. Real and positive on the circle, where it equals
    /// `Σ (1 - |a_j|²) / |z - a_j|²`.
    pub fn log_derivative(&self, z: Complex64) -> Complex64 {
        let (p, dp) = self.p.eval_with_derivative(z);
        let (q, dq) = self.q.eval_with_derivative(z);
        z * (dp / p - dq / q)
    }

    /// Taylor coefficients at 0 up to degree `n`.
    pub fn taylor(&self, n: usize) -> Result<TruncatedSeries> {
        let num = TruncatedSeries::new(self.p.resized(n + 1).coeffs().to_vec());
        let den = TruncatedSeries::new(self.q.resized(n + 1).coeffs().to_vec());
        num.mul(&den.reciprocal()?)
    }

    /// The arcs `{z on the circle : Im b(z) ≥ 0}`.
    ///
    /// Since `arg b(e^{it})` increases strictly, each arc starts at a root of
    /// `b = 1` and ends at the next root of `b = -1`. A constant `λ` gives the
    /// whole circle when `Im λ ≥ 0` and the empty set otherwise.
    pub fn level_set_arcs(&self, tol_circle: f64) -> Result<ArcUnion> {
        if self.order == 0 {
            let lambda = self.p[0] / self.q[0];
            return Ok(if lambda.im >= 0.0 {
                ArcUnion::full()
            } else {
                ArcUnion::empty()
            });
        }
        let starts = circle_roots(&(&self.p - &self.q), tol_circle)?;
        let ends = circle_roots(&(&self.p + &self.q), tol_circle)?;
        if starts.len() != self.order || ends.len() != self.order {
            return Err(Error::NonAlternatingRoots);
        }
        if !strictly_interleaved(&starts, &ends) {
            return Err(Error::NonAlternatingRoots);
        }
        let pairs: Vec<(f64, f64)> = starts
            .iter()
            .map(|&s| {
                let e = ends.iter().copied().find(|&e| e > s).unwrap_or(ends[0] + TAU);
                (s, e)
            })
            .collect();
        let arcs = ArcUnion::normalize(&pairs)?;
        if arcs.arc_count() != self.order {
            return Err(Error::NonAlternatingRoots);
        }
        Ok(arcs)
    }
}

/// True when the sorted angle lists alternate around the circle with no ties.
pub fn strictly_interleaved(starts: &[f64], ends: &[f64]) -> bool {
    if starts.len() != ends.len() {
        return false;
    }
    let mut labelled: Vec<(f64, bool)> = starts
        .iter()
        .map(|&a| (a, true))
        .chain(ends.iter().map(|&a| (a, false)))
        .collect();
    labelled.sort_by(|a, b| a.0.total_cmp(&b.0));
    labelled.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 != w[1].1)
}
