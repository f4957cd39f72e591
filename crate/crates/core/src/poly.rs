//! Dense complex polynomials in the monomial basis `1, z, z², …`.
//!
//! The monomials are orthonormal for the `L²` inner product on the circle, so
//! the Euclidean norm of the coefficient vector is the `L²` norm of the
//! function it represents.

use std::ops::{Add, Index, Sub};

use num_complex::Complex64;

/// Relative floor used by [`Polynomial::degree`].
pub const DEGREE_FLOOR: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        Polynomial { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Polynomial {
            coeffs: coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect(),
        }
    }

    /// The monic polynomial `Π (z - r)`.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut coeffs = vec![Complex64::new(1.0, 0.0)];
        for &r in roots {
            let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= r * c;
            }
            coeffs = next;
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Number of stored coefficients (degree bound plus one).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Euclidean norm of the coefficients.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest `k` with `|c[k]| > floor · max|c|`, or `None` for zero.
    pub fn effective_degree(&self, floor: f64) -> Option<usize> {
        let cut = floor * self.max_abs();
        self.coeffs.iter().rposition(|c| c.norm() > cut)
    }

    /// [`effective_degree`](Self::effective_degree) at [`DEGREE_FLOOR`].
    pub fn degree(&self) -> Option<usize> {
        self.effective_degree(DEGREE_FLOOR)
    }

    /// Drops coefficients above the effective degree.
    pub fn trimmed(&self, floor: f64) -> Polynomial {
        let keep = self.effective_degree(floor).map_or(0, |d| d + 1);
        Polynomial {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    /// Zero-pads (or truncates) to exactly `len` coefficients.
    pub fn resized(&self, len: usize) -> Polynomial {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(len, Complex64::new(0.0, 0.0));
        Polynomial { coeffs }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// `p(z)` together with `p'(z)`.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let zero = Complex64::new(0.0, 0.0);
        self.coeffs
            .iter()
            .rev()
            .fold((zero, zero), |(p, dp), &c| (p * z + c, dp * z + p))
    }

    /// `Σ |c[k]| r^k`, the scale against which a residual is judged.
    pub fn abs_eval(&self, r: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm())
    }

    pub fn scale(&self, factor: Complex64) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    fn zip_with(&self, other: &Polynomial, op: impl Fn(Complex64, Complex64) -> Complex64) -> Polynomial {
        let len = self.len().max(other.len());
        let a = self.resized(len);
        let b = other.resized(len);
        Polynomial {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| op(x, y)).collect(),
        }
    }
}

impl Index<usize> for Polynomial {
    type Output = Complex64;

    fn index(&self, k: usize) -> &Complex64 {
        &self.coeffs[k]
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.zip_with(rhs, |a, b| a - b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn effective_degree_cases() {
        assert_eq!(
            Polynomial::from_real(&[1.0, 0.0, 1e-18]).effective_degree(1e-10),
            Some(0)
        );
        assert_eq!(Polynomial::from_real(&[0.0, 0.0, 0.0]).effective_degree(1e-10), None);
        assert_eq!(Polynomial::from_real(&[1.0, 2.0, 3.0]).effective_degree(1e-10), Some(2));
    }

    #[test]
    fn from_roots_and_derivative() {
        let p = Polynomial::from_roots(&[Complex64::new(1.0, 0.0), Complex64::new(-2.0, 0.0)]);
        assert_eq!(p, Polynomial::from_real(&[-2.0, 1.0, 1.0]));
        let (v, dv) = p.eval_with_derivative(Complex64::new(3.0, 0.0));
        assert_eq!(v, Complex64::new(10.0, 0.0));
        assert_eq!(dv, Complex64::new(7.0, 0.0));
    }

    #[test]
    fn add_pads_shorter_operand() {
        let a = Polynomial::from_real(&[1.0]);
        let b = Polynomial::from_real(&[0.0, 1.0]);
        assert_eq!(&b - &a, Polynomial::from_real(&[-1.0, 1.0]));
        assert_eq!(&a + &b, Polynomial::from_real(&[1.0, 1.0]));
    }
}
