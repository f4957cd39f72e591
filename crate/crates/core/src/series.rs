//! Truncated power series and the analytic function `h_E`.
//!
//! For a union of arcs `E`, the series
//!
//! ```text
//! h_E(z) = Ê(0)/2 + Σ_{k≥1} Ê(k) z^k
//! ```
//!
//! maps the unit disk into the strip `0 ≤ 2 Re w ≤ 1`, and its doubled real
//! part is the Poisson extension of the indicator of `E`. Composing with the
//! conformal map
//!
//! ```text
//! φ(w) = (exp(2πi(w - 1/4)) - 1) / (exp(2πi(w - 1/4)) + 1)
//! ```
//!
//! of that strip onto the disk gives a finite Blaschke product `b_E`.

use std::f64::consts::{PI, TAU};
use std::ops::{Add, Index, Neg, Sub};

use num_complex::Complex64;

use crate::arcset::{ArcUnion, FourierTuple};
use crate::error::{Error, Result};

/// Smallest constant term [`TruncatedSeries::reciprocal`] will invert.
pub const RECIPROCAL_FLOOR: f64 = 1e-12;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `Σ a[k] z^k + O(z^{n+1})`, stored as exactly `n + 1` coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

impl TruncatedSeries {
    /// Panics if `coeffs` is empty.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least one term");
        TruncatedSeries { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Complex64::new(0.0, 0.0); n + 1],
        }
    }

    pub fn constant(value: Complex64, n: usize) -> Self {
        let mut s = Self::zero(n);
        s.coeffs[0] = value;
        s
    }

    /// Multiplicative identity at truncation degree `n`.
    pub fn one(n: usize) -> Self {
        Self::constant(Complex64::new(1.0, 0.0), n)
    }

    /// Truncation degree.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    /// Evaluates the degree-`n` polynomial part at `z` (Horner).
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let n = self.degree();
        let coeffs = (0..=n)
            .map(|k| (0..=k).map(|j| self.coeffs[j] * other.coeffs[k - j]).sum())
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    /// `exp` of the series, from the recurrence `k g[k] = Σ j f[j] g[k-j]`
    /// that follows from `g' = f' g`.
    pub fn exp(&self) -> Self {
        let n = self.degree();
        let mut g = vec![Complex64::new(0.0, 0.0); n + 1];
        g[0] = self.coeffs[0].exp();
        for k in 1..=n {
            let acc: Complex64 = (1..=k).map(|j| self.coeffs[j] * g[k - j] * j as f64).sum();
            g[k] = acc / k as f64;
        }
        TruncatedSeries { coeffs: g }
    }

    /// Multiplicative inverse; needs `|f[0]| > RECIPROCAL_FLOOR`.
    pub fn reciprocal(&self) -> Result<Self> {
        let f0 = self.coeffs[0];
        if f0.norm() <= RECIPROCAL_FLOOR {
            return Err(Error::NearZeroConstantTerm { modulus: f0.norm() });
        }
        let n = self.degree();
        let inv0 = f0.inv();
        let mut r = vec![Complex64::new(0.0, 0.0); n + 1];
        r[0] = inv0;
        for k in 1..=n {
            let acc: Complex64 = (1..=k).map(|j| self.coeffs[j] * r[k - j]).sum();
            r[k] = -inv0 * acc;
        }
        Ok(TruncatedSeries { coeffs: r })
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, op: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        assert_eq!(self.degree(), other.degree(), "truncation degrees differ");
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| op(a, b)).collect(),
        }
    }
}

impl Index<usize> for TruncatedSeries {
    type Output = Complex64;

    fn index(&self, k: usize) -> &Complex64 {
        &self.coeffs[k]
    }
}

/// Panics if the truncation degrees differ.
impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

/// Taylor data of `h_E`: the mean value halved, the rest copied.
pub fn herglotz_series(c: &FourierTuple) -> TruncatedSeries {
    let mut coeffs = c.coeffs().to_vec();
    coeffs[0] *= 0.5;
    TruncatedSeries { coeffs }
}

/// Taylor series of `φ ∘ h` to the truncation degree of `h`.
///
/// Computed as `u = -i exp(2πi h)`, `b = (u - 1) / (u + 1)`; the factor `-i`
/// is `exp(-πi/2)` and absorbs the quarter shift inside `φ`.
pub fn phi_compose(h: &TruncatedSeries) -> Result<TruncatedSeries> {
    let n = h.degree();
    let u = h.scale(Complex64::new(0.0, TAU)).exp().scale(-I);
    let one = TruncatedSeries::one(n);
    let denom = (&u + &one).reciprocal().map_err(|_| Error::ConformalPole)?;
    (&u - &one).mul(&denom)
}

/// The conformal map `φ` itself, evaluated at a point.
pub fn phi(w: Complex64) -> Complex64 {
    let u = -I * (I * TAU * w).exp();
    (u - 1.0) / (u + 1.0)
}

/// `h_E(z)` from the closed form: per arc `[a, b]`,
///
/// ```text
/// (b - a)/(4π) + (log(1 - e^{-ib} z) - log(1 - e^{-ia} z)) / (2πi)
/// ```
///
/// with the principal logarithm. Needs `|z| ≤ 1 - 1e-12`.
pub fn h_closed_eval(e: &ArcUnion, z: Complex64) -> Result<Complex64> {
    if z.norm().is_nan() || z.norm() > 1.0 - 1e-12 {
        return Err(Error::OutsideDisk { modulus: z.norm() });
    }
    if e.is_full() {
        return Ok(Complex64::new(0.5, 0.0));
    }
    let one = Complex64::new(1.0, 0.0);
    let sum = e
        .arcs()
        .iter()
        .map(|arc| {
            let log_end = (one - Complex64::from_polar(1.0, -arc.end) * z).ln();
            let log_start = (one - Complex64::from_polar(1.0, -arc.start) * z).ln();
            arc.length() / (4.0 * PI) + (log_end - log_start) / (I * TAU)
        })
        .sum();
    Ok(sum)
}

/// `2 Re h_E(r e^{it})`, the Poisson extension of the indicator of `E`.
///
/// Lies in `[0, 1]` and tends to the indicator as `r → 1` at points where the
/// indicator is continuous.
///
/// # Panics
///
/// If `r` is outside `[0, 1)`.
pub fn poisson_extension(e: &ArcUnion, r: f64, t: f64) -> f64 {
    assert!((0.0..1.0).contains(&r), "radius must lie in [0, 1)");
    let z = Complex64::from_polar(r.min(1.0 - 1e-12), t);
    2.0 * h_closed_eval(e, z).expect("radius is inside the disk").re
}
