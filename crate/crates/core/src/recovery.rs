//! Deciding whether a coefficient tuple comes from a union of at most `n`
//! arcs, and recovering the arcs when it does.
//!
//! The pipeline for `c = (c_0, …, c_n)`:
//!
//! 1. Form the Taylor polynomial of `φ(c_0/2 + Σ c_k z^k)` to degree `n` and
//!    take its coefficients as the first column of a lower-triangular
//!    Toeplitz matrix `M`.
//! 2. If `‖M‖ ≠ 1`, reject.
//! 3. Otherwise take a minimal-degree `q` with `‖Mq‖ = ‖q‖`; `f = Mq/q` is a
//!    Blaschke product. Read off the arcs `F` where `Im f ≥ 0`, push `F`
//!    back through step 1, and accept only if the columns agree. Some
//!    Blaschke products of norm-one Toeplitz matrices are not of the form
//!    `b_E`, which is why the final check is needed.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::arcset::{circular_distance, reduce_angle, ArcUnion, FourierTuple};
use crate::blaschke::{RationalBlaschke, DEFAULT_TOL_CIRCLE};
use crate::error::{Error, Result};
use crate::series::{herglotz_series, phi_compose, TruncatedSeries};
use crate::toeplitz::{LowerToeplitz, DEFAULT_TOL_EIG};

/// Numerical tolerances for [`recover`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Accepted band `|‖M‖ - 1| ≤ tol_norm`.
    pub tol_norm: f64,
    /// Eigenvalues of `M*M` within this of 1 span the norm-preserving space.
    pub tol_eig: f64,
    /// Roots within this of the unit circle count as lying on it.
    pub tol_circle: f64,
    /// Largest accepted mismatch in the final verification.
    pub tol_verify: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            tol_norm: 1e-8,
            tol_eig: DEFAULT_TOL_EIG,
            tol_circle: DEFAULT_TOL_CIRCLE,
            tol_verify: 1e-8,
        }
    }
}

impl Tolerances {
    pub fn is_valid(&self) -> bool {
        [self.tol_norm, self.tol_eig, self.tol_circle, self.tol_verify]
            .iter()
            .all(|t| t.is_finite() && *t > 0.0)
    }
}

/// Why a tuple (or Toeplitz column) is not in the range of the forward map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RejectReason {
    /// `c_0` is not a real number in `[0, 1]`.
    InvalidMeanValue,
    /// `‖M‖` is not 1.
    NormNotOne,
    /// `Mq/q` fails the Blaschke product checks.
    NotBlaschke,
    /// `f = ±1` has roots off the unit circle.
    OffCircleRoot,
    /// Roots of `f = 1` and `f = -1` do not alternate.
    NonAlternatingRoots,
    /// The candidate arcs do not reproduce the input.
    VerificationMismatch,
}

impl RejectReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            RejectReason::InvalidMeanValue => "invalid_mean_value",
            RejectReason::NormNotOne => "norm_not_one",
            RejectReason::NotBlaschke => "not_blaschke",
            RejectReason::OffCircleRoot => "off_circle_root",
            RejectReason::NonAlternatingRoots => "non_alternating_roots",
            RejectReason::VerificationMismatch => "verification_mismatch",
        }
    }
}

impl std::fmt::Display for RejectReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Recovered {
    pub arcs: ArcUnion,
    /// Order of the recovered Blaschke product, which is the arc count.
    pub order: usize,
    /// Max-norm difference between the input and the coefficients of `arcs`.
    pub residual: f64,
    /// `‖M‖`, or `None` when an edge tuple skipped the matrix step.
    pub norm: Option<f64>,
    /// The quotient `Mq/q`, absent for edge tuples.
    pub blaschke: Option<RationalBlaschke>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Rejection {
    pub reason: RejectReason,
    pub norm: Option<f64>,
    /// Verification mismatch, when step 3 was reached.
    pub mismatch: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum RecoveryOutcome {
    Recovered(Recovered),
    NotInRange(Rejection),
}

impl RecoveryOutcome {
    pub fn recovered(&self) -> Option<&Recovered> {
        match self {
            RecoveryOutcome::Recovered(r) => Some(r),
            RecoveryOutcome::NotInRange(_) => None,
        }
    }

    pub fn rejection(&self) -> Option<&Rejection> {
        match self {
            RecoveryOutcome::Recovered(_) => None,
            RecoveryOutcome::NotInRange(r) => Some(r),
        }
    }

    fn reject(reason: RejectReason, norm: Option<f64>, mismatch: Option<f64>) -> Self {
        RecoveryOutcome::NotInRange(Rejection { reason, norm, mismatch })
    }
}

/// Taylor coefficients to degree `n` of the Blaschke product `φ ∘ h`, where
/// `h` is built from the tuple. For a genuine tuple of `E` this is `b_E`.
pub fn blaschke_column(c: &FourierTuple) -> Result<TruncatedSeries> {
    phi_compose(&herglotz_series(c))
}

/// Decides whether `c` is the coefficient tuple of a union of at most `n`
/// arcs and recovers the arcs if so.
///
/// Only numerical breakdowns ([`Error::NoConvergence`]) are returned as
/// errors; every way of failing the test is a
/// [`RecoveryOutcome::NotInRange`].
pub fn recover(c: &FourierTuple, tol: &Tolerances) -> Result<RecoveryOutcome> {
    let c0 = c[0];
    if !(c0.im.abs() <= tol.tol_verify && c0.re >= -tol.tol_verify && c0.re <= 1.0 + tol.tol_verify) {
        return Ok(RecoveryOutcome::reject(RejectReason::InvalidMeanValue, None, None));
    }
    let mean = c0.re.clamp(0.0, 1.0);
    let mut cleaned = c.coeffs().to_vec();
    cleaned[0] = Complex64::new(mean, 0.0);
    let cleaned = FourierTuple::new(cleaned);

    // c_0 ∈ {0, 1} puts b(0) on the circle, where the generic path is
    // ill-conditioned; those tuples are only valid as the empty set or the
    // whole circle.
    let tail_vanishes = c.coeffs()[1..].iter().all(|z| z.norm() <= tol.tol_verify);
    if tail_vanishes && (mean <= tol.tol_verify || mean >= 1.0 - tol.tol_verify) {
        let arcs = if mean <= tol.tol_verify {
            ArcUnion::empty()
        } else {
            ArcUnion::full()
        };
        let residual = arcs.fourier_coefficients(c.n()).max_abs_diff(c);
        return Ok(RecoveryOutcome::Recovered(Recovered {
            arcs,
            order: 0,
            residual,
            norm: None,
            blaschke: None,
        }));
    }

    let column = match blaschke_column(&cleaned) {
        Ok(col) => col,
        Err(Error::ConformalPole) => return Ok(RecoveryOutcome::reject(RejectReason::InvalidMeanValue, None, None)),
        Err(e) => return Err(e),
    };
    let m = LowerToeplitz::from_first_column(column.into_coeffs());
    classify(&m, tol, Some(c))
}

/// Steps 2 and 3 of [`recover`], starting from a Toeplitz column.
pub fn classify_toeplitz(m: &LowerToeplitz, tol: &Tolerances) -> Result<RecoveryOutcome> {
    classify(m, tol, None)
}

fn classify(m: &LowerToeplitz, tol: &Tolerances, input: Option<&FourierTuple>) -> Result<RecoveryOutcome> {
    let norm = m.operator_norm()?;
    if norm.is_nan() || (norm - 1.0).abs() > tol.tol_norm {
        return Ok(RecoveryOutcome::reject(RejectReason::NormNotOne, Some(norm), None));
    }

    let q = match m.norm_preserving_min_degree_vector(tol.tol_eig) {
        Ok(q) => q,
        Err(Error::EmptyEigenspace { .. }) => {
            return Ok(RecoveryOutcome::reject(RejectReason::NormNotOne, Some(norm), None))
        }
        Err(e) => return Err(e),
    };
    let p = m.apply(&q);
    let f = match RationalBlaschke::from_quotient(p, q) {
        Ok(f) => f,
        Err(e @ Error::NoConvergence { .. }) => return Err(e),
        Err(_) => return Ok(RecoveryOutcome::reject(RejectReason::NotBlaschke, Some(norm), None)),
    };
    let arcs = match f.level_set_arcs(tol.tol_circle) {
        Ok(arcs) => arcs,
        Err(e @ Error::NoConvergence { .. }) => return Err(e),
        Err(Error::OffCircleRoot { .. }) => {
            return Ok(RecoveryOutcome::reject(RejectReason::OffCircleRoot, Some(norm), None))
        }
        Err(_) => {
            return Ok(RecoveryOutcome::reject(
                RejectReason::NonAlternatingRoots,
                Some(norm),
                None,
            ))
        }
    };

    let n = m.n();
    let candidate = arcs.fourier_coefficients(n);
    let column = blaschke_column(&candidate)?;
    let column_mismatch = column
        .coeffs()
        .iter()
        .zip(m.first_column())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    let residual = match input {
        Some(c) => candidate.max_abs_diff(c),
        None => column_mismatch,
    };
    if !(column_mismatch <= tol.tol_verify && residual <= tol.tol_verify) {
        return Ok(RecoveryOutcome::reject(
            RejectReason::VerificationMismatch,
            Some(norm),
            Some(column_mismatch.max(residual)),
        ));
    }

    Ok(RecoveryOutcome::Recovered(Recovered {
        arcs,
        order: f.order(),
        residual,
        norm: Some(norm),
        blaschke: Some(f),
    }))
}

/// Threshold below which the two-arc formula's preconditions count as failed.
pub const TWO_ARC_DEGENERACY: f64 = 1e-10;

/// Starting points of the arcs of a union of at most two arcs, in closed form
/// from `Ê(0), Ê(1), Ê(2)`.
///
/// With `E_0 = exp(2πi Ê(0))` and `E_k = -2πik Ê(k)`, the starting points are
/// the roots of `z² - a z + (conj(E_1) + (1 - E_0) a) / (E_1 E_0)`, where
///
/// ```text
/// a = (E_2 conj(E_1) + 2 E_1 - E_1² conj(E_1) - 2 E_1 E_0)
///     / (E_1² E_0 + E_2 E_0 - E_2 + E_1²)
/// ```
///
/// The formula needs `E_1 ≠ 0` and a nonzero denominator for `a`. Angles are
/// returned sorted in `[0, 2π)`.
pub fn two_arc_starting_points(c0: Complex64, c1: Complex64, c2: Complex64, tol_circle: f64) -> Result<[f64; 2]> {
    let i = Complex64::new(0.0, 1.0);
    let e0 = (i * TAU * c0).exp();
    let e1 = -i * TAU * c1;
    let e2 = -i * (2.0 * TAU) * c2;
    if e1.norm() <= TWO_ARC_DEGENERACY {
        return Err(Error::DegenerateFormula("first coefficient vanishes"));
    }
    let den = e1 * e1 * e0 + e2 * e0 - e2 + e1 * e1;
    if den.norm() <= TWO_ARC_DEGENERACY {
        return Err(Error::DegenerateFormula("denominator of a vanishes"));
    }
    let a = (e2 * e1.conj() + 2.0 * e1 - e1 * e1 * e1.conj() - 2.0 * e1 * e0) / den;
    let constant = (e1.conj() + (1.0 - e0) * a) / (e1 * e0);

    // roots of z² - a z + constant
    let disc = (a * a - 4.0 * constant).sqrt();
    let big = if (a + disc).norm() >= (a - disc).norm() {
        (a + disc) / 2.0
    } else {
        (a - disc) / 2.0
    };
    let small = if big.norm() > 0.0 { constant / big } else { big };
    let on_circle = [big, small]
        .iter()
        .filter(|z| (z.norm() - 1.0).abs() <= tol_circle)
        .count();
    if on_circle != 2 {
        return Err(Error::OffCircleRoot {
            found: on_circle,
            expected: 2,
        });
    }
    let mut angles = [reduce_angle(big.arg()), reduce_angle(small.arg())];
    angles.sort_by(f64::total_cmp);
    Ok(angles)
}

/// A successful trip `E → coefficients → E'` and the endpoint error.
#[derive(Debug, Clone, PartialEq)]
pub struct RoundTrip {
    pub error: f64,
    pub recovered: Recovered,
}

/// Recovers `E` from its own coefficients and measures the endpoint error.
pub fn roundtrip(e: &ArcUnion, n: usize, tol: &Tolerances) -> Result<RoundTrip> {
    if e.arc_count() > n {
        return Err(Error::RoundTripFailure(format!(
            "{} arcs cannot be recovered from {} coefficients",
            e.arc_count(),
            n + 1
        )));
    }
    let recovered = match recover(&e.fourier_coefficients(n), tol)? {
        RecoveryOutcome::Recovered(r) => r,
        RecoveryOutcome::NotInRange(rej) => return Err(Error::RoundTripFailure(format!("rejected: {}", rej.reason))),
    };
    let got = &recovered.arcs;
    if got.is_full() != e.is_full() || got.arc_count() != e.arc_count() {
        return Err(Error::RoundTripFailure(format!(
            "recovered {} arcs (full: {}), expected {} (full: {})",
            got.arc_count(),
            got.is_full(),
            e.arc_count(),
            e.is_full()
        )));
    }
    let starts = |u: &ArcUnion| u.arcs().iter().map(|a| a.start).collect::<Vec<_>>();
    let ends = |u: &ArcUnion| u.arcs().iter().map(|a| a.end).collect::<Vec<_>>();
    let error = nearest_match_distance(&starts(e), &starts(got)).max(nearest_match_distance(&ends(e), &ends(got)));
    Ok(RoundTrip { error, recovered })
}

/// Largest endpoint error, in radians, after recovering `E` from its first
/// `n + 1` coefficients.
pub fn roundtrip_error(e: &ArcUnion, n: usize, tol: &Tolerances) -> Result<f64> {
    roundtrip(e, n, tol).map(|r| r.error)
}

/// Symmetric nearest-angle distance between two angle sets.
fn nearest_match_distance(a: &[f64], b: &[f64]) -> f64 {
    let one_way = |from: &[f64], to: &[f64]| {
        from.iter()
            .map(|&x| to.iter().map(|&y| circular_distance(x, y)).fold(PI, f64::min))
            .fold(0.0, f64::max)
    };
    one_way(a, b).max(one_way(b, a))
}
