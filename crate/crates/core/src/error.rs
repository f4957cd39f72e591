use thiserror::Error;

/// Errors raised by the numerical building blocks.
///
/// Most of these describe a candidate that is not what the caller claimed
/// (not a Blaschke product, roots off the circle). The recovery pipeline turns
/// those into a [`NotInRange`](crate::recovery::RecoveryOutcome::NotInRange)
/// outcome. [`Error::NoConvergence`] is the only hard failure.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("arc of length {length:e} rad is below the minimum arc length {min:e}")]
    DegenerateArc { length: f64, min: f64 },

    #[error("invalid arc endpoints ({start}, {end})")]
    InvalidAngle { start: f64, end: f64 },

    #[error("truncation degrees differ: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("constant term {modulus:e} is too close to zero to invert")]
    NearZeroConstantTerm { modulus: f64 },

    #[error("conformal map has a pole at the constant term")]
    ConformalPole,

    #[error("point {modulus} lies outside the open unit disk")]
    OutsideDisk { modulus: f64 },

    #[error("{what} did not converge after {iterations} iterations")]
    NoConvergence { what: &'static str, iterations: usize },

    #[error("no eigenvalue of M*M lies within {tol:e} of 1 (largest is {largest})")]
    EmptyEigenspace { tol: f64, largest: f64 },

    #[error("{found} of {expected} roots lie on the unit circle")]
    OffCircleRoot { found: usize, expected: usize },

    #[error("roots of b = 1 and b = -1 do not alternate around the circle")]
    NonAlternatingRoots,

    #[error("|p| and |q| differ on the unit circle (relative error {error:e})")]
    NotUnimodularOnCircle { error: f64 },

    #[error("denominator has a root of modulus {modulus} in the closed disk")]
    PoleInDisk { modulus: f64 },

    #[error("numerator has {inside} zeros in the disk, expected {order}")]
    ZeroCountMismatch { inside: usize, order: usize },

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("two-arc formula is degenerate: {0}")]
    DegenerateFormula(&'static str),

    #[error("round trip failed: {0}")]
    RoundTripFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
