//! Unions of arcs on the unit circle, and their recovery from the leading
//! Fourier coefficients of the indicator function.
//!
//! A union `E` of at most `n` closed arcs is determined by
//! `Ê(0), …, Ê(n)`. This crate computes that tuple ([`ArcUnion::fourier_coefficients`])
//! and, for an arbitrary tuple, decides whether it arises this way and
//! recovers the arcs ([`recover`]).
//!
//! ```
//! use arcfourier::{recover, ArcUnion, Tolerances};
//!
//! let e = ArcUnion::normalize(&[(0.3, 1.2), (2.0, 4.5), (5.0, 5.9)]).unwrap();
//! let c = e.fourier_coefficients(3);
//! let outcome = recover(&c, &Tolerances::default()).unwrap();
//! let got = outcome.recovered().expect("a genuine tuple is recovered");
//! assert_eq!(got.order, 3);
//! assert!(got.arcs.symmetric_difference_measure(&e) < 1e-8);
//! ```
//!
//! The `book/` directory at the repository root walks through the pieces.

pub mod arcset;
pub mod blaschke;
pub mod eigen;
pub mod error;
pub mod poly;
pub mod polyroot;
pub mod recovery;
pub mod sampling;
pub mod series;
pub mod toeplitz;

pub use arcset::{Arc, ArcUnion, FourierTuple, NormalizeOptions};
pub use blaschke::RationalBlaschke;
pub use error::{Error, Result};
pub use poly::Polynomial;
pub use recovery::{
    classify_toeplitz, recover, roundtrip, roundtrip_error, two_arc_starting_points, RecoveryOutcome, RejectReason,
    Tolerances,
};
pub use series::TruncatedSeries;
pub use toeplitz::LowerToeplitz;

// The book's code listings run as doctests.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $file:literal) => {
            #[doc = include_str!(concat!("../../../book/src/", $file))]
            mod $name {}
        };
    }

    chapter!(introduction, "introduction.md");
    chapter!(arcs, "arcs.md");
    chapter!(blaschke, "blaschke.md");
    chapter!(toeplitz, "toeplitz.md");
    chapter!(recovery, "recovery.md");
    chapter!(two_arcs, "two-arcs.md");
    chapter!(cli, "cli.md");
}
