//! Unions of closed arcs on the unit circle and their Fourier coefficients.
//!
//! Angles are radians. A canonical arc has `start` in `[0, 2π)` and
//! `end` in `(start, start + 2π)`, so an arc that crosses angle zero carries
//! an `end` larger than `2π`. The whole circle and the empty set are explicit
//! values of [`ArcUnion`] rather than limits of arcs.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default lower bound on arc length and on the gap between arcs.
pub const DEFAULT_MIN_LENGTH: f64 = 1e-9;

/// A closed arc traversed counterclockwise from `start` to `end`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Arc {
    pub start: f64,
    pub end: f64,
}

impl Arc {
    pub fn new(start: f64, end: f64) -> Self {
        Arc { start, end }
    }

    pub fn length(&self) -> f64 {
        self.end - self.start
    }

    /// `k`th Fourier coefficient of the indicator of this arc.
    ///
    /// For `k > 0` this is `(e^{-ikb} - e^{-ika}) / (-2πik)`, evaluated as
    /// `e^{-ik(a+b)/2} sin(k(b-a)/2) / (πk)` to avoid cancellation on short
    /// arcs.
    pub fn fourier_coefficient(&self, k: usize) -> Complex64 {
        if k == 0 {
            return Complex64::new(self.length() / TAU, 0.0);
        }
        let k = k as f64;
        let mid = 0.5 * (self.start + self.end);
        let half = 0.5 * self.length();
        Complex64::from_polar((k * half).sin() / (PI * k), -k * mid)
    }

    fn contains(&self, angle: f64) -> bool {
        (self.start <= angle && angle <= self.end) || (self.start <= angle + TAU && angle + TAU <= self.end)
    }
}

/// Thresholds used by [`ArcUnion::normalize_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizeOptions {
    /// Arcs shorter than this after merging are rejected.
    pub min_arc_length: f64,
    /// Arcs separated by at most this much are merged.
    pub min_gap: f64,
}

impl Default for NormalizeOptions {
    fn default() -> Self {
        NormalizeOptions {
            min_arc_length: DEFAULT_MIN_LENGTH,
            min_gap: DEFAULT_MIN_LENGTH,
        }
    }
}

/// A finite union of pairwise disjoint closed arcs, or the whole circle.
///
/// Values are always canonical: arcs are sorted by start, every arc is at
/// least `min_arc_length` long, consecutive arcs (cyclically) are separated
/// by more than `min_gap`, and the total measure is below `2π` unless
/// [`is_full`](ArcUnion::is_full) holds.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ArcUnion {
    arcs: Vec<Arc>,
    full: bool,
}

impl ArcUnion {
    pub fn empty() -> Self {
        ArcUnion::default()
    }

    pub fn full() -> Self {
        ArcUnion {
            arcs: Vec::new(),
            full: true,
        }
    }

    /// Canonicalizes raw `(start, end)` pairs with the default thresholds.
    pub fn normalize(raw: &[(f64, f64)]) -> Result<Self> {
        Self::normalize_with(raw, NormalizeOptions::default())
    }

    /// Reduces each pair modulo `2π`, sorts, merges overlapping or touching
    /// arcs (including across angle zero), and collapses to the full circle
    /// when nothing is left uncovered.
    ///
    /// A pair is read as the counterclockwise arc from `start` to `end`. A
    /// pair with `end - start >= 2π` covers the whole circle.
    pub fn normalize_with(raw: &[(f64, f64)], opts: NormalizeOptions) -> Result<Self> {
        let mut arcs = Vec::with_capacity(raw.len());
        for &(start, end) in raw {
            if !start.is_finite() || !end.is_finite() {
                return Err(Error::InvalidAngle { start, end });
            }
            if end - start >= TAU {
                return Ok(Self::full());
            }
            arcs.push(reduce(start, end));
        }
        arcs.sort_by(|a, b| a.start.total_cmp(&b.start));

        let mut merged: Vec<Arc> = Vec::with_capacity(arcs.len());
        for arc in arcs {
            match merged.last_mut() {
                Some(last) if arc.start - last.end <= opts.min_gap => {
                    if arc.end > last.end {
                        last.end = arc.end;
                    }
                }
                _ => merged.push(arc),
            }
        }

        // The last arc may run past 2π into the first ones.
        while merged.len() > 1 {
            let first = merged[0];
            let last = merged.last_mut().unwrap();
            if first.start + TAU - last.end > opts.min_gap {
                break;
            }
            if first.end + TAU > last.end {
                last.end = first.end + TAU;
            }
            merged.remove(0);
        }

        if let [only] = merged.as_slice() {
            if only.length() >= TAU - opts.min_gap {
                return Ok(Self::full());
            }
        }

        if let Some(short) = merged.iter().find(|a| a.length() < opts.min_arc_length) {
            return Err(Error::DegenerateArc {
                length: short.length(),
                min: opts.min_arc_length,
            });
        }

        Ok(ArcUnion {
            arcs: merged,
            full: false,
        })
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn is_full(&self) -> bool {
        self.full
    }

    pub fn is_empty(&self) -> bool {
        !self.full && self.arcs.is_empty()
    }

    /// Number of arcs; the whole circle and the empty set both count as zero.
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arc endpoints as `(start, end)` pairs.
    pub fn endpoints(&self) -> Vec<(f64, f64)> {
        self.arcs.iter().map(|a| (a.start, a.end)).collect()
    }

    pub fn measure(&self) -> f64 {
        if self.full {
            TAU
        } else {
            self.arcs.iter().map(Arc::length).sum()
        }
    }

    pub fn contains(&self, angle: f64) -> bool {
        if self.full {
            return true;
        }
        let angle = reduce_angle(angle);
        self.arcs.iter().any(|a| a.contains(angle))
    }

    /// Measure of `self Δ other`, by sweeping the merged breakpoints.
    pub fn symmetric_difference_measure(&self, other: &ArcUnion) -> f64 {
        let mut cuts = vec![0.0, TAU];
        for arc in self.arcs.iter().chain(other.arcs.iter()) {
            cuts.push(reduce_angle(arc.start));
            cuts.push(reduce_angle(arc.end));
        }
        cuts.sort_by(f64::total_cmp);
        cuts.windows(2)
            .filter(|w| w[1] > w[0])
            .filter(|w| {
                let mid = 0.5 * (w[0] + w[1]);
                self.contains(mid) != other.contains(mid)
            })
            .map(|w| w[1] - w[0])
            .sum()
    }

    /// The Fourier coefficients `Ê(0), …, Ê(n)` of the indicator function.
    pub fn fourier_coefficients(&self, n: usize) -> FourierTuple {
        let coeffs = (0..=n)
            .map(|k| {
                if self.full {
                    if k == 0 {
                        Complex64::new(1.0, 0.0)
                    } else {
                        Complex64::new(0.0, 0.0)
                    }
                } else {
                    self.arcs.iter().map(|a| a.fourier_coefficient(k)).sum()
                }
            })
            .collect();
        FourierTuple { coeffs }
    }
}

/// Leading Fourier coefficients `(c[0], …, c[n])` of an indicator function.
///
/// Negative indices are not stored: for a real function `Ê(-k)` is the
/// conjugate of `Ê(k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierTuple {
    coeffs: Vec<Complex64>,
}

impl FourierTuple {
    /// Panics if `coeffs` is empty.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "a Fourier tuple needs at least c[0]");
        FourierTuple { coeffs }
    }

    /// The largest index `n`.
    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Largest absolute entrywise difference; tuples of different length are
    /// compared on their common prefix.
    pub fn max_abs_diff(&self, other: &FourierTuple) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl std::ops::Index<usize> for FourierTuple {
    type Output = Complex64;

    fn index(&self, k: usize) -> &Complex64 {
        &self.coeffs[k]
    }
}

/// Reduces an angle to `[0, 2π)`.
pub fn reduce_angle(angle: f64) -> f64 {
    let r = angle.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Shortest distance between two angles on the circle.
pub fn circular_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

fn reduce(start: f64, end: f64) -> Arc {
    let (mut start, mut end) = (start, end);
    // Canonical input passes through untouched so normalization is idempotent.
    if !(0.0..TAU).contains(&start) {
        let turns = (start / TAU).floor();
        start -= turns * TAU;
        end -= turns * TAU;
        if start >= TAU {
            start -= TAU;
            end -= TAU;
        }
        if start < 0.0 {
            start = 0.0;
        }
    }
    if end < start {
        end += ((start - end) / TAU).ceil() * TAU;
    }
    Arc { start, end }
}
