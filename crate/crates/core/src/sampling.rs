//! Random arc unions for property tests and self-checks.

use std::f64::consts::TAU;

use rand::Rng;

use crate::arcset::ArcUnion;

/// A union of exactly `k` arcs whose `2k` endpoints are uniformly distributed
/// subject to every arc and every gap being at least `min_sep` long.
///
/// Panics if `2k · min_sep ≥ 2π`.
pub fn random_arc_union<R: Rng + ?Sized>(rng: &mut R, k: usize, min_sep: f64) -> ArcUnion {
    if k == 0 {
        return ArcUnion::empty();
    }
    let free = TAU - 2.0 * k as f64 * min_sep;
    assert!(free > 0.0, "{k} arcs do not fit with separation {min_sep}");
    let mut cuts: Vec<f64> = (0..2 * k).map(|_| rng.gen_range(0.0..free)).collect();
    cuts.sort_by(f64::total_cmp);
    let offset = rng.gen_range(0.0..TAU);
    let points: Vec<f64> = cuts
        .iter()
        .enumerate()
        .map(|(i, u)| u + i as f64 * min_sep + offset)
        .collect();
    let pairs: Vec<(f64, f64)> = points.chunks(2).map(|w| (w[0], w[1])).collect();
    ArcUnion::normalize(&pairs).expect("separated arcs normalize")
}

/// Arc count uniform in `0..=n_max`; a zero count is the empty set or the
/// whole circle with equal probability.
pub fn random_case<R: Rng + ?Sized>(rng: &mut R, n_max: usize, min_sep: f64) -> ArcUnion {
    let k = rng.gen_range(0..=n_max);
    if k == 0 {
        if rng.gen_bool(0.5) {
            ArcUnion::full()
        } else {
            ArcUnion::empty()
        }
    } else {
        random_arc_union(rng, k, min_sep)
    }
}
