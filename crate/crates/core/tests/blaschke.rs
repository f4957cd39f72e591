mod common;

use std::f64::consts::TAU;

use arcfourier::blaschke::strictly_interleaved;
use arcfourier::polyroot::circle_roots;
use arcfourier::recovery::blaschke_column;
use arcfourier::sampling::random_arc_union;
use arcfourier::{Error, Polynomial, RationalBlaschke};
use common::*;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `λ Π (z - a) / Π (1 - ā z)` with `|λ| = 1` and zeros in `|a| < max_r`.
fn random_blaschke<R: Rng>(rng: &mut R, order: usize, max_r: f64) -> (RationalBlaschke, Vec<Complex64>, Complex64) {
    let zeros: Vec<Complex64> = (0..order).map(|_| random_disk_point(rng, max_r)).collect();
    let lambda = Complex64::from_polar(1.0, rng.gen_range(0.0..TAU));
    let p = Polynomial::from_roots(&zeros).scale(lambda);
    let q = zeros.iter().fold(Polynomial::from_real(&[1.0]), |acc, a| {
        mul(&acc, &[Complex64::new(1.0, 0.0), -a.conj()])
    });
    let b = RationalBlaschke::from_quotient(p, q).unwrap();
    (b, zeros, lambda)
}

fn product_form(zeros: &[Complex64], lambda: Complex64, z: Complex64) -> Complex64 {
    zeros.iter().fold(lambda, |acc, a| acc * (z - a) / (1.0 - a.conj() * z))
}

#[test]
fn unimodular_on_the_circle() {
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    for _ in 0..50 {
        let order = rng.gen_range(1..=6);
        let (b, zeros, lambda) = random_blaschke(&mut rng, order, 0.9);
        assert_eq!(b.order(), order);
        for j in 0..32 {
            let z = Complex64::from_polar(1.0, TAU * (j as f64 + 0.3) / 32.0);
            assert!((b.eval(z).norm() - 1.0).abs() < 1e-10);
            assert!((b.eval(z) - product_form(&zeros, lambda, z)).norm() < 1e-10);
        }
    }
}

#[test]
fn level_set_matches_sign_of_imaginary_part() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..50 {
        let order = rng.gen_range(1..=6);
        let (b, _, _) = random_blaschke(&mut rng, order, 0.8);
        let e = b.level_set_arcs(1e-6).unwrap();
        assert_eq!(e.arc_count(), order);
        let mut sign_changes = 0;
        let samples = 2048;
        let values: Vec<f64> = (0..samples)
            .map(|j| {
                b.eval(Complex64::from_polar(1.0, TAU * (j as f64 + 0.5) / samples as f64))
                    .im
            })
            .collect();
        for j in 0..samples {
            if (values[j] >= 0.0) != (values[(j + 1) % samples] >= 0.0) {
                sign_changes += 1;
            }
        }
        assert_eq!(sign_changes, 2 * order);
        for (j, v) in values.iter().enumerate() {
            let t = TAU * (j as f64 + 0.5) / samples as f64;
            let near_endpoint = e.endpoints().iter().any(|&(s, end)| {
                arcfourier::arcset::circular_distance(s, t) < 1e-3
                    || arcfourier::arcset::circular_distance(end, t) < 1e-3
            });
            if !near_endpoint {
                assert_eq!(e.contains(t), *v >= 0.0);
            }
        }
    }
}

#[test]
fn angle_increases_along_the_circle() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..50 {
        let order = rng.gen_range(1..=5);
        let (b, _, _) = random_blaschke(&mut rng, order, 0.9);
        let mut total = 0.0;
        for j in 0..256 {
            let z = Complex64::from_polar(1.0, TAU * j as f64 / 256.0);
            let d = b.log_derivative(z);
            assert!(d.re > 0.0 && d.im.abs() < 1e-8);
            total += d.re / 256.0;
        }
        // the mean of z b'/b over the circle is the winding number
        assert!((total - order as f64).abs() < 1e-8);
    }
}

#[test]
fn taylor_series_matches_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..30 {
        let (b, _, _) = random_blaschke(&mut rng, 3, 0.7);
        let series = b.taylor(60).unwrap();
        let z = Complex64::from_polar(0.3, rng.gen_range(0.0..TAU));
        assert!((series.eval(z) - b.eval(z)).norm() < 1e-12);
    }
}

#[test]
fn level_set_of_arc_blaschke_is_the_arc_set() {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for _ in 0..30 {
        let k = rng.gen_range(1..=6);
        let e = random_arc_union(&mut rng, k, 0.05);
        let col = blaschke_column(&e.fourier_coefficients(k)).unwrap();
        // rebuild p and q from the closed form: q from the start points and p = b q
        let one = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        let den = e.arcs().iter().fold(Polynomial::new(vec![one]), |acc, a| {
            mul(&acc, &[one, -Complex64::from_polar(1.0, -a.start)])
        });
        let num = e.arcs().iter().fold(Polynomial::new(vec![one]), |acc, a| {
            let s = Complex64::from_polar(1.0, 0.5 * a.length());
            mul(&acc, &[s, -s * Complex64::from_polar(1.0, -a.end)])
        });
        let p = &num.scale(-i) - &den;
        let q = &num.scale(-i) + &den;
        let b = RationalBlaschke::from_quotient(p, q).unwrap();
        assert_eq!(b.order(), k);
        let taylor = b.taylor(k).unwrap();
        for j in 0..=k {
            assert!((taylor[j] - col[j]).norm() < 1e-9);
        }
        let recovered = b.level_set_arcs(1e-6).unwrap();
        assert!(recovered.symmetric_difference_measure(&e) < 1e-8);
    }
}

/// `p · (f0 + f1 z)`.
fn mul(p: &Polynomial, factor: &[Complex64; 2]) -> Polynomial {
    let mut next = vec![Complex64::new(0.0, 0.0); p.len() + 1];
    for (i, c) in p.coeffs().iter().enumerate() {
        next[i] += c * factor[0];
        next[i + 1] += c * factor[1];
    }
    Polynomial::new(next)
}

#[test]
fn quotient_validation() {
    // |p| ≠ |q| on the circle
    let p = Polynomial::from_real(&[0.0, 2.0]);
    let q = Polynomial::from_real(&[1.0]);
    assert!(matches!(
        RationalBlaschke::from_quotient(p, q),
        Err(Error::NotUnimodularOnCircle { .. })
    ));
    // unimodular on the circle, but q vanishes at 0.5
    let p = Polynomial::from_real(&[1.0, -0.5]);
    let q = Polynomial::from_real(&[-0.5, 1.0]);
    assert!(matches!(
        RationalBlaschke::from_quotient(p, q),
        Err(Error::PoleInDisk { .. })
    ));
}

#[test]
fn interleaving_of_random_blaschke_roots() {
    let mut rng = ChaCha8Rng::seed_from_u64(45);
    for _ in 0..50 {
        let order = rng.gen_range(1..=6);
        let (b, _, _) = random_blaschke(&mut rng, order, 0.9);
        let starts = circle_roots(&(b.numerator() - b.denominator()), 1e-6).unwrap();
        let ends = circle_roots(&(b.numerator() + b.denominator()), 1e-6).unwrap();
        assert_eq!(starts.len(), order);
        assert!(strictly_interleaved(&starts, &ends));
    }
}
