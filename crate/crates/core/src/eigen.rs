//! Cyclic Jacobi eigen-decomposition of small dense Hermitian matrices.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub const MAX_SWEEPS: usize = 100;
/// Sweeps stop once the off-diagonal Frobenius norm drops below this,
/// relative to `max(1, ‖A‖_F)`.
pub const OFF_DIAGONAL_TOL: f64 = 1e-13;

/// Eigenvalues in ascending order, with unit eigenvectors as the matching
/// entries of `vectors` (each of length `n`).
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<Complex64>>,
}

/// Diagonalizes the Hermitian matrix `a` (row-major, `n × n`).
///
/// Only the lower triangle and the real part of the diagonal are read; the
/// upper triangle is taken to be the conjugate transpose.
pub fn hermitian_eigen(a: &[Vec<Complex64>]) -> Result<HermitianEigen> {
    let n = a.len();
    let mut m: Vec<Vec<Complex64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Greater => a[i][j],
                    std::cmp::Ordering::Equal => Complex64::new(a[i][i].re, 0.0),
                    std::cmp::Ordering::Less => a[j][i].conj(),
                })
                .collect()
        })
        .collect();
    let mut v: Vec<Vec<Complex64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0))
                .collect()
        })
        .collect();

    let scale = frobenius(&m).max(1.0);
    let mut sweeps = 0;
    while off_diagonal(&m) > OFF_DIAGONAL_TOL * scale {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                what: "Jacobi eigenvalue sweep",
                iterations: MAX_SWEEPS,
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i][i].re.total_cmp(&m[j][j].re));
    Ok(HermitianEigen {
        values: order.iter().map(|&i| m[i][i].re).collect(),
        vectors: order.iter().map(|&k| (0..n).map(|row| v[row][k]).collect()).collect(),
    })
}

/// Zeroes `m[p][q]` with the unitary `U = diag(1, e^{-iα}) · R(θ)` acting on
/// coordinates `p, q`, where `α = arg m[p][q]` and `R` is the real Jacobi
/// rotation for the resulting real symmetric 2×2 block.
fn rotate(m: &mut [Vec<Complex64>], v: &mut [Vec<Complex64>], p: usize, q: usize) {
    let apq = m[p][q];
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let phase = apq / g;
    let (app, aqq) = (m[p][p].re, m[q][q].re);
    let tau = (aqq - app) / (2.0 * g);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // U = [[c, s], [-s e^{-iα}, c e^{-iα}]]
    let u_pp = Complex64::new(c, 0.0);
    let u_pq = Complex64::new(s, 0.0);
    let u_qp = -phase.conj() * s;
    let u_qq = phase.conj() * c;

    let n = m.len();
    // columns: M <- M U
    for row in m.iter_mut() {
        let (xp, xq) = (row[p], row[q]);
        row[p] = xp * u_pp + xq * u_qp;
        row[q] = xp * u_pq + xq * u_qq;
    }
    // rows: M <- U^H M; rows p and q are read and written together
    #[allow(clippy::needless_range_loop)]
    for col in 0..n {
        let (xp, xq) = (m[p][col], m[q][col]);
        m[p][col] = u_pp.conj() * xp + u_qp.conj() * xq;
        m[q][col] = u_pq.conj() * xp + u_qq.conj() * xq;
    }
    m[p][q] = Complex64::new(0.0, 0.0);
    m[q][p] = Complex64::new(0.0, 0.0);
    m[p][p].im = 0.0;
    m[q][q].im = 0.0;

    for row in v.iter_mut() {
        let (xp, xq) = (row[p], row[q]);
        row[p] = xp * u_pp + xq * u_qp;
        row[q] = xp * u_pq + xq * u_qq;
    }
}

fn off_diagonal(m: &[Vec<Complex64>]) -> f64 {
    let mut sum = 0.0;
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j {
                sum += x.norm_sqr();
            }
        }
    }
    sum.sqrt()
}

fn frobenius(m: &[Vec<Complex64>]) -> f64 {
    m.iter()
        .flat_map(|row| row.iter())
        .map(|x| x.norm_sqr())
        .sum::<f64>()
        .sqrt()
}
