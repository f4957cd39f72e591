//! Lower-triangular Toeplitz operators on polynomials of degree at most `n`.
//!
//! For a bounded symbol `f` analytic in the disk, the compression of
//! multiplication by `f` to `P = span{1, z, …, z^n}` has the matrix
//! `M[j][k] = f̂(j - k)` for `j ≥ k` and zero above the diagonal. When `f` is
//! a finite Blaschke product of order at most `n`, `‖M‖ = 1` and every vector
//! on which `M` preserves the norm satisfies `Mq = f·q`.

use num_complex::Complex64;

use crate::eigen::{hermitian_eigen, HermitianEigen};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Default half-width of the accepted eigenvalue band around 1.
pub const DEFAULT_TOL_EIG: f64 = 1e-8;
/// Relative size below which an eliminated coefficient counts as zero.
pub const PIVOT_FLOOR: f64 = 1e-9;

/// `(n+1) × (n+1)` lower-triangular Toeplitz matrix, stored as its first column.
#[derive(Debug, Clone, PartialEq)]
pub struct LowerToeplitz {
    col: Vec<Complex64>,
}

impl LowerToeplitz {
    /// Panics if `col` is empty.
    pub fn from_first_column(col: Vec<Complex64>) -> Self {
        assert!(!col.is_empty(), "a Toeplitz matrix needs at least one entry");
        LowerToeplitz { col }
    }

    /// The size parameter `n`; the matrix is `(n+1) × (n+1)`.
    pub fn n(&self) -> usize {
        self.col.len() - 1
    }

    pub fn first_column(&self) -> &[Complex64] {
        &self.col
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        if row >= col {
            self.col[row - col]
        } else {
            Complex64::new(0.0, 0.0)
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Complex64>> {
        let size = self.col.len();
        (0..size)
            .map(|j| (0..size).map(|k| self.entry(j, k)).collect())
            .collect()
    }

    /// `(Mq)[j] = Σ_{k ≤ j} t[j-k] q[k]`, i.e. the product `f·q` truncated to
    /// degree `n`. Coefficients of `q` above degree `n` are ignored.
    pub fn apply(&self, q: &Polynomial) -> Polynomial {
        let size = self.col.len();
        let q = q.resized(size);
        let coeffs = (0..size)
            .map(|j| (0..=j).map(|k| self.col[j - k] * q[k]).sum())
            .collect();
        Polynomial::new(coeffs)
    }

    /// The self-adjoint matrix `M*M`.
    pub fn gram(&self) -> Vec<Vec<Complex64>> {
        let size = self.col.len();
        (0..size)
            .map(|j| {
                (0..size)
                    .map(|k| (j.max(k)..size).map(|i| self.col[i - j].conj() * self.col[i - k]).sum())
                    .collect()
            })
            .collect()
    }

    pub fn gram_eigen(&self) -> Result<HermitianEigen> {
        hermitian_eigen(&self.gram())
    }

    /// Largest singular value, as the square root of the top eigenvalue of `M*M`.
    pub fn operator_norm(&self) -> Result<f64> {
        let eig = self.gram_eigen()?;
        Ok(eig.values.last().copied().unwrap_or(0.0).max(0.0).sqrt())
    }

    /// A unit vector `q` with `‖Mq‖ = ‖q‖` of smallest possible degree.
    ///
    /// The candidates are the eigenvectors of `M*M` whose eigenvalue lies
    /// within `tol_eig` of 1. Their span is put in echelon form from the
    /// highest coefficient down, pivoting on the largest entry; the last
    /// surviving vector has the smallest leading index. The result is scaled
    /// so its leading coefficient is positive real.
    pub fn norm_preserving_min_degree_vector(&self, tol_eig: f64) -> Result<Polynomial> {
        let eig = self.gram_eigen()?;
        let mut basis: Vec<Vec<Complex64>> = eig
            .values
            .iter()
            .zip(&eig.vectors)
            .filter(|(value, _)| (*value - 1.0).abs() <= tol_eig)
            .map(|(_, vector)| vector.clone())
            .collect();
        if basis.is_empty() {
            return Err(Error::EmptyEigenspace {
                tol: tol_eig,
                largest: eig.values.last().copied().unwrap_or(0.0),
            });
        }

        let size = self.col.len();
        let mut row = size;
        while basis.len() > 1 && row > 0 {
            row -= 1;
            let pivot = basis
                .iter()
                .enumerate()
                .map(|(i, v)| (i, v[row].norm() / vector_norm(v)))
                .filter(|&(_, rel)| rel > PIVOT_FLOOR)
                .max_by(|a, b| a.1.total_cmp(&b.1))
                .map(|(i, _)| i);
            let Some(pivot) = pivot else { continue };
            let pv = basis.swap_remove(pivot);
            for v in basis.iter_mut() {
                let factor = v[row] / pv[row];
                for (x, &y) in v.iter_mut().zip(&pv) {
                    *x -= factor * y;
                }
                v[row] = Complex64::new(0.0, 0.0);
            }
        }

        let mut q = basis.pop().expect("basis is nonempty");
        let norm = vector_norm(&q);
        let lead = q.iter().rposition(|x| x.norm() > PIVOT_FLOOR * norm).unwrap_or(0);
        for x in q.iter_mut().skip(lead + 1) {
            *x = Complex64::new(0.0, 0.0);
        }
        let unit = q[lead].conj() / (q[lead].norm() * vector_norm(&q));
        Ok(Polynomial::new(q.into_iter().map(|x| x * unit).collect()))
    }
}

fn vector_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}
