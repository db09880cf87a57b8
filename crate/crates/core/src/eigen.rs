//! Cyclic Jacobi eigensolver for dense complex Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary and then applies the classical real plane rotation, so the
//! combined 2x2 transform is
//!
//! ```text
//! V = [ c          s         ]
//!     [ -s e^{-iφ} c e^{-iφ} ]      a_pq = |a_pq| e^{iφ}
//! ```
//!
//! Sweeps stop once the off-diagonal Frobenius norm drops below
//! `1e-13 * ||M||_F`.

use ndarray::{Array1, Array2, ArrayView2};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

pub const MAX_SWEEPS: usize = 100;
pub const OFF_NORM_REL_TOL: f64 = 1e-13;
pub const HERMITIAN_TOL: f64 = 1e-12;

#[derive(Clone, Debug)]
pub struct HermitianEigen {
    /// Eigenvalues in descending order.
    pub values: Array1<f64>,
    /// Orthonormal eigenvectors, one per column, aligned with `values`.
    pub vectors: Array2<C64>,
}

fn frobenius(m: ArrayView2<C64>) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn off_norm(a: &Array2<C64>) -> f64 {
    let n = a.nrows();
    let mut acc = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                acc += a[[p, q]].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Symmetrize `m` after checking it is Hermitian to `HERMITIAN_TOL` relative
/// to its Frobenius norm.
fn hermitian_part(m: ArrayView2<C64>) -> Result<Array2<C64>> {
    let (rows, cols) = m.dim();
    if rows != cols {
        return Err(Error::Dimension { expected: rows, found: cols });
    }
    let scale = frobenius(m).max(1.0);
    let mut deviation = 0.0f64;
    let mut a = Array2::zeros((rows, rows));
    for i in 0..rows {
        for j in 0..rows {
            let mij = m[[i, j]];
            let mji = m[[j, i]].conj();
            deviation = deviation.max((mij - mji).norm());
            a[[i, j]] = 0.5 * (mij + mji);
        }
    }
    if deviation > HERMITIAN_TOL * scale {
        return Err(Error::NotHermitian { deviation });
    }
    Ok(a)
}

fn jacobi(m: ArrayView2<C64>, want_vectors: bool) -> Result<(Array1<f64>, Option<Array2<C64>>)> {
    let mut a = hermitian_part(m)?;
    let n = a.nrows();
    let mut v = want_vectors.then(|| Array2::<C64>::eye(n));
    let target = OFF_NORM_REL_TOL * frobenius(a.view());

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off <= target || off == 0.0 {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::Eigensolver { sweeps, off_norm: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[[p, q]];
                let g = apq.norm();
                if g == 0.0 {
                    continue;
                }
                let phase = apq / g;
                let app = a[[p, p]].re;
                let aqq = a[[q, q]].re;
                let theta = 0.5 * (aqq - app) / g;
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;

                let vpp = C64::new(c, 0.0);
                let vpq = C64::new(s, 0.0);
                let vqp = -s * phase.conj();
                let vqq = c * phase.conj();

                // columns: A <- A V
                for i in 0..n {
                    let aip = a[[i, p]];
                    let aiq = a[[i, q]];
                    a[[i, p]] = aip * vpp + aiq * vqp;
                    a[[i, q]] = aip * vpq + aiq * vqq;
                }
                // rows: A <- V^H A
                for j in 0..n {
                    let apj = a[[p, j]];
                    let aqj = a[[q, j]];
                    a[[p, j]] = vpp.conj() * apj + vqp.conj() * aqj;
                    a[[q, j]] = vpq.conj() * apj + vqq.conj() * aqj;
                }
                a[[p, q]] = C64::new(0.0, 0.0);
                a[[q, p]] = C64::new(0.0, 0.0);
                a[[p, p]].im = 0.0;
                a[[q, q]].im = 0.0;

                if let Some(v) = v.as_mut() {
                    for i in 0..n {
                        let xip = v[[i, p]];
                        let xiq = v[[i, q]];
                        v[[i, p]] = xip * vpp + xiq * vqp;
                        v[[i, q]] = xip * vpq + xiq * vqq;
                    }
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[[j, j]].re.total_cmp(&a[[i, i]].re));
    let values = order.iter().map(|&i| a[[i, i]].re).collect();
    let vectors = v.map(|v| {
        let mut sorted = Array2::zeros((n, n));
        for (dst, &src) in order.iter().enumerate() {
            sorted.column_mut(dst).assign(&v.column(src));
        }
        sorted
    });
    Ok((values, vectors))
}

/// Eigenvalues of a Hermitian matrix, in descending order.
pub fn hermitian_eigenvalues(m: ArrayView2<C64>) -> Result<Array1<f64>> {
    jacobi(m, false).map(|(values, _)| values)
}

/// Full eigendecomposition `M = V diag(values) V^H`.
pub fn hermitian_eigen(m: ArrayView2<C64>) -> Result<HermitianEigen> {
    let (values, vectors) = jacobi(m, true)?;
    Ok(HermitianEigen { values, vectors: vectors.expect("vectors requested") })
}
