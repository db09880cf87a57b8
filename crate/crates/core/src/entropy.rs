//! Von Neumann entropies (in nats) of the reduced atomic and field states.
//!
//! The atomic entropy uses the closed-form qubit spectrum. The field entropy
//! is taken from the eigenvalues of the small Gram matrix `F^H F` of the
//! field factor `F`; the dense route through the full field matrix is kept
//! for cross-checks.

use ndarray::ArrayView2;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::reduced::{AtomState, FieldDensity};

pub use crate::eigen::{hermitian_eigen, hermitian_eigenvalues, HermitianEigen};

/// Eigenvalues at or below this contribute nothing to the entropy.
pub const EIG_FLOOR: f64 = 1e-15;
/// Most negative eigenvalue accepted as round-off.
pub const NEGATIVE_EIG_TOL: f64 = 1e-9;
/// Slack allowed on the qubit discriminant before it is clamped to 1.
pub const DISCRIMINANT_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EntropySample {
    /// `lambda t / pi`
    pub scaled_t: f64,
    pub s_a: f64,
    pub s_f: f64,
    pub lambda_plus: f64,
    pub lambda_minus: f64,
}

fn xlnx(x: f64) -> f64 {
    if x <= EIG_FLOOR {
        0.0
    } else {
        x * x.ln()
    }
}

/// `-sum x ln x` over a spectrum, rejecting eigenvalues below
/// `-NEGATIVE_EIG_TOL`.
pub fn spectrum_entropy(eigenvalues: impl IntoIterator<Item = f64>) -> Result<f64> {
    let mut s = 0.0;
    for x in eigenvalues {
        if x < -NEGATIVE_EIG_TOL {
            return Err(Error::Positivity(format!("eigenvalue {x:e}")));
        }
        s -= xlnx(x);
    }
    Ok(s.max(0.0))
}

/// Entropy and spectrum `(S_a, lambda_+, lambda_-)` of a qubit state.
pub fn qubit_entropy(a: &AtomState) -> Result<(f64, f64, f64)> {
    let disc = (2.0 * a.rho_ee - 1.0).powi(2) + 4.0 * a.rho_eg.norm_sqr();
    if disc > 1.0 + DISCRIMINANT_TOL {
        return Err(Error::Positivity(format!("qubit Bloch vector length^2 = {disc}")));
    }
    let root = disc.clamp(0.0, 1.0).sqrt();
    let lp = 0.5 * (1.0 + root);
    let lm = 0.5 * (1.0 - root);
    // starting from +0.0 keeps a pure state from printing as -0
    Ok((0.0 - xlnx(lp) - xlnx(lm), lp, lm))
}

/// Entropy of a density matrix through its full Jacobi spectrum.
pub fn matrix_entropy(rho: ArrayView2<C64>) -> Result<f64> {
    spectrum_entropy(hermitian_eigenvalues(rho)?)
}

pub fn field_entropy(f: &FieldDensity) -> Result<f64> {
    matrix_entropy(f.gram().view())
}

pub fn field_entropy_dense(f: &FieldDensity) -> Result<f64> {
    matrix_entropy(f.dense.view())
}

pub fn entropy_sample(scaled_t: f64, atom: &AtomState, field: &FieldDensity) -> Result<EntropySample> {
    let (s_a, lambda_plus, lambda_minus) = qubit_entropy(atom)?;
    let s_f = field_entropy(field)?;
    Ok(EntropySample { scaled_t, s_a, s_f, lambda_plus, lambda_minus })
}
