//! Reduced density matrices of the atom and of the field.

use ndarray::Array2;
use num_complex::Complex64 as C64;

use crate::error::Result;
use crate::evolution::{common_n_max, field_dim, sector_vectors, BranchAmplitudes};

/// 2x2 reduced atomic state in the `(e, g)` basis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AtomState {
    pub rho_ee: f64,
    pub rho_gg: f64,
    pub rho_eg: C64,
}

impl AtomState {
    pub fn excited() -> Self {
        AtomState { rho_ee: 1.0, rho_gg: 0.0, rho_eg: C64::new(0.0, 0.0) }
    }

    pub fn rho_ge(&self) -> C64 {
        self.rho_eg.conj()
    }

    pub fn to_matrix(&self) -> Array2<C64> {
        ndarray::array![
            [C64::new(self.rho_ee, 0.0), self.rho_eg],
            [self.rho_ge(), C64::new(self.rho_gg, 0.0)]
        ]
    }

    /// `rho_ee rho_gg - |rho_eg|^2`, non-negative for a physical state.
    pub fn determinant(&self) -> f64 {
        self.rho_ee * self.rho_gg - self.rho_eg.norm_sqr()
    }
}

pub fn atom_reduced(branches: &[BranchAmplitudes], k: usize) -> Result<AtomState> {
    common_n_max(branches)?;
    let mut rho_ee = 0.0;
    let mut rho_eg = C64::new(0.0, 0.0);
    for br in branches {
        rho_ee += br.weight * br.a.iter().map(|z| z.norm_sqr()).sum::<f64>();
        // |m,e> pairs with |m,g>, whose amplitude is B_{m-k}
        let coherence: C64 = br.a.iter().skip(k).zip(&br.b).map(|(a, b)| a * b.conj()).sum();
        rho_eg += br.weight * coherence;
    }
    Ok(AtomState { rho_ee, rho_gg: 1.0 - rho_ee, rho_eg })
}

pub fn inversion(a: &AtomState) -> f64 {
    a.rho_ee - a.rho_gg
}

/// Reduced field state, both dense and as a low-rank factor with
/// `dense = factors factors^H`.
#[derive(Clone, Debug)]
pub struct FieldDensity {
    pub dense: Array2<C64>,
    /// One column `sqrt(w) v` per branch and atomic sector.
    pub factors: Array2<C64>,
}

impl FieldDensity {
    pub fn dim(&self) -> usize {
        self.dense.nrows()
    }

    pub fn trace(&self) -> f64 {
        self.dense.diag().iter().map(|z| z.re).sum()
    }

    /// `factors^H factors`, which shares the nonzero spectrum of `dense`.
    pub fn gram(&self) -> Array2<C64> {
        self.factors.t().mapv(|z| z.conj()).dot(&self.factors)
    }
}

pub fn field_reduced(branches: &[BranchAmplitudes], k: usize) -> Result<FieldDensity> {
    let n_max = common_n_max(branches)?;
    let dim = field_dim(n_max, k);
    let mut factors = Array2::zeros((dim, 2 * branches.len()));
    for (i, br) in branches.iter().enumerate() {
        let s = br.weight.sqrt();
        let (e, g) = sector_vectors(br, k);
        for n in 0..dim {
            factors[[n, 2 * i]] = s * e[n];
            factors[[n, 2 * i + 1]] = s * g[n];
        }
    }
    let dense = factors.dot(&factors.t().mapv(|z| z.conj()));
    Ok(FieldDensity { dense, factors })
}
