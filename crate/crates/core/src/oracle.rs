//! Brute-force reference propagator.
//!
//! The truncated Hamiltonian is assembled explicitly in the product basis
//! `[(0,e) .. (N,e), (0,g) .. (N,g)]`, diagonalized once, and states are
//! evolved as `U = V e^{-iEt} V^H`. Partial traces and entropies are then
//! taken directly from the full joint density matrix. Nothing here shares
//! code with the closed-form path apart from the eigensolver.

use ndarray::{Array1, Array2};
use num_complex::Complex64 as C64;
use std::f64::consts::PI;

use crate::dressed::{ladder_factor, ModelParams};
use crate::eigen::{hermitian_eigen, hermitian_eigenvalues, HermitianEigen};
use crate::entropy::{spectrum_entropy, EntropySample};
use crate::error::{Error, Result};
use crate::fock::{choose_truncation, coherent_amplitudes, FieldPrep, DEFAULT_TAIL_TOL};

/// Population allowed within `k` levels of the truncation edge before the
/// oracle warns.
pub const EDGE_POPULATION_TOL: f64 = 1e-10;

#[derive(Clone, Debug)]
pub struct TruncatedHamiltonian {
    pub n_max: usize,
    pub k: usize,
    pub h: Array2<f64>,
}

impl TruncatedHamiltonian {
    pub fn dim(&self) -> usize {
        2 * (self.n_max + 1)
    }

    pub fn excited(&self, n: usize) -> usize {
        n
    }

    pub fn ground(&self, n: usize) -> usize {
        self.n_max + 1 + n
    }
}

pub fn build_hamiltonian(p: &ModelParams, n_max: usize) -> Result<TruncatedHamiltonian> {
    p.validate()?;
    if n_max < p.k {
        return Err(Error::Domain(format!("oracle truncation n_max = {n_max} must be at least k = {}", p.k)));
    }
    let mut ham = TruncatedHamiltonian { n_max, k: p.k, h: Array2::zeros((2 * (n_max + 1), 2 * (n_max + 1))) };
    let (b1, b2) = p.stark_shifts();
    for n in 0..=n_max {
        let nf = n as f64;
        let (e, g) = (ham.excited(n), ham.ground(n));
        ham.h[[e, e]] = p.omega * nf + 0.5 * p.omega0 + b2 * nf;
        ham.h[[g, g]] = p.omega * nf - 0.5 * p.omega0 + b1 * nf;
        if n + p.k <= n_max {
            let gk = ham.ground(n + p.k);
            let coupling = p.lambda * ladder_factor(n, p.k);
            ham.h[[e, gk]] = coupling;
            ham.h[[gk, e]] = coupling;
        }
    }
    Ok(ham)
}

/// Diagonalized Hamiltonian ready for propagation.
#[derive(Clone, Debug)]
pub struct Propagator {
    pub hamiltonian: TruncatedHamiltonian,
    eigen: HermitianEigen,
}

impl Propagator {
    pub fn new(hamiltonian: TruncatedHamiltonian) -> Result<Self> {
        let eigen = hermitian_eigen(hamiltonian.h.mapv(|x| C64::new(x, 0.0)).view())?;
        Ok(Propagator { hamiltonian, eigen })
    }

    pub fn energies(&self) -> &Array1<f64> {
        &self.eigen.values
    }

    fn phases(&self, t: f64) -> Array1<C64> {
        self.eigen.values.mapv(|e| C64::from_polar(1.0, -e * t))
    }

    pub fn propagate_pure(&self, psi0: &Array1<C64>, t: f64) -> Array1<C64> {
        let v = &self.eigen.vectors;
        let coeffs = v.t().mapv(|z| z.conj()).dot(psi0) * self.phases(t);
        v.dot(&coeffs)
    }

    /// `rho(t) = U rho0 U^H`.
    pub fn propagate(&self, rho0: &Array2<C64>, t: f64) -> Array2<C64> {
        let v = &self.eigen.vectors;
        let phases = self.phases(t);
        // U = V diag(phases) V^H
        let vp = Array2::from_shape_fn(v.dim(), |(i, j)| v[[i, j]] * phases[j]);
        let u = vp.dot(&v.t().mapv(|z| z.conj()));
        u.dot(rho0).dot(&u.t().mapv(|z| z.conj()))
    }

    /// Undo the free rotation `omega (a†a + k sz / 2)` on a lab-frame state,
    /// giving amplitudes comparable with the closed form.
    pub fn to_rotating_frame(&self, psi: &Array1<C64>, p: &ModelParams, t: f64) -> Array1<C64> {
        let h = &self.hamiltonian;
        let half_k = 0.5 * h.k as f64;
        let mut out = psi.clone();
        for n in 0..=h.n_max {
            let nf = n as f64;
            out[h.excited(n)] *= C64::from_polar(1.0, p.omega * (nf + half_k) * t);
            out[h.ground(n)] *= C64::from_polar(1.0, p.omega * (nf - half_k) * t);
        }
        out
    }
}

/// Partial traces of a joint density matrix in the oracle basis.
pub fn partial_traces(h: &TruncatedHamiltonian, rho: &Array2<C64>) -> (Array2<C64>, Array2<C64>) {
    let d = h.n_max + 1;
    let mut atom = Array2::zeros((2, 2));
    let mut field = Array2::zeros((d, d));
    for n in 0..d {
        let (en, gn) = (h.excited(n), h.ground(n));
        atom[[0, 0]] += rho[[en, en]];
        atom[[1, 1]] += rho[[gn, gn]];
        atom[[0, 1]] += rho[[en, gn]];
        atom[[1, 0]] += rho[[gn, en]];
        for m in 0..d {
            field[[n, m]] = rho[[en, h.excited(m)]] + rho[[gn, h.ground(m)]];
        }
    }
    (atom, field)
}

/// Initial joint density matrix `|e><e| ⊗ rho_f`, built straight from the
/// coherent states `|±alpha>`.
pub fn initial_density(prep: FieldPrep, h: &TruncatedHamiltonian) -> Result<Array2<C64>> {
    let q = coherent_amplitudes(prep.alpha(), h.n_max)?;
    let plus: Vec<f64> = q.q().to_vec();
    let minus: Vec<f64> = q.q().iter().enumerate().map(|(n, x)| if n % 2 == 0 { *x } else { -x }).collect();
    let d = h.n_max + 1;
    let field = match prep {
        FieldPrep::Superposition { r, .. } => {
            let v: Vec<f64> = plus.iter().zip(&minus).map(|(a, b)| a + r * b).collect();
            let norm: f64 = v.iter().map(|x| x * x).sum();
            if norm.is_nan() || norm <= 0.0 {
                return Err(Error::DegenerateState { r, alpha: prep.alpha(), norm });
            }
            Array2::from_shape_fn((d, d), |(n, m)| v[n] * v[m] / norm)
        }
        FieldPrep::Mixture { .. } => {
            Array2::from_shape_fn((d, d), |(n, m)| 0.5 * (plus[n] * plus[m] + minus[n] * minus[m]))
        }
    };
    let mut rho = Array2::zeros((h.dim(), h.dim()));
    for n in 0..d {
        for m in 0..d {
            rho[[h.excited(n), h.excited(m)]] = C64::new(field[[n, m]], 0.0);
        }
    }
    Ok(rho)
}

/// Population in the top `k` Fock levels of either atomic sector.
pub fn edge_population(h: &TruncatedHamiltonian, rho: &Array2<C64>) -> f64 {
    let lo = (h.n_max + 1).saturating_sub(h.k);
    (lo..=h.n_max).map(|n| rho[[h.excited(n), h.excited(n)]].re + rho[[h.ground(n), h.ground(n)]].re).sum()
}

/// Entropies on a grid of `lambda t / pi` values, computed from the full
/// propagated density matrix.
pub fn oracle_entropies(p: &ModelParams, prep: FieldPrep, t_grid: &[f64]) -> Result<Vec<EntropySample>> {
    let n_max = choose_truncation(prep.alpha(), p.k, DEFAULT_TAIL_TOL)? + 2 * p.k;
    let oracle = Oracle::new(p, prep, n_max)?;
    t_grid.iter().map(|&x| oracle.sample(x)).collect()
}

/// Propagator plus the initial state for one scenario.
#[derive(Clone, Debug)]
pub struct Oracle {
    params: ModelParams,
    propagator: Propagator,
    rho0: Array2<C64>,
}

impl Oracle {
    pub fn new(p: &ModelParams, prep: FieldPrep, n_max: usize) -> Result<Self> {
        let propagator = Propagator::new(build_hamiltonian(p, n_max)?)?;
        let rho0 = initial_density(prep, &propagator.hamiltonian)?;
        Ok(Oracle { params: *p, propagator, rho0 })
    }

    pub fn propagator(&self) -> &Propagator {
        &self.propagator
    }

    pub fn density_at(&self, t: f64) -> Array2<C64> {
        self.propagator.propagate(&self.rho0, t)
    }

    /// Entropy sample at `scaled_t = lambda t / pi`.
    pub fn sample(&self, scaled_t: f64) -> Result<EntropySample> {
        let t = scaled_t * PI / self.params.lambda;
        let rho = self.density_at(t);
        let h = &self.propagator.hamiltonian;
        let edge = edge_population(h, &rho);
        if edge > EDGE_POPULATION_TOL {
            log::warn!("oracle truncation n_max = {} leaves population {edge:e} near the edge", h.n_max);
        }
        let (atom, field) = partial_traces(h, &rho);
        let atom_spec = hermitian_eigenvalues(atom.view())?;
        let s_a = spectrum_entropy(atom_spec.iter().copied())?;
        let s_f = spectrum_entropy(hermitian_eigenvalues(field.view())?)?;
        Ok(EntropySample { scaled_t, s_a, s_f, lambda_plus: atom_spec[0], lambda_minus: atom_spec[1] })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dressed::{eigenvalues, rabi_parameters};
    use ndarray::array;

    #[test]
    fn hamiltonian_structure() {
        let p = ModelParams::new(1.0, 0.0, 2, 0.0).unwrap();
        let h = build_hamiltonian(&p, 2).unwrap();
        assert!((h.h[[h.excited(0), h.ground(2)]] - 2f64.sqrt()).abs() < 1e-15);
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                assert_eq!(h.h[[i, j]], h.h[[j, i]]);
                let coupled = (0..=h.n_max).any(|n| {
                    n + 2 <= h.n_max
                        && ((i, j) == (h.excited(n), h.ground(n + 2)) || (j, i) == (h.excited(n), h.ground(n + 2)))
                });
                if i != j && !coupled {
                    assert_eq!(h.h[[i, j]], 0.0);
                }
            }
        }
        assert!(build_hamiltonian(&p, 1).is_err());
    }

    #[test]
    fn coupled_blocks_match_dressed_states() {
        for (delta, r) in [(0.0, 0.0), (1.3, 0.5), (-0.7, 0.3), (2.0, 1.0)] {
            let p = ModelParams::new(0.8, delta, 2, r).unwrap();
            let h = build_hamiltonian(&p, 30).unwrap();
            for n in 0..=28 {
                let (e, g) = (h.excited(n), h.ground(n + 2));
                let block = array![[h.h[[e, e]], h.h[[e, g]]], [h.h[[g, e]], h.h[[g, g]]]];
                let rd = rabi_parameters(&p, n);
                let (ep, em) = eigenvalues(&p, n);
                let plus = array![rd.theta.sin(), rd.theta.cos()];
                let minus = array![rd.theta.cos(), -rd.theta.sin()];
                let scale = ep.abs().max(1.0);
                let rp = &block.dot(&plus) - &(&plus * ep);
                let rm = &block.dot(&minus) - &(&minus * em);
                assert!(rp.iter().chain(rm.iter()).all(|x| x.abs() < 1e-12 * scale), "n = {n}");
                assert!((plus.dot(&minus)).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn uncoupled_ground_ladder() {
        let p = ModelParams::new(1.0, 0.6, 3, 0.5).unwrap();
        let h = build_hamiltonian(&p, 10).unwrap();
        for s in 0..3 {
            let g = h.ground(s);
            assert!((0..h.dim()).all(|j| j == g || h.h[[g, j]] == 0.0));
            // diagonal = E0(s) + omega (s - k/2)
            let e0 = crate::dressed::ground_ladder_energy(&p, s).unwrap();
            assert!((h.h[[g, g]] - (e0 + p.omega * (s as f64 - 1.5))).abs() < 1e-13);
        }
    }

    #[test]
    fn propagation_preserves_trace_and_spectrum() {
        let p = ModelParams::new(1.0, 0.0, 2, 0.5).unwrap();
        let oracle = Oracle::new(&p, FieldPrep::Mixture { alpha: 1.5 }, 24).unwrap();
        let rho0 = oracle.density_at(0.0);
        for (a, b) in rho0.iter().zip(oracle.rho0.iter()) {
            assert!((a - b).norm() < 1e-13);
        }
        let spec0 = hermitian_eigenvalues(oracle.rho0.view()).unwrap();
        for t in [0.7, 3.1] {
            let rho = oracle.density_at(t);
            let tr: f64 = rho.diag().iter().map(|z| z.re).sum();
            assert!((tr - 1.0).abs() < 1e-10);
            let spec = hermitian_eigenvalues(rho.view()).unwrap();
            for (a, b) in spec.iter().zip(spec0.iter()) {
                assert!((a - b).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn oracle_entropy_examples() {
        let p = ModelParams::new(1.0, 0.0, 2, 0.0).unwrap();
        let coh = oracle_entropies(&p, FieldPrep::Superposition { r: 0.0, alpha: 2.0 }, &[0.0, 0.3, 0.77]).unwrap();
        assert!(coh[0].s_a.abs() < 1e-12 && coh[0].s_f.abs() < 1e-10);
        for s in &coh {
            assert!((s.s_a - s.s_f).abs() < 1e-9);
        }
        let mix = oracle_entropies(&p, FieldPrep::Mixture { alpha: 2.0 }, &[0.0]).unwrap();
        let overlap = (-2.0f64 * 4.0).exp();
        let (l1, l2) = (0.5 * (1.0 + overlap), 0.5 * (1.0 - overlap));
        assert!(mix[0].s_a.abs() < 1e-12);
        assert!((mix[0].s_f - (-l1 * l1.ln() - l2 * l2.ln())).abs() < 1e-10);
    }
}
