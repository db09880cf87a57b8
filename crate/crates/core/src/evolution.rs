//! Closed-form evolution of the joint state from `|e> ⊗ field`.
//!
//! Amplitudes are in the frame rotating with `omega (a†a + k sz / 2)`. For
//! each Fock index `n` of a branch with initial amplitude `q_n c_n`:
//!
//! ```text
//! A_n(t) = q_n c_n e^{-i lt d+(n)} (cos(lt mu_n) - i nu_n sin(lt mu_n) / mu_n)
//! B_n(t) = -i q_n c_n tau_n e^{-i lt d+(n)} sin(lt mu_n) / mu_n
//! ```
//!
//! with `lt = lambda t` and dimensionless `nu_n, tau_n, mu_n`. `A_n` is the
//! amplitude of `|n,e>` and `B_n` that of `|n+k,g>`.

use ndarray::Array2;
use num_complex::Complex64 as C64;

use crate::dressed::{rabi_parameters, ModelParams, RabiData};
use crate::error::{Error, Result};
use crate::fock::PreparedField;

#[derive(Clone, Debug, PartialEq)]
pub struct BranchAmplitudes {
    pub weight: f64,
    /// Amplitudes of `|n, e>`, `0 <= n <= n_max`.
    pub a: Vec<C64>,
    /// Amplitudes of `|n + k, g>`, `0 <= n <= n_max`.
    pub b: Vec<C64>,
    /// Physical time.
    pub t: f64,
    /// `lambda * t`.
    pub lambda_t: f64,
}

impl BranchAmplitudes {
    pub fn n_max(&self) -> usize {
        self.a.len() - 1
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a.iter().chain(&self.b).map(|z| z.norm_sqr()).sum()
    }
}

/// Dimension of the field space that holds both sectors: `n_max + k + 1`.
pub fn field_dim(n_max: usize, k: usize) -> usize {
    n_max + k + 1
}

fn evolve_component(init: f64, rd: &RabiData, lambda_t: f64) -> (C64, C64) {
    let phase = C64::from_polar(1.0, -lambda_t * rd.delta_plus);
    let (sin, cos) = (lambda_t * rd.mu_s).sin_cos();
    let sinc = sin / rd.mu_s;
    let a = init * phase * C64::new(cos, -rd.nu_s * sinc);
    let b = init * phase * C64::new(0.0, -rd.tau_s * sinc);
    (a, b)
}

pub fn branch_amplitudes(p: &ModelParams, field: &PreparedField, branch: usize, t: f64) -> BranchAmplitudes {
    let rabi: Vec<RabiData> = (0..=field.n_max()).map(|n| rabi_parameters(p, n)).collect();
    amplitudes_from(&rabi, field.branches()[branch].weight, &field.branch_vector(branch), p.lambda, t)
}

fn amplitudes_from(rabi: &[RabiData], weight: f64, init: &[f64], lambda: f64, t: f64) -> BranchAmplitudes {
    let lambda_t = lambda * t;
    let (a, b) = init.iter().zip(rabi).map(|(&x, rd)| evolve_component(x, rd, lambda_t)).unzip();
    BranchAmplitudes { weight, a, b, t, lambda_t }
}

/// Rabi data and branch vectors cached for repeated evaluation on a time grid.
#[derive(Clone, Debug)]
pub struct ClosedForm {
    params: ModelParams,
    rabi: Vec<RabiData>,
    branches: Vec<(f64, Vec<f64>)>,
}

impl ClosedForm {
    pub fn new(params: ModelParams, field: &PreparedField) -> Self {
        let rabi = (0..=field.n_max()).map(|n| rabi_parameters(&params, n)).collect();
        let branches = field
            .branches()
            .iter()
            .enumerate()
            .map(|(i, b)| (b.weight, field.branch_vector(i)))
            .collect();
        ClosedForm { params, rabi, branches }
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn n_max(&self) -> usize {
        self.rabi.len() - 1
    }

    /// All branches at physical time `t`.
    pub fn at(&self, t: f64) -> Vec<BranchAmplitudes> {
        self.branches
            .iter()
            .map(|(w, init)| amplitudes_from(&self.rabi, *w, init, self.params.lambda, t))
            .collect()
    }
}

/// Blocks of the joint density matrix in the `(e, g)` partition, each of
/// size `field_dim x field_dim`.
#[derive(Clone, Debug)]
pub struct JointBlocks {
    pub rho1: Array2<C64>,
    pub rho2: Array2<C64>,
    pub rho3: Array2<C64>,
    pub rho4: Array2<C64>,
}

impl JointBlocks {
    pub fn trace(&self) -> f64 {
        self.rho1.diag().iter().chain(self.rho4.diag().iter()).map(|z| z.re).sum()
    }
}

/// Check that all branches share a length and return `n_max`.
pub(crate) fn common_n_max(branches: &[BranchAmplitudes]) -> Result<usize> {
    let first = branches.first().ok_or(Error::Dimension { expected: 1, found: 0 })?;
    let len = first.a.len();
    for br in branches {
        for found in [br.a.len(), br.b.len()] {
            if found != len {
                return Err(Error::Dimension { expected: len, found });
            }
        }
    }
    Ok(len - 1)
}

/// Excited- and ground-sector field vectors of one branch on the common
/// field index: `(A_n, B_{n-k})`, zero-padded to `field_dim`.
pub(crate) fn sector_vectors(br: &BranchAmplitudes, k: usize) -> (Vec<C64>, Vec<C64>) {
    let dim = field_dim(br.n_max(), k);
    let zero = C64::new(0.0, 0.0);
    let mut e = vec![zero; dim];
    let mut g = vec![zero; dim];
    e[..br.a.len()].copy_from_slice(&br.a);
    g[k..].copy_from_slice(&br.b);
    (e, g)
}

pub fn joint_blocks(branches: &[BranchAmplitudes], k: usize) -> Result<JointBlocks> {
    let n_max = common_n_max(branches)?;
    let dim = field_dim(n_max, k);
    let mut rho1 = Array2::<C64>::zeros((dim, dim));
    let mut rho2 = Array2::<C64>::zeros((dim, dim));
    let mut rho4 = Array2::zeros((dim, dim));
    for br in branches {
        let (e, g) = sector_vectors(br, k);
        for n in 0..dim {
            for m in 0..dim {
                rho1[[n, m]] += br.weight * e[n] * e[m].conj();
                rho2[[n, m]] += br.weight * e[n] * g[m].conj();
                rho4[[n, m]] += br.weight * g[n] * g[m].conj();
            }
        }
    }
    let rho3 = rho2.t().mapv(|z| z.conj());
    Ok(JointBlocks { rho1, rho2, rho3, rho4 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{prepare_truncated, FieldPrep, DEFAULT_TAIL_TOL};
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn setup(prep: FieldPrep, delta: f64, r: f64) -> (ModelParams, PreparedField) {
        let p = ModelParams::new(1.0, delta, 2, r).unwrap();
        let f = prepare_truncated(prep, 2, DEFAULT_TAIL_TOL).unwrap();
        (p, f)
    }

    #[test]
    fn initial_condition() {
        let (p, f) = setup(FieldPrep::Superposition { r: 1.0, alpha: 4.0 }, 0.0, 0.5);
        let amps = branch_amplitudes(&p, &f, 0, 0.0);
        for (n, init) in f.branch_vector(0).iter().enumerate() {
            assert_eq!(amps.a[n], C64::new(*init, 0.0));
            assert_eq!(amps.b[n], C64::new(0.0, 0.0));
        }
    }

    #[test]
    fn half_rabi_period() {
        let (p, f) = setup(FieldPrep::Superposition { r: 0.0, alpha: 4.0 }, 0.0, 0.0);
        let n = 7;
        let mu = rabi_parameters(&p, n).mu_s;
        let amps = branch_amplitudes(&p, &f, 0, PI / mu);
        let init = f.branch_vector(0)[n];
        assert!((amps.a[n] - C64::new(-init, 0.0)).norm() < 1e-14);
        assert!(amps.b[n].norm() < 1e-14);
    }

    #[test]
    fn mixture_blocks_at_zero() {
        let (p, f) = setup(FieldPrep::Mixture { alpha: 4.0 }, 0.0, 0.0);
        let blocks = joint_blocks(&ClosedForm::new(p, &f).at(0.0), 2).unwrap();
        let q = f.coherent().q();
        for n in 0..q.len() {
            for m in 0..q.len() {
                let expected = if (n + m) % 2 == 0 { q[n] * q[m] } else { 0.0 };
                assert!((blocks.rho1[[n, m]].re - expected).abs() < 1e-16);
            }
        }
        assert!(blocks.rho2.iter().chain(blocks.rho4.iter()).all(|z| z.norm() == 0.0));
    }

    #[test]
    fn blocks_structure() {
        let (p, f) = setup(FieldPrep::Superposition { r: 0.0, alpha: 4.0 }, 0.0, 0.0);
        let blocks = joint_blocks(&ClosedForm::new(p, &f).at(3.7), 2).unwrap();
        assert!((blocks.trace() - 1.0).abs() < 1e-10);
        let dim = blocks.rho1.nrows();
        for n in 0..dim {
            for m in 0..dim {
                assert!((blocks.rho3[[n, m]] - blocks.rho2[[m, n]].conj()).norm() == 0.0);
                assert!((blocks.rho1[[n, m]] - blocks.rho1[[m, n]].conj()).norm() < 1e-16);
                assert!((blocks.rho4[[n, m]] - blocks.rho4[[m, n]].conj()).norm() < 1e-16);
            }
            // B_{n-k} vanishes below k
            if n < 2 {
                assert_eq!(blocks.rho4[[n, n]].norm(), 0.0);
            }
        }
    }

    #[test]
    fn mismatched_branches_rejected() {
        let (p, f) = setup(FieldPrep::Superposition { r: 0.0, alpha: 1.0 }, 0.0, 0.0);
        let mut amps = ClosedForm::new(p, &f).at(1.0);
        let mut other = amps[0].clone();
        other.a.pop();
        other.b.pop();
        amps.push(other);
        assert!(matches!(joint_blocks(&amps, 2), Err(Error::Dimension { .. })));
        assert!(joint_blocks(&[], 2).is_err());
    }

    #[test]
    fn parity_is_conserved_for_two_photon_coupling() {
        let (p, f) = setup(FieldPrep::Superposition { r: 1.0, alpha: 3.0 }, 0.3, 0.5);
        for t in [0.4, 1.3, 7.9] {
            let amps = ClosedForm::new(p, &f).at(t);
            for n in (1..amps[0].a.len()).step_by(2) {
                assert_eq!(amps[0].a[n].norm(), 0.0);
                assert_eq!(amps[0].b[n].norm(), 0.0);
            }
        }
    }

    #[test]
    fn equal_stark_shifts_at_matched_detuning_are_neutral() {
        let prep = FieldPrep::Superposition { r: 0.0, alpha: 4.0 };
        let (bare, f) = setup(prep, 0.0, 0.0);
        let (stark, _) = setup(prep, 2.0, 1.0);
        let (a, b) = (ClosedForm::new(bare, &f), ClosedForm::new(stark, &f));
        for i in 0..20 {
            let t = 0.37 * i as f64;
            let (x, y) = (&a.at(t)[0], &b.at(t)[0]);
            for n in 0..x.a.len() {
                assert!((x.a[n].norm() - y.a[n].norm()).abs() < 1e-10);
                assert!((x.b[n].norm() - y.b[n].norm()).abs() < 1e-10);
            }
        }
    }

    proptest! {
        #[test]
        fn unitarity_per_component(
            delta in -4.0f64..4.0,
            r in 0.0f64..3.0,
            k in 1usize..4,
            t in 0.0f64..50.0,
            alpha in 0.5f64..4.5,
        ) {
            let p = ModelParams::new(1.3, delta, k, r).unwrap();
            let f = prepare_truncated(FieldPrep::Superposition { r: 0.0, alpha }, k, DEFAULT_TAIL_TOL).unwrap();
            let amps = branch_amplitudes(&p, &f, 0, t);
            for (n, init) in f.branch_vector(0).iter().enumerate() {
                let lhs = amps.a[n].norm_sqr() + amps.b[n].norm_sqr();
                prop_assert!((lhs - init * init).abs() < 1e-14);
            }
            prop_assert!((amps.norm_sqr() - 1.0).abs() < 1e-10);
        }
    }
}
