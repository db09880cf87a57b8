//! Truncated Fock-basis amplitudes for the initial cavity field.
//!
//! Coherent amplitudes are generated by the ratio recurrence
//! `q_{n+1} = q_n * alpha / sqrt(n + 1)`, carried out in log space so that
//! neither factorials nor `exp(-alpha^2 / 2)` ever overflow or underflow on
//! their own.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default bound on the discarded Poisson tail.
pub const DEFAULT_TAIL_TOL: f64 = 1e-14;

/// Largest Fock index the truncation search may return.
pub const TRUNCATION_CAP: usize = 400;

/// How the cavity field is prepared at `t = 0`. `alpha` is real and
/// non-negative.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldPrep {
    /// `(|alpha> + r|-alpha>) / sqrt(A)`; `r = 0` coherent, `r = 1` even cat,
    /// `r = -1` odd cat.
    Superposition { r: f64, alpha: f64 },
    /// Equal-weight statistical mixture of `|alpha>` and `|-alpha>`.
    Mixture { alpha: f64 },
}

impl FieldPrep {
    pub fn alpha(&self) -> f64 {
        match *self {
            FieldPrep::Superposition { alpha, .. } | FieldPrep::Mixture { alpha } => alpha,
        }
    }

    pub fn is_pure(&self) -> bool {
        matches!(self, FieldPrep::Superposition { .. })
    }

    /// Number of pure branches the preparation decomposes into.
    pub fn branch_count(&self) -> usize {
        match self {
            FieldPrep::Superposition { .. } => 1,
            FieldPrep::Mixture { .. } => 2,
        }
    }
}

/// Coherent-state amplitudes `q_n = exp(-alpha^2/2) alpha^n / sqrt(n!)` for
/// `0 <= n <= n_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoherentAmplitudes {
    alpha: f64,
    q: Vec<f64>,
}

impl CoherentAmplitudes {
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn n_max(&self) -> usize {
        self.q.len() - 1
    }

    pub fn q(&self) -> &[f64] {
        &self.q
    }

    /// Retained probability `sum q_n^2`.
    pub fn norm_sqr(&self) -> f64 {
        self.q.iter().map(|x| x * x).sum()
    }
}

/// `ln q_n` for `n = 0..len`, or `None` for the vacuum (`alpha = 0`).
fn log_amplitudes(alpha: f64, len: usize) -> Option<Vec<f64>> {
    if alpha == 0.0 {
        return None;
    }
    let ln_alpha = alpha.ln();
    let mut out = Vec::with_capacity(len);
    let mut acc = -0.5 * alpha * alpha;
    for n in 0..len {
        if n > 0 {
            acc += ln_alpha - 0.5 * (n as f64).ln();
        }
        out.push(acc);
    }
    Some(out)
}

pub fn coherent_amplitudes(alpha: f64, n_max: usize) -> Result<CoherentAmplitudes> {
    if !(alpha >= 0.0 && alpha.is_finite()) {
        return Err(Error::Domain(format!("alpha must be real and non-negative, got {alpha}")));
    }
    let q = match log_amplitudes(alpha, n_max + 1) {
        None => {
            let mut q = vec![0.0; n_max + 1];
            q[0] = 1.0;
            q
        }
        Some(logs) => logs.into_iter().map(f64::exp).collect(),
    };
    Ok(CoherentAmplitudes { alpha, q })
}

/// Smallest `N` whose Poisson tail `sum_{n > N} q_n^2` is below `tail_tol`,
/// plus a margin of `k` for the k-quanta ladder.
pub fn choose_truncation(alpha: f64, k: usize, tail_tol: f64) -> Result<usize> {
    if tail_tol.is_nan() || tail_tol <= 0.0 {
        return Err(Error::Domain(format!("tail tolerance must be positive, got {tail_tol}")));
    }
    if !(alpha >= 0.0 && alpha.is_finite()) {
        return Err(Error::Domain(format!("alpha must be real and non-negative, got {alpha}")));
    }
    let fail = || Error::Truncation { alpha, k, tail_tol, cap: TRUNCATION_CAP };
    let Some(logs) = ({
        // mean + 40 standard deviations: anything beyond is far below f64 resolution
        let horizon = (alpha * alpha + 40.0 * alpha + 100.0).ceil() as usize;
        log_amplitudes(alpha, horizon.max(TRUNCATION_CAP + 1))
    }) else {
        return if k <= TRUNCATION_CAP { Ok(k) } else { Err(fail()) };
    };

    // suffix[n] = sum_{m > n} q_m^2, accumulated from the far end
    let weights: Vec<f64> = logs.iter().map(|l| (2.0 * l).exp()).collect();
    let mut tail = 0.0;
    let mut suffix = vec![0.0; weights.len()];
    for n in (0..weights.len()).rev() {
        suffix[n] = tail;
        tail += weights[n];
    }
    let n = suffix.iter().position(|&s| s < tail_tol).ok_or_else(fail)?;
    let n_max = n + k;
    if n_max > TRUNCATION_CAP {
        return Err(fail());
    }
    Ok(n_max)
}

/// One pure component of the initial field: amplitudes `q_n * c[n]`
/// carried with probability `weight`.
#[derive(Clone, Debug, PartialEq)]
pub struct Branch {
    pub weight: f64,
    pub c: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PreparedField {
    prep: FieldPrep,
    q: CoherentAmplitudes,
    branches: Vec<Branch>,
}

impl PreparedField {
    pub fn prep(&self) -> FieldPrep {
        self.prep
    }

    pub fn coherent(&self) -> &CoherentAmplitudes {
        &self.q
    }

    pub fn n_max(&self) -> usize {
        self.q.n_max()
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    /// Fock amplitudes `q_n c_n` of branch `i`.
    pub fn branch_vector(&self, i: usize) -> Vec<f64> {
        self.q.q().iter().zip(&self.branches[i].c).map(|(q, c)| q * c).collect()
    }
}

/// Cat-state normalization `A = 1 + r^2 + 2 r exp(-2 alpha^2)`, rearranged
/// so that the odd-cat case `r = -1` does not cancel catastrophically.
pub fn cat_normalization(r: f64, alpha: f64) -> f64 {
    (1.0 + r).powi(2) + 2.0 * r * (-2.0 * alpha * alpha).exp_m1()
}

pub fn prepare_field(prep: FieldPrep, q: CoherentAmplitudes) -> Result<PreparedField> {
    if prep.alpha() != q.alpha() {
        return Err(Error::Domain(format!(
            "preparation alpha {} does not match amplitudes alpha {}",
            prep.alpha(),
            q.alpha()
        )));
    }
    let len = q.q().len();
    let parity = |n: usize| if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let branches = match prep {
        FieldPrep::Superposition { r, alpha } => {
            if !(-1.0..=1.0).contains(&r) {
                return Err(Error::Domain(format!("superposition weight r must lie in [-1, 1], got {r}")));
            }
            let norm = cat_normalization(r, alpha);
            if norm.is_nan() || norm <= 0.0 {
                return Err(Error::DegenerateState { r, alpha, norm });
            }
            let scale = norm.sqrt().recip();
            let c = (0..len).map(|n| (1.0 + r * parity(n)) * scale).collect();
            vec![Branch { weight: 1.0, c }]
        }
        FieldPrep::Mixture { .. } => vec![
            Branch { weight: 0.5, c: vec![1.0; len] },
            Branch { weight: 0.5, c: (0..len).map(parity).collect() },
        ],
    };
    Ok(PreparedField { prep, q, branches })
}

/// Truncate adequately for `prep` and build the branch decomposition.
pub fn prepare_truncated(prep: FieldPrep, k: usize, tail_tol: f64) -> Result<PreparedField> {
    let n_max = choose_truncation(prep.alpha(), k, tail_tol)?;
    prepare_field(prep, coherent_amplitudes(prep.alpha(), n_max)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn vacuum_amplitudes() {
        let q = coherent_amplitudes(0.0, 4).unwrap();
        assert_eq!(q.q(), &[1.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn direct_evaluation_alpha_two() {
        let q = coherent_amplitudes(2.0, 8).unwrap();
        let expected = (-2.0f64).exp() * 4.0 / 2f64.sqrt();
        assert!((q.q()[2] - expected).abs() < 1e-15);
        assert!((q.q()[2] - 0.382_785_986_041_643_7).abs() < 1e-14);
    }

    #[test]
    fn poisson_peak_and_mass_for_nbar_16() {
        let q = coherent_amplitudes(4.0, 80).unwrap();
        let (argmax, _) = q
            .q()
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .unwrap();
        assert!(argmax == 15 || argmax == 16);
        // high-precision oracle: 1 - sum_{n<=80} p_n = 8.2e-31
        assert!(q.norm_sqr() > 1.0 - 1e-14);
        assert!(q.q().iter().all(|x| x.is_finite()));
    }

    #[test]
    fn huge_index_does_not_overflow() {
        let q = coherent_amplitudes(4.0, 400).unwrap();
        assert!(q.q().iter().all(|x| x.is_finite() && *x >= 0.0));
        assert!(q.q()[400] < 1e-190);
    }

    #[test]
    fn truncation_examples() {
        assert_eq!(choose_truncation(0.0, 2, 1e-14).unwrap(), 2);
        // mpmath at 50 digits: tail(55) = 5.9e-15, tail(54) = 2.1e-14
        let n = choose_truncation(4.0, 2, 1e-14).unwrap();
        assert_eq!(n, 57);
        assert!((55..=90).contains(&n));
        assert!(matches!(choose_truncation(100.0, 2, 1e-14), Err(Error::Truncation { .. })));
        assert!(choose_truncation(1.0, 2, 0.0).is_err());
    }

    #[test]
    fn superposition_branches() {
        let q = coherent_amplitudes(4.0, 60).unwrap();
        let coh = prepare_field(FieldPrep::Superposition { r: 0.0, alpha: 4.0 }, q.clone()).unwrap();
        assert_eq!(coh.branches().len(), 1);
        assert!(coh.branches()[0].c.iter().all(|&c| c == 1.0));

        let even = prepare_field(FieldPrep::Superposition { r: 1.0, alpha: 4.0 }, q).unwrap();
        let a = 2.0 + 2.0 * (-32.0f64).exp();
        for (n, &c) in even.branches()[0].c.iter().enumerate() {
            let expected = if n % 2 == 0 { 2.0 / a.sqrt() } else { 0.0 };
            assert!((c - expected).abs() < 1e-15, "n = {n}");
        }
    }

    #[test]
    fn mixture_branches() {
        let q = coherent_amplitudes(4.0, 60).unwrap();
        let mix = prepare_field(FieldPrep::Mixture { alpha: 4.0 }, q).unwrap();
        let b = mix.branches();
        assert_eq!(b.len(), 2);
        assert_eq!((b[0].weight, b[1].weight), (0.5, 0.5));
        assert!(b[0].c.iter().all(|&c| c == 1.0));
        assert!(b[1].c.iter().enumerate().all(|(n, &c)| c == if n % 2 == 0 { 1.0 } else { -1.0 }));
    }

    #[test]
    fn odd_cat_of_vacuum_is_degenerate() {
        let q = coherent_amplitudes(0.0, 4).unwrap();
        let err = prepare_field(FieldPrep::Superposition { r: -1.0, alpha: 0.0 }, q).unwrap_err();
        assert!(matches!(err, Error::DegenerateState { .. }));
    }

    #[test]
    fn out_of_range_r_rejected() {
        let q = coherent_amplitudes(1.0, 20).unwrap();
        assert!(prepare_field(FieldPrep::Superposition { r: 3.0, alpha: 1.0 }, q).is_err());
    }

    #[test]
    fn mixture_matches_coherent_projectors() {
        let alpha = 4.0;
        let mix = prepare_truncated(FieldPrep::Mixture { alpha }, 2, DEFAULT_TAIL_TOL).unwrap();
        let plus = mix.branch_vector(0);
        let minus = mix.branch_vector(1);
        let q = mix.coherent().q();
        for n in 0..q.len() {
            for m in 0..q.len() {
                let branch_sum = 0.5 * (plus[n] * plus[m] + minus[n] * minus[m]);
                let sign_m = if (n + m) % 2 == 0 { 1.0 } else { -1.0 };
                let projectors = 0.5 * (q[n] * q[m] + sign_m * q[n] * q[m]);
                assert!((branch_sum - projectors).abs() < 1e-14);
            }
        }
    }

    proptest! {
        #[test]
        fn branches_are_normalized(alpha in 0.3f64..6.0, r in -1.0f64..=1.0, mixture: bool) {
            let prep = if mixture {
                FieldPrep::Mixture { alpha }
            } else {
                FieldPrep::Superposition { r, alpha }
            };
            let field = prepare_truncated(prep, 2, DEFAULT_TAIL_TOL).unwrap();
            let total: f64 = field.branches().iter().map(|b| b.weight).sum();
            prop_assert!((total - 1.0).abs() < 1e-15);
            for i in 0..field.branches().len() {
                let norm: f64 = field.branch_vector(i).iter().map(|x| x * x).sum();
                prop_assert!((norm - 1.0).abs() < 1e-12, "norm {}", norm);
            }
        }

        #[test]
        fn cat_parity(alpha in 0.1f64..5.0) {
            let even = prepare_truncated(FieldPrep::Superposition { r: 1.0, alpha }, 2, 1e-14).unwrap();
            let odd = prepare_truncated(FieldPrep::Superposition { r: -1.0, alpha }, 2, 1e-14).unwrap();
            prop_assert!(even.branch_vector(0).iter().skip(1).step_by(2).all(|&x| x == 0.0));
            prop_assert!(odd.branch_vector(0).iter().step_by(2).all(|&x| x == 0.0));
        }
    }
}
