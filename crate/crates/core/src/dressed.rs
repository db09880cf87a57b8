//! Dressed-state eigensystem of the k-quanta Jaynes-Cummings Hamiltonian
//!
//! ```text
//! H = w a†a + (w0/2) sz + a†a (b1 |g><g| + b2 |e><e|) + lambda (a†^k s- + a^k s+)
//! ```
//!
//! For each `n` the pair `{|n,e>, |n+k,g>}` forms a closed 2x2 block with
//! half-splitting `nu_n`, coupling `tau_n` and Rabi frequency
//! `mu_n = sqrt(nu_n^2 + tau_n^2)`.
//!
//! The Stark shifts are parameterized by a single ratio `R` with
//! `b1 = lambda R`, `b2 = lambda / R`, so `R = 1` means equal shifts and
//! `R = 0` switches them off entirely.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    /// Coupling constant; `1 / lambda` is the time unit.
    pub lambda: f64,
    /// Scaled detuning `Delta / lambda`.
    pub delta: f64,
    /// Quanta exchanged per atomic transition.
    pub k: usize,
    /// Stark ratio `R`; zero disables the shifts.
    pub stark_r: f64,
    /// Field frequency.
    pub omega: f64,
    /// Atomic transition frequency.
    pub omega0: f64,
}

impl ModelParams {
    /// Parameters with `omega = 1` and `omega0 = k omega + lambda delta`.
    pub fn new(lambda: f64, delta: f64, k: usize, stark_r: f64) -> Result<Self> {
        let omega = 1.0;
        let p = ModelParams { lambda, delta, k, stark_r, omega, omega0: k as f64 * omega + lambda * delta };
        p.validate()?;
        Ok(p)
    }

    /// Replace the synthesized frequencies, checking `omega0 - k omega = lambda delta`.
    pub fn with_frequencies(mut self, omega: f64, omega0: f64) -> Result<Self> {
        let detuning = omega0 - self.k as f64 * omega;
        let expected = self.lambda * self.delta;
        let scale = omega0.abs().max(omega.abs()).max(1.0);
        if (detuning - expected).abs() > 1e-12 * scale {
            return Err(Error::Domain(format!(
                "omega0 - k omega = {detuning} disagrees with lambda * delta = {expected}"
            )));
        }
        self.omega = omega;
        self.omega0 = omega0;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.lambda > 0.0 && self.lambda.is_finite()) {
            return Err(Error::Domain(format!("coupling lambda must be positive, got {}", self.lambda)));
        }
        if self.k == 0 {
            return Err(Error::Domain("transition multiplicity k must be at least 1".into()));
        }
        if !(self.stark_r >= 0.0 && self.stark_r.is_finite()) {
            return Err(Error::Domain(format!("Stark ratio R must be non-negative, got {}", self.stark_r)));
        }
        if !self.delta.is_finite() || !self.omega.is_finite() || !self.omega0.is_finite() {
            return Err(Error::Domain("detuning and frequencies must be finite".into()));
        }
        Ok(())
    }

    /// Detuning `Delta = omega0 - k omega`.
    pub fn detuning(&self) -> f64 {
        self.lambda * self.delta
    }

    /// Stark shifts `(b1, b2)` of the ground and excited level.
    pub fn stark_shifts(&self) -> (f64, f64) {
        if self.stark_r == 0.0 {
            (0.0, 0.0)
        } else {
            (self.lambda * self.stark_r, self.lambda / self.stark_r)
        }
    }
}

/// `sqrt((n + k)! / n!)` as a product of `k` square roots.
pub fn ladder_factor(n: usize, k: usize) -> f64 {
    (1..=k).map(|j| ((n + j) as f64).sqrt()).product()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RabiData {
    pub n: usize,
    pub nu: f64,
    pub tau: f64,
    pub mu: f64,
    /// `nu / lambda`
    pub nu_s: f64,
    /// `tau / lambda`
    pub tau_s: f64,
    /// `mu / lambda`
    pub mu_s: f64,
    /// Mean Stark energy of the doublet in units of `lambda`.
    pub delta_plus: f64,
    /// Stark half-splitting of the doublet in units of `lambda`.
    pub delta_minus: f64,
    pub theta: f64,
}

pub fn rabi_parameters(p: &ModelParams, n: usize) -> RabiData {
    let k = p.k as f64;
    let nf = n as f64;
    let (delta_plus, delta_minus) = if p.stark_r == 0.0 {
        (0.0, 0.0)
    } else {
        let r = p.stark_r;
        let r2 = r * r;
        ((nf + r2 * (nf + k)) / (2.0 * r), (nf - r2 * (nf + k)) / (2.0 * r))
    };
    let nu_s = 0.5 * p.delta + delta_minus;
    let tau_s = ladder_factor(n, p.k);
    let mu_s = nu_s.hypot(tau_s);
    let mut rd = RabiData {
        n,
        nu: p.lambda * nu_s,
        tau: p.lambda * tau_s,
        mu: p.lambda * mu_s,
        nu_s,
        tau_s,
        mu_s,
        delta_plus,
        delta_minus,
        theta: 0.0,
    };
    rd.theta = mixing_angle(&rd);
    rd
}

/// Mixing angle of the dressed doublet:
/// `|+> = sin(theta)|n,e> + cos(theta)|n+k,g>`,
/// `|-> = cos(theta)|n,e> - sin(theta)|n+k,g>`.
pub fn mixing_angle(rd: &RabiData) -> f64 {
    let d = rd.nu - rd.mu;
    (rd.tau / d.hypot(rd.tau)).asin()
}

/// Energies `(E+, E-)` of the dressed doublet `n`, i.e. the eigenvalues of
/// the 2x2 block of `H` on `{|n,e>, |n+k,g>}`.
pub fn eigenvalues(p: &ModelParams, n: usize) -> (f64, f64) {
    let (b1, b2) = p.stark_shifts();
    let nf = n as f64;
    let k = p.k as f64;
    let center = p.omega * (nf + 0.5 * k) + 0.5 * (nf * b2 + b1 * (nf + k));
    let mu = rabi_parameters(p, n).mu;
    (center + mu, center - mu)
}

/// Energy of the uncoupled state `|s,g>`, `0 <= s < k`, measured relative
/// to the free energy `omega (s - k/2)`.
pub fn ground_ladder_energy(p: &ModelParams, s: usize) -> Result<f64> {
    if s >= p.k {
        return Err(Error::Domain(format!("uncoupled ladder index s = {s} must be below k = {}", p.k)));
    }
    let (b1, _) = p.stark_shifts();
    Ok(s as f64 * b1 - 0.5 * p.detuning())
}
