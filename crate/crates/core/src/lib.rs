//! Exact dynamics of a two-level atom coupled to one cavity mode through
//! k-quanta transitions with intensity-dependent Stark shifts, and the
//! partial von Neumann entropies of the atom and the field.
//!
//! The pipeline is:
//!
//! 1. [`fock`]: truncated coherent, cat and mixed initial fields.
//! 2. [`dressed`]: Rabi parameters and dressed-state energies.
//! 3. [`evolution`]: closed-form amplitudes `A_n(t)`, `B_n(t)`.
//! 4. [`reduced`]: reduced atomic and field density matrices.
//! 5. [`entropy`]: `S_a` from the qubit spectrum, `S_f` numerically.
//!
//! [`oracle`] re-derives everything by brute-force diagonalization of the
//! truncated Hamiltonian and [`sweep`] drives time grids, presets and CSV
//! output.

pub mod dressed;
pub mod eigen;
pub mod entropy;
pub mod error;
pub mod evolution;
pub mod fock;
pub mod oracle;
pub mod reduced;
pub mod sweep;

pub use dressed::{ModelParams, RabiData};
pub use entropy::EntropySample;
pub use error::{Error, Result};
pub use evolution::{BranchAmplitudes, ClosedForm, JointBlocks};
pub use fock::{FieldPrep, PreparedField};
pub use reduced::{AtomState, FieldDensity};
pub use sweep::{Scenario, SweepRow};
