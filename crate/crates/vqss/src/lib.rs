//! Variational construction of stationary states for Lindblad open quantum
//! systems.
//!
//! A mixed steady state is represented through its purification: a
//! parameterized circuit prepares a pure state on `n` system plus `m`
//! ancilla qubits, the ancillas are traced out, and the reduced state is
//! optimized with Nelder-Mead against the stationarity loss `‖Lρ(θ)‖_F²`.
//! A dense null-space solve of the vectorized Liouvillian provides an exact
//! oracle for verification, and a Runge-Kutta integrator gives an
//! independent long-time cross-check.
//!
//! Start with the runnable examples:
//!
//! ```bash
//! cargo run --release -p vqss --example single_qubit_decay
//! cargo run --release -p vqss --example exact_oracle
//! cargo run --release -p vqss --example circuit_ansatz
//! cargo run --release -p vqss --example tfim_steady_state
//! cargo run --release -p vqss --example xyz_steady_state
//! cargo run --release -p vqss --example heatmap_render
//! ```
//!
//! or drive a full experiment from a config file via the thin CLI:
//!
//! ```bash
//! cargo run --release -p vqss -- run crates/vqss/configs/tfim_paper.cfg
//! ```

pub mod circuits;
pub mod cli;
pub mod config;
pub mod error;
pub mod heatmap;
pub mod lindblad;
pub mod linalg;
pub mod optimizer;
pub mod report;
pub mod solver;

pub use circuits::{build_ansatz_state, rotation_gate, AnsatzConfig, Axis};
pub use error::{Error, Result};
pub use lindblad::{LindbladModel, SteadyState};
pub use linalg::{
    eigh, frobenius_norm_sq, kron, null_vector, partial_trace_ancilla, psd_sqrt, CMatrix,
    CVector, DensityMatrix, StateVector,
};
pub use optimizer::{
    initial_simplex, nelder_mead, restarted_minimize, NmOptions, NmOutcome, Termination,
};
pub use solver::{ansatz_density, fidelity, loss, solve, RunResult, SolveConfig};
