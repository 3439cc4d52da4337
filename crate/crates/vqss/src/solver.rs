//! The variational steady-state solver: purification ansatz density matrix,
//! stationarity loss `‖Lρ(θ)‖_F²`, Uhlmann fidelity, and the Nelder-Mead
//! optimization loop with restarts.

use std::time::Instant;

use num_complex::Complex64 as C64;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::circuits::{build_ansatz_state, AnsatzConfig};
use crate::error::{Error, Result};
use crate::linalg::{
    eigh, frobenius_norm_sq, partial_trace_ancilla, psd_sqrt, DensityMatrix,
};
use crate::lindblad::LindbladModel;
use crate::optimizer::{nelder_mead_observed, NmOptions, Termination};

#[derive(Debug, Clone)]
pub struct SolveConfig {
    pub ansatz: AnsatzConfig,
    pub restarts: usize,
    /// Iteration cap per restart is `max_iter_multiplier × parameter count`.
    pub max_iter_multiplier: usize,
    pub seed: u64,
    /// Fidelity against the exact oracle is logged every this many iterations.
    pub fidelity_log_stride: usize,
    pub convergence_ftol: f64,
    /// Optional total loss-evaluation budget shared across restarts.
    pub max_evals: Option<usize>,
    /// When false, each restart re-randomizes instead of reusing the
    /// incumbent best point.
    pub restart_from_best: bool,
}

impl SolveConfig {
    pub fn new(ansatz: AnsatzConfig) -> Self {
        Self {
            ansatz,
            restarts: 3,
            max_iter_multiplier: 200,
            seed: 0,
            fidelity_log_stride: 50,
            convergence_ftol: 1e-8,
            max_evals: None,
            restart_from_best: true,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.restarts == 0 || self.max_iter_multiplier == 0 || self.fidelity_log_stride == 0 {
            return Err(Error::Config(
                "restarts, max_iter_multiplier and fidelity_log_stride must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Optimization record: traces, best parameters, and the two final states.
#[derive(Debug, Clone)]
pub struct RunResult {
    pub best_params: Vec<f64>,
    pub best_loss: f64,
    pub loss_trace: Vec<(usize, f64)>,
    pub fidelity_trace: Vec<(usize, f64)>,
    pub final_rho: DensityMatrix,
    pub oracle_rho: DensityMatrix,
    pub oracle_residual: f64,
    pub final_fidelity: f64,
    pub total_iterations: usize,
    pub total_evals: usize,
    pub wall_time_seconds: f64,
}

/// Ansatz state after tracing out the ancillas: `Tr_E U(θ)|0⟩⟨0|U(θ)†`.
pub fn ansatz_density(params: &[f64], cfg: &AnsatzConfig) -> Result<DensityMatrix> {
    let psi = build_ansatz_state(params, cfg)?;
    partial_trace_ancilla(&psi, cfg.n_system, cfg.m_ancilla)
}

/// Stationarity loss `C(θ) = ‖Lρ(θ)‖_F² = Σᵢⱼ |(Lρ(θ))ᵢⱼ|²`.
pub fn loss(params: &[f64], model: &LindbladModel, cfg: &AnsatzConfig) -> Result<f64> {
    if model.n_system() != cfg.n_system {
        return Err(Error::DimensionMismatch(format!(
            "model has {} system qubits, ansatz {}",
            model.n_system(),
            cfg.n_system
        )));
    }
    let rho = ansatz_density(params, cfg)?;
    let lrho = model.apply_liouvillian(rho.matrix())?;
    Ok(frobenius_norm_sq(&lrho))
}

/// Uhlmann fidelity `F(σ, ρ) = (Tr √(√σ ρ √σ))²`.
pub fn fidelity(sigma: &DensityMatrix, rho: &DensityMatrix) -> Result<f64> {
    if sigma.dim() != rho.dim() {
        return Err(Error::DimensionMismatch(format!(
            "fidelity of {}x{} vs {}x{}",
            sigma.dim(),
            sigma.dim(),
            rho.dim(),
            rho.dim()
        )));
    }
    let s = psd_sqrt(sigma);
    let inner = &s * rho.matrix() * &s;
    // PSD up to roundoff; Hermitize before the eigendecomposition
    let herm = (&inner + inner.adjoint()) * C64::new(0.5, 0.0);
    let (vals, _) = eigh(&herm)?;
    // eigenvalues below the relative noise floor are roundoff from exact
    // zeros; keeping them would inject √ε-sized errors into the trace
    let cut = vals.last().copied().unwrap_or(0.0).max(0.0) * 1e-12;
    let tr: f64 = vals
        .iter()
        .filter(|&&v| v > cut)
        .map(|&v| v.sqrt())
        .sum();
    Ok(tr * tr)
}

/// Runs the full variational protocol: random initial angles in `[0, 2π)`,
/// Nelder-Mead capped at `max_iter_multiplier × d` per restart, restarts
/// around the incumbent best. Loss is recorded every iteration, fidelity
/// against the exact steady state every `fidelity_log_stride` iterations.
pub fn solve(model: &LindbladModel, cfg: &SolveConfig) -> Result<RunResult> {
    cfg.validate()?;
    if model.n_system() != cfg.ansatz.n_system {
        return Err(Error::DimensionMismatch(format!(
            "model has {} system qubits, ansatz {}",
            model.n_system(),
            cfg.ansatz.n_system
        )));
    }
    let start = Instant::now();
    let oracle = model.steady_state_exact()?;
    let d = cfg.ansatz.param_count();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let opts = NmOptions {
        max_iterations: cfg.max_iter_multiplier * d,
        fatol: cfg.convergence_ftol,
        max_evals: cfg.max_evals,
        ..NmOptions::default()
    };

    let mut loss_trace: Vec<(usize, f64)> = Vec::new();
    let mut fidelity_trace: Vec<(usize, f64)> = Vec::new();

    let ansatz = cfg.ansatz;
    let mut objective = |p: &[f64]| loss(p, model, &ansatz).unwrap_or(f64::NAN);

    let mut best_point: Vec<f64> = Vec::new();
    let mut best_value = f64::INFINITY;
    let mut total_iterations = 0usize;
    let mut total_evals = 0usize;

    for restart in 0..cfg.restarts {
        if let Some(budget) = cfg.max_evals {
            if total_evals >= budget {
                break;
            }
        }
        let x0: Vec<f64> = if restart == 0 || !cfg.restart_from_best {
            (0..d)
                .map(|_| rng.gen::<f64>() * std::f64::consts::TAU)
                .collect()
        } else {
            best_point.clone()
        };
        let mut local = opts.clone();
        if let Some(budget) = cfg.max_evals {
            local.max_evals = Some(budget - total_evals);
        }
        let stride = cfg.fidelity_log_stride;
        let oracle_rho = &oracle.rho;
        let mut incumbent = best_value;
        let mut observer = |iter: usize, point: &[f64], value: f64| {
            incumbent = incumbent.min(value);
            loss_trace.push((iter, incumbent));
            if iter % stride == 0 {
                if let Ok(rho) = ansatz_density(point, &ansatz) {
                    if let Ok(f) = fidelity(oracle_rho, &rho) {
                        fidelity_trace.push((iter, f));
                    }
                }
            }
        };
        let out = nelder_mead_observed(
            &mut objective,
            &x0,
            &local,
            total_iterations,
            &mut observer,
        )?;
        total_iterations += out.iterations_used;
        total_evals += out.evals_used;
        if out.best_value < best_value {
            best_value = out.best_value;
            best_point = out.best_point;
        }
        if out.termination == Termination::EvalBudget {
            break;
        }
    }

    // re-evaluate so best_loss is exactly the loss of best_params
    let best_loss = loss(&best_point, model, &ansatz)?;
    let final_rho = ansatz_density(&best_point, &ansatz)?;
    let final_fidelity = fidelity(&oracle.rho, &final_rho)?;

    Ok(RunResult {
        best_params: best_point,
        best_loss,
        loss_trace,
        fidelity_trace,
        final_rho,
        oracle_rho: oracle.rho,
        oracle_residual: oracle.residual,
        final_fidelity,
        total_iterations,
        total_evals,
        wall_time_seconds: start.elapsed().as_secs_f64(),
    })
}
