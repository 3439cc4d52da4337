//! Experiment runner behind the `vqss` binary.
//!
//! Exit codes: 0 success, 2 invalid config, 3 solver abort, 4 I/O failure,
//! 5 degenerate steady state.

use std::path::{Path, PathBuf};

use crate::config::ExperimentConfig;
use crate::error::Error;
use crate::heatmap::{emit_heatmap, Part};
use crate::lindblad::SteadyState;
use crate::linalg::eigh;
use crate::report;
use crate::solver;

pub const EXIT_OK: i32 = 0;
pub const EXIT_BAD_CONFIG: i32 = 2;
pub const EXIT_SOLVER: i32 = 3;
pub const EXIT_IO: i32 = 4;
pub const EXIT_DEGENERATE: i32 = 5;

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Config(_) => EXIT_BAD_CONFIG,
        Error::Io(_) | Error::Json(_) => EXIT_IO,
        Error::DegenerateSteadyState { .. } => EXIT_DEGENERATE,
        _ => EXIT_SOLVER,
    }
}

/// Optional command-line overrides for config keys.
#[derive(Debug, Default, Clone)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub output_dir: Option<PathBuf>,
}

fn load_config(path: &Path, overrides: &Overrides) -> Result<ExperimentConfig, i32> {
    let mut cfg = ExperimentConfig::load(path).map_err(|e| {
        eprintln!("error: {e}");
        exit_code_for(&e)
    })?;
    if let Some(seed) = overrides.seed {
        cfg.seed = seed;
    }
    if let Some(dir) = &overrides.output_dir {
        cfg.output_dir = dir.clone();
    }
    Ok(cfg)
}

/// `run <config>`: optimize, then write traces, density matrices, summary
/// and heatmaps into the configured output directory.
pub fn run_experiment(config_path: &Path, overrides: &Overrides) -> i32 {
    let cfg = match load_config(config_path, overrides) {
        Ok(c) => c,
        Err(code) => return code,
    };
    match run_inner(&cfg) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn run_inner(cfg: &ExperimentConfig) -> crate::error::Result<()> {
    let model = cfg.build_model()?;
    let solve_cfg = cfg.solve_config()?;
    println!(
        "running {} (sites={}, ancillas={}, layers={}, d={}, seed={})",
        cfg.model_name(),
        cfg.sites,
        cfg.ancillas,
        cfg.layers,
        solve_cfg.ansatz.param_count(),
        solve_cfg.seed,
    );
    let result = solver::solve(&model, &solve_cfg)?;

    let dir = &cfg.output_dir;
    report::write_trace_csv(&result, &dir.join("trace.csv"))?;
    report::write_density_json(&result.final_rho, &dir.join("rho_ansatz.json"))?;
    report::write_density_json(&result.oracle_rho, &dir.join("rho_oracle.json"))?;
    for (rho, name) in [(&result.final_rho, "ansatz"), (&result.oracle_rho, "oracle")] {
        for part in [Part::Real, Part::Imaginary] {
            let file = format!("rho_{name}_{}.svg", part.label());
            emit_heatmap(rho, part, &dir.join(file))?;
        }
    }
    let summary = report::Summary {
        final_loss: result.best_loss,
        final_fidelity: result.final_fidelity,
        oracle_residual: result.oracle_residual,
        total_iterations: result.total_iterations,
        total_evals: result.total_evals,
        wall_time_seconds: result.wall_time_seconds,
        config: report::SummaryConfig {
            model: cfg.model_name(),
            sites: cfg.sites,
            ancillas: cfg.ancillas,
            layers: cfg.layers,
            param_count: solve_cfg.ansatz.param_count(),
            gamma: cfg.gamma,
            seed: solve_cfg.seed,
            restarts: cfg.restarts,
            max_iter_multiplier: cfg.max_iter_multiplier,
        },
    };
    report::write_summary_json(&summary, &dir.join("summary.json"))?;
    println!(
        "done: loss {:.3e}, fidelity {:.6}, {} iterations, {:.1}s; outputs in {}",
        result.best_loss,
        result.final_fidelity,
        result.total_iterations,
        result.wall_time_seconds,
        dir.display(),
    );
    Ok(())
}

/// `verify-oracle <config>`: solve the exact steady state and print its
/// residual, trace and smallest eigenvalue.
pub fn verify_oracle(config_path: &Path, overrides: &Overrides) -> i32 {
    let cfg = match load_config(config_path, overrides) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let outcome = cfg.build_model().and_then(|model| {
        let ss: SteadyState = model.steady_state_exact()?;
        let (vals, _) = eigh(ss.rho.matrix())?;
        let trace = ss.rho.matrix().trace();
        println!("residual  {:.3e}", ss.residual);
        println!("trace     {:.12}", trace.re);
        println!("min eig   {:.3e}", vals[0]);
        if ss.residual <= 1e-9 {
            Ok(())
        } else {
            Err(Error::NonConvergence(ss.residual))
        }
    });
    match outcome {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

/// `heatmap <rho.json> --part re|im --out <path>`.
pub fn heatmap_command(rho_path: &Path, part: Part, out: &Path) -> i32 {
    let outcome = report::read_density_json(rho_path)
        .and_then(|rho| emit_heatmap(&rho, part, out));
    match outcome {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}
