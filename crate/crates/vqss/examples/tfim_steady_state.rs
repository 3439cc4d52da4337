//! Dissipative transverse-field Ising chain: 4 sites, V = 0.3, g = 1,
//! γ = 0.5, with a 4-ancilla, 4-layer ansatz (128 parameters) and 3
//! Nelder-Mead restarts at the 200·d cap.
//!
//! Pass a seed as the first argument to explore run-to-run variation
//! (Nelder-Mead outcomes are seed-dependent).

use vqss::{solve, AnsatzConfig, LindbladModel, SolveConfig};

fn main() {
    let seed: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("seed must be an integer"))
        .unwrap_or(2);

    let model = LindbladModel::dissipative_tfim(4, 0.3, 1.0, 0.5).unwrap();
    let mut cfg = SolveConfig::new(AnsatzConfig::new(4, 4, 4).unwrap());
    cfg.restarts = 3;
    cfg.seed = seed;

    println!("seed {seed}, d = {}", cfg.ansatz.param_count());
    let result = solve(&model, &cfg).unwrap();
    println!("oracle residual  {:.3e}", result.oracle_residual);
    println!("final loss       {:.3e}", result.best_loss);
    println!("final fidelity   {:.6}", result.final_fidelity);
    println!("iterations       {}", result.total_iterations);
    println!("loss evals       {}", result.total_evals);
    println!("wall time        {:.1}s", result.wall_time_seconds);
}
