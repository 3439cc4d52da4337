//! Smallest end-to-end run: a single dissipative qubit with `H = 0` decays
//! to `|1⟩⟨1|`, and the two-qubit purification ansatz recovers it almost
//! exactly within one restart.

use vqss::{solve, AnsatzConfig, LindbladModel, SolveConfig};

fn main() {
    let model = LindbladModel::single_qubit_decay(1.0);
    let mut cfg = SolveConfig::new(AnsatzConfig::new(1, 1, 1).unwrap());
    cfg.restarts = 1;
    cfg.seed = 1;

    let result = solve(&model, &cfg).unwrap();
    println!("oracle residual  {:.3e}", result.oracle_residual);
    println!("final loss       {:.3e}", result.best_loss);
    println!("final fidelity   {:.8}", result.final_fidelity);
    println!("iterations       {}", result.total_iterations);
    println!("ansatz rho:\n{:.4}", result.final_rho.matrix());
}
