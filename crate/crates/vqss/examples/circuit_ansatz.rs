//! The purification ansatz by itself: parameter counting, the reduced
//! density matrix, and how the ancilla count bounds the reachable rank.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use vqss::{ansatz_density, eigh, AnsatzConfig};

fn main() {
    for (n, m, layers) in [(4, 4, 4), (4, 4, 8), (1, 0, 1)] {
        let cfg = AnsatzConfig::new(n, m, layers).unwrap();
        println!(
            "n={n} m={m} M={layers}: {} parameters",
            cfg.param_count()
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    println!("\nrank of the reduced state vs ancilla count (n = 2 system qubits):");
    for m in 0..=2usize {
        let cfg = AnsatzConfig::new(2, m, 3).unwrap();
        let params: Vec<f64> = (0..cfg.param_count())
            .map(|_| rng.gen::<f64>() * std::f64::consts::TAU)
            .collect();
        let rho = ansatz_density(&params, &cfg).unwrap();
        let (vals, _) = eigh(rho.matrix()).unwrap();
        let rank = vals.iter().filter(|&&v| v > 1e-10).count();
        println!(
            "  m = {m}: rank {rank} (bound min(2^n, 2^m) = {}), purity {:.4}",
            (1usize << 2).min(1 << m),
            rho.purity()
        );
    }
}
