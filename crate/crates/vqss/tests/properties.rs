//! Randomized invariant checks.

use num_complex::Complex64 as C64;
use proptest::prelude::*;

use vqss::{
    ansatz_density, eigh, frobenius_norm_sq, kron, rotation_gate, AnsatzConfig, Axis, CMatrix,
    LindbladModel,
};

fn cmatrix(n: usize) -> impl Strategy<Value = CMatrix> {
    proptest::collection::vec((-1.0..1.0f64, -1.0..1.0f64), n * n).prop_map(move |xs| {
        CMatrix::from_fn(n, n, |r, c| {
            let (re, im) = xs[r * n + c];
            C64::new(re, im)
        })
    })
}

fn hermitian(n: usize) -> impl Strategy<Value = CMatrix> {
    cmatrix(n).prop_map(|a| (&a + a.adjoint()) * C64::new(0.5, 0.0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ansatz_density_is_valid_state(
        n in 1usize..=3,
        m in 0usize..=2,
        layers in 1usize..=2,
        seed in proptest::collection::vec(0.0..std::f64::consts::TAU, 64),
    ) {
        let m = m.min(n);
        let cfg = AnsatzConfig::new(n, m, layers).unwrap();
        let params = &seed[..cfg.param_count()];
        let rho = ansatz_density(params, &cfg).unwrap();
        let mat = rho.matrix();
        prop_assert!((mat.trace().re - 1.0).abs() < 1e-10);
        prop_assert!((mat - mat.adjoint()).norm() < 1e-10);
        let (vals, _) = eigh(mat).unwrap();
        prop_assert!(vals[0] > -1e-10);
        let rank_bound = (1usize << n).min(1 << m);
        let rank = vals.iter().filter(|&&v| v > 1e-9).count();
        prop_assert!(rank <= rank_bound);
    }

    #[test]
    fn kron_mixed_product(a in cmatrix(2), b in cmatrix(2), c in cmatrix(2), d in cmatrix(2)) {
        let lhs = kron(&a, &b) * kron(&c, &d);
        let rhs = kron(&(a * c), &(b * d));
        prop_assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn liouvillian_annihilates_trace(rho in hermitian(4)) {
        let model = LindbladModel::dissipative_tfim(2, 0.3, 1.0, 0.5).unwrap();
        let lrho = model.apply_liouvillian(&rho).unwrap();
        prop_assert!(lrho.trace().norm() < 1e-12);
        // the image is Hermitian whenever the input is
        prop_assert!((&lrho - lrho.adjoint()).norm() < 1e-12);
    }

    #[test]
    fn frobenius_transpose_exact(a in cmatrix(3)) {
        prop_assert_eq!(
            frobenius_norm_sq(&a).to_bits(),
            frobenius_norm_sq(&a.transpose()).to_bits()
        );
    }

    #[test]
    fn rotations_are_unitary_and_invert(theta in -10.0..10.0f64) {
        for axis in [Axis::X, Axis::Y, Axis::Z] {
            let g = rotation_gate(axis, theta);
            let ginv = rotation_gate(axis, -theta);
            prop_assert!((&g * g.adjoint() - CMatrix::identity(2, 2)).norm() < 1e-12);
            prop_assert!((g * ginv - CMatrix::identity(2, 2)).norm() < 1e-12);
        }
    }
}
