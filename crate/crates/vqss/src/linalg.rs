//! Dense complex linear algebra: Kronecker products, partial trace over
//! ancilla qubits, Hermitian eigendecomposition, PSD square roots and
//! SVD-based null vectors.
//!
//! Conventions used throughout the crate:
//! - qubit 0 is the leftmost tensor factor, i.e. the most significant bit
//!   of the computational-basis index;
//! - system qubits come first, ancilla qubits last;
//! - `|0⟩ = (1, 0)ᵀ` is the `σᶻ = +1` eigenstate.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Dense complex matrix, the universal numeric carrier.
pub type CMatrix = DMatrix<C64>;
/// Dense complex vector.
pub type CVector = DVector<C64>;

pub const HERMITICITY_TOL: f64 = 1e-10;
pub const TRACE_TOL: f64 = 1e-10;
pub const PSD_TOL: f64 = 1e-9;

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// Squared Frobenius norm `Σᵢⱼ |aᵢⱼ|²`.
///
/// Entries are accumulated in a transpose-invariant order (diagonal first,
/// then `(r,c)/(c,r)` pairs) so that `frobenius_norm_sq(A)` and
/// `frobenius_norm_sq(A†)` are bit-identical.
pub fn frobenius_norm_sq(a: &CMatrix) -> f64 {
    let (rows, cols) = a.shape();
    let mut sum = 0.0;
    for i in 0..rows.min(cols) {
        sum += a[(i, i)].norm_sqr();
    }
    for r in 0..rows.max(cols) {
        for c in (r + 1)..rows.max(cols) {
            let mut pair = 0.0;
            if r < rows && c < cols {
                pair += a[(r, c)].norm_sqr();
            }
            if c < rows && r < cols {
                pair += a[(c, r)].norm_sqr();
            }
            sum += pair;
        }
    }
    sum
}

pub fn frobenius_norm(a: &CMatrix) -> f64 {
    frobenius_norm_sq(a).sqrt()
}

/// Deviation from Hermiticity, `‖a − a†‖_F`.
pub fn hermiticity_deviation(a: &CMatrix) -> f64 {
    frobenius_norm(&(a - a.adjoint()))
}

/// Hermitian eigendecomposition. Eigenvalues ascending; eigenvectors are the
/// corresponding columns of the returned matrix.
pub fn eigh(h: &CMatrix) -> Result<(Vec<f64>, CMatrix)> {
    if !h.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "eigh needs a square matrix, got {}x{}",
            h.nrows(),
            h.ncols()
        )));
    }
    let dev = hermiticity_deviation(h);
    if dev > HERMITICITY_TOL {
        return Err(Error::NonHermitian(dev));
    }
    let se = nalgebra::SymmetricEigen::new(h.clone());
    let n = h.nrows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| se.eigenvalues[i].partial_cmp(&se.eigenvalues[j]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let eigenvectors = CMatrix::from_fn(n, n, |r, c| se.eigenvectors[(r, order[c])]);
    Ok((eigenvalues, eigenvectors))
}

/// Principal square root of a PSD matrix: `V·diag(√max(λ, 0))·V†`.
/// Eigenvalues above `-1e-9` are clamped to zero.
pub fn psd_sqrt(rho: &DensityMatrix) -> CMatrix {
    let (vals, vecs) = eigh(rho.matrix()).expect("density matrix is Hermitian");
    let n = vals.len();
    let sqrt_diag = CMatrix::from_fn(n, n, |r, c| {
        if r == c {
            C64::new(vals[r].max(0.0).sqrt(), 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    &vecs * sqrt_diag * vecs.adjoint()
}

/// Null-space candidate of a square matrix, from the SVD.
#[derive(Debug, Clone)]
pub struct NullVector {
    /// Right-singular vector of the smallest singular value, unit 2-norm.
    pub vector: CVector,
    /// The smallest singular value (residual of the null-space claim).
    pub sigma_min: f64,
    /// The second-smallest singular value (degeneracy diagnostic).
    pub sigma_next: f64,
}

/// Right-singular vector of the smallest singular value of `mat`, together
/// with the two smallest singular values for residual and degeneracy
/// reporting.
pub fn null_vector(mat: &CMatrix) -> Result<NullVector> {
    if !mat.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "null_vector needs a square matrix, got {}x{}",
            mat.nrows(),
            mat.ncols()
        )));
    }
    let svd = mat.clone().svd(false, true);
    let v_t = svd.v_t.expect("requested V^H");
    let sigmas = &svd.singular_values;
    let n = sigmas.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| sigmas[i].partial_cmp(&sigmas[j]).unwrap());
    let i_min = order[0];
    let sigma_min = sigmas[i_min];
    let sigma_next = if n > 1 { sigmas[order[1]] } else { f64::INFINITY };
    // rows of v_t are the conjugated right-singular vectors
    let vector = CVector::from_fn(n, |k, _| v_t[(i_min, k)].conj());
    Ok(NullVector {
        vector,
        sigma_min,
        sigma_next,
    })
}

/// Pure state of `num_qubits` qubits in the computational basis.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amps: Vec<C64>,
}

impl StateVector {
    /// `|0⟩^⊗n`.
    pub fn zero_state(num_qubits: usize) -> Self {
        let mut amps = vec![C64::new(0.0, 0.0); 1 << num_qubits];
        amps[0] = C64::new(1.0, 0.0);
        Self { num_qubits, amps }
    }

    /// Wraps raw amplitudes; the length must be a power of two and the state
    /// normalized within 1e-10.
    pub fn from_amplitudes(amps: Vec<C64>) -> Result<Self> {
        let len = amps.len();
        if len == 0 || len & (len - 1) != 0 {
            return Err(Error::BadStateLength(len));
        }
        let norm: f64 = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self {
            num_qubits: len.trailing_zeros() as usize,
            amps,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [C64] {
        &mut self.amps
    }

    /// Bit mask selecting the given qubit in a basis index (qubit 0 is the
    /// most significant bit).
    pub(crate) fn qubit_mask(&self, qubit: usize) -> usize {
        1 << (self.num_qubits - 1 - qubit)
    }
}

/// Mixed state of `num_qubits` qubits: Hermitian, unit-trace, PSD.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    num_qubits: usize,
    matrix: CMatrix,
}

impl DensityMatrix {
    /// Validates all invariants: Hermiticity within 1e-10, unit trace within
    /// 1e-10, smallest eigenvalue ≥ −1e-9.
    pub fn new(num_qubits: usize, matrix: CMatrix) -> Result<Self> {
        let dim = 1usize << num_qubits;
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "expected {dim}x{dim} for {num_qubits} qubits, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        let dev = hermiticity_deviation(&matrix);
        if dev > HERMITICITY_TOL {
            return Err(Error::InvalidDensityMatrix(format!(
                "Hermiticity deviation {dev:.3e}"
            )));
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::InvalidDensityMatrix(format!("trace {tr}")));
        }
        let (vals, _) = eigh(&matrix)?;
        if vals[0] < -PSD_TOL {
            return Err(Error::InvalidDensityMatrix(format!(
                "smallest eigenvalue {:.3e}",
                vals[0]
            )));
        }
        Ok(Self { num_qubits, matrix })
    }

    /// Skips the eigendecomposition; for matrices that are PSD by
    /// construction (`A·A†`). Hermiticity and trace are still checked.
    pub(crate) fn from_psd_product(num_qubits: usize, matrix: CMatrix) -> Result<Self> {
        let dev = hermiticity_deviation(&matrix);
        if dev > HERMITICITY_TOL {
            return Err(Error::InvalidDensityMatrix(format!(
                "Hermiticity deviation {dev:.3e}"
            )));
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::InvalidDensityMatrix(format!("trace {tr}")));
        }
        Ok(Self { num_qubits, matrix })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        1 << self.num_qubits
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// Purity `Tr ρ²`.
    pub fn purity(&self) -> f64 {
        (&self.matrix * &self.matrix).trace().re
    }
}

/// Reduced state of the first `n_system` qubits: `Tr_E |Ψ⟩⟨Ψ|`, with the
/// trailing `m_ancilla` qubits traced out. Implemented by reshaping the
/// amplitudes into a `2ⁿ × 2ᵐ` matrix `A` and forming `A·A†`.
pub fn partial_trace_ancilla(
    psi: &StateVector,
    n_system: usize,
    m_ancilla: usize,
) -> Result<DensityMatrix> {
    if psi.num_qubits() != n_system + m_ancilla {
        return Err(Error::DimensionMismatch(format!(
            "state has {} qubits, expected {} system + {} ancilla",
            psi.num_qubits(),
            n_system,
            m_ancilla
        )));
    }
    let rows = 1usize << n_system;
    let cols = 1usize << m_ancilla;
    // system index is the high bits, ancilla the low bits
    let a = CMatrix::from_fn(rows, cols, |s, e| psi.amps[s * cols + e]);
    let rho = &a * a.adjoint();
    DensityMatrix::from_psd_product(n_system, rho)
}

/// 2×2 identity.
pub fn identity2() -> CMatrix {
    CMatrix::identity(2, 2)
}

pub fn pauli_x() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[
        C64::new(0.0, 0.0),
        C64::new(1.0, 0.0),
        C64::new(1.0, 0.0),
        C64::new(0.0, 0.0),
    ])
}

pub fn pauli_y() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[
        C64::new(0.0, 0.0),
        C64::new(0.0, -1.0),
        C64::new(0.0, 1.0),
        C64::new(0.0, 0.0),
    ])
}

pub fn pauli_z() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[
        C64::new(1.0, 0.0),
        C64::new(0.0, 0.0),
        C64::new(0.0, 0.0),
        C64::new(-1.0, 0.0),
    ])
}

/// Spin lowering operator `σ⁻ = (σˣ − iσʸ)/2 = [[0,0],[1,0]]`.
pub fn lowering() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[
        C64::new(0.0, 0.0),
        C64::new(0.0, 0.0),
        C64::new(1.0, 0.0),
        C64::new(0.0, 0.0),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn random_cmatrix(rng: &mut impl Rng, rows: usize, cols: usize) -> CMatrix {
        CMatrix::from_fn(rows, cols, |_, _| {
            C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        })
    }

    fn random_hermitian(rng: &mut impl Rng, n: usize) -> CMatrix {
        let a = random_cmatrix(rng, n, n);
        (&a + a.adjoint()) * C64::new(0.5, 0.0)
    }

    fn random_state(rng: &mut impl Rng, num_qubits: usize) -> StateVector {
        let mut amps: Vec<C64> = (0..1 << num_qubits)
            .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let norm: f64 = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for a in &mut amps {
            *a /= norm;
        }
        StateVector::from_amplitudes(amps).unwrap()
    }

    #[test]
    fn kron_identities() {
        let i2 = identity2();
        assert_eq!(kron(&i2, &i2), CMatrix::identity(4, 4));
        let zz = kron(&pauli_z(), &pauli_z());
        let expected = CMatrix::from_diagonal(&CVector::from_vec(vec![
            C64::new(1.0, 0.0),
            C64::new(-1.0, 0.0),
            C64::new(-1.0, 0.0),
            C64::new(1.0, 0.0),
        ]));
        assert_abs_diff_eq!(frobenius_norm(&(zz - expected)), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn kron_mixed_product_property() {
        // kron(A,B)·kron(C,D) = kron(AC, BD), checked entrywise
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10 {
            let a = random_cmatrix(&mut rng, 2, 2);
            let b = random_cmatrix(&mut rng, 2, 2);
            let c = random_cmatrix(&mut rng, 2, 2);
            let d = random_cmatrix(&mut rng, 2, 2);
            let lhs = kron(&a, &b) * kron(&c, &d);
            let rhs = kron(&(&a * &c), &(&b * &d));
            assert!(frobenius_norm(&(lhs - rhs)) < 1e-12);
        }
    }

    #[test]
    fn kron_associative_bilinear() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = random_cmatrix(&mut rng, 2, 2);
        let b = random_cmatrix(&mut rng, 2, 2);
        let c = random_cmatrix(&mut rng, 2, 2);
        let assoc_lhs = kron(&kron(&a, &b), &c);
        let assoc_rhs = kron(&a, &kron(&b, &c));
        assert!(frobenius_norm(&(assoc_lhs - assoc_rhs)) < 1e-12);
        let s = C64::new(0.7, -0.3);
        let bilinear_lhs = kron(&(&a * s + &c), &b);
        let bilinear_rhs = kron(&a, &b) * s + kron(&c, &b);
        assert!(frobenius_norm(&(bilinear_lhs - bilinear_rhs)) < 1e-12);
    }

    #[test]
    fn frobenius_norm_basics() {
        assert_eq!(frobenius_norm_sq(&CMatrix::zeros(3, 3)), 0.0);
        assert_abs_diff_eq!(
            frobenius_norm_sq(&CMatrix::identity(4, 4)),
            4.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn frobenius_trace_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_cmatrix(&mut rng, 16, 16);
        let tr = (a.adjoint() * &a).trace();
        assert_abs_diff_eq!(frobenius_norm_sq(&a), tr.re, epsilon = 1e-12 * tr.re.abs());
        assert_abs_diff_eq!(
            frobenius_norm_sq(&a),
            frobenius_norm_sq(&a.adjoint()),
            epsilon = 0.0
        );
    }

    #[test]
    fn eigh_pauli_z() {
        let (vals, vecs) = eigh(&pauli_z()).unwrap();
        assert_abs_diff_eq!(vals[0], -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(vals[1], 1.0, epsilon = 1e-12);
        // eigenvector of -1 is |1⟩, of +1 is |0⟩, up to phase
        assert_abs_diff_eq!(vecs[(1, 0)].norm(), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(vecs[(0, 1)].norm(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn eigh_identity() {
        let (vals, _) = eigh(&CMatrix::identity(4, 4)).unwrap();
        for v in vals {
            assert_abs_diff_eq!(v, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn eigh_reconstruction() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let h = random_hermitian(&mut rng, 16);
        let (vals, vecs) = eigh(&h).unwrap();
        let diag = CMatrix::from_fn(16, 16, |r, c| {
            if r == c {
                C64::new(vals[r], 0.0)
            } else {
                C64::new(0.0, 0.0)
            }
        });
        let recon = &vecs * diag * vecs.adjoint();
        assert!(frobenius_norm(&(recon - &h)) < 1e-9);
        // orthonormal columns
        let gram = vecs.adjoint() * &vecs;
        assert!(frobenius_norm(&(gram - CMatrix::identity(16, 16))) < 1e-10);
    }

    #[test]
    fn eigh_rejects_non_hermitian() {
        let m = CMatrix::from_row_slice(2, 2, &[
            C64::new(0.0, 0.0),
            C64::new(1.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
        ]);
        assert!(matches!(eigh(&m), Err(Error::NonHermitian(_))));
    }

    #[test]
    fn psd_sqrt_cases() {
        let half = DensityMatrix::new(1, identity2() * C64::new(0.5, 0.0)).unwrap();
        let s = psd_sqrt(&half);
        let expected = identity2() * C64::new(1.0 / 2f64.sqrt(), 0.0);
        assert!(frobenius_norm(&(s - expected)) < 1e-12);

        let mut proj = CMatrix::zeros(2, 2);
        proj[(0, 0)] = C64::new(1.0, 0.0);
        let p = DensityMatrix::new(1, proj.clone()).unwrap();
        assert!(frobenius_norm(&(psd_sqrt(&p) - proj)) < 1e-12);
    }

    #[test]
    fn psd_sqrt_squares_back() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let psi = random_state(&mut rng, 4);
        let rho = partial_trace_ancilla(&psi, 2, 2).unwrap();
        let s = psd_sqrt(&rho);
        assert!(frobenius_norm(&(&s * &s - rho.matrix())) < 1e-9);
    }

    #[test]
    fn null_vector_diagonal() {
        let m = CMatrix::from_diagonal(&CVector::from_vec(vec![
            C64::new(1.0, 0.0),
            C64::new(0.0, 0.0),
        ]));
        let nv = null_vector(&m).unwrap();
        assert!(nv.sigma_min < 1e-14);
        assert_abs_diff_eq!(nv.vector[1].norm(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn null_vector_unitary_has_no_null_space() {
        // any unitary has all singular values 1
        let h = CMatrix::from_row_slice(2, 2, &[
            C64::new(1.0, 0.0),
            C64::new(1.0, 0.0),
            C64::new(1.0, 0.0),
            C64::new(-1.0, 0.0),
        ]) * C64::new(1.0 / 2f64.sqrt(), 0.0);
        let nv = null_vector(&h).unwrap();
        assert_abs_diff_eq!(nv.sigma_min, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn partial_trace_product_state() {
        // |0⟩ ⊗ |+⟩ reduces to |0⟩⟨0|
        let r = 1.0 / 2f64.sqrt();
        let psi = StateVector::from_amplitudes(vec![
            C64::new(r, 0.0),
            C64::new(r, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
        ])
        .unwrap();
        let rho = partial_trace_ancilla(&psi, 1, 1).unwrap();
        let mut expected = CMatrix::zeros(2, 2);
        expected[(0, 0)] = C64::new(1.0, 0.0);
        assert!(frobenius_norm(&(rho.matrix() - expected)) < 1e-12);
    }

    #[test]
    fn partial_trace_bell_state() {
        let r = 1.0 / 2f64.sqrt();
        let psi = StateVector::from_amplitudes(vec![
            C64::new(r, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(r, 0.0),
        ])
        .unwrap();
        let rho = partial_trace_ancilla(&psi, 1, 1).unwrap();
        let expected = identity2() * C64::new(0.5, 0.0);
        assert!(frobenius_norm(&(rho.matrix() - expected)) < 1e-12);
    }

    #[test]
    fn partial_trace_matches_index_summation() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let psi = random_state(&mut rng, 3);
        let rho = partial_trace_ancilla(&psi, 2, 1).unwrap();
        // independent oracle: ρ[s,s'] = Σ_e ψ[s,e] ψ*[s',e]
        let amps = psi.amplitudes();
        for s in 0..4 {
            for sp in 0..4 {
                let mut acc = C64::new(0.0, 0.0);
                for e in 0..2 {
                    acc += amps[s * 2 + e] * amps[sp * 2 + e].conj();
                }
                assert!((rho.matrix()[(s, sp)] - acc).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn partial_trace_purity_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let psi = random_state(&mut rng, 4);
            let rho = partial_trace_ancilla(&psi, 2, 2).unwrap();
            assert!((rho.matrix().trace().re - 1.0).abs() < 1e-12);
            let p = rho.purity();
            assert!(p <= 1.0 + 1e-10);
            assert!(p >= 0.25 - 1e-10);
        }
    }

    #[test]
    fn density_matrix_eigenvalues_sum_to_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let psi = random_state(&mut rng, 4);
        let rho = partial_trace_ancilla(&psi, 2, 2).unwrap();
        let (vals, _) = eigh(rho.matrix()).unwrap();
        let sum: f64 = vals.iter().sum();
        assert_abs_diff_eq!(sum, 1.0, epsilon = 1e-10);
    }

    #[test]
    fn partial_trace_dimension_mismatch() {
        let psi = StateVector::zero_state(3);
        assert!(partial_trace_ancilla(&psi, 1, 1).is_err());
    }
}
