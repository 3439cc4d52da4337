//! Statevector simulation of the multilayer parameterized circuit: per layer,
//! Rz·Rx·Rz rotations on every qubit followed by a ring of controlled-RY
//! entanglers, repeated `layers` times.
//!
//! Parameter layout is layer-major, then qubit, then
//! `(θ₁, θ₂, θ₃ rotations, θ₄ entangler angle)`:
//! `index = 4·(layer·N + qubit) + k`.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, StateVector};

/// Rotation axis for single-qubit gates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// Circuit shape: `n` system qubits, `m` ancilla qubits, `M` layers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnsatzConfig {
    pub n_system: usize,
    pub m_ancilla: usize,
    pub layers: usize,
}

impl AnsatzConfig {
    pub fn new(n_system: usize, m_ancilla: usize, layers: usize) -> Result<Self> {
        if n_system == 0 {
            return Err(Error::Config("n_system must be positive".into()));
        }
        if layers == 0 {
            return Err(Error::Config("layers must be positive".into()));
        }
        if m_ancilla > n_system {
            return Err(Error::Config(format!(
                "m_ancilla ({m_ancilla}) exceeds n_system ({n_system}); \
                 n ancillas always suffice"
            )));
        }
        Ok(Self {
            n_system,
            m_ancilla,
            layers,
        })
    }

    pub fn total_qubits(&self) -> usize {
        self.n_system + self.m_ancilla
    }

    /// Number of variational angles: `4·M·N`.
    pub fn param_count(&self) -> usize {
        4 * self.layers * self.total_qubits()
    }
}

/// `exp(−i·θ·σ_axis/2)` as a dense 2×2 matrix.
pub fn rotation_gate(axis: Axis, theta: f64) -> CMatrix {
    let c = (theta / 2.0).cos();
    let s = (theta / 2.0).sin();
    let entries = match axis {
        Axis::X => [
            C64::new(c, 0.0),
            C64::new(0.0, -s),
            C64::new(0.0, -s),
            C64::new(c, 0.0),
        ],
        Axis::Y => [
            C64::new(c, 0.0),
            C64::new(-s, 0.0),
            C64::new(s, 0.0),
            C64::new(c, 0.0),
        ],
        Axis::Z => [
            C64::new(c, -s),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(c, s),
        ],
    };
    CMatrix::from_row_slice(2, 2, &entries)
}

fn check_qubit(psi: &StateVector, index: usize) -> Result<()> {
    if index >= psi.num_qubits() {
        return Err(Error::QubitOutOfRange {
            index,
            num_qubits: psi.num_qubits(),
        });
    }
    Ok(())
}

fn unitarity_deviation(g: &CMatrix) -> f64 {
    let gram = g.adjoint() * g;
    crate::linalg::frobenius_norm(&(gram - CMatrix::identity(2, 2)))
}

/// Applies a 2×2 gate to the target qubit in place.
pub fn apply_single_qubit_gate(
    psi: &mut StateVector,
    gate: &CMatrix,
    target: usize,
) -> Result<()> {
    check_qubit(psi, target)?;
    if gate.nrows() != 2 || gate.ncols() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "single-qubit gate must be 2x2, got {}x{}",
            gate.nrows(),
            gate.ncols()
        )));
    }
    let dev = unitarity_deviation(gate);
    if dev > 1e-10 {
        return Err(Error::NonUnitaryGate(dev));
    }
    let (g00, g01, g10, g11) = (gate[(0, 0)], gate[(0, 1)], gate[(1, 0)], gate[(1, 1)]);
    let mask = psi.qubit_mask(target);
    let amps = psi.amplitudes_mut();
    for i in 0..amps.len() {
        if i & mask == 0 {
            let j = i | mask;
            let (a0, a1) = (amps[i], amps[j]);
            amps[i] = g00 * a0 + g01 * a1;
            amps[j] = g10 * a0 + g11 * a1;
        }
    }
    Ok(())
}

/// Controlled-RY: `Ry(θ)` on the target within the control-`|1⟩` subspace.
pub fn apply_cry(psi: &mut StateVector, theta: f64, control: usize, target: usize) -> Result<()> {
    check_qubit(psi, control)?;
    check_qubit(psi, target)?;
    if control == target {
        return Err(Error::ControlEqualsTarget(control));
    }
    let c = (theta / 2.0).cos();
    let s = (theta / 2.0).sin();
    let cmask = psi.qubit_mask(control);
    let tmask = psi.qubit_mask(target);
    let amps = psi.amplitudes_mut();
    for i in 0..amps.len() {
        if i & cmask != 0 && i & tmask == 0 {
            let j = i | tmask;
            let (a0, a1) = (amps[i], amps[j]);
            amps[i] = a0 * c - a1 * s;
            amps[j] = a0 * s + a1 * c;
        }
    }
    Ok(())
}

/// Runs the full ansatz circuit on `|0⟩^⊗N`.
///
/// Per layer: `Rz(θ₁)`, `Rx(θ₂)`, `Rz(θ₃)` on each qubit, then the entangler
/// ring `CRY(control = j, target = (j+1) mod N, θ₄)` for `j` ascending.
/// With a single qubit there is no ring and `θ₄` is unused.
pub fn build_ansatz_state(params: &[f64], cfg: &AnsatzConfig) -> Result<StateVector> {
    let want = cfg.param_count();
    if params.len() != want {
        return Err(Error::ParameterLength {
            got: params.len(),
            want,
        });
    }
    let n_tot = cfg.total_qubits();
    let mut psi = StateVector::zero_state(n_tot);
    for layer in 0..cfg.layers {
        for q in 0..n_tot {
            let base = 4 * (layer * n_tot + q);
            apply_rotation(&mut psi, Axis::Z, params[base], q);
            apply_rotation(&mut psi, Axis::X, params[base + 1], q);
            apply_rotation(&mut psi, Axis::Z, params[base + 2], q);
        }
        if n_tot > 1 {
            for q in 0..n_tot {
                let theta = params[4 * (layer * n_tot + q) + 3];
                apply_cry(&mut psi, theta, q, (q + 1) % n_tot)?;
            }
        }
    }
    Ok(psi)
}

// rotation kernel without the per-call unitarity check; the analytic gates
// are unitary by construction
fn apply_rotation(psi: &mut StateVector, axis: Axis, theta: f64, target: usize) {
    let c = (theta / 2.0).cos();
    let s = (theta / 2.0).sin();
    let (g00, g01, g10, g11) = match axis {
        Axis::X => (
            C64::new(c, 0.0),
            C64::new(0.0, -s),
            C64::new(0.0, -s),
            C64::new(c, 0.0),
        ),
        Axis::Y => (
            C64::new(c, 0.0),
            C64::new(-s, 0.0),
            C64::new(s, 0.0),
            C64::new(c, 0.0),
        ),
        Axis::Z => (
            C64::new(c, -s),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(c, s),
        ),
    };
    let mask = psi.qubit_mask(target);
    let amps = psi.amplitudes_mut();
    for i in 0..amps.len() {
        if i & mask == 0 {
            let j = i | mask;
            let (a0, a1) = (amps[i], amps[j]);
            amps[i] = g00 * a0 + g01 * a1;
            amps[j] = g10 * a0 + g11 * a1;
        }
    }
}
