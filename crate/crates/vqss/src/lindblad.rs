//! Lindblad generators for dissipative spin chains, their vectorized
//! superoperator form, and two independent steady-state oracles: a dense
//! null-space solve and a Runge-Kutta long-time integration.
//!
//! The generator is
//! `Lρ = −i[H,ρ] + Σᵢ γᵢ (cᵢ ρ cᵢ† − ½ cᵢ†cᵢ ρ − ½ ρ cᵢ†cᵢ)`
//! and vectorization is column-stacking, `vec(AXB) = (Bᵀ⊗A) vec(X)`.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::{
    self, frobenius_norm, hermiticity_deviation, identity2, kron, lowering, pauli_x, pauli_y,
    pauli_z, CMatrix, DensityMatrix,
};

/// Open-system model: Hamiltonian plus jump operators with rates.
#[derive(Debug, Clone)]
pub struct LindbladModel {
    n_system: usize,
    hamiltonian: CMatrix,
    jump_ops: Vec<CMatrix>,
    rates: Vec<f64>,
    // precomputed c†c per channel
    cdc: Vec<CMatrix>,
}

/// Exact steady state with its stationarity residual `‖Lρ‖_F`.
#[derive(Debug, Clone)]
pub struct SteadyState {
    pub rho: DensityMatrix,
    pub residual: f64,
}

/// Embeds a single-site 2×2 operator at position `site` of a chain.
fn site_operator(op: &CMatrix, site: usize, sites: usize) -> CMatrix {
    let mut full = CMatrix::identity(1, 1);
    for q in 0..sites {
        let factor = if q == site { op.clone() } else { identity2() };
        full = kron(&full, &factor);
    }
    full
}

/// Transverse-field Ising Hamiltonian with periodic boundary conditions:
/// `H = (V/4)·Σᵢ σᶻᵢσᶻᵢ₊₁ + (g/2)·Σᵢ σˣᵢ`, sums over `i = 0..sites−1` with
/// site `sites` identified with site 0.
pub fn tfim_hamiltonian(sites: usize, v: f64, g: f64) -> Result<CMatrix> {
    if sites < 2 {
        return Err(Error::TooFewSites(sites));
    }
    let dim = 1usize << sites;
    let mut h = CMatrix::zeros(dim, dim);
    let sz = pauli_z();
    let sx = pauli_x();
    for i in 0..sites {
        let zz = site_operator(&sz, i, sites) * site_operator(&sz, (i + 1) % sites, sites);
        h += zz * C64::new(v / 4.0, 0.0);
        h += site_operator(&sx, i, sites) * C64::new(g / 2.0, 0.0);
    }
    Ok(h)
}

/// XYZ chain Hamiltonian with periodic boundary conditions:
/// `H = Σᵢ (Jx σˣᵢσˣᵢ₊₁ + Jy σʸᵢσʸᵢ₊₁ + Jz σᶻᵢσᶻᵢ₊₁)`.
pub fn xyz_hamiltonian(sites: usize, jx: f64, jy: f64, jz: f64) -> Result<CMatrix> {
    if sites < 2 {
        return Err(Error::TooFewSites(sites));
    }
    let dim = 1usize << sites;
    let mut h = CMatrix::zeros(dim, dim);
    for (op, j) in [(pauli_x(), jx), (pauli_y(), jy), (pauli_z(), jz)] {
        for i in 0..sites {
            let bond = site_operator(&op, i, sites) * site_operator(&op, (i + 1) % sites, sites);
            h += bond * C64::new(j, 0.0);
        }
    }
    Ok(h)
}

/// One spin-lowering jump operator `σᵢ⁻` per site, all with rate `gamma`.
pub fn uniform_lowering_dissipation(sites: usize, gamma: f64) -> (Vec<CMatrix>, Vec<f64>) {
    let low = lowering();
    let jump_ops = (0..sites).map(|i| site_operator(&low, i, sites)).collect();
    (jump_ops, vec![gamma; sites])
}

impl LindbladModel {
    pub fn new(
        n_system: usize,
        hamiltonian: CMatrix,
        jump_ops: Vec<CMatrix>,
        rates: Vec<f64>,
    ) -> Result<Self> {
        let dim = 1usize << n_system;
        if hamiltonian.nrows() != dim || hamiltonian.ncols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "Hamiltonian is {}x{}, expected {dim}x{dim}",
                hamiltonian.nrows(),
                hamiltonian.ncols()
            )));
        }
        let dev = hermiticity_deviation(&hamiltonian);
        if dev > linalg::HERMITICITY_TOL {
            return Err(Error::NonHermitian(dev));
        }
        if jump_ops.len() != rates.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} jump operators but {} rates",
                jump_ops.len(),
                rates.len()
            )));
        }
        for (k, c) in jump_ops.iter().enumerate() {
            if c.nrows() != dim || c.ncols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "jump operator {k} is {}x{}, expected {dim}x{dim}",
                    c.nrows(),
                    c.ncols()
                )));
            }
            if rates[k] < 0.0 {
                return Err(Error::Config(format!("rate {k} is negative")));
            }
        }
        let cdc = jump_ops.iter().map(|c| c.adjoint() * c).collect();
        Ok(Self {
            n_system,
            hamiltonian,
            jump_ops,
            rates,
            cdc,
        })
    }

    /// Dissipative TFIM: Eq.-style chain Hamiltonian plus per-site lowering
    /// channels.
    pub fn dissipative_tfim(sites: usize, v: f64, g: f64, gamma: f64) -> Result<Self> {
        let h = tfim_hamiltonian(sites, v, g)?;
        let (jump_ops, rates) = uniform_lowering_dissipation(sites, gamma);
        Self::new(sites, h, jump_ops, rates)
    }

    /// Dissipative XYZ chain with per-site lowering channels.
    pub fn dissipative_xyz(sites: usize, jx: f64, jy: f64, jz: f64, gamma: f64) -> Result<Self> {
        let h = xyz_hamiltonian(sites, jx, jy, jz)?;
        let (jump_ops, rates) = uniform_lowering_dissipation(sites, gamma);
        Self::new(sites, h, jump_ops, rates)
    }

    /// Single qubit with `H = 0` and one lowering channel; its unique steady
    /// state is `|1⟩⟨1|`.
    pub fn single_qubit_decay(gamma: f64) -> Self {
        Self::new(1, CMatrix::zeros(2, 2), vec![lowering()], vec![gamma])
            .expect("static model is valid")
    }

    pub fn n_system(&self) -> usize {
        self.n_system
    }

    pub fn dim(&self) -> usize {
        1 << self.n_system
    }

    pub fn hamiltonian(&self) -> &CMatrix {
        &self.hamiltonian
    }

    pub fn jump_ops(&self) -> &[CMatrix] {
        &self.jump_ops
    }

    pub fn rates(&self) -> &[f64] {
        &self.rates
    }

    /// `Lρ` by direct matrix products. `rho` need not be Hermitian; the loss
    /// may probe near-states.
    pub fn apply_liouvillian(&self, rho: &CMatrix) -> Result<CMatrix> {
        let dim = self.dim();
        if rho.nrows() != dim || rho.ncols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "state is {}x{}, model dimension {dim}",
                rho.nrows(),
                rho.ncols()
            )));
        }
        let h = &self.hamiltonian;
        let comm = h * rho - rho * h;
        let mut out = comm * C64::new(0.0, -1.0);
        for ((c, cdc), &gamma) in self.jump_ops.iter().zip(&self.cdc).zip(&self.rates) {
            let sandwich = c * rho * c.adjoint();
            let anti = cdc * rho + rho * cdc;
            out += (sandwich - anti * C64::new(0.5, 0.0)) * C64::new(gamma, 0.0);
        }
        Ok(out)
    }

    /// Dense matrix of `L` in the column-stacking convention:
    /// `−i(I⊗H − Hᵀ⊗I) + Σᵢ γᵢ [c̄ᵢ⊗cᵢ − ½ I⊗(cᵢ†cᵢ) − ½ (cᵢ†cᵢ)ᵀ⊗I]`.
    pub fn superoperator_matrix(&self) -> CMatrix {
        let dim = self.dim();
        let id = CMatrix::identity(dim, dim);
        let h = &self.hamiltonian;
        let mut l = (kron(&id, h) - kron(&h.transpose(), &id)) * C64::new(0.0, -1.0);
        for ((c, cdc), &gamma) in self.jump_ops.iter().zip(&self.cdc).zip(&self.rates) {
            let c_conj = c.map(|z| z.conj());
            let term = kron(&c_conj, c)
                - kron(&id, cdc) * C64::new(0.5, 0.0)
                - kron(&cdc.transpose(), &id) * C64::new(0.5, 0.0);
            l += term * C64::new(gamma, 0.0);
        }
        l
    }

    /// Exact steady state from the null space of the superoperator.
    ///
    /// Errors if the two smallest singular values are both below 1e-10
    /// (degenerate steady space) or if the residual after Hermitization and
    /// trace normalization exceeds 1e-8.
    pub fn steady_state_exact(&self) -> Result<SteadyState> {
        let sup = self.superoperator_matrix();
        let nv = linalg::null_vector(&sup)?;
        if nv.sigma_min < 1e-10 && nv.sigma_next < 1e-10 {
            return Err(Error::DegenerateSteadyState {
                s0: nv.sigma_min,
                s1: nv.sigma_next,
            });
        }
        let dim = self.dim();
        // column-stacking: unstack the null vector column by column
        let raw = CMatrix::from_fn(dim, dim, |r, c| nv.vector[c * dim + r]);
        let herm = (&raw + raw.adjoint()) * C64::new(0.5, 0.0);
        let tr = herm.trace().re;
        if tr.abs() < 1e-12 {
            return Err(Error::NonConvergence(f64::INFINITY));
        }
        let rho_mat = herm * C64::new(1.0 / tr, 0.0);
        let residual = frobenius_norm(&self.apply_liouvillian(&rho_mat)?);
        if residual > 1e-8 {
            return Err(Error::NonConvergence(residual));
        }
        let rho = DensityMatrix::new(self.n_system, rho_mat)
            .map_err(|e| Error::InvalidDensityMatrix(format!("steady state: {e}")))?;
        Ok(SteadyState { rho, residual })
    }

    /// Classical RK4 integration of `dρ/dt = Lρ` for `steps` steps of size
    /// `dt`, Hermitizing and renormalizing the trace after every step.
    pub fn evolve_fixed_step(
        &self,
        rho0: &DensityMatrix,
        dt: f64,
        steps: usize,
    ) -> Result<DensityMatrix> {
        if rho0.num_qubits() != self.n_system {
            return Err(Error::DimensionMismatch(format!(
                "state has {} qubits, model has {}",
                rho0.num_qubits(),
                self.n_system
            )));
        }
        let mut rho = rho0.matrix().clone();
        let half = C64::new(dt / 2.0, 0.0);
        for _ in 0..steps {
            let k1 = self.apply_liouvillian(&rho)?;
            let k2 = self.apply_liouvillian(&(&rho + &k1 * half))?;
            let k3 = self.apply_liouvillian(&(&rho + &k2 * half))?;
            let k4 = self.apply_liouvillian(&(&rho + &k3 * C64::new(dt, 0.0)))?;
            rho += (k1 + k2 * C64::new(2.0, 0.0) + k3 * C64::new(2.0, 0.0) + k4)
                * C64::new(dt / 6.0, 0.0);
            rho = (&rho + rho.adjoint()) * C64::new(0.5, 0.0);
            let tr = rho.trace().re;
            if (tr - 1.0).abs() > 1e-6 {
                return Err(Error::TraceDrift((tr - 1.0).abs()));
            }
            rho *= C64::new(1.0 / tr, 0.0);
        }
        DensityMatrix::new(self.n_system, rho)
    }

    /// `I/2ⁿ`, the maximally mixed state.
    pub fn maximally_mixed(&self) -> DensityMatrix {
        let dim = self.dim();
        let mat = CMatrix::identity(dim, dim) * C64::new(1.0 / dim as f64, 0.0);
        DensityMatrix::new(self.n_system, mat).expect("maximally mixed is valid")
    }
}
