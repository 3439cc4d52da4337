use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not Hermitian (deviation {0:.3e})")]
    NonHermitian(f64),

    #[error("gate is not unitary (deviation {0:.3e})")]
    NonUnitaryGate(f64),

    #[error("qubit index {index} out of range for {num_qubits} qubits")]
    QubitOutOfRange { index: usize, num_qubits: usize },

    #[error("control and target qubit coincide ({0})")]
    ControlEqualsTarget(usize),

    #[error("parameter vector has length {got}, ansatz needs {want}")]
    ParameterLength { got: usize, want: usize },

    #[error("state vector length {0} is not a power of two")]
    BadStateLength(usize),

    #[error("state vector norm {0} is not 1")]
    NotNormalized(f64),

    #[error("density matrix violates an invariant: {0}")]
    InvalidDensityMatrix(String),

    #[error(
        "steady state is degenerate: two smallest singular values {s0:.3e} and {s1:.3e}"
    )]
    DegenerateSteadyState { s0: f64, s1: f64 },

    #[error("steady-state residual {0:.3e} exceeds tolerance")]
    NonConvergence(f64),

    #[error("trace drift {0:.3e} before renormalization; time step too large")]
    TraceDrift(f64),

    #[error("objective returned a non-finite value at {0:?}")]
    NonFiniteObjective(Vec<f64>),

    #[error("spin chain needs at least 2 sites, got {0}")]
    TooFewSites(usize),

    #[error("empty initial point")]
    EmptyPoint,

    #[error("config error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
