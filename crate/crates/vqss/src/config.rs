//! Flat key-value experiment configuration with a strict schema: unknown
//! keys are rejected with the offending line number.
//!
//! ```text
//! model = tfim
//! sites = 4
//! v = 0.3
//! g = 1.0
//! gamma = 0.5
//! ancillas = 4
//! layers = 4
//! seed = 7
//! restarts = 3
//! max_iter_multiplier = 200
//! output_dir = out/tfim
//! ```

use std::collections::HashMap;
use std::path::{Path, PathBuf};

use crate::circuits::AnsatzConfig;
use crate::error::{Error, Result};
use crate::lindblad::{uniform_lowering_dissipation, LindbladModel};
use crate::linalg::CMatrix;
use crate::report;
use crate::solver::SolveConfig;

#[derive(Debug, Clone, PartialEq)]
pub enum ModelKind {
    Tfim { v: f64, g: f64 },
    Xyz { jx: f64, jy: f64, jz: f64 },
    /// Lowering-channel dissipation with an arbitrary (default zero)
    /// Hamiltonian loaded from a matrix JSON file.
    Custom { hamiltonian_json: Option<PathBuf> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub model: ModelKind,
    pub sites: usize,
    pub gamma: f64,
    pub ancillas: usize,
    pub layers: usize,
    pub seed: u64,
    pub restarts: usize,
    pub max_iter_multiplier: usize,
    pub fidelity_log_stride: usize,
    pub max_evals: Option<usize>,
    pub output_dir: PathBuf,
}

const KNOWN_KEYS: &[&str] = &[
    "model",
    "sites",
    "v",
    "g",
    "jx",
    "jy",
    "jz",
    "gamma",
    "ancillas",
    "layers",
    "seed",
    "restarts",
    "max_iter_multiplier",
    "fidelity_log_stride",
    "max_evals",
    "output_dir",
    "hamiltonian_json",
];

struct RawConfig {
    values: HashMap<String, (usize, String)>,
}

impl RawConfig {
    fn take(&mut self, key: &str) -> Option<String> {
        self.values.remove(key).map(|(_, v)| v)
    }

    fn require(&mut self, key: &str) -> Result<String> {
        self.take(key)
            .ok_or_else(|| Error::Config(format!("missing required key '{key}'")))
    }

    fn parse<T: std::str::FromStr>(&mut self, key: &str) -> Result<T> {
        let raw = self.require(key)?;
        raw.parse()
            .map_err(|_| Error::Config(format!("key '{key}': cannot parse '{raw}'")))
    }

    fn parse_or<T: std::str::FromStr>(&mut self, key: &str, default: T) -> Result<T> {
        match self.take(key) {
            None => Ok(default),
            Some(raw) => raw
                .parse()
                .map_err(|_| Error::Config(format!("key '{key}': cannot parse '{raw}'"))),
        }
    }
}

fn parse_raw(text: &str) -> Result<RawConfig> {
    let mut values = HashMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Error::Config(format!("line {lineno}: expected 'key = value', got '{line}'"))
        })?;
        let key = key.trim().to_string();
        let value = value.trim().to_string();
        if !KNOWN_KEYS.contains(&key.as_str()) {
            return Err(Error::Config(format!("line {lineno}: unknown key '{key}'")));
        }
        if values.insert(key.clone(), (lineno, value)).is_some() {
            return Err(Error::Config(format!("line {lineno}: duplicate key '{key}'")));
        }
    }
    Ok(RawConfig { values })
}

impl ExperimentConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut raw = parse_raw(text)?;
        let model_name = raw.require("model")?;
        let sites: usize = raw.parse("sites")?;
        let model = match model_name.as_str() {
            "tfim" => ModelKind::Tfim {
                v: raw.parse("v")?,
                g: raw.parse("g")?,
            },
            "xyz" => ModelKind::Xyz {
                jx: raw.parse("jx")?,
                jy: raw.parse("jy")?,
                jz: raw.parse("jz")?,
            },
            "custom" => ModelKind::Custom {
                hamiltonian_json: raw.take("hamiltonian_json").map(PathBuf::from),
            },
            other => {
                return Err(Error::Config(format!(
                    "model must be tfim, xyz or custom, got '{other}'"
                )))
            }
        };
        if matches!(model, ModelKind::Tfim { .. } | ModelKind::Xyz { .. }) && sites < 2 {
            return Err(Error::Config(format!(
                "chain models need sites >= 2, got {sites}"
            )));
        }
        if sites == 0 {
            return Err(Error::Config("sites must be positive".into()));
        }
        let gamma: f64 = raw.parse("gamma")?;
        if gamma < 0.0 {
            return Err(Error::Config("gamma must be non-negative".into()));
        }
        let ancillas: usize = raw.parse("ancillas")?;
        if ancillas > sites {
            return Err(Error::Config(format!(
                "ancillas ({ancillas}) exceeds sites ({sites}); {sites} ancillas always suffice"
            )));
        }
        let layers: usize = raw.parse("layers")?;
        let cfg = Self {
            model,
            sites,
            gamma,
            ancillas,
            layers,
            seed: raw.parse_or("seed", 0)?,
            restarts: raw.parse_or("restarts", 3)?,
            max_iter_multiplier: raw.parse_or("max_iter_multiplier", 200)?,
            fidelity_log_stride: raw.parse_or("fidelity_log_stride", 50)?,
            max_evals: raw.take("max_evals").map(|v| {
                v.parse()
                    .map_err(|_| Error::Config(format!("key 'max_evals': cannot parse '{v}'")))
            }).transpose()?,
            output_dir: PathBuf::from(raw.require("output_dir")?),
        };
        if let Some((lineno, _)) = raw.values.values().next() {
            return Err(Error::Config(format!("line {lineno}: key not applicable to model '{model_name}'")));
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text)
    }

    /// Builds the Lindblad model this configuration describes.
    pub fn build_model(&self) -> Result<LindbladModel> {
        match &self.model {
            ModelKind::Tfim { v, g } => {
                LindbladModel::dissipative_tfim(self.sites, *v, *g, self.gamma)
            }
            ModelKind::Xyz { jx, jy, jz } => {
                LindbladModel::dissipative_xyz(self.sites, *jx, *jy, *jz, self.gamma)
            }
            ModelKind::Custom { hamiltonian_json } => {
                let dim = 1usize << self.sites;
                let h = match hamiltonian_json {
                    Some(path) => report::read_matrix_json(path)?,
                    None => CMatrix::zeros(dim, dim),
                };
                let (jump_ops, rates) = uniform_lowering_dissipation(self.sites, self.gamma);
                LindbladModel::new(self.sites, h, jump_ops, rates)
            }
        }
    }

    pub fn solve_config(&self) -> Result<SolveConfig> {
        let ansatz = AnsatzConfig::new(self.sites, self.ancillas, self.layers)?;
        let mut cfg = SolveConfig::new(ansatz);
        cfg.restarts = self.restarts;
        cfg.max_iter_multiplier = self.max_iter_multiplier;
        cfg.seed = self.seed;
        cfg.fidelity_log_stride = self.fidelity_log_stride;
        cfg.max_evals = self.max_evals;
        Ok(cfg)
    }

    pub fn model_name(&self) -> &'static str {
        match self.model {
            ModelKind::Tfim { .. } => "tfim",
            ModelKind::Xyz { .. } => "xyz",
            ModelKind::Custom { .. } => "custom",
        }
    }
}
