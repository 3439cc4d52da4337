//! Run artifacts: density-matrix JSON, trace CSV, and the run summary.
//! All files are written atomically (temp file in the target directory,
//! then rename).
//!
//! Density-matrix JSON schema: `{ "n": int, "re": [[...]], "im": [[...]] }`,
//! row-major nesting.

use std::fs;
use std::io::Write;
use std::path::Path;

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, DensityMatrix};
use crate::solver::RunResult;

#[derive(Debug, Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    re: Vec<Vec<f64>>,
    im: Vec<Vec<f64>>,
}

pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(
        ".{}.tmp",
        path.file_name().and_then(|n| n.to_str()).unwrap_or("out")
    ));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn write_density_json(rho: &DensityMatrix, path: &Path) -> Result<()> {
    let dim = rho.dim();
    let m = rho.matrix();
    let doc = MatrixJson {
        n: rho.num_qubits(),
        re: (0..dim)
            .map(|r| (0..dim).map(|c| m[(r, c)].re).collect())
            .collect(),
        im: (0..dim)
            .map(|r| (0..dim).map(|c| m[(r, c)].im).collect())
            .collect(),
    };
    write_atomic(path, serde_json::to_string_pretty(&doc)?.as_bytes())
}

pub fn read_density_json(path: &Path) -> Result<DensityMatrix> {
    let mat = read_matrix_json(path)?;
    let n = mat.nrows().trailing_zeros() as usize;
    DensityMatrix::new(n, mat)
}

/// Reads the matrix payload without density-matrix validation; used for
/// custom Hamiltonians as well.
pub fn read_matrix_json(path: &Path) -> Result<CMatrix> {
    let doc: MatrixJson = serde_json::from_str(&fs::read_to_string(path)?)?;
    let dim = 1usize << doc.n;
    if doc.re.len() != dim
        || doc.im.len() != dim
        || doc.re.iter().any(|row| row.len() != dim)
        || doc.im.iter().any(|row| row.len() != dim)
    {
        return Err(Error::Config(format!(
            "matrix json: expected {dim}x{dim} entries for n = {}",
            doc.n
        )));
    }
    Ok(CMatrix::from_fn(dim, dim, |r, c| {
        C64::new(doc.re[r][c], doc.im[r][c])
    }))
}

/// `iter,loss,fidelity` rows; the fidelity field is empty on iterations
/// where it was not logged.
pub fn write_trace_csv(result: &RunResult, path: &Path) -> Result<()> {
    let mut out = String::from("iter,loss,fidelity\n");
    let mut fid_iter = result.fidelity_trace.iter().peekable();
    for &(iter, loss) in &result.loss_trace {
        let fid = match fid_iter.peek() {
            Some(&&(fi, f)) if fi == iter => {
                fid_iter.next();
                format!("{f}")
            }
            _ => String::new(),
        };
        out.push_str(&format!("{iter},{loss},{fid}\n"));
    }
    write_atomic(path, out.as_bytes())
}

#[derive(Debug, Serialize)]
pub struct Summary<'a> {
    pub final_loss: f64,
    pub final_fidelity: f64,
    pub oracle_residual: f64,
    pub total_iterations: usize,
    pub total_evals: usize,
    pub wall_time_seconds: f64,
    pub config: SummaryConfig<'a>,
}

#[derive(Debug, Serialize)]
pub struct SummaryConfig<'a> {
    pub model: &'a str,
    pub sites: usize,
    pub ancillas: usize,
    pub layers: usize,
    pub param_count: usize,
    pub gamma: f64,
    pub seed: u64,
    pub restarts: usize,
    pub max_iter_multiplier: usize,
}

pub fn write_summary_json(summary: &Summary, path: &Path) -> Result<()> {
    write_atomic(path, serde_json::to_string_pretty(summary)?.as_bytes())
}
