//! Nelder-Mead simplex optimizer with an iteration cap and a restart
//! protocol that rebuilds the simplex around the incumbent best point.
//!
//! Coefficients and the initial-simplex rule (5% perturbation per
//! coordinate, 2.5e-4 for zero coordinates) follow the de-facto standard
//! defaults. One iteration is one simplex update cycle, not one function
//! evaluation; evaluation counts are tracked separately.

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct NmOptions {
    pub max_iterations: usize,
    /// Simplex coordinate-spread tolerance.
    pub xatol: f64,
    /// Function value spread tolerance.
    pub fatol: f64,
    pub reflection: f64,
    pub expansion: f64,
    pub contraction: f64,
    pub shrink: f64,
    /// Optional total function-evaluation budget; checked between cycles.
    pub max_evals: Option<usize>,
}

impl NmOptions {
    /// Options with the `200·d` iteration cap for a `d`-dimensional problem.
    pub fn capped(dimension: usize) -> Self {
        Self {
            max_iterations: 200 * dimension,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = self.reflection > 0.0
            && self.expansion > self.reflection.max(1.0)
            && self.contraction > 0.0
            && self.contraction < 1.0
            && self.shrink > 0.0
            && self.shrink < 1.0
            && self.max_iterations > 0;
        if ok {
            Ok(())
        } else {
            Err(Error::Config("invalid Nelder-Mead options".into()))
        }
    }
}

impl Default for NmOptions {
    fn default() -> Self {
        Self {
            max_iterations: 1000,
            xatol: 1e-8,
            fatol: 1e-8,
            reflection: 1.0,
            expansion: 2.0,
            contraction: 0.5,
            shrink: 0.5,
            max_evals: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    MaxIter,
    Tolerance,
    EvalBudget,
}

#[derive(Debug, Clone)]
pub struct NmOutcome {
    pub best_point: Vec<f64>,
    pub best_value: f64,
    pub iterations_used: usize,
    pub evals_used: usize,
    pub termination: Termination,
    /// `(iteration, best value so far)` per cycle.
    pub history: Vec<(usize, f64)>,
}

/// Initial simplex around `x0`: vertex 0 is `x0` itself, vertex `k` perturbs
/// coordinate `k−1` by 5%, or by 2.5e-4 when that coordinate is zero.
pub fn initial_simplex(x0: &[f64]) -> Result<Vec<Vec<f64>>> {
    if x0.is_empty() {
        return Err(Error::EmptyPoint);
    }
    let mut simplex = vec![x0.to_vec()];
    for k in 0..x0.len() {
        let mut v = x0.to_vec();
        if v[k] == 0.0 {
            v[k] = 2.5e-4;
        } else {
            v[k] *= 1.05;
        }
        simplex.push(v);
    }
    Ok(simplex)
}

/// Standard Nelder-Mead, reporting the incumbent best each cycle through
/// `observer(iteration, best_point, best_value)`. Iterations are numbered
/// from `iter_offset + 1`.
pub fn nelder_mead_observed<F, O>(
    objective: &mut F,
    x0: &[f64],
    opts: &NmOptions,
    iter_offset: usize,
    observer: &mut O,
) -> Result<NmOutcome>
where
    F: FnMut(&[f64]) -> f64,
    O: FnMut(usize, &[f64], f64),
{
    opts.validate()?;
    let d = x0.len();
    let mut simplex = initial_simplex(x0)?;
    let mut evals = 0usize;
    let mut values = Vec::with_capacity(d + 1);
    for v in &simplex {
        let fv = objective(v);
        evals += 1;
        if !fv.is_finite() {
            return Err(Error::NonFiniteObjective(v.clone()));
        }
        values.push(fv);
    }
    sort_simplex(&mut simplex, &mut values);

    let mut history = Vec::new();
    let mut iterations = 0usize;
    let mut termination = Termination::MaxIter;

    for iter in 1..=opts.max_iterations {
        if let Some(budget) = opts.max_evals {
            if evals >= budget {
                termination = Termination::EvalBudget;
                break;
            }
        }
        // convergence: coordinate spread and value spread against the best vertex
        let xspread = simplex[1..]
            .iter()
            .flat_map(|v| v.iter().zip(&simplex[0]).map(|(a, b)| (a - b).abs()))
            .fold(0.0f64, f64::max);
        let fspread = values[d] - values[0];
        if xspread < opts.xatol && fspread < opts.fatol {
            termination = Termination::Tolerance;
            break;
        }

        iterations = iter;
        let centroid: Vec<f64> = (0..d)
            .map(|i| simplex[..d].iter().map(|v| v[i]).sum::<f64>() / d as f64)
            .collect();
        let worst = simplex[d].clone();
        let affine = |t: f64| -> Vec<f64> {
            centroid
                .iter()
                .zip(&worst)
                .map(|(c, w)| c + t * (c - w))
                .collect()
        };

        let xr = affine(opts.reflection);
        let fr = eval_checked(objective, &xr, &mut evals)?;

        // ties prefer the reflected point
        if fr < values[0] {
            let xe = affine(opts.reflection * opts.expansion);
            let fe = eval_checked(objective, &xe, &mut evals)?;
            if fe < fr {
                replace_worst(&mut simplex, &mut values, xe, fe);
            } else {
                replace_worst(&mut simplex, &mut values, xr, fr);
            }
        } else if fr <= values[d - 1] {
            replace_worst(&mut simplex, &mut values, xr, fr);
        } else if fr < values[d] {
            // outside contraction
            let xc = affine(opts.reflection * opts.contraction);
            let fc = eval_checked(objective, &xc, &mut evals)?;
            if fc <= fr {
                replace_worst(&mut simplex, &mut values, xc, fc);
            } else {
                shrink_simplex(objective, &mut simplex, &mut values, opts.shrink, &mut evals)?;
            }
        } else {
            // inside contraction
            let xcc = affine(-opts.contraction);
            let fcc = eval_checked(objective, &xcc, &mut evals)?;
            if fcc < values[d] {
                replace_worst(&mut simplex, &mut values, xcc, fcc);
            } else {
                shrink_simplex(objective, &mut simplex, &mut values, opts.shrink, &mut evals)?;
            }
        }
        sort_simplex(&mut simplex, &mut values);
        history.push((iter_offset + iter, values[0]));
        observer(iter_offset + iter, &simplex[0], values[0]);
    }

    Ok(NmOutcome {
        best_point: simplex[0].clone(),
        best_value: values[0],
        iterations_used: iterations,
        evals_used: evals,
        termination,
        history,
    })
}

/// [`nelder_mead_observed`] without an observer.
pub fn nelder_mead<F>(objective: &mut F, x0: &[f64], opts: &NmOptions) -> Result<NmOutcome>
where
    F: FnMut(&[f64]) -> f64,
{
    nelder_mead_observed(objective, x0, opts, 0, &mut |_, _: &[f64], _| {})
}

/// Runs Nelder-Mead `restarts` times, rebuilding the simplex around the
/// incumbent best point between runs. History iteration counters continue
/// across restarts and an overall evaluation budget is shared.
pub fn restarted_minimize_observed<F, O>(
    objective: &mut F,
    x0: &[f64],
    opts: &NmOptions,
    restarts: usize,
    observer: &mut O,
) -> Result<NmOutcome>
where
    F: FnMut(&[f64]) -> f64,
    O: FnMut(usize, &[f64], f64),
{
    if restarts == 0 {
        return Err(Error::Config("restarts must be at least 1".into()));
    }
    let mut best_point = x0.to_vec();
    let mut best_value = f64::INFINITY;
    let mut history = Vec::new();
    let mut iter_offset = 0usize;
    let mut evals_total = 0usize;
    let mut iterations_total = 0usize;
    let mut termination = Termination::MaxIter;

    for _ in 0..restarts {
        let mut local = opts.clone();
        if let Some(budget) = opts.max_evals {
            if evals_total >= budget {
                termination = Termination::EvalBudget;
                break;
            }
            local.max_evals = Some(budget - evals_total);
        }
        let mut best_so_far = best_value;
        let mut wrapped = |iter: usize, point: &[f64], value: f64| {
            best_so_far = best_so_far.min(value);
            observer(iter, point, best_so_far);
        };
        let out =
            nelder_mead_observed(objective, &best_point, &local, iter_offset, &mut wrapped)?;
        evals_total += out.evals_used;
        iterations_total += out.iterations_used;
        iter_offset += out.iterations_used;
        for &(it, v) in &out.history {
            let running = history.last().map_or(f64::INFINITY, |&(_, b)| b);
            history.push((it, v.min(running)));
        }
        if out.best_value < best_value {
            best_value = out.best_value;
            best_point = out.best_point;
        }
        termination = out.termination;
    }

    Ok(NmOutcome {
        best_point,
        best_value,
        iterations_used: iterations_total,
        evals_used: evals_total,
        termination,
        history,
    })
}

/// [`restarted_minimize_observed`] without an observer.
pub fn restarted_minimize<F>(
    objective: &mut F,
    x0: &[f64],
    opts: &NmOptions,
    restarts: usize,
) -> Result<NmOutcome>
where
    F: FnMut(&[f64]) -> f64,
{
    restarted_minimize_observed(objective, x0, opts, restarts, &mut |_, _: &[f64], _| {})
}

fn eval_checked<F>(objective: &mut F, x: &[f64], evals: &mut usize) -> Result<f64>
where
    F: FnMut(&[f64]) -> f64,
{
    let fv = objective(x);
    *evals += 1;
    if fv.is_finite() {
        Ok(fv)
    } else {
        Err(Error::NonFiniteObjective(x.to_vec()))
    }
}

fn replace_worst(simplex: &mut [Vec<f64>], values: &mut [f64], x: Vec<f64>, fx: f64) {
    let last = simplex.len() - 1;
    simplex[last] = x;
    values[last] = fx;
}

fn shrink_simplex<F>(
    objective: &mut F,
    simplex: &mut [Vec<f64>],
    values: &mut [f64],
    sigma: f64,
    evals: &mut usize,
) -> Result<()>
where
    F: FnMut(&[f64]) -> f64,
{
    let best = simplex[0].clone();
    for k in 1..simplex.len() {
        for (x, b) in simplex[k].iter_mut().zip(&best) {
            *x = b + sigma * (*x - b);
        }
        values[k] = eval_checked(objective, &simplex[k], evals)?;
    }
    Ok(())
}

fn sort_simplex(simplex: &mut [Vec<f64>], values: &mut [f64]) {
    let mut order: Vec<usize> = (0..values.len()).collect();
    // stable sort keeps the older vertex first on exact ties
    order.sort_by(|&i, &j| values[i].partial_cmp(&values[j]).unwrap());
    let new_simplex: Vec<Vec<f64>> = order.iter().map(|&i| simplex[i].clone()).collect();
    let new_values: Vec<f64> = order.iter().map(|&i| values[i]).collect();
    simplex.clone_from_slice(&new_simplex);
    values.copy_from_slice(&new_values);
}
