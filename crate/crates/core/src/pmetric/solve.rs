use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Norm {
    L1,
    L2,
    Linf,
}

impl Norm {
    pub fn dist(self, a: &[f64], b: &[f64]) -> f64 {
        let diffs = a.iter().zip(b).map(|(x, y)| (x - y).abs());
        match self {
            Norm::L1 => diffs.sum(),
            Norm::L2 => diffs.map(|d| d * d).sum::<f64>().sqrt(),
            Norm::Linf => diffs.fold(0.0, f64::max),
        }
    }
}

impl std::str::FromStr for Norm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "l1" => Ok(Norm::L1),
            "l2" => Ok(Norm::L2),
            "linf" | "max" => Ok(Norm::Linf),
            _ => Err(Error::InvalidArgument(format!("unknown norm `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FixedPoint {
    pub x: Vec<f64>,
    pub iterations: usize,
    /// Largest observed ratio of consecutive step lengths.
    pub gamma_estimate: f64,
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")))
    }
}

/// Iterates `x ← f(x)` until one step moves less than `tol`. The step
/// lengths are returned in the error when `max_iter` runs out.
pub fn banach_fixed_point<F>(f: F, x0: Vec<f64>, norm: Norm, tol: f64, max_iter: usize) -> Result<FixedPoint>
where
    F: Fn(&[f64]) -> Vec<f64>,
{
    check_tol(tol)?;
    let mut x = x0;
    let mut steps: Vec<f64> = Vec::new();
    for i in 1..=max_iter {
        let next = f(&x);
        if next.len() != x.len() {
            return Err(Error::InvalidArgument("map changed the vector length".into()));
        }
        let step = norm.dist(&x, &next);
        steps.push(step);
        if !step.is_finite() {
            break;
        }
        // `x` itself moves by at most `tol` under `f`
        if step <= tol {
            let gamma_estimate = steps
                .windows(2)
                .filter(|w| w[0] > 0.0)
                .map(|w| w[1] / w[0])
                .fold(0.0, f64::max);
            return Ok(FixedPoint {
                x,
                iterations: i,
                gamma_estimate,
            });
        }
        x = next;
    }
    Err(Error::NonConvergence {
        iterations: steps.len(),
        diagnostic: format!("last step {:e}", steps.last().copied().unwrap_or(f64::NAN)),
        trace: steps,
    })
}

/// Row-stochastic square matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StochasticMatrix {
    rows: Vec<Vec<f64>>,
}

pub const ROW_SUM_TOLERANCE: f64 = 1e-12;

impl StochasticMatrix {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotStochastic("empty matrix".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotStochastic(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(j) = row.iter().position(|&p| !p.is_finite() || p < 0.0) {
                return Err(Error::NotStochastic(format!(
                    "entry ({i}, {j}) = {} is not a probability",
                    row[j]
                )));
            }
            let s: f64 = row.iter().sum();
            if (s - 1.0).abs() > ROW_SUM_TOLERANCE {
                return Err(Error::NotStochastic(format!("row {i} sums to {s}")));
            }
        }
        Ok(StochasticMatrix { rows })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, p: &[f64]) -> Vec<f64> {
        let n = self.len();
        (0..n).map(|j| (0..n).map(|i| p[i] * self.rows[i][j]).sum()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PageRank {
    pub distribution: Vec<f64>,
    pub iterations: usize,
}

/// Power iteration `p ← p·P` from the uniform distribution until the L1
/// change drops to `tol`.
pub fn pagerank(m: &StochasticMatrix, tol: f64, max_iter: usize) -> Result<PageRank> {
    let n = m.len();
    pagerank_from(m, vec![1.0 / n as f64; n], tol, max_iter)
}

/// Power iteration from a given probability vector.
pub fn pagerank_from(m: &StochasticMatrix, start: Vec<f64>, tol: f64, max_iter: usize) -> Result<PageRank> {
    check_tol(tol)?;
    let n = m.len();
    let total: f64 = start.iter().sum();
    if start.len() != n || start.iter().any(|&p| p.is_nan() || p < 0.0) || (total - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidArgument(format!(
            "start must be a probability vector of length {n}"
        )));
    }
    let mut history: Vec<Vec<f64>> = vec![start];
    let mut steps = Vec::new();
    for i in 1..=max_iter {
        let next = m.left_apply(history.last().expect("nonempty"));
        let step = Norm::L1.dist(history.last().expect("nonempty"), &next);
        steps.push(step);
        if step <= tol {
            let total: f64 = next.iter().sum();
            let distribution = next.iter().map(|p| p / total).collect();
            return Ok(PageRank {
                distribution,
                iterations: i,
            });
        }
        history.push(next);
        if history.len() > 9 {
            history.remove(0);
        }
    }
    Err(Error::NonConvergence {
        iterations: max_iter,
        diagnostic: oscillation(&history, tol),
        trace: steps,
    })
}

/// Describes the recent iterates: a short cycle if they repeat, otherwise
/// the last step length.
fn oscillation(history: &[Vec<f64>], tol: f64) -> String {
    let last = history.last().expect("nonempty");
    let period = (1..history.len()).find(|&k| Norm::L1.dist(&history[history.len() - 1 - k], last) <= tol);
    match period {
        Some(k) => format!("iterates oscillate with period {k}"),
        None if history.len() >= 2 => format!("last step {:e}", Norm::L1.dist(&history[history.len() - 2], last)),
        None => "no iterations".into(),
    }
}
