//! Constructive uniform approximation on `[0, 1]`: the monotone square-root
//! iteration and the kernel polynomials
//! `Pₙ(x) = ∫₀¹ f(u)(1 − (u − x)²)ⁿ du / (2Jₙ)` with `Jₙ = ∫₀¹ (1 − v²)ⁿ dv`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exec::Exec;

pub const DEFAULT_PANELS: usize = 2048;

/// A function on `[0, 1]`.
#[derive(Clone)]
pub enum FunctionOracle {
    /// `|x − ½|`.
    AbsHalf,
    /// `sin(πx)`.
    SinScaled,
    Constant(f64),
    /// Coefficients from the constant term up.
    Polynomial(Vec<f64>),
    Custom(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl fmt::Debug for FunctionOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionOracle::AbsHalf => write!(f, "abs-half"),
            FunctionOracle::SinScaled => write!(f, "sin-scaled"),
            FunctionOracle::Constant(c) => write!(f, "const:{c}"),
            FunctionOracle::Polynomial(c) => write!(f, "poly:{c:?}"),
            FunctionOracle::Custom(_) => write!(f, "custom"),
        }
    }
}

impl FunctionOracle {
    pub fn custom(f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        FunctionOracle::Custom(Arc::new(f))
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            FunctionOracle::AbsHalf => (x - 0.5).abs(),
            FunctionOracle::SinScaled => (std::f64::consts::PI * x).sin(),
            FunctionOracle::Constant(c) => *c,
            FunctionOracle::Polynomial(c) => c.iter().rev().fold(0.0, |acc, &a| acc * x + a),
            FunctionOracle::Custom(f) => f(x),
        }
    }
}

impl std::str::FromStr for FunctionOracle {
    type Err = Error;

    /// `abs-half`, `sin-scaled`, `const:<c>` or `poly:<c0>,<c1>,...`.
    fn from_str(s: &str) -> Result<Self> {
        let number = |t: &str| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::InvalidArgument(format!("`{t}` is not a number")))
        };
        match s.split_once(':') {
            None if s == "abs-half" => Ok(FunctionOracle::AbsHalf),
            None if s == "sin-scaled" => Ok(FunctionOracle::SinScaled),
            Some(("const", c)) => Ok(FunctionOracle::Constant(number(c)?)),
            Some(("poly", cs)) => Ok(FunctionOracle::Polynomial(
                cs.split(',').map(number).collect::<Result<_>>()?,
            )),
            _ => Err(Error::InvalidArgument(format!(
                "unknown function `{s}`; expected abs-half, sin-scaled, const:<c> or poly:<c0>,<c1>,..."
            ))),
        }
    }
}

/// Samples on a strictly increasing grid inside `[0, 1]`.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct GridFunction {
    grid: Vec<f64>,
    values: Vec<f64>,
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.iter().any(|&x| !(0.0..=1.0).contains(&x)) {
        return Err(Error::InvalidArgument("grid points must lie in [0, 1]".into()));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("grid must be strictly increasing".into()));
    }
    Ok(())
}

impl GridFunction {
    pub fn new(grid: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        check_grid(&grid)?;
        if grid.len() != values.len() {
            return Err(Error::InvalidArgument(format!(
                "{} grid points but {} values",
                grid.len(),
                values.len()
            )));
        }
        Ok(GridFunction { grid, values })
    }

    /// `count` equally spaced points from `a` to `b` inclusive.
    pub fn uniform_grid(a: f64, b: f64, count: usize) -> Result<Vec<f64>> {
        if count == 0 || (count == 1 && a != b) || a > b {
            return Err(Error::InvalidArgument(format!(
                "bad grid [{a}, {b}] with {count} points"
            )));
        }
        let grid: Vec<f64> = (0..count)
            .map(|i| {
                if count == 1 {
                    a
                } else {
                    a + (b - a) * i as f64 / (count - 1) as f64
                }
            })
            .collect();
        check_grid(&grid)?;
        Ok(grid)
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.grid.iter().copied().zip(self.values.iter().copied())
    }

    /// Largest `|value − f(x)|` over the grid.
    pub fn sup_error(&self, f: &FunctionOracle) -> f64 {
        self.iter().map(|(x, v)| (v - f.eval(x)).abs()).fold(0.0, f64::max)
    }
}

/// `f₀ = 0`, `fₖ₊₁(t) = fₖ(t) + ½(t − fₖ(t)²)`, sampled after `n` steps.
pub fn sqrt_iteration(n: usize, grid: &[f64]) -> Result<GridFunction> {
    check_grid(grid)?;
    let values = grid
        .iter()
        .map(|&t| (0..n).fold(0.0, |f: f64, _| f + 0.5 * (t - f * f)))
        .collect();
    GridFunction::new(grid.to_vec(), values)
}

fn check_panels(panels: usize) -> Result<()> {
    if panels < 2 || panels % 2 == 1 {
        Err(Error::InvalidArgument(format!(
            "panel count must be even and at least 2, got {panels}"
        )))
    } else {
        Ok(())
    }
}

/// Nodes and weights of composite Simpson on `[a, b]`.
fn simpson_rule(a: f64, b: f64, panels: usize) -> (Vec<f64>, Vec<f64>) {
    let h = (b - a) / panels as f64;
    (0..=panels)
        .map(|i| {
            let w = if i == 0 || i == panels {
                1.0
            } else if i % 2 == 1 {
                4.0
            } else {
                2.0
            };
            (a + h * i as f64, w * h / 3.0)
        })
        .unzip()
}

/// Composite Simpson quadrature with an even number of panels.
pub fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> Result<f64> {
    check_panels(panels)?;
    let (nodes, weights) = simpson_rule(a, b, panels);
    Ok(nodes.iter().zip(&weights).map(|(&u, &w)| w * f(u)).sum())
}

/// `Jₙ = ∫₀¹ (1 − v²)ⁿ dv`.
pub fn kernel_mass(n: u32, panels: usize) -> Result<f64> {
    simpson(|v| (1.0 - v * v).powi(n as i32), 0.0, 1.0, panels)
}

/// The polynomial `Pₙ` for one function, evaluated by quadrature.
#[derive(Debug, Clone)]
pub struct WeierstrassPolynomial {
    n: u32,
    j_n: f64,
    nodes: Vec<f64>,
    /// Quadrature weight times `f` at each node.
    weighted: Vec<f64>,
}

impl WeierstrassPolynomial {
    pub fn new(f: &FunctionOracle, n: u32, panels: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("degree parameter n must be at least 1".into()));
        }
        check_panels(panels)?;
        let (nodes, weights) = simpson_rule(0.0, 1.0, panels);
        let weighted = nodes.iter().zip(&weights).map(|(&u, &w)| w * f.eval(u)).collect();
        Ok(WeierstrassPolynomial {
            n,
            j_n: kernel_mass(n, panels)?,
            nodes,
            weighted,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `Jₙ` at the same quadrature resolution.
    pub fn j_n(&self) -> f64 {
        self.j_n
    }

    pub fn eval(&self, x: f64) -> f64 {
        let q: f64 = self
            .nodes
            .iter()
            .zip(&self.weighted)
            .map(|(&u, &wf)| wf * (1.0 - (u - x) * (u - x)).powi(self.n as i32))
            .sum();
        q / (2.0 * self.j_n)
    }

    pub fn eval_grid(&self, grid: &[f64], exec: Exec) -> Result<GridFunction> {
        check_grid(grid)?;
        GridFunction::new(grid.to_vec(), exec.map(grid, |&x| self.eval(x)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct KernelRatio {
    /// `Jₙ* / Jₙ` with `Jₙ* = ∫_δ¹ (1 − v²)ⁿ dv`.
    pub ratio: f64,
    /// `(n + 1)(1 − δ²)ⁿ`.
    pub bound: f64,
}

pub fn kernel_ratio(n: u32, delta: f64, panels: usize) -> Result<KernelRatio> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::InvalidArgument(format!("δ must lie in (0, 1), got {delta}")));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let tail = simpson(|v| (1.0 - v * v).powi(n as i32), delta, 1.0, panels)?;
    Ok(KernelRatio {
        ratio: tail / kernel_mass(n, panels)?,
        bound: (n as f64 + 1.0) * (1.0 - delta * delta).powi(n as i32),
    })
}
