use std::path::Path;

use fintopo::pmetric::{banach_fixed_point, pagerank, pagerank_from, parse_matrix_csv, Norm, StochasticMatrix};
use serde_json::json;

use super::{numbers_arg, usage};
use crate::render::{fixed, num, table};
use crate::{read, CmdResult, Failure, Outcome, SolveCmd};

type Map = Box<dyn Fn(&[f64]) -> Vec<f64>>;

fn builtin(name: &str) -> Result<Map, Failure> {
    let per_coord = |g: fn(f64) -> f64| -> Map { Box::new(move |x: &[f64]| x.iter().map(|&v| g(v)).collect()) };
    match name {
        "cos" => Ok(per_coord(f64::cos)),
        "sin" => Ok(per_coord(f64::sin)),
        "half" => Ok(per_coord(|v| v / 2.0)),
        _ => {
            let coeffs = name
                .strip_prefix("affine:")
                .ok_or_else(|| usage(format!("unknown function `{name}`")))?;
            let ab = numbers_arg("affine", coeffs)?;
            let [a, b] = ab[..] else {
                return Err(usage("affine needs two coefficients `a,b`"));
            };
            Ok(Box::new(move |x: &[f64]| x.iter().map(|&v| a * v + b).collect()))
        }
    }
}

fn affine_matrix(path: &Path, offset: Option<&str>) -> Result<(Map, usize), Failure> {
    let m = parse_matrix_csv(&read(path)?)?;
    let n = m.len();
    let c = match offset {
        Some(s) => numbers_arg("offset", s)?,
        None => vec![0.0; n],
    };
    if c.len() != n {
        return Err(usage(format!("offset has {} entries, matrix has {n} rows", c.len())));
    }
    let map = move |x: &[f64]| -> Vec<f64> {
        m.iter()
            .zip(&c)
            .map(|(row, ci)| row.iter().zip(x).map(|(a, b)| a * b).sum::<f64>() + ci)
            .collect()
    };
    Ok((Box::new(map), n))
}

pub fn run(cmd: SolveCmd) -> CmdResult {
    match cmd {
        SolveCmd::Fixpoint {
            function,
            matrix,
            offset,
            x0,
            norm,
            tol,
            max_iter,
        } => {
            let norm: Norm = norm.parse()?;
            let mut start = numbers_arg("x0", &x0)?;
            let (map, dim) = match (function, matrix) {
                (Some(name), None) => (builtin(&name)?, None),
                (None, Some(path)) => {
                    let (m, n) = affine_matrix(&path, offset.as_deref())?;
                    (m, Some(n))
                }
                _ => return Err(usage("give exactly one of --function and --matrix")),
            };
            if let Some(n) = dim {
                match start.len() {
                    1 => start = vec![start[0]; n],
                    k if k == n => {}
                    k => return Err(usage(format!("x0 has {k} entries, matrix has {n} rows"))),
                }
            }
            let fp = banach_fixed_point(map, start, norm, tol, max_iter)?;
            let xs: Vec<String> = fp.x.iter().map(|&v| num(v)).collect();
            let text = format!(
                "x: {}\niterations: {}\ncontraction estimate: {}\n",
                xs.join(" "),
                fp.iterations,
                fixed(fp.gamma_estimate)
            );
            Ok(Outcome::ok(text, json!(fp)))
        }
        SolveCmd::Pagerank {
            input,
            tol,
            max_iter,
            start,
        } => {
            let m = StochasticMatrix::new(parse_matrix_csv(&read(&input.input)?)?)?;
            let pr = match start {
                Some(s) => pagerank_from(&m, numbers_arg("start", &s)?, tol, max_iter)?,
                None => pagerank(&m, tol, max_iter)?,
            };
            let rows: Vec<Vec<String>> = pr
                .distribution
                .iter()
                .enumerate()
                .map(|(i, &p)| vec![i.to_string(), fixed(p)])
                .collect();
            let mut text = table(&["node", "probability"], &rows);
            text.push_str(&format!("\niterations: {}\n", pr.iterations));
            Ok(Outcome::ok(text, json!(pr)))
        }
    }
}
