use fintopo::approx::{kernel_ratio, sqrt_iteration, FunctionOracle, GridFunction, WeierstrassPolynomial};
use fintopo::Exec;
use serde_json::json;

use crate::render::{fixed, num, short, table, yes_no};
use crate::{ApproxCmd, CmdResult, Outcome};

pub fn run(cmd: ApproxCmd) -> CmdResult {
    match cmd {
        ApproxCmd::Sqrt { n, points } => {
            let grid = GridFunction::uniform_grid(0.0, 1.0, points)?;
            let g = sqrt_iteration(n, &grid)?;
            let rows: Vec<Vec<String>> = g
                .iter()
                .map(|(t, v)| vec![short(t), fixed(v), fixed(t.sqrt())])
                .collect();
            let text = table(&["t", "value", "sqrt"], &rows);
            let json = json!({ "n": n, "grid": g.grid(), "values": g.values() });
            Ok(Outcome::ok(text, json))
        }
        ApproxCmd::Weierstrass {
            function,
            n,
            panels,
            from,
            to,
            points,
        } => {
            let f: FunctionOracle = function.parse()?;
            let p = WeierstrassPolynomial::new(&f, n, panels)?;
            let grid = GridFunction::uniform_grid(from, to, points)?;
            let g = p.eval_grid(&grid, Exec::Sequential)?;
            let rows: Vec<Vec<String>> = g.iter().map(|(x, v)| vec![short(x), fixed(v)]).collect();
            let sup = g.sup_error(&f);
            let mut text = table(&["x", "value"], &rows);
            text.push_str(&format!("\nsup error: {}\n", fixed(sup)));
            let json = json!({
                "n": n,
                "j_n": p.j_n(),
                "grid": g.grid(),
                "values": g.values(),
                "sup_error": sup,
            });
            Ok(Outcome::ok(text, json))
        }
        ApproxCmd::KernelRatio { n, delta, panels } => {
            let k = kernel_ratio(n, delta, panels)?;
            let holds = k.ratio < k.bound;
            let text = format!(
                "ratio: {}\nbound: {}\nbelow bound: {}\n",
                num(k.ratio),
                num(k.bound),
                yes_no(holds)
            );
            Ok(Outcome::verdict(
                holds,
                text,
                json!({ "ratio": k.ratio, "bound": k.bound, "below_bound": holds }),
            ))
        }
    }
}
