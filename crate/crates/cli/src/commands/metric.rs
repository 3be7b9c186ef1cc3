use fintopo::pmetric::{
    emit_matrix_csv, epsilon_net, hausdorff_distance, hausdorff_distance_by_thresholds, metric_quotient, parse_chain,
    parse_ranks, pseudometric_from_chain, ultrametric_from_rank,
};
use serde_json::json;

use super::{load_pmetric, subset_arg};
use crate::render::{num, table, yes_no};
use crate::{read, CmdResult, MetricCmd, Outcome};

pub fn run(cmd: MetricCmd) -> CmdResult {
    match cmd {
        MetricCmd::Hausdorff { input, c, d } => {
            let sp = load_pmetric(&input.input)?;
            let cset = subset_arg(sp.carrier(), &c)?;
            let dset = subset_arg(sp.carrier(), &d)?;
            let max_form = hausdorff_distance(&sp, cset, dset)?;
            let inf_form = hausdorff_distance_by_thresholds(&sp, cset, dset)?;
            let text = format!("hausdorff: {}\nthreshold form: {}\n", num(max_form), num(inf_form));
            Ok(Outcome::ok(
                text,
                json!({ "hausdorff": max_form, "threshold_form": inf_form }),
            ))
        }
        MetricCmd::Quotient(input) => {
            let sp = load_pmetric(&input.input)?;
            let q = metric_quotient(&sp)?;
            let c = sp.carrier();
            let rows: Vec<Vec<String>> = q
                .classes
                .blocks()
                .iter()
                .enumerate()
                .map(|(k, &b)| vec![k.to_string(), c.fmt_set(b)])
                .collect();
            let mut text = table(&["class", "points"], &rows);
            text.push('\n');
            text.push_str(&emit_matrix_csv(q.space.matrix()));
            let json = json!({
                "classes": q.classes.blocks().iter().map(|&b| c.labels_of(b)).collect::<Vec<_>>(),
                "matrix": q.space.matrix(),
                "metric": q.space.is_metric(),
            });
            Ok(Outcome::ok(text, json))
        }
        MetricCmd::Net { input, eps } => {
            let sp = load_pmetric(&input.input)?;
            let centers = epsilon_net(&sp, eps)?;
            let labels: Vec<&str> = centers.iter().map(|&x| sp.carrier().label(x)).collect();
            let text = format!("net: {}\nsize: {}\n", labels.join(" "), labels.len());
            Ok(Outcome::ok(text, json!({ "eps": eps, "centers": labels })))
        }
        MetricCmd::Chain(input) => {
            let chain = parse_chain(&read(&input.input)?)?;
            let d = pseudometric_from_chain(&chain)?;
            let c = chain.carrier();
            let mut header = vec![""];
            header.extend(c.labels().iter().map(String::as_str));
            let rows: Vec<Vec<String>> = (0..c.len())
                .map(|x| {
                    let mut row = vec![c.label(x).to_string()];
                    row.extend((0..c.len()).map(|y| num(d.space.d(x, y))));
                    row
                })
                .collect();
            let mut text = table(&header, &rows);
            text.push_str(&format!("\nsandwich: {}\n", yes_no(d.sandwich_holds())));
            let mut json = json!({ "labels": c.labels(), "matrix": d.space.matrix(), "sandwich": d.sandwich_holds() });
            if let Some((n, x, y)) = d.sandwich_violation {
                text.push_str(&format!("witness: n={n} pair ({}, {})\n", c.label(x), c.label(y)));
                json["witness"] = json!({ "n": n, "pair": [c.label(x), c.label(y)] });
            }
            Ok(Outcome::verdict(d.sandwich_holds(), text, json))
        }
        MetricCmd::Ultrarank { input, a, b } => {
            let rs = parse_ranks(&read(&input.input)?)?;
            let am = subset_arg(rs.carrier(), &a)?;
            let bm = subset_arg(rs.carrier(), &b)?;
            let dist = ultrametric_from_rank(&rs, am, bm)?;
            let first = rs.first_difference(am, bm);
            let text = format!(
                "distance: {}\nfirst difference: {}\n",
                num(dist),
                first.map_or_else(|| "none".to_string(), |r| r.to_string())
            );
            Ok(Outcome::ok(
                text,
                json!({ "distance": dist, "first_difference": first }),
            ))
        }
    }
}
