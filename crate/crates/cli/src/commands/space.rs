use fintopo::bits;
use fintopo::fintop::format::emit_space;
use fintopo::fintop::{open_neighborhood_base, separation_profile, specialization_order, FiniteSpace};
use serde_json::{json, Value};

use super::load_space;
use crate::render::{set_json, set_list, sets_json, table, yes_no};
use crate::{CmdResult, Outcome, SpaceCmd};

pub fn run(cmd: SpaceCmd) -> CmdResult {
    match cmd {
        SpaceCmd::Report { input, emit } => {
            let space = load_space(&input.input)?;
            if emit {
                let text = emit_space(&space);
                let json = json!({ "space": text });
                return Ok(Outcome::ok(text, json));
            }
            Ok(report(&space))
        }
    }
}

/// Nonempty subsets in report order.
fn nonempty_subsets(space: &FiniteSpace) -> Vec<bits::Mask> {
    let mut all: Vec<bits::Mask> = (1..=space.full()).collect();
    bits::sort_for_display(&mut all);
    all
}

pub fn report(space: &FiniteSpace) -> Outcome {
    let c = space.carrier();
    let opens = space.opens_for_display();
    let mut text = format!("points: {}\n", c.labels().join(" "));
    text.push_str(&format!("opens: {}\n\n", set_list(c, &opens)));

    let subsets = nonempty_subsets(space);
    let rows: Vec<Vec<String>> = subsets
        .iter()
        .map(|&a| vec![c.fmt_set(a), c.fmt_set(space.closure(a)), c.fmt_set(space.interior(a))])
        .collect();
    text.push_str(&table(&["set", "closure", "interior"], &rows));

    let sep = separation_profile(space);
    let axioms = [
        ("T0", sep.t0),
        ("T1", sep.t1),
        ("T2", sep.t2),
        ("T3", sep.t3),
        ("T4", sep.t4),
        ("regular", sep.regular),
        ("normal", sep.normal),
    ];
    text.push('\n');
    let rows: Vec<Vec<&str>> = axioms.iter().map(|&(n, b)| vec![n, yes_no(b)]).collect();
    text.push_str(&table(&["axiom", "holds"], &rows));

    let order = specialization_order(space);
    let pairs = order.strict_pairs();
    text.push('\n');
    let rows: Vec<Vec<String>> = pairs
        .iter()
        .map(|p| vec![format!("{} ⊑ {}", p.below, p.above)])
        .collect();
    text.push_str(&table(&["specialization"], &rows));

    let bases: Vec<Vec<bits::Mask>> = (0..space.len()).map(|x| open_neighborhood_base(space, x)).collect();
    text.push('\n');
    let rows: Vec<Vec<String>> = bases
        .iter()
        .enumerate()
        .map(|(x, b)| vec![c.label(x).to_string(), set_list(c, b)])
        .collect();
    text.push_str(&table(&["element", "basis"], &rows));

    let json = json!({
        "points": c.labels(),
        "opens": sets_json(c, &opens),
        "closure_interior": subsets.iter().map(|&a| json!({
            "set": set_json(c, a),
            "closure": set_json(c, space.closure(a)),
            "interior": set_json(c, space.interior(a)),
        })).collect::<Vec<Value>>(),
        "separation": sep,
        "specialization": pairs,
        "neighborhood_bases": bases.iter().enumerate().map(|(x, b)| json!({
            "element": c.label(x),
            "basis": sets_json(c, b),
        })).collect::<Vec<Value>>(),
    });
    Outcome::ok(text, json)
}
