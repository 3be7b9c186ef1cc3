use fintopo::fintop::format::{parse_closure, parse_family};
use fintopo::fintop::{generate_topology, topology_from_closure, validate_base, BaseReport, FiniteSpace, Generator};
use fintopo::pmetric::{parse_chain, pseudometric_from_chain};
use fintopo::Error;
use serde_json::{json, Value};

use super::load_pmetric;
use crate::render::{fixed, set_list, sets_json, yes_no};
use crate::{read, CheckCmd, CmdResult, Failure, Outcome};

pub fn run(cmd: CheckCmd) -> CmdResult {
    match cmd {
        CheckCmd::Base(input) => base(&read(&input.input)?),
        CheckCmd::Subbase(input) => {
            let fam = parse_family(&read(&input.input)?)?;
            let space = generate_topology(&fam, Generator::Subbase)?;
            Ok(Outcome::ok(
                format!("subbase: yes\n{}", opens_line(&space)),
                json!({ "valid": true, "opens": sets_json(space.carrier(), &space.opens_for_display()) }),
            ))
        }
        CheckCmd::ClosureOp(input) => {
            let result = parse_closure(&read(&input.input)?).and_then(|t| topology_from_closure(&t));
            witnessed(result, |space| {
                (
                    format!("closure operator: yes\n{}", opens_line(space)),
                    json!({ "valid": true, "opens": sets_json(space.carrier(), &space.opens_for_display()) }),
                )
            })
        }
        CheckCmd::Pmetric(input) => match load_pmetric(&input.input) {
            Ok(sp) => {
                let text = format!(
                    "pseudometric: yes\nmetric: {}\ndiameter: {}\n",
                    yes_no(sp.is_metric()),
                    fixed(sp.diameter())
                );
                let json = json!({ "valid": true, "metric": sp.is_metric(), "diameter": sp.diameter() });
                Ok(Outcome::ok(text, json))
            }
            Err(Failure::Math(msg)) => Ok(invalid(msg)),
            Err(e) => Err(e),
        },
        CheckCmd::Chain(input) => {
            let result = parse_chain(&read(&input.input)?).and_then(|c| {
                let d = pseudometric_from_chain(&c)?;
                Ok((c, d))
            });
            witnessed(result, |(chain, d)| {
                let transitive: Vec<bool> = (1..=chain.depth()).map(|k| chain.relation(k).is_transitive()).collect();
                let mut text = format!("chain: yes\ndepth: {}\n", chain.depth());
                for (k, t) in transitive.iter().enumerate() {
                    text.push_str(&format!("V{} transitive: {}\n", k + 1, yes_no(*t)));
                }
                text.push_str(&format!("sandwich: {}\n", yes_no(d.sandwich_holds())));
                (
                    text,
                    json!({ "valid": true, "depth": chain.depth(), "transitive": transitive, "sandwich": d.sandwich_holds() }),
                )
            })
        }
    }
}

fn opens_line(space: &FiniteSpace) -> String {
    format!("opens: {}\n", set_list(space.carrier(), &space.opens_for_display()))
}

fn invalid(reason: String) -> Outcome {
    Outcome::verdict(
        false,
        format!("invalid: {reason}\n"),
        json!({ "valid": false, "reason": reason }),
    )
}

/// Mathematical failures become a failed verdict with the library's witness;
/// malformed input stays a usage error.
fn witnessed<T>(result: Result<T, Error>, render: impl FnOnce(&T) -> (String, Value)) -> CmdResult {
    match result {
        Ok(v) => {
            let (text, json) = render(&v);
            Ok(Outcome::ok(text, json))
        }
        Err(e) if !e.is_usage() => Ok(invalid(e.to_string())),
        Err(e) => Err(e.into()),
    }
}

fn base(text: &str) -> CmdResult {
    let fam = parse_family(text)?;
    let c = &fam.carrier;
    match validate_base(&fam) {
        BaseReport::Ok => {
            let space = generate_topology(&fam, Generator::Base)?;
            Ok(Outcome::ok(
                format!("base: yes\n{}", opens_line(&space)),
                json!({ "valid": true, "opens": sets_json(c, &space.opens_for_display()) }),
            ))
        }
        BaseReport::Uncovered { x } => {
            let text = format!("base: no\nwitness: x={} lies in no member\n", c.label(x));
            Ok(Outcome::verdict(
                false,
                text,
                json!({ "valid": false, "x": c.label(x), "reason": "uncovered" }),
            ))
        }
        BaseReport::NoRefinement { x, u, v } => {
            let text = format!(
                "base: no\nwitness: x={} lies in U={} and V={} but no member W has x ∈ W ⊆ U ∩ V = {}\n",
                c.label(x),
                c.fmt_set(u),
                c.fmt_set(v),
                c.fmt_set(u & v)
            );
            let json = json!({
                "valid": false,
                "x": c.label(x),
                "u": c.labels_of(u),
                "v": c.labels_of(v),
                "reason": "no_refinement",
            });
            Ok(Outcome::verdict(false, text, json))
        }
    }
}
