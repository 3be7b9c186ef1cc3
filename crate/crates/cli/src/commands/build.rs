use fintopo::construct::{one_point_extension, product, quotient, subspace, sum, EquivalenceRelation};
use fintopo::fintop::format::{emit_space, parse_closure, parse_poset};
use fintopo::fintop::{topology_from_closure, topology_from_poset, FiniteSpace};
use fintopo::locale::scott_topology;
use serde_json::json;

use super::{load_space, subset_arg};
use crate::render::sets_json;
use crate::{read, BuildCmd, CmdResult, Outcome};

fn emitted(space: &FiniteSpace) -> Outcome {
    let json = json!({
        "points": space.carrier().labels(),
        "opens": sets_json(space.carrier(), &space.opens_for_display()),
    });
    Outcome::ok(emit_space(space), json)
}

pub fn run(cmd: BuildCmd) -> CmdResult {
    let space = match cmd {
        BuildCmd::Product(p) => product(&load_space(&p.left)?, &load_space(&p.right)?)?.space,
        BuildCmd::Sum(p) => sum(&load_space(&p.left)?, &load_space(&p.right)?)?,
        BuildCmd::Subspace { input, subset } => {
            let s = load_space(&input.input)?;
            let a = subset_arg(s.carrier(), &subset)?;
            subspace(&s, a)?
        }
        BuildCmd::Quotient { input, partition } => {
            let s = load_space(&input.input)?;
            let eq = EquivalenceRelation::parse(&read(&partition)?, s.carrier())?;
            quotient(&s, &eq)?.space
        }
        BuildCmd::Onepoint { input, label } => one_point_extension(&load_space(&input.input)?, &label)?,
        BuildCmd::FromPoset(input) => topology_from_poset(&parse_poset(&read(&input.input)?)?),
        BuildCmd::FromClosure(input) => topology_from_closure(&parse_closure(&read(&input.input)?)?)?,
        BuildCmd::Scott(input) => scott_topology(&parse_poset(&read(&input.input)?)?)?,
    };
    Ok(emitted(&space))
}
