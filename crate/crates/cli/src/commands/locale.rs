use fintopo::bits;
use fintopo::locale::{heyting_implication, hofmann_mislove_report, irreducible_closed_sets, negation, phi_map};
use serde_json::{json, Value};

use super::{load_space, subset_arg};
use crate::render::{set_json, set_list, sets_json, table, yes_no};
use crate::{CmdResult, LocaleCmd, Outcome};

pub fn run(cmd: LocaleCmd) -> CmdResult {
    match cmd {
        LocaleCmd::Implication { input, a, b } => {
            let space = load_space(&input.input)?;
            let c = space.carrier();
            let a = subset_arg(c, &a)?;
            let b = subset_arg(c, &b)?;
            let imp = heyting_implication(&space, a, b)?;
            let neg = negation(&space, a)?;
            let text = format!("A → B: {}\n¬A: {}\n", c.fmt_set(imp), c.fmt_set(neg));
            Ok(Outcome::ok(
                text,
                json!({ "implication": set_json(c, imp), "negation": set_json(c, neg) }),
            ))
        }
        LocaleCmd::Points(input) => {
            let space = load_space(&input.input)?;
            let c = space.carrier();
            let phi = phi_map(&space);
            let rows: Vec<Vec<String>> = phi
                .points
                .iter()
                .enumerate()
                .map(|(k, p)| {
                    let pre: bits::Mask = phi
                        .assignment
                        .iter()
                        .enumerate()
                        .filter(|&(_, &j)| j == k)
                        .fold(0, |acc, (x, _)| acc | bits::singleton(x));
                    vec![c.fmt_set(p.generator), c.fmt_set(pre)]
                })
                .collect();
            let mut text = table(&["generator", "points"], &rows);
            text.push_str(&format!(
                "\ninjective: {}\nsurjective: {}\n",
                yes_no(phi.injective),
                yes_no(phi.surjective)
            ));
            let json = json!({
                "points": phi.points.iter().map(|p| set_json(c, p.generator)).collect::<Vec<Value>>(),
                "assignment": (0..space.len()).map(|x| json!({
                    "point": c.label(x),
                    "generator": set_json(c, phi.points[phi.assignment[x]].generator),
                })).collect::<Vec<Value>>(),
                "injective": phi.injective,
                "surjective": phi.surjective,
            });
            Ok(Outcome::ok(text, json))
        }
        LocaleCmd::Sober(input) => {
            let space = load_space(&input.input)?;
            let c = space.carrier();
            let irr = irreducible_closed_sets(&space);
            let generic = |f: bits::Mask| -> bits::Mask {
                (0..space.len())
                    .filter(|&x| space.closure(bits::singleton(x)) == f)
                    .fold(0, |acc, x| acc | bits::singleton(x))
            };
            let rows: Vec<Vec<String>> = irr
                .sets
                .iter()
                .map(|&f| vec![c.fmt_set(f), c.fmt_set(generic(f))])
                .collect();
            let mut text = table(&["irreducible", "generic points"], &rows);
            text.push_str(&format!("\nsober: {}\n", yes_no(irr.is_sober)));
            let json = json!({
                "irreducible": irr.sets.iter().map(|&f| json!({
                    "set": set_json(c, f),
                    "generic_points": set_json(c, generic(f)),
                })).collect::<Vec<Value>>(),
                "sober": irr.is_sober,
            });
            Ok(Outcome::verdict(irr.is_sober, text, json))
        }
        LocaleCmd::HofmannMislove(input) => {
            let space = load_space(&input.input)?;
            let c = space.carrier();
            let hm = hofmann_mislove_report(&space);
            let rows: Vec<Vec<String>> = hm
                .filters
                .iter()
                .map(|f| {
                    let core = f.members(&space).into_iter().fold(space.full(), |acc, u| acc & u);
                    vec![format!("↑{}", c.fmt_set(f.generator)), c.fmt_set(core)]
                })
                .collect();
            let mut text = table(&["filter", "intersection"], &rows);
            text.push_str(&format!(
                "\nsaturated compact sets: {}\nbijection: {}\nsober: {}\nscott open: {}\n",
                set_list(c, &hm.saturated_compacts),
                yes_no(hm.bijection_holds),
                yes_no(hm.is_sober),
                hm.scott_open_checked.map_or("not checked", yes_no),
            ));
            let gens: Vec<bits::Mask> = hm.filters.iter().map(|f| f.generator).collect();
            let json = json!({
                "filters": sets_json(c, &gens),
                "saturated_compacts": sets_json(c, &hm.saturated_compacts),
                "bijection": hm.bijection_holds,
                "sober": hm.is_sober,
                "scott_open": hm.scott_open_checked,
            });
            Ok(Outcome::verdict(hm.bijection_holds, text, json))
        }
    }
}
