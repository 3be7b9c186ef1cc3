use fintopo::logic::{is_consistent, model_from_ultrafilter, stone_representation, LindenbaumAlgebra, Theory};
use serde_json::{json, Value};

use crate::render::{table, yes_no};
use crate::{read, CmdResult, LogicCmd, Outcome};

fn bit(b: bool) -> &'static str {
    if b {
        "1"
    } else {
        "0"
    }
}

pub fn run(cmd: LogicCmd) -> CmdResult {
    match cmd {
        LogicCmd::Consistent(input) => {
            let t = Theory::parse(&read(&input.input)?)?;
            let ok = is_consistent(&t);
            let models = t.models().len();
            let mut text = format!("consistent: {}\nmodels: {models}\n", yes_no(ok));
            if !ok {
                text.push_str(&format!(
                    "witness: none of the {} valuations satisfies every formula\n",
                    t.valuation_count()
                ));
            }
            Ok(Outcome::verdict(
                ok,
                text,
                json!({ "consistent": ok, "models": models }),
            ))
        }
        LogicCmd::Model(input) => {
            let t = Theory::parse(&read(&input.input)?)?;
            let m = model_from_ultrafilter(&t)?;
            let rows: Vec<Vec<&str>> = m.assignment.iter().map(|(x, b)| vec![x.as_str(), bit(*b)]).collect();
            let mut text = table(&["variable", "value"], &rows);
            let checks: Vec<(String, bool)> = t
                .formulas()
                .iter()
                .map(|f| (f.to_string(), t.satisfies(m.valuation, f)))
                .collect();
            let all = checks.iter().all(|(_, b)| *b);
            let rows: Vec<Vec<&str>> = checks.iter().map(|(f, b)| vec![f.as_str(), yes_no(*b)]).collect();
            text.push('\n');
            text.push_str(&table(&["formula", "holds"], &rows));
            text.push_str(&format!("\natom: {}\n", m.atom));
            let json = json!({
                "assignment": m.assignment.iter().map(|(x, b)| json!({ "variable": x, "value": b })).collect::<Vec<Value>>(),
                "atom": m.atom.to_string(),
                "satisfies_all": all,
            });
            Ok(Outcome::verdict(all, text, json))
        }
        LogicCmd::Algebra(input) => {
            let alg = LindenbaumAlgebra::new(Theory::parse(&read(&input.input)?)?)?;
            let atoms: Vec<String> = alg.atoms().iter().map(|&a| alg.representative(a).to_string()).collect();
            let axioms = alg.check_axioms();
            let mut text = format!(
                "variables: {}\nmodels: {}\nelements: {}\n\n",
                alg.theory().vars().join(" "),
                alg.models().len(),
                alg.size()
            );
            let rows: Vec<Vec<&str>> = atoms.iter().map(|a| vec![a.as_str()]).collect();
            text.push_str(&table(&["atom"], &rows));
            let law_rows: Vec<Vec<&str>> = [
                ("commutativity", axioms.commutativity),
                ("associativity", axioms.associativity),
                ("absorption", axioms.absorption),
                ("distributivity", axioms.distributivity),
                ("complementation", axioms.complementation),
                ("bounds", axioms.bounds),
                ("de morgan", axioms.de_morgan),
            ]
            .iter()
            .map(|&(n, b)| vec![n, yes_no(b)])
            .collect();
            text.push('\n');
            text.push_str(&table(&["law", "holds"], &law_rows));
            let json = json!({
                "variables": alg.theory().vars(),
                "models": alg.models().len(),
                "elements": alg.size(),
                "atoms": atoms,
                "axioms": axioms,
            });
            Ok(Outcome::verdict(axioms.all(), text, json))
        }
        LogicCmd::Stone(input) => {
            let alg = LindenbaumAlgebra::new(Theory::parse(&read(&input.input)?)?)?;
            let s = stone_representation(&alg);
            let ultra: Vec<String> = s
                .ultrafilters
                .iter()
                .map(|&a| alg.representative(a).to_string())
                .collect();
            let rows: Vec<Vec<String>> = ultra
                .iter()
                .enumerate()
                .map(|(k, a)| vec![k.to_string(), a.clone()])
                .collect();
            let mut text = table(&["ultrafilter", "atom"], &rows);
            text.push_str(&format!(
                "\nelements: {}\ninjective: {}\npreserves meet: {}\npreserves join: {}\npreserves complement: {}\npreserves bounds: {}\nisomorphism: {}\n",
                alg.size(),
                yes_no(s.injective),
                yes_no(s.preserves_meet),
                yes_no(s.preserves_join),
                yes_no(s.preserves_complement),
                yes_no(s.preserves_bounds),
                yes_no(s.is_isomorphism()),
            ));
            let json = json!({
                "ultrafilters": ultra,
                "elements": alg.size(),
                "injective": s.injective,
                "preserves_meet": s.preserves_meet,
                "preserves_join": s.preserves_join,
                "preserves_complement": s.preserves_complement,
                "preserves_bounds": s.preserves_bounds,
                "isomorphism": s.is_isomorphism(),
            });
            Ok(Outcome::verdict(s.is_isomorphism(), text, json))
        }
    }
}
