use fintopo::construct::{is_continuous, is_homeomorphism, PointMap};
use serde_json::json;

use super::load_space;
use crate::render::{set_json, yes_no};
use crate::{read, CmdResult, MapArgs, MapCmd, Outcome};

fn load(args: &MapArgs) -> Result<PointMap, crate::Failure> {
    let source = load_space(&args.source)?;
    let target = load_space(&args.target)?;
    Ok(PointMap::parse(&read(&args.map)?, source, target)?)
}

pub fn run(cmd: MapCmd) -> CmdResult {
    match cmd {
        MapCmd::Continuity(args) => {
            let f = load(&args)?;
            let c = is_continuous(&f);
            let tc = f.target().carrier();
            let sc = f.source().carrier();
            let mut text = format!("continuous: {}\n", yes_no(c.continuous));
            let mut json = json!({ "continuous": c.continuous });
            if let Some(v) = c.witness {
                let pre = f.preimage(v);
                text.push_str(&format!(
                    "witness: open {} has preimage {} which is not open\n",
                    tc.fmt_set(v),
                    sc.fmt_set(pre)
                ));
                json["witness"] = json!({ "open": set_json(tc, v), "preimage": set_json(sc, pre) });
            }
            Ok(Outcome::verdict(c.continuous, text, json))
        }
        MapCmd::Homeo(args) => {
            let f = load(&args)?;
            let homeo = is_homeomorphism(&f);
            let bijective = f.is_bijective();
            let forward = is_continuous(&f);
            let backward = f.inverse().map(|g| is_continuous(&g));
            let mut text = format!(
                "homeomorphism: {}\nbijective: {}\ncontinuous: {}\n",
                yes_no(homeo),
                yes_no(bijective),
                yes_no(forward.continuous)
            );
            let mut json = json!({
                "homeomorphism": homeo,
                "bijective": bijective,
                "continuous": forward.continuous,
            });
            if let Some(v) = forward.witness {
                let tc = f.target().carrier();
                text.push_str(&format!("witness: open {} has a non-open preimage\n", tc.fmt_set(v)));
                json["witness"] = set_json(tc, v);
            }
            if let Some(b) = &backward {
                text.push_str(&format!("inverse continuous: {}\n", yes_no(b.continuous)));
                json["inverse_continuous"] = json!(b.continuous);
                if let (Some(u), None) = (b.witness, forward.witness) {
                    let sc = f.source().carrier();
                    text.push_str(&format!("witness: open {} has a non-open image\n", sc.fmt_set(u)));
                    json["witness"] = set_json(sc, u);
                }
            }
            Ok(Outcome::verdict(homeo, text, json))
        }
    }
}
