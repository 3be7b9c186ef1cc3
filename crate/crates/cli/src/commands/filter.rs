use fintopo::filters::{
    accumulation_points, accumulation_points_by_definition, is_ultrafilter, limits, limits_by_definition, parse_filter,
    trace_filter, PrincipalFilter,
};
use fintopo::fintop::FiniteSpace;
use serde_json::json;

use super::{load_space, subset_arg};
use crate::render::{set_json, yes_no};
use crate::{read, CmdResult, Failure, FilterArgs, FilterCmd, Outcome};

fn load(args: &FilterArgs) -> Result<(FiniteSpace, PrincipalFilter), Failure> {
    let space = load_space(&args.input.input)?;
    let f = match (&args.kernel, &args.filter) {
        (Some(k), _) => PrincipalFilter::new(space.carrier().clone(), subset_arg(space.carrier(), k)?)?,
        (None, Some(path)) => parse_filter(&read(path)?, space.carrier())?,
        (None, None) => return Err(Failure::Usage("give --kernel or --filter".into())),
    };
    Ok((space, f))
}

pub fn run(cmd: FilterCmd) -> CmdResult {
    match cmd {
        FilterCmd::Limits(args) => {
            let (space, f) = load(&args)?;
            let c = space.carrier();
            let lim = limits(&space, &f)?;
            let agree = lim == limits_by_definition(&space, &f);
            let text = format!("kernel: {}\nlimits: {}\n", c.fmt_set(f.kernel()), c.fmt_set(lim));
            Ok(Outcome::verdict(
                agree,
                text,
                json!({ "kernel": set_json(c, f.kernel()), "limits": set_json(c, lim) }),
            ))
        }
        FilterCmd::Acc(args) => {
            let (space, f) = load(&args)?;
            let c = space.carrier();
            let acc = accumulation_points(&space, &f)?;
            let agree = acc == accumulation_points_by_definition(&space, &f);
            let text = format!(
                "kernel: {}\naccumulation points: {}\n",
                c.fmt_set(f.kernel()),
                c.fmt_set(acc)
            );
            Ok(Outcome::verdict(
                agree,
                text,
                json!({ "kernel": set_json(c, f.kernel()), "accumulation_points": set_json(c, acc) }),
            ))
        }
        FilterCmd::Ultra(args) => {
            let (space, f) = load(&args)?;
            let c = space.carrier();
            let u = is_ultrafilter(&f);
            let text = format!("kernel: {}\nultrafilter: {}\n", c.fmt_set(f.kernel()), yes_no(u));
            Ok(Outcome::ok(
                text,
                json!({ "kernel": set_json(c, f.kernel()), "ultrafilter": u }),
            ))
        }
        FilterCmd::Trace { filter, subset } => {
            let (space, f) = load(&filter)?;
            let a = subset_arg(space.carrier(), &subset)?;
            let t = trace_filter(&f, a)?;
            let tc = t.carrier();
            let u = is_ultrafilter(&t);
            let text = format!(
                "carrier: {}\nkernel: {}\nultrafilter: {}\n",
                tc.labels().join(" "),
                tc.fmt_set(t.kernel()),
                yes_no(u)
            );
            let json = json!({ "carrier": tc.labels(), "kernel": set_json(tc, t.kernel()), "ultrafilter": u });
            Ok(Outcome::ok(text, json))
        }
    }
}
