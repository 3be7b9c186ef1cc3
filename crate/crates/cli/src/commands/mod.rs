mod approx;
mod build;
mod check;
mod filter;
mod locale;
mod logic;
mod map;
mod metric;
mod solve;
mod space;

use std::path::Path;

use fintopo::bits::Mask;
use fintopo::fintop::format::parse_space;
use fintopo::fintop::{Carrier, FiniteSpace};
use fintopo::pmetric::{parse_matrix_csv, PMetricSpace};

use crate::{read, CmdResult, Command, Failure};

pub fn dispatch(cmd: Command) -> CmdResult {
    match cmd {
        Command::Space(c) => space::run(c),
        Command::Check(c) => check::run(c),
        Command::Map(c) => map::run(c),
        Command::Build(c) => build::run(c),
        Command::Locale(c) => locale::run(c),
        Command::Metric(c) => metric::run(c),
        Command::Solve(c) => solve::run(c),
        Command::Approx(c) => approx::run(c),
        Command::Logic(c) => logic::run(c),
        Command::Filter(c) => filter::run(c),
    }
}

type Loaded<T> = std::result::Result<T, Failure>;

fn load_space(path: &Path) -> Loaded<FiniteSpace> {
    Ok(parse_space(&read(path)?)?)
}

fn load_pmetric(path: &Path) -> Loaded<PMetricSpace> {
    Ok(PMetricSpace::from_matrix(parse_matrix_csv(&read(path)?)?)?)
}

/// Labels separated by spaces or commas; braces are ignored so `{2, 6}`
/// works too.
fn subset_arg(carrier: &Carrier, s: &str) -> Loaded<Mask> {
    let cleaned = s.replace(['{', '}', ','], " ");
    Ok(carrier.mask_of(cleaned.split_whitespace())?)
}

fn numbers_arg(what: &str, s: &str) -> Loaded<Vec<f64>> {
    s.replace(',', " ")
        .split_whitespace()
        .map(|t| {
            t.parse::<f64>()
                .map_err(|_| Failure::Usage(format!("{what}: `{t}` is not a number")))
        })
        .collect()
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}
