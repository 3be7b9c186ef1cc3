//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero when any of them fails.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use fintopo::approx::{
    kernel_mass, kernel_ratio, sqrt_iteration, FunctionOracle, GridFunction, WeierstrassPolynomial, DEFAULT_PANELS,
};
use fintopo::bits;
use fintopo::construct::{diagonal, product};
use fintopo::filters::{all_filters, limits, PrincipalFilter};
use fintopo::fintop::format::parse_space;
use fintopo::fintop::{
    all_topologies, separation_profile, specialization_order, topology_from_closure, topology_from_poset, Carrier,
    ClosureTable, FiniteSpace,
};
use fintopo::locale::{hofmann_mislove_report, irreducible_closed_sets};
use fintopo::logic::{model_from_ultrafilter, stone_representation, Formula, LindenbaumAlgebra, Theory};
use fintopo::pmetric::{
    dist_to_set, hausdorff_distance, hausdorff_distance_by_thresholds, metric_quotient, pseudometric_from_chain,
    PMetricSpace, Relation, RelationChain,
};
use fintopo::Exec;
use fintopo_cli::{run, EXIT_FAILED, EXIT_OK};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const SEED: u64 = 0x5eed_f1e7;

// tolerances
const PAGERANK_PUBLISHED_TOL: f64 = 0.002;
const PAGERANK_ORACLE_TOL: f64 = 1e-6;
const PAGERANK_MAX_ITER: u64 = 200;
const HAUSDORFF_TOL: f64 = 1e-12;
const LIPSCHITZ_SLACK: f64 = 1e-12;
const SUP_ERROR_TOL: f64 = 1e-8;
/// The iterates settle one ulp either side of the rounded root.
const SQRT_SLACK: f64 = 4.0 * f64::EPSILON;

// sup |Pₙf − f| on 81 points of [0.1, 0.9] for f = |x − ½|, from a
// 50-digit adaptive quadrature computed before the build
const SUP_ERROR_N4: f64 = 0.244592737158203;
const SUP_ERROR_N64: f64 = 0.0698446601631986;

type Verdict = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Verdict);

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("fintopo").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    let mut text = String::from_utf8(out).unwrap();
    text.push_str(&String::from_utf8(err).unwrap());
    (code, text)
}

fn cli_json(args: &[&str]) -> Result<Value, String> {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out) = cli(&full);
    if code != EXIT_OK && code != EXIT_FAILED {
        return Err(format!("exit {code}: {out}"));
    }
    serde_json::from_str(&out).map_err(|e| format!("bad json: {e}"))
}

/// `["1", "2"]` as `{1, 2}`.
fn set_text(v: &Value) -> String {
    let labels: Vec<&str> = v.as_array().unwrap().iter().map(|l| l.as_str().unwrap()).collect();
    format!("{{{}}}", labels.join(", "))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn divisors_of_six() -> Verdict {
    let (code, built) = cli(&["build", "from-poset", "--in", &data("div6.poset")]);
    ensure(code == EXIT_OK, || format!("build from-poset exited {code}"))?;
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("div6.top");
    std::fs::write(&path, built).map_err(|e| e.to_string())?;
    let v = cli_json(&["space", "report", "--in", path.to_str().unwrap()])?;

    let opens: Vec<String> = v["opens"].as_array().unwrap().iter().map(set_text).collect();
    let expected_opens = ["{}", "{6}", "{2, 6}", "{3, 6}", "{2, 3, 6}", "{1, 2, 3, 6}"];
    ensure(opens == expected_opens, || format!("opens {opens:?}"))?;

    // rows {2, 3} and {3, 6} differ from the printed table, which has a
    // stray 5 in one closure and an empty interior for the open {3, 6}
    let table = [
        ("{1}", "{1}", "{}"),
        ("{2}", "{1, 2}", "{}"),
        ("{3}", "{1, 3}", "{}"),
        ("{6}", "{1, 2, 3, 6}", "{6}"),
        ("{1, 2}", "{1, 2}", "{}"),
        ("{1, 3}", "{1, 3}", "{}"),
        ("{1, 6}", "{1, 2, 3, 6}", "{6}"),
        ("{2, 3}", "{1, 2, 3}", "{}"),
        ("{2, 6}", "{1, 2, 3, 6}", "{2, 6}"),
        ("{3, 6}", "{1, 2, 3, 6}", "{3, 6}"),
        ("{1, 2, 3}", "{1, 2, 3}", "{}"),
        ("{1, 2, 6}", "{1, 2, 3, 6}", "{2, 6}"),
        ("{1, 3, 6}", "{1, 2, 3, 6}", "{3, 6}"),
        ("{2, 3, 6}", "{1, 2, 3, 6}", "{2, 3, 6}"),
        ("{1, 2, 3, 6}", "{1, 2, 3, 6}", "{1, 2, 3, 6}"),
    ];
    let rows = v["closure_interior"].as_array().unwrap();
    ensure(rows.len() == 15, || format!("{} rows", rows.len()))?;
    for (row, (set, cl, int)) in rows.iter().zip(table) {
        let got = (
            set_text(&row["set"]),
            set_text(&row["closure"]),
            set_text(&row["interior"]),
        );
        ensure(got == (set.into(), cl.into(), int.into()), || {
            format!("row {got:?}, expected {set} {cl} {int}")
        })?;
    }

    // the printed basis for 2 leaves out {2, 3, 6}, which the basis for 3 lists
    let bases = [
        ("1", vec!["{1, 2, 3, 6}"]),
        ("2", vec!["{2, 6}", "{2, 3, 6}", "{1, 2, 3, 6}"]),
        ("3", vec!["{3, 6}", "{2, 3, 6}", "{1, 2, 3, 6}"]),
        ("6", vec!["{6}", "{2, 6}", "{3, 6}", "{2, 3, 6}", "{1, 2, 3, 6}"]),
    ];
    let got = v["neighborhood_bases"].as_array().unwrap();
    ensure(got.len() == 4, || format!("{} bases", got.len()))?;
    for (entry, (x, basis)) in got.iter().zip(bases) {
        let sets: Vec<String> = entry["basis"].as_array().unwrap().iter().map(set_text).collect();
        ensure(entry["element"] == x && sets == basis, || {
            format!("basis of {x}: {sets:?}")
        })?;
    }
    Ok("6 opens, 15 closure rows, 4 bases".into())
}

fn kelley_base() -> Verdict {
    let (code, _) = cli(&["check", "base", "--in", &data("kelley.fam")]);
    ensure(code == EXIT_FAILED, || format!("exit {code}"))?;
    let v = cli_json(&["check", "base", "--in", &data("kelley.fam")])?;
    ensure(v["valid"] == false && v["x"] == "1", || format!("{v}"))?;
    Ok(format!(
        "rejected, witness x=1, U={}, V={}",
        set_text(&v["u"]),
        set_text(&v["v"])
    ))
}

fn separation_examples() -> Verdict {
    let load = |f: &str| parse_space(&std::fs::read_to_string(data(f)).unwrap()).map_err(|e| e.to_string());
    let p = separation_profile(&load("indiscrete4.top")?);
    ensure(p.t3 && !p.t2 && !p.t1, || format!("indiscrete: {p:?}"))?;
    let q = separation_profile(&load("t4.top")?);
    ensure(q.t4 && !q.t3, || format!("six opens: {q:?}"))?;
    Ok("indiscrete T3, not T2, not T1; six-open space T4, not T3".into())
}

fn pagerank_example() -> Verdict {
    let v = cli_json(&["solve", "pagerank", "--in", &data("web5.csv"), "--tol", "1e-9"])?;
    let p: Vec<f64> = serde_json::from_value(v["distribution"].clone()).map_err(|e| e.to_string())?;
    let iterations = v["iterations"].as_u64().unwrap();
    let published = [0.293, 0.390, 0.220, 0.024, 0.073];
    for (a, b) in p.iter().zip(published) {
        ensure((a - b).abs() <= PAGERANK_PUBLISHED_TOL, || format!("{p:?} vs {published:?}"))?;
    }
    ensure(iterations <= PAGERANK_MAX_ITER, || format!("{iterations} iterations"))?;

    let third = 1.0 / 3.0;
    let m = [
        [0.0, 1.0, 0.0, 0.0, 0.0],
        [0.5, 0.0, 0.5, 0.0, 0.0],
        [third, third, 0.0, 0.0, third],
        [1.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, third, third, third, 0.0],
    ];
    let square = |a: &[[f64; 5]; 5]| {
        let mut s = [[0.0; 5]; 5];
        for i in 0..5 {
            for j in 0..5 {
                s[i][j] = (0..5).map(|k| a[i][k] * a[k][j]).sum();
            }
        }
        s
    };
    let mut power = m;
    for _ in 0..5 {
        power = square(&power);
    }
    let p32_gap = (0..5).map(|j| (power[0][j] - p[j]).abs()).fold(0.0, f64::max);
    // P³² itself is still a few 1e-6 away from the limit, so keep squaring
    // until the rows stop moving
    let mut rounds = 5;
    loop {
        let next = square(&power);
        let moved = (0..5)
            .flat_map(|i| (0..5).map(move |j| (i, j)))
            .map(|(i, j)| (next[i][j] - power[i][j]).abs())
            .fold(0.0, f64::max);
        power = next;
        rounds += 1;
        if moved < 1e-15 || rounds >= 20 {
            break;
        }
    }
    for row in &power {
        for j in 0..5 {
            ensure((row[j] - p[j]).abs() <= PAGERANK_ORACLE_TOL, || {
                format!("P^(2^{rounds}) row {row:?} vs {p:?}")
            })?;
        }
    }
    Ok(format!(
        "{iterations} iterations, P^(2^{rounds}) agrees, P^32 gap {p32_gap:.1e}"
    ))
}

fn structural_suite() -> Verdict {
    let mut spaces: Vec<FiniteSpace> = Vec::new();
    for n in 1..=4 {
        spaces.extend(all_topologies(n, Exec::default()).map_err(|e| e.to_string())?);
    }
    let four = spaces.iter().filter(|s| s.len() == 4).count();
    ensure(four == 355, || format!("{four} topologies on four points"))?;
    let violations: Vec<String> = Exec::default()
        .map(&spaces, structural_violations)
        .into_iter()
        .flatten()
        .collect();
    match violations.first() {
        Some(v) => Err(format!("{} violations, first: {v}", violations.len())),
        None => Ok(format!("{} spaces, zero violations", spaces.len())),
    }
}

fn structural_violations(s: &FiniteSpace) -> Vec<String> {
    let mut out = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            out.push(format!("{what} on {:?}", s.opens()));
        }
    };
    let n = s.len();
    let p = separation_profile(s);
    check(!p.t2 || p.t1, "T2 without T1");
    check(!p.t1 || p.t0, "T1 without T0");
    check(p.t1 == s.is_discrete(), "T1 differs from discrete");
    let sq = product(s, s).unwrap();
    check(p.t2 == sq.space.is_closed(diagonal(n)), "diagonal");
    let unique = all_filters(s.carrier()).all(|f| limits(s, &f).unwrap().count_ones() <= 1);
    check(unique == p.t2, "limit uniqueness");
    let table = ClosureTable::of_space(s, Exec::Sequential);
    check(table.validate().is_ok(), "closure axioms");
    check(topology_from_closure(&table).as_ref() == Ok(s), "Kuratowski round trip");
    let order = specialization_order(s);
    check(&topology_from_poset(&order) == s, "Alexandrov of specialization");
    check(
        specialization_order(&topology_from_poset(&order)) == order,
        "specialization of Alexandrov",
    );
    check(order.is_poset() == p.t0, "specialization antisymmetric iff T0");
    for x in 0..n {
        let u = PrincipalFilter::ultrafilter_at(s.carrier().clone(), x);
        check(bits::contains(limits(s, &u).unwrap(), x), "ultrafilter convergence");
    }
    if irreducible_closed_sets(s).is_sober {
        check(hofmann_mislove_report(s).bijection_holds, "Hofmann-Mislove");
    }
    out
}

/// Shortest paths over random symmetric integer weights, zero allowed.
#[allow(clippy::needless_range_loop)]
fn random_pmetric(rng: &mut ChaCha8Rng, n: usize) -> PMetricSpace {
    let mut d = vec![vec![0.0f64; n]; n];
    for x in 0..n {
        for y in x + 1..n {
            let w = f64::from(rng.gen_range(0u32..5));
            d[x][y] = w;
            d[y][x] = w;
        }
    }
    for z in 0..n {
        for x in 0..n {
            for y in 0..n {
                d[x][y] = d[x][y].min(d[x][z] + d[z][y]);
            }
        }
    }
    PMetricSpace::from_matrix(d).unwrap()
}

/// Each level is the cube of the one below plus random symmetric pairs.
fn random_chain(rng: &mut ChaCha8Rng) -> RelationChain {
    let n = rng.gen_range(1..=6);
    let depth = rng.gen_range(1..=5);
    let mut rels: Vec<Relation> = Vec::new();
    for _ in 0..depth {
        let pairs: Vec<(usize, usize)> = (0..rng.gen_range(0..3))
            .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
            .collect();
        let mut r = Relation::symmetric_from_pairs(n, &pairs);
        if let Some(below) = rels.last() {
            let cube = below.compose(below).compose(below);
            r = Relation::from_rows(r.rows().iter().zip(cube.rows()).map(|(a, c)| a | c).collect());
        }
        rels.push(r);
    }
    rels.reverse();
    RelationChain::new(Carrier::numbered(n).unwrap(), rels).unwrap()
}

fn pseudometric_suite() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut pairs = 0;
    for _ in 0..50 {
        let sp = random_pmetric(&mut rng, 5);
        for c in 1..=sp.carrier().full() {
            for d in 1..=sp.carrier().full() {
                let a = hausdorff_distance(&sp, c, d).unwrap();
                let b = hausdorff_distance_by_thresholds(&sp, c, d).unwrap();
                ensure((a - b).abs() <= HAUSDORFF_TOL, || {
                    format!("Hausdorff {a} vs {b} on {:?}", sp.matrix())
                })?;
                pairs += 1;
            }
        }
        let q = metric_quotient(&sp).map_err(|e| e.to_string())?;
        ensure(q.space.is_metric(), || "quotient is not a metric".into())?;
        for x in 0..5 {
            for y in 0..5 {
                let (i, j) = (q.classes.class_of(x), q.classes.class_of(y));
                ensure(q.space.d(i, j) == sp.d(x, y), || {
                    format!("quotient distance at ({x}, {y})")
                })?;
                for a in 1..=sp.carrier().full() {
                    let gap = (dist_to_set(&sp, x, a).unwrap() - dist_to_set(&sp, y, a).unwrap()).abs();
                    ensure(gap <= sp.d(x, y) + LIPSCHITZ_SLACK, || {
                        format!("Lipschitz at ({x}, {y}, {a:#b})")
                    })?;
                }
            }
        }
    }
    for k in 0..200 {
        let chain = random_chain(&mut rng);
        let pm = pseudometric_from_chain(&chain).map_err(|e| e.to_string())?;
        ensure(pm.sandwich_holds(), || {
            format!("chain {k}: sandwich fails at {:?}", pm.sandwich_violation)
        })?;
    }
    Ok(format!("{pairs} Hausdorff pairs, 50 quotients, 200 chains"))
}

fn approximation_suite() -> Verdict {
    for n in 1..=20u32 {
        let j = kernel_mass(n, DEFAULT_PANELS).map_err(|e| e.to_string())?;
        ensure(j > 1.0 / f64::from(n + 1), || format!("J_{n} = {j}"))?;
    }
    for n in 1..=32u32 {
        for delta in [0.1, 0.3, 0.5, 0.9] {
            let k = kernel_ratio(n, delta, DEFAULT_PANELS).map_err(|e| e.to_string())?;
            ensure(k.ratio < k.bound, || {
                format!("n={n} δ={delta}: {} >= {}", k.ratio, k.bound)
            })?;
        }
    }
    let f = FunctionOracle::AbsHalf;
    let grid = GridFunction::uniform_grid(0.1, 0.9, 81).map_err(|e| e.to_string())?;
    let sup = |n| -> Result<f64, String> {
        let p = WeierstrassPolynomial::new(&f, n, DEFAULT_PANELS).map_err(|e| e.to_string())?;
        Ok(p.eval_grid(&grid, Exec::default())
            .map_err(|e| e.to_string())?
            .sup_error(&f))
    };
    let (e4, e64) = (sup(4)?, sup(64)?);
    ensure((e4 - SUP_ERROR_N4).abs() < SUP_ERROR_TOL, || {
        format!("n=4 sup error {e4}")
    })?;
    ensure((e64 - SUP_ERROR_N64).abs() < SUP_ERROR_TOL, || {
        format!("n=64 sup error {e64}")
    })?;
    ensure(e64 < e4, || "no improvement".into())?;
    let ts = GridFunction::uniform_grid(0.0, 1.0, 101).map_err(|e| e.to_string())?;
    let mut prev = sqrt_iteration(0, &ts).map_err(|e| e.to_string())?;
    for n in 1..=200 {
        let next = sqrt_iteration(n, &ts).map_err(|e| e.to_string())?;
        for ((t, a), b) in prev.iter().zip(next.values()) {
            ensure(a <= *b && *b <= t.sqrt() * (1.0 + SQRT_SLACK), || {
                format!("sqrt step {n} at t={t}")
            })?;
        }
        prev = next;
    }
    Ok(format!("sup error {e4:.6} at n=4, {e64:.6} at n=64"))
}

fn random_formula(rng: &mut ChaCha8Rng, vars: &[String], depth: u32) -> Formula {
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..8) {
            0 => Formula::Top,
            1 => Formula::Bot,
            _ => Formula::Var(vars[rng.gen_range(0..vars.len())].clone()),
        };
    }
    let op = rng.gen_range(0..5);
    let a = Box::new(random_formula(rng, vars, depth - 1));
    if op == 0 {
        return Formula::Not(a);
    }
    let b = Box::new(random_formula(rng, vars, depth - 1));
    match op {
        1 => Formula::And(a, b),
        2 => Formula::Or(a, b),
        3 => Formula::Imp(a, b),
        _ => Formula::Iff(a, b),
    }
}

fn truth(f: &Formula, value: &dyn Fn(&str) -> bool) -> bool {
    match f {
        Formula::Var(v) => value(v),
        Formula::Top => true,
        Formula::Bot => false,
        Formula::Not(a) => !truth(a, value),
        Formula::And(a, b) => truth(a, value) && truth(b, value),
        Formula::Or(a, b) => truth(a, value) || truth(b, value),
        Formula::Imp(a, b) => !truth(a, value) || truth(b, value),
        Formula::Iff(a, b) => truth(a, value) == truth(b, value),
    }
}

fn stone_ok(alg: &LindenbaumAlgebra) -> bool {
    let s = stone_representation(alg);
    s.injective && s.preserves_meet && s.preserves_join && s.preserves_complement
}

fn logic_suite() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let names = |k: usize| -> Vec<String> { ["p", "q", "r"][..k].iter().map(|s| s.to_string()).collect() };
    let mut stone_checked = 0;
    let mut theories = 0;
    while theories < 200 {
        let vars = names(rng.gen_range(1..=3));
        let formulas: Vec<Formula> = (0..rng.gen_range(0..=5))
            .map(|_| random_formula(&mut rng, &vars, 3))
            .collect();
        let t = Theory::new(vars, formulas.clone()).map_err(|e| e.to_string())?;
        let Ok(alg) = LindenbaumAlgebra::new(t.clone()) else {
            continue;
        };
        theories += 1;
        let m = model_from_ultrafilter(&t).map_err(|e| e.to_string())?;
        let value = |x: &str| m.assignment.iter().find(|(v, _)| v == x).map(|&(_, b)| b).unwrap();
        for f in &formulas {
            ensure(truth(f, &value), || format!("model {:?} falsifies {f}", m.assignment))?;
        }
        if alg.size() <= 16 {
            ensure(stone_ok(&alg), || format!("Stone map fails for {formulas:?}"))?;
            stone_checked += 1;
        }
    }
    for (k, size) in [(1, 4), (2, 16)] {
        let alg = LindenbaumAlgebra::new(Theory::new(names(k), vec![]).unwrap()).map_err(|e| e.to_string())?;
        ensure(alg.size() == size, || format!("{k} variables: {} elements", alg.size()))?;
        ensure(stone_ok(&alg), || {
            format!("Stone map fails on the free algebra over {k}")
        })?;
    }
    Ok(format!("200 theories, {stone_checked} Stone maps checked"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("divisors of 6 report", 1, divisors_of_six),
        ("Kelley base rejection", 1, kelley_base),
        ("separation examples", 1, separation_examples),
        ("PageRank", 1, pagerank_example),
        ("exhaustive structural suite", 60, structural_suite),
        ("pseudometric suite", 30, pseudometric_suite),
        ("approximation", 30, approximation_suite),
        ("logic", 10, logic_suite),
    ];
    let mut failed = 0;
    for (i, (name, limit, body)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let verdict = body();
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(limit);
        let verdict = verdict.and_then(|detail| {
            if elapsed < limit {
                Ok(detail)
            } else {
                Err(format!("{detail}; too slow"))
            }
        });
        let (tag, detail) = match &verdict {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!(
            "criterion {}: {tag}  {name} ({:.3}s, limit {}s): {detail}",
            i + 1,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
        failed += verdict.is_err() as u32;
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
