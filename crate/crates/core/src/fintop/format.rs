//! Text formats for spaces, posets, set families and closure operators.
//!
//! ```text
//! # divisors of 6
//! points: 1 2 3 6
//! open:
//! open: 6
//! open: 2 6
//! ```

use super::closure::ClosureTable;
use super::order::Preorder;
use super::space::{Carrier, FiniteSpace, SetFamily};
use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::text::{self, Line};

fn parse_points(lines: &[Line<'_>]) -> Result<Carrier> {
    let mut found = lines.iter().filter(|l| l.keyword == Some("points"));
    let first = found
        .next()
        .ok_or_else(|| Error::Format("missing `points:` line".into()))?;
    if let Some(dup) = found.next() {
        return Err(dup.error("second `points:` line"));
    }
    Carrier::new(first.tokens())
}

fn collect(text: &str) -> Vec<Line<'_>> {
    text::lines(text).collect()
}

fn sets_with_keyword(carrier: &Carrier, lines: &[Line<'_>], keyword: &str) -> Result<Vec<Mask>> {
    let mut out = Vec::new();
    for l in lines {
        match l.keyword {
            Some("points") => {}
            Some(k) if k == keyword => out.push(carrier.mask_of(l.tokens())?),
            _ => return Err(l.error(format!("expected `{keyword}:`"))),
        }
    }
    Ok(out)
}

/// `points:` followed by `open:` lines. Duplicate opens are ignored.
pub fn parse_space(text: &str) -> Result<FiniteSpace> {
    let lines = collect(text);
    let carrier = parse_points(&lines)?;
    let opens = sets_with_keyword(&carrier, &lines, "open")?;
    FiniteSpace::new(carrier, opens)
}

/// Canonical space file: opens in report order.
pub fn emit_space(space: &FiniteSpace) -> String {
    let mut out = format!("points: {}\n", space.carrier().labels().join(" "));
    for u in space.opens_for_display() {
        let labels = space.carrier().labels_of(u);
        if labels.is_empty() {
            out.push_str("open:\n");
        } else {
            out.push_str(&format!("open: {}\n", labels.join(" ")));
        }
    }
    out
}

/// `points:` followed by `le: a b` lines; the reflexive-transitive closure
/// is taken.
pub fn parse_poset(text: &str) -> Result<Preorder> {
    let lines = collect(text);
    let carrier = parse_points(&lines)?;
    let mut pairs = Vec::new();
    for l in &lines {
        match l.keyword {
            Some("points") => {}
            Some("le") => match l.tokens().as_slice() {
                [a, b] => pairs.push((carrier.index_of(a)?, carrier.index_of(b)?)),
                _ => return Err(l.error("`le:` takes exactly two labels")),
            },
            _ => return Err(l.error("expected `le:`")),
        }
    }
    Preorder::from_pairs(carrier, &pairs)
}

/// `points:` followed by `member:` lines.
pub fn parse_family(text: &str) -> Result<SetFamily> {
    let lines = collect(text);
    let carrier = parse_points(&lines)?;
    let members = sets_with_keyword(&carrier, &lines, "member")?;
    SetFamily::new(carrier, members)
}

/// `points:` followed by `cl: A -> B` lines. Every singleton must be given;
/// other subsets default to the union of their points' closures and may be
/// overridden explicitly. The result is validated.
pub fn parse_closure(text: &str) -> Result<ClosureTable> {
    let lines = collect(text);
    let carrier = parse_points(&lines)?;
    let n = carrier.len();
    let mut given: Vec<Option<Mask>> = vec![None; 1 << n];
    for l in &lines {
        match l.keyword {
            Some("points") => {}
            Some("cl") => {
                let (a, b) = text::arrow_split(l)?;
                let a = carrier.mask_of(a)?;
                let b = carrier.mask_of(b)?;
                if given[a as usize].replace(b).is_some() {
                    return Err(l.error(format!("closure of {} given twice", carrier.fmt_set(a))));
                }
            }
            _ => return Err(l.error("expected `cl:`")),
        }
    }
    let mut singles = Vec::with_capacity(n);
    for x in 0..n {
        singles.push(
            given[bits::singleton(x) as usize]
                .ok_or_else(|| Error::Format(format!("closure of {{{}}} is missing", carrier.label(x))))?,
        );
    }
    let table = bits::all_subsets(n)
        .map(|a| given[a as usize].unwrap_or_else(|| bits::members(a).fold(0, |acc, x| acc | singles[x])))
        .collect();
    ClosureTable::new(carrier, table)
}

#[cfg(test)]
mod tests {
    use super::*;

    const DIV6: &str =
        "# divisors\npoints: 1 2 3 6\nopen:\nopen: 6\nopen: 2 6\nopen: 3 6\nopen: 2 3 6\nopen: 1 2 3 6\nopen: 6\n";

    #[test]
    fn space_round_trip() {
        let s = parse_space(DIV6).unwrap();
        assert_eq!(s.opens().len(), 6);
        let again = parse_space(&emit_space(&s)).unwrap();
        assert_eq!(again, s);
        assert!(emit_space(&s).starts_with("points: 1 2 3 6\nopen:\nopen: 6\nopen: 2 6\n"));
    }

    #[test]
    fn space_errors() {
        assert!(matches!(parse_space("open: a"), Err(Error::Format(_))));
        assert!(matches!(
            parse_space("points: a a\nopen:\nopen: a"),
            Err(Error::DuplicateLabel(_))
        ));
        assert!(matches!(parse_space("points: a\nopen: b"), Err(Error::UnknownPoint(_))));
        assert!(matches!(
            parse_space("points: a b\nopen:\nopen: a b\nopen: a\nopen: b\nle: a b"),
            Err(Error::Format(_))
        ));
    }

    #[test]
    fn poset_file() {
        let p = parse_poset("points: 1 2 3 6\nle: 1 2\nle: 1 3\nle: 2 6\nle: 3 6\n").unwrap();
        assert!(p.le(0, 3));
        assert!(p.is_poset());
    }

    #[test]
    fn closure_file_defaults_to_additive_extension() {
        let t = parse_closure("points: a b x\ncl: a -> a x\ncl: b -> b x\ncl: x -> x\n").unwrap();
        assert_eq!(t.get(0b011), 0b111);
        let err = parse_closure("points: a b\ncl: a -> a\n").unwrap_err();
        assert!(err.to_string().contains("missing"));
    }
}
