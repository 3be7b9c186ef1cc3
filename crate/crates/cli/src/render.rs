//! Plain-text report helpers.

use fintopo::bits::Mask;
use fintopo::fintop::Carrier;
use serde_json::{json, Value};

/// Left-aligned columns separated by two spaces, trailing blanks trimmed.
pub fn table<S: AsRef<str>>(header: &[&str], rows: &[Vec<S>]) -> String {
    let cols = header.len();
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate().take(cols) {
            width[i] = width[i].max(cell.as_ref().chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, c) in cells.iter().enumerate() {
            s.push_str(c);
            if i + 1 < cells.len() {
                let pad = width[i] - c.chars().count() + 2;
                s.extend(std::iter::repeat_n(' ', pad));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(|c| c.as_ref()).collect()));
    }
    out
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Sets joined by `, `, or `none`.
pub fn set_list(carrier: &Carrier, sets: &[Mask]) -> String {
    if sets.is_empty() {
        return "none".into();
    }
    sets.iter().map(|&s| carrier.fmt_set(s)).collect::<Vec<_>>().join(", ")
}

/// A subset as a JSON array of labels.
pub fn set_json(carrier: &Carrier, set: Mask) -> Value {
    json!(carrier.labels_of(set))
}

pub fn sets_json(carrier: &Carrier, sets: &[Mask]) -> Value {
    Value::Array(sets.iter().map(|&s| set_json(carrier, s)).collect())
}

/// Shortest decimal that reads back to the same `f64`.
pub fn num(x: f64) -> String {
    format!("{x}")
}

/// At most nine decimals, trailing zeros dropped. For grid coordinates,
/// where `0.30000000000000004` should read `0.3`.
pub fn short(x: f64) -> String {
    let s = format!("{x:.9}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.to_string()
    }
}

/// Fixed precision for aligned numeric columns.
pub fn fixed(x: f64) -> String {
    format!("{x:.9}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aligned() {
        let t = table(&["a", "long"], &[vec!["xyz", "1"], vec!["", "22"]]);
        assert_eq!(t, "a    long\nxyz  1\n     22\n");
    }

    #[test]
    fn short_numbers() {
        assert_eq!(short(0.1 + 0.2), "0.3");
        assert_eq!(short(1.0), "1");
        assert_eq!(short(-1e-12), "0");
        assert_eq!(short(0.125), "0.125");
    }
}
