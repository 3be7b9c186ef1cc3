//! Matrix CSV, relation-chain and rank files.

use super::chain::{Relation, RelationChain};
use super::rank::RankedSets;
use crate::error::{Error, Result};
use crate::fintop::Carrier;
use crate::text;

/// One row per line, comma-separated decimals. `#` lines are comments.
pub fn parse_matrix_csv(text: &str) -> Result<Vec<Vec<f64>>> {
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split(',')
            .map(|cell| {
                cell.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::Format(format!("line {}: `{}` is not a number", i + 1, cell.trim())))
            })
            .collect::<Result<Vec<f64>>>()?;
        rows.push(row);
    }
    if let Some(bad) = rows.iter().position(|r| r.len() != rows.len()) {
        return Err(Error::Format(format!(
            "matrix row {} has {} entries, expected {}",
            bad + 1,
            rows[bad].len(),
            rows.len()
        )));
    }
    Ok(rows)
}

pub fn emit_matrix_csv(rows: &[Vec<f64>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
        .map(|l| l + "\n")
        .collect()
}

/// `points:` line, then `relation <k>:` headers for `k = 1, 2, ...`, each
/// followed by `pair: a b` lines. Every relation gets the diagonal and
/// both orientations of its pairs.
pub fn parse_chain(text: &str) -> Result<RelationChain> {
    let mut carrier: Option<Carrier> = None;
    let mut pairs: Vec<Vec<(usize, usize)>> = Vec::new();
    for line in text::lines(text) {
        match line.keyword {
            Some("points") => {
                if carrier.is_some() {
                    return Err(line.error("duplicate `points:`"));
                }
                carrier = Some(Carrier::new(line.tokens())?);
            }
            Some(k) if k.starts_with("relation") => {
                let index: usize = k["relation".len()..]
                    .trim()
                    .parse()
                    .map_err(|_| line.error("expected `relation <k>:`"))?;
                if index != pairs.len() + 1 {
                    return Err(line.error(format!("expected relation {}, found {index}", pairs.len() + 1)));
                }
                pairs.push(Vec::new());
            }
            Some("pair") => {
                let c = carrier
                    .as_ref()
                    .ok_or_else(|| line.error("`points:` must come first"))?;
                let current = pairs
                    .last_mut()
                    .ok_or_else(|| line.error("`pair:` before any `relation <k>:`"))?;
                let &[a, b] = line.tokens().as_slice() else {
                    return Err(line.error("expected `pair: a b`"));
                };
                current.push((c.index_of(a)?, c.index_of(b)?));
            }
            _ => return Err(line.error("expected `points:`, `relation <k>:` or `pair:`")),
        }
    }
    let carrier = carrier.ok_or_else(|| Error::Format("missing `points:` line".into()))?;
    let relations = pairs
        .iter()
        .map(|p| Relation::symmetric_from_pairs(carrier.len(), p))
        .collect();
    RelationChain::new(carrier, relations)
}

/// `rank: <label> <int>` lines; the carrier follows the file order.
pub fn parse_ranks(text: &str) -> Result<RankedSets> {
    let mut labels = Vec::new();
    let mut ranks = Vec::new();
    for line in text::lines(text) {
        match (line.keyword, line.tokens().as_slice()) {
            (Some("rank"), &[label, r]) => {
                let r: u32 = r
                    .parse()
                    .map_err(|_| line.error(format!("`{r}` is not a positive integer")))?;
                labels.push(label.to_string());
                ranks.push(r);
            }
            _ => return Err(line.error("expected `rank: <label> <int>`")),
        }
    }
    RankedSets::new(Carrier::new(labels)?, ranks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trip() {
        let m = parse_matrix_csv("# web\n0, 1\n0.5,0.5\n").unwrap();
        assert_eq!(m, vec![vec![0.0, 1.0], vec![0.5, 0.5]]);
        assert_eq!(parse_matrix_csv(&emit_matrix_csv(&m)).unwrap(), m);
        assert!(parse_matrix_csv("0,1\n1\n").is_err());
        assert!(parse_matrix_csv("0,x\n1,0\n").is_err());
    }

    #[test]
    fn chain_file() {
        let c = parse_chain("points: a b c\nrelation 1:\npair: a b\nrelation 2:\n").unwrap();
        assert_eq!(c.depth(), 2);
        assert!(c.relation(1).contains(1, 0));
        assert_eq!(c.relation(2), Relation::diagonal(3));
        assert!(parse_chain("points: a b\nrelation 2:\n").is_err());
        assert!(parse_chain("relation 1:\npair: a b\n").is_err());
        assert!(parse_chain("points: a b\nrelation 1:\npair: a z\n").is_err());
    }

    #[test]
    fn rank_file() {
        let r = parse_ranks("rank: w1 1\nrank: w2 2\n").unwrap();
        assert_eq!(r.rank(1), 2);
        assert!(parse_ranks("rank: w1 0\n").is_err());
        assert!(parse_ranks("rank: w1\n").is_err());
    }
}
