//! Brute-force enumeration of every topology on a small carrier.

use super::space::{Carrier, FiniteSpace};
use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::exec::Exec;

/// Largest carrier accepted by [`all_topologies`]; five points already mean
/// `2^30` candidate families.
pub const MAX_ENUMERATION_POINTS: usize = 4;

/// Closed under pairwise union and intersection.
fn is_lattice_of_sets(family: &[Mask]) -> bool {
    let mut present = [false; 1 << MAX_ENUMERATION_POINTS];
    for &m in family {
        present[m as usize] = true;
    }
    family.iter().all(|&a| {
        family
            .iter()
            .all(|&b| present[(a | b) as usize] && present[(a & b) as usize])
    })
}

/// Every topology on the `n`-point carrier `0..n`, generated by testing each
/// family of proper nonempty subsets for closure. Order is deterministic
/// (by candidate index) for either strategy.
pub fn all_topologies(n: usize, exec: Exec) -> Result<Vec<FiniteSpace>> {
    if n > MAX_ENUMERATION_POINTS {
        return Err(Error::TooLarge(format!(
            "topology enumeration supports at most {MAX_ENUMERATION_POINTS} points"
        )));
    }
    let carrier = Carrier::numbered(n)?;
    let full = bits::full(n);
    let inner: Vec<Mask> = (1..full).collect();
    let candidates = 1usize << inner.len();
    Ok(exec.filter_map_range(0..candidates, |choice| {
        let mut family: Vec<Mask> = vec![0];
        family.extend(
            inner
                .iter()
                .enumerate()
                .filter(|&(k, _)| choice & (1 << k) != 0)
                .map(|(_, &m)| m),
        );
        if full != 0 {
            family.push(full);
        }
        is_lattice_of_sets(&family).then(|| FiniteSpace::from_valid_parts(carrier.clone(), family))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        // OEIS A000798
        let counts: Vec<usize> = (0..=4)
            .map(|n| all_topologies(n, Exec::Sequential).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 29, 355]);
    }

    #[test]
    fn strategies_agree() {
        let seq = all_topologies(3, Exec::Sequential).unwrap();
        let par = all_topologies(3, Exec::Parallel).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn every_result_validates() {
        for s in all_topologies(3, Exec::default()).unwrap() {
            assert!(FiniteSpace::new(s.carrier().clone(), s.opens().iter().copied()).is_ok());
        }
        assert!(all_topologies(5, Exec::default()).is_err());
    }
}
