use serde::Serialize;

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::fintop::FiniteSpace;
use crate::text;

/// A total map between the carriers of two spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointMap {
    source: FiniteSpace,
    target: FiniteSpace,
    assignment: Vec<usize>,
}

pub(crate) fn check_assignment(assignment: &[usize], source_len: usize, target_len: usize) -> Result<()> {
    if assignment.len() != source_len {
        return Err(Error::InvalidMap(format!(
            "{} images given for {} source points",
            assignment.len(),
            source_len
        )));
    }
    if let Some(&bad) = assignment.iter().find(|&&y| y >= target_len) {
        return Err(Error::InvalidMap(format!("image index {bad} out of range")));
    }
    Ok(())
}

pub(crate) fn preimage_of(assignment: &[usize], b: Mask) -> Mask {
    assignment
        .iter()
        .enumerate()
        .filter(|&(_, &y)| bits::contains(b, y))
        .fold(0, |acc, (x, _)| acc | bits::singleton(x))
}

impl PointMap {
    pub fn new(source: FiniteSpace, target: FiniteSpace, assignment: Vec<usize>) -> Result<Self> {
        check_assignment(&assignment, source.len(), target.len())?;
        Ok(PointMap {
            source,
            target,
            assignment,
        })
    }

    pub fn identity(space: FiniteSpace) -> Self {
        let assignment = (0..space.len()).collect();
        PointMap {
            target: space.clone(),
            source: space,
            assignment,
        }
    }

    /// Reads `a -> b` lines, one per source point.
    pub fn parse(text: &str, source: FiniteSpace, target: FiniteSpace) -> Result<Self> {
        let mut assignment: Vec<Option<usize>> = vec![None; source.len()];
        for line in text::lines(text) {
            let (l, r) = text::arrow_split(&line)?;
            let (&[a], &[b]) = (l.as_slice(), r.as_slice()) else {
                return Err(line.error("expected `<source> -> <target>`"));
            };
            let x = source.carrier().index_of(a)?;
            let y = target.carrier().index_of(b)?;
            if assignment[x].replace(y).is_some() {
                return Err(line.error(format!("`{a}` mapped twice")));
            }
        }
        let assignment = assignment
            .iter()
            .enumerate()
            .map(|(x, y)| y.ok_or_else(|| Error::InvalidMap(format!("no image for `{}`", source.carrier().label(x)))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, assignment)
    }

    pub fn source(&self) -> &FiniteSpace {
        &self.source
    }

    pub fn target(&self) -> &FiniteSpace {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn apply(&self, x: usize) -> usize {
        self.assignment[x]
    }

    pub fn image(&self, a: Mask) -> Mask {
        bits::members(a).fold(0, |acc, x| acc | bits::singleton(self.assignment[x]))
    }

    pub fn preimage(&self, b: Mask) -> Mask {
        preimage_of(&self.assignment, b)
    }

    pub fn is_bijective(&self) -> bool {
        self.source.len() == self.target.len() && self.image(self.source.full()) == self.target.full()
    }

    /// The inverse of a bijection.
    pub fn inverse(&self) -> Option<PointMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.target.len()];
        for (x, &y) in self.assignment.iter().enumerate() {
            inv[y] = x;
        }
        Some(PointMap {
            source: self.target.clone(),
            target: self.source.clone(),
            assignment: inv,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Continuity {
    pub continuous: bool,
    /// A target open whose preimage is not open.
    pub witness: Option<Mask>,
}

/// Checks the preimage of every open of the target.
pub fn is_continuous(f: &PointMap) -> Continuity {
    let witness = f
        .target
        .opens_for_display()
        .into_iter()
        .find(|&h| !f.source.is_open(f.preimage(h)));
    Continuity {
        continuous: witness.is_none(),
        witness,
    }
}

/// Continuity tested on a subbase of the target topology only.
pub fn is_continuous_on_subbase(f: &PointMap, subbase: &[Mask]) -> bool {
    subbase.iter().all(|&h| f.source.is_open(f.preimage(h)))
}

/// Bijective, continuous, with continuous inverse.
pub fn is_homeomorphism(f: &PointMap) -> bool {
    match f.inverse() {
        Some(inv) => is_continuous(f).continuous && is_continuous(&inv).continuous,
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fintop::Carrier;

    fn div6() -> FiniteSpace {
        let c = Carrier::new(["1", "2", "3", "6"]).unwrap();
        FiniteSpace::new(c, [0, 0b1000, 0b1010, 0b1100, 0b1110, 0b1111]).unwrap()
    }

    fn sierpinski() -> FiniteSpace {
        FiniteSpace::new(Carrier::new(["0", "1"]).unwrap(), [0, 0b10, 0b11]).unwrap()
    }

    #[test]
    fn continuity_into_sierpinski() {
        let f = PointMap::new(div6(), sierpinski(), vec![0, 0, 0, 1]).unwrap();
        assert_eq!(
            is_continuous(&f),
            Continuity {
                continuous: true,
                witness: None
            }
        );
        let g = PointMap::new(div6(), sierpinski(), vec![1, 0, 0, 0]).unwrap();
        assert_eq!(
            is_continuous(&g),
            Continuity {
                continuous: false,
                witness: Some(0b10)
            }
        );
        let k = PointMap::new(div6(), sierpinski(), vec![1; 4]).unwrap();
        assert!(is_continuous(&k).continuous);
        // minimal neighborhoods form a base, hence a subbase
        let nb = sierpinski().neighborhoods().to_vec();
        assert!(is_continuous_on_subbase(&f, &nb));
        assert!(!is_continuous_on_subbase(&g, &nb));
    }

    #[test]
    fn homeomorphisms() {
        assert!(is_homeomorphism(&PointMap::identity(div6())));
        let c = Carrier::new(["a", "b"]).unwrap();
        let disc_to_indisc =
            PointMap::new(FiniteSpace::discrete(c.clone()), FiniteSpace::indiscrete(c), vec![0, 1]).unwrap();
        assert!(disc_to_indisc.is_bijective());
        assert!(is_continuous(&disc_to_indisc).continuous);
        assert!(!is_homeomorphism(&disc_to_indisc));

        // the same space with points relabeled and listed in another order
        let c2 = Carrier::new(["f", "c", "b", "o"]).unwrap();
        // f=6, c=3, b=2, o=1
        let copy = FiniteSpace::new(c2, [0, 0b0001, 0b0101, 0b0011, 0b0111, 0b1111]).unwrap();
        let relabel = PointMap::new(div6(), copy, vec![3, 2, 1, 0]).unwrap();
        assert!(is_homeomorphism(&relabel));
    }

    #[test]
    fn parse_map_file() {
        let f = PointMap::parse("1 -> 0\n2 -> 0\n3 -> 0\n6 -> 1\n", div6(), sierpinski()).unwrap();
        assert_eq!(f.assignment(), &[0, 0, 0, 1]);
        assert!(PointMap::parse("1 -> 0\n", div6(), sierpinski()).is_err());
        assert!(PointMap::parse("1 -> 0\n1 -> 1\n", div6(), sierpinski()).is_err());
        assert!(PointMap::parse("1 -> 7\n", div6(), sierpinski()).is_err());
    }
}
