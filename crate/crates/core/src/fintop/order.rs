use serde::Serialize;

use super::space::{is_up_set, Carrier, FiniteSpace};
use crate::bits::{self, Mask};
use crate::error::{Error, Result};

/// A reflexive, transitive relation on a carrier.
///
/// Row `up[x]` holds every `y` with `x ⊑ y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Preorder {
    carrier: Carrier,
    up: Vec<Mask>,
    is_poset: bool,
}

impl Preorder {
    /// Validates reflexivity and transitivity of the given rows.
    pub fn new(carrier: Carrier, up: Vec<Mask>) -> Result<Self> {
        if up.len() != carrier.len() {
            return Err(Error::Format("one relation row per point is required".into()));
        }
        for (x, &row) in up.iter().enumerate() {
            carrier.check_subset(row)?;
            if !bits::contains(row, x) {
                return Err(Error::NotPreorder(format!("{0} ⊑ {0} fails", carrier.label(x))));
            }
            for y in bits::members(row) {
                if let Some(z) = bits::members(up[y] & !row).next() {
                    return Err(Error::NotPreorder(format!(
                        "{} ⊑ {} ⊑ {} but not {} ⊑ {}",
                        carrier.label(x),
                        carrier.label(y),
                        carrier.label(z),
                        carrier.label(x),
                        carrier.label(z)
                    )));
                }
            }
        }
        let is_poset = antisymmetry_witness(&up).is_none();
        Ok(Preorder { carrier, up, is_poset })
    }

    /// Reflexive-transitive closure of the pairs `(x, y)` meaning `x ⊑ y`.
    pub fn from_pairs(carrier: Carrier, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = carrier.len();
        let mut up: Vec<Mask> = (0..n).map(bits::singleton).collect();
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::Format(format!("pair ({x}, {y}) out of range")));
            }
            up[x] |= bits::singleton(y);
        }
        // Warshall
        for k in 0..n {
            for x in 0..n {
                if bits::contains(up[x], k) {
                    up[x] |= up[k];
                }
            }
        }
        Self::new(carrier, up)
    }

    pub fn discrete(carrier: Carrier) -> Self {
        let up = (0..carrier.len()).map(bits::singleton).collect();
        Preorder {
            carrier,
            up,
            is_poset: true,
        }
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn is_poset(&self) -> bool {
        self.is_poset
    }

    /// Errors unless antisymmetric.
    pub fn require_poset(&self) -> Result<()> {
        match antisymmetry_witness(&self.up) {
            None => Ok(()),
            Some((a, b)) => Err(Error::NotAntisymmetric {
                a: self.carrier.label(a).to_string(),
                b: self.carrier.label(b).to_string(),
            }),
        }
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        bits::contains(self.up[x], y)
    }

    pub fn up_row(&self, x: usize) -> Mask {
        self.up[x]
    }

    pub fn rows(&self) -> &[Mask] {
        &self.up
    }

    pub fn down_row(&self, y: usize) -> Mask {
        (0..self.len())
            .filter(|&x| self.le(x, y))
            .fold(0, |acc, x| acc | bits::singleton(x))
    }

    pub fn up_closure(&self, a: Mask) -> Mask {
        bits::members(a).fold(0, |acc, x| acc | self.up[x])
    }

    pub fn down_closure(&self, a: Mask) -> Mask {
        bits::members(a).fold(0, |acc, y| acc | self.down_row(y))
    }

    pub fn is_up_set(&self, a: Mask) -> bool {
        is_up_set(&self.up, a)
    }

    /// All up-sets, ascending by mask.
    pub fn up_sets(&self) -> Vec<Mask> {
        bits::all_subsets(self.len()).filter(|&a| self.is_up_set(a)).collect()
    }

    /// Upper bounds of `s` within `s` itself; nonempty iff `s` has a maximum.
    pub fn maxima_within(&self, s: Mask) -> Mask {
        bits::members(s)
            .filter(|&m| bits::members(s).all(|x| self.le(x, m)))
            .fold(0, |acc, m| acc | bits::singleton(m))
    }

    /// Least upper bound of `s` in the whole order, if it exists and is unique.
    pub fn supremum(&self, s: Mask) -> Option<usize> {
        let full = self.carrier.full();
        let upper = bits::members(s).fold(full, |acc, x| acc & self.up[x]);
        let least: Vec<usize> = bits::members(upper)
            .filter(|&u| bits::members(upper).all(|v| self.le(u, v)))
            .collect();
        match least.as_slice() {
            [only] => Some(*only),
            _ => None,
        }
    }

    /// `s` nonempty and every pair in `s` has an upper bound in `s`.
    pub fn is_directed(&self, s: Mask) -> bool {
        s != 0 && bits::members(s).all(|x| bits::members(s).all(|y| self.up[x] & self.up[y] & s != 0))
    }
}

fn antisymmetry_witness(up: &[Mask]) -> Option<(usize, usize)> {
    for (x, &row) in up.iter().enumerate() {
        for y in bits::members(row) {
            if y != x && bits::contains(up[y], x) {
                return Some((x.min(y), x.max(y)));
            }
        }
    }
    None
}

/// Alexandrov topology: the opens are the up-sets.
pub fn topology_from_poset(p: &Preorder) -> FiniteSpace {
    FiniteSpace::from_valid_parts(p.carrier().clone(), p.up_sets())
}

/// `x ⊑ y` iff every open containing `x` contains `y`.
pub fn specialization_order(space: &FiniteSpace) -> Preorder {
    let up = space.neighborhoods().to_vec();
    let is_poset = antisymmetry_witness(&up).is_none();
    Preorder {
        carrier: space.carrier().clone(),
        up,
        is_poset,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OrderPair<'a> {
    pub below: &'a str,
    pub above: &'a str,
}

impl Preorder {
    /// Pairs `x ⊑ y` with `x ≠ y`, for reports.
    pub fn strict_pairs(&self) -> Vec<OrderPair<'_>> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in bits::members(self.up[x]) {
                if y != x {
                    out.push(OrderPair {
                        below: self.carrier.label(x),
                        above: self.carrier.label(y),
                    });
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(l: &[&str]) -> Carrier {
        Carrier::new(l.iter().copied()).unwrap()
    }

    #[test]
    fn divisibility_topology() {
        let p = Preorder::from_pairs(labels(&["1", "2", "3", "6"]), &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert!(p.is_poset());
        assert!(p.le(0, 3));
        let s = topology_from_poset(&p);
        assert_eq!(s.opens(), &[0, 0b1000, 0b1010, 0b1100, 0b1110, 0b1111]);
        assert_eq!(specialization_order(&s), p);
    }

    #[test]
    fn antichain_and_chain() {
        let s = topology_from_poset(&Preorder::discrete(labels(&["a", "b", "c"])));
        assert!(s.is_discrete());
        let chain = Preorder::from_pairs(labels(&["a", "b"]), &[(0, 1)]).unwrap();
        assert_eq!(topology_from_poset(&chain).opens(), &[0, 0b10, 0b11]);
    }

    #[test]
    fn specialization_of_extremes() {
        let c = labels(&["a", "b", "c"]);
        let d = specialization_order(&FiniteSpace::discrete(c.clone()));
        assert_eq!(d.rows(), &[1, 2, 4]);
        assert!(d.is_poset());
        let i = specialization_order(&FiniteSpace::indiscrete(c));
        assert_eq!(i.rows(), &[7, 7, 7]);
        assert!(!i.is_poset());
        assert!(matches!(i.require_poset(), Err(Error::NotAntisymmetric { .. })));
    }

    #[test]
    fn validation() {
        let c = labels(&["a", "b", "c"]);
        assert!(matches!(
            Preorder::new(c.clone(), vec![0, 2, 4]),
            Err(Error::NotPreorder(_))
        ));
        // a ⊑ b ⊑ c without a ⊑ c
        assert!(matches!(
            Preorder::new(c.clone(), vec![0b011, 0b110, 0b100]),
            Err(Error::NotPreorder(_))
        ));
        let cyc = Preorder::from_pairs(c, &[(0, 1), (1, 0)]).unwrap();
        assert!(!cyc.is_poset());
    }

    #[test]
    fn sups_and_directedness() {
        let p = Preorder::from_pairs(labels(&["1", "2", "3", "6"]), &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(p.supremum(0b0110), Some(3));
        assert_eq!(p.supremum(0), Some(0));
        assert!(!p.is_directed(0b0110));
        assert!(p.is_directed(0b1110));
        assert_eq!(p.maxima_within(0b1110), 0b1000);
    }
}
