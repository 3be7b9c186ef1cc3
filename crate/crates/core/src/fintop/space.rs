use serde::Serialize;

use crate::bits::{self, Mask, MAX_POINTS};
use crate::error::{Error, Result};

/// Ordered list of distinct point labels. Point `i` owns bit `i` of every
/// subset mask built over this carrier.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Carrier {
    labels: Vec<String>,
}

impl Carrier {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_POINTS {
            return Err(Error::CarrierTooLarge(labels.len()));
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::Format(format!("invalid point label `{l}`")));
            }
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Carrier { labels })
    }

    /// Carrier `0, 1, ..., n-1`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn full(&self) -> Mask {
        bits::full(self.len())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownPoint(label.to_string()))
    }

    pub fn mask_of<I, S>(&self, labels: I) -> Result<Mask>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        labels
            .into_iter()
            .try_fold(0, |m, l| Ok(m | bits::singleton(self.index_of(l.as_ref())?)))
    }

    pub fn check_subset(&self, m: Mask) -> Result<Mask> {
        if bits::is_subset(m, self.full()) {
            Ok(m)
        } else {
            Err(Error::NotSubset(m))
        }
    }

    pub fn labels_of(&self, m: Mask) -> Vec<&str> {
        bits::members(m).map(|i| self.label(i)).collect()
    }

    /// `{a, b, c}` rendering used in reports and error messages.
    pub fn fmt_set(&self, m: Mask) -> String {
        if m == 0 {
            return "∅".to_string();
        }
        format!("{{{}}}", self.labels_of(m).join(", "))
    }

    /// The carrier restricted to the members of `sub`, in the same order.
    pub fn restrict(&self, sub: Mask) -> Carrier {
        Carrier {
            labels: bits::members(sub).map(|i| self.labels[i].clone()).collect(),
        }
    }

    pub fn contains_label(&self, label: &str) -> bool {
        self.labels.iter().any(|l| l == label)
    }
}

/// A family of subsets of a carrier: a base or subbase candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    pub carrier: Carrier,
    pub members: Vec<Mask>,
}

impl SetFamily {
    pub fn new(carrier: Carrier, members: Vec<Mask>) -> Result<Self> {
        for &m in &members {
            carrier.check_subset(m)?;
        }
        Ok(SetFamily { carrier, members })
    }
}

/// A finite topological space.
///
/// Opens are kept sorted by mask value, deduplicated. The minimal open
/// neighborhood of every point is cached since almost every query goes
/// through it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    carrier: Carrier,
    opens: Vec<Mask>,
    nbhd: Vec<Mask>,
}

impl FiniteSpace {
    /// Validates the family and builds the space. Duplicates are dropped.
    pub fn new<I>(carrier: Carrier, opens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Mask>,
    {
        let mut opens: Vec<Mask> = opens.into_iter().collect();
        for &m in &opens {
            carrier.check_subset(m)?;
        }
        opens.sort_unstable();
        opens.dedup();
        let full = carrier.full();
        if opens.first() != Some(&0) {
            return Err(Error::NotTopology("∅ is missing".into()));
        }
        if opens.last() != Some(&full) {
            return Err(Error::NotTopology(format!("{} is missing", carrier.fmt_set(full))));
        }
        let nbhd = minimal_neighborhoods(carrier.len(), &opens);
        let is_open = |m: Mask| opens.binary_search(&m).is_ok();
        for (x, &k) in nbhd.iter().enumerate() {
            if !is_open(k) {
                return Err(Error::NotTopology(format!(
                    "the intersection {} of the opens containing {} is not open",
                    carrier.fmt_set(k),
                    carrier.label(x)
                )));
            }
        }
        // every open is a union of minimal neighborhoods; the family is a
        // topology iff it contains all such unions
        let up_sets = bits::all_subsets(carrier.len()).filter(|&u| is_up_set(&nbhd, u));
        for u in up_sets {
            if !is_open(u) {
                return Err(Error::NotTopology(format!(
                    "the union {} of open sets is not open",
                    carrier.fmt_set(u)
                )));
            }
        }
        Ok(FiniteSpace { carrier, opens, nbhd })
    }

    pub(crate) fn from_valid_parts(carrier: Carrier, mut opens: Vec<Mask>) -> Self {
        opens.sort_unstable();
        opens.dedup();
        let nbhd = minimal_neighborhoods(carrier.len(), &opens);
        debug_assert!(opens.first() == Some(&0) && opens.last() == Some(&carrier.full()));
        FiniteSpace { carrier, opens, nbhd }
    }

    pub fn discrete(carrier: Carrier) -> Self {
        let opens = bits::all_subsets(carrier.len()).collect();
        Self::from_valid_parts(carrier, opens)
    }

    pub fn indiscrete(carrier: Carrier) -> Self {
        let full = carrier.full();
        Self::from_valid_parts(carrier, vec![0, full])
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

    pub fn full(&self) -> Mask {
        self.carrier.full()
    }

    /// Opens in ascending mask order.
    pub fn opens(&self) -> &[Mask] {
        &self.opens
    }

    /// Closed sets, ascending by mask.
    pub fn closed_sets(&self) -> Vec<Mask> {
        let full = self.full();
        let mut closed: Vec<Mask> = self.opens.iter().map(|&u| full & !u).collect();
        closed.sort_unstable();
        closed
    }

    pub fn is_open(&self, m: Mask) -> bool {
        self.opens.binary_search(&m).is_ok()
    }

    pub fn is_closed(&self, m: Mask) -> bool {
        self.is_open(self.full() & !m)
    }

    /// Minimal open neighborhood of point `x`.
    pub fn neighborhood(&self, x: usize) -> Mask {
        self.nbhd[x]
    }

    pub fn neighborhoods(&self) -> &[Mask] {
        &self.nbhd
    }

    /// Smallest open set containing `m`.
    pub fn saturation(&self, m: Mask) -> Mask {
        bits::members(m).fold(0, |acc, x| acc | self.nbhd[x])
    }

    pub fn interior(&self, m: Mask) -> Mask {
        self.opens
            .iter()
            .filter(|&&u| bits::is_subset(u, m))
            .fold(0, |acc, &u| acc | u)
    }

    pub fn closure(&self, m: Mask) -> Mask {
        let full = self.full();
        full & !self.interior(full & !m)
    }

    pub fn fmt_set(&self, m: Mask) -> String {
        self.carrier.fmt_set(m)
    }

    /// Opens listed in report order (by size, then lexicographically).
    pub fn opens_for_display(&self) -> Vec<Mask> {
        let mut v = self.opens.clone();
        bits::sort_for_display(&mut v);
        v
    }

    pub fn is_discrete(&self) -> bool {
        self.nbhd.iter().enumerate().all(|(x, &k)| k == bits::singleton(x))
    }
}

/// `x ↦ ⋂{U ∈ opens : x ∈ U}`. Assumes the full carrier is among `opens`.
pub(crate) fn minimal_neighborhoods(n: usize, opens: &[Mask]) -> Vec<Mask> {
    (0..n)
        .map(|x| {
            opens
                .iter()
                .filter(|&&u| bits::contains(u, x))
                .fold(bits::full(n), |acc, &u| acc & u)
        })
        .collect()
}

/// `u` contains the kernel of each of its points.
pub(crate) fn is_up_set(kernels: &[Mask], u: Mask) -> bool {
    bits::members(u).all(|x| bits::is_subset(kernels[x], u))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn div6() -> FiniteSpace {
        let c = Carrier::new(["1", "2", "3", "6"]).unwrap();
        FiniteSpace::new(c, [0, 0b1000, 0b1010, 0b1100, 0b1110, 0b1111]).unwrap()
    }

    #[test]
    fn rejects_duplicate_labels() {
        assert_eq!(Carrier::new(["a", "b", "a"]), Err(Error::DuplicateLabel("a".into())));
    }

    #[test]
    fn rejects_non_topologies() {
        let c = Carrier::new(["0", "1", "2"]).unwrap();
        // Kelley's family is not closed under intersection
        let err = FiniteSpace::new(c.clone(), [0, 0b011, 0b110, 0b111]).unwrap_err();
        assert!(matches!(err, Error::NotTopology(_)));
        // not closed under union
        let err = FiniteSpace::new(c.clone(), [0, 0b001, 0b010, 0b111]).unwrap_err();
        assert!(err.to_string().contains("union"), "{err}");
        assert!(FiniteSpace::new(c, [0b111]).is_err());
    }

    #[test]
    fn duplicate_opens_are_dropped() {
        let c = Carrier::new(["a", "b"]).unwrap();
        let s = FiniteSpace::new(c, [0, 3, 3, 0]).unwrap();
        assert_eq!(s.opens(), &[0, 3]);
    }

    #[test]
    fn divisors_closure_and_interior() {
        let s = div6();
        assert_eq!(s.closure(0b0010), 0b0011);
        assert_eq!(s.interior(0b0010), 0);
        assert_eq!(s.interior(0b1010), 0b1010);
        assert_eq!(s.neighborhood(2), 0b1100);
        assert_eq!(s.saturation(0b0110), 0b1110);
    }

    #[test]
    fn empty_carrier() {
        let s = FiniteSpace::new(Carrier::numbered(0).unwrap(), [0]).unwrap();
        assert_eq!(s.opens(), &[0]);
        assert!(s.is_discrete());
    }
}
