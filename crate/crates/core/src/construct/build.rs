use super::map::{check_assignment, preimage_of};
use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::fintop::{generate_topology, Carrier, FiniteSpace, Generator, SetFamily};
use crate::text;

/// The coarsest topology on `carrier` making every `(assignment, target)`
/// continuous: generated by the preimages of all target opens.
pub fn initial_topology(carrier: &Carrier, family: &[(&[usize], &FiniteSpace)]) -> Result<FiniteSpace> {
    let mut subbase = Vec::new();
    for &(assignment, target) in family {
        check_assignment(assignment, carrier.len(), target.len())?;
        subbase.extend(target.opens().iter().map(|&g| preimage_of(assignment, g)));
    }
    subbase.sort_unstable();
    subbase.dedup();
    generate_topology(&SetFamily::new(carrier.clone(), subbase)?, Generator::Subbase)
}

/// The finest topology on `carrier` making every `(source, assignment)`
/// continuous: `H` is open iff each preimage of `H` is open.
pub fn final_topology(carrier: &Carrier, family: &[(&FiniteSpace, &[usize])]) -> Result<FiniteSpace> {
    for &(source, assignment) in family {
        check_assignment(assignment, source.len(), carrier.len())?;
    }
    let opens = bits::all_subsets(carrier.len())
        .filter(|&h| {
            family
                .iter()
                .all(|&(source, assignment)| source.is_open(preimage_of(assignment, h)))
        })
        .collect();
    Ok(FiniteSpace::from_valid_parts(carrier.clone(), opens))
}

/// Label of the product point `(a, b)`.
pub fn pair_label(a: &str, b: &str) -> String {
    format!("⟨{a},{b}⟩")
}

const RESERVED: [char; 3] = ['⟨', ',', '⟩'];

fn check_unreserved(c: &Carrier) -> Result<()> {
    match c.labels().iter().find(|l| l.contains(RESERVED)) {
        Some(l) => Err(Error::LabelClash(l.clone())),
        None => Ok(()),
    }
}

/// Product of two spaces with the product topology. Point `(i, j)` has
/// index `i * |b| + j`.
#[derive(Debug, Clone)]
pub struct Product {
    pub space: FiniteSpace,
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

pub fn product(a: &FiniteSpace, b: &FiniteSpace) -> Result<Product> {
    check_unreserved(a.carrier())?;
    check_unreserved(b.carrier())?;
    let (n, m) = (a.len(), b.len());
    let labels = (0..n).flat_map(|i| (0..m).map(move |j| pair_label(a.carrier().label(i), b.carrier().label(j))));
    let carrier = Carrier::new(labels)?;
    let first: Vec<usize> = (0..n * m).map(|k| k / m.max(1)).collect();
    let second: Vec<usize> = (0..n * m).map(|k| k % m.max(1)).collect();
    let space = initial_topology(&carrier, &[(&first, a), (&second, b)])?;
    Ok(Product { space, first, second })
}

/// The diagonal `{(x, x)}` of `X × X` as a mask of the product carrier.
pub fn diagonal(n: usize) -> Mask {
    (0..n).fold(0, |acc, i| acc | bits::singleton(i * n + i))
}

/// Subspace topology on `a`, whose points keep their labels and order.
pub fn subspace(space: &FiniteSpace, a: Mask) -> Result<FiniteSpace> {
    space.carrier().check_subset(a)?;
    let carrier = space.carrier().restrict(a);
    let inclusion: Vec<usize> = bits::members(a).collect();
    initial_topology(&carrier, &[(&inclusion, space)])
}

/// Disjoint sum. Labels must not overlap.
pub fn sum(a: &FiniteSpace, b: &FiniteSpace) -> Result<FiniteSpace> {
    if let Some(l) = b.carrier().labels().iter().find(|l| a.carrier().contains_label(l)) {
        return Err(Error::LabelClash(l.clone()));
    }
    let labels = a.carrier().labels().iter().chain(b.carrier().labels());
    let carrier = Carrier::new(labels.cloned())?;
    let left: Vec<usize> = (0..a.len()).collect();
    let right: Vec<usize> = (a.len()..a.len() + b.len()).collect();
    final_topology(&carrier, &[(a, &left), (b, &right)])
}

/// A partition of a carrier into nonempty disjoint blocks, ordered by the
/// smallest member of each block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceRelation {
    carrier: Carrier,
    blocks: Vec<Mask>,
}

impl EquivalenceRelation {
    pub fn new(carrier: Carrier, mut blocks: Vec<Mask>) -> Result<Self> {
        let mut seen = 0;
        for &b in &blocks {
            carrier.check_subset(b)?;
            if b == 0 {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            if b & seen != 0 {
                return Err(Error::InvalidPartition(format!(
                    "{} lies in two blocks",
                    carrier.fmt_set(b & seen)
                )));
            }
            seen |= b;
        }
        if seen != carrier.full() {
            return Err(Error::InvalidPartition(format!(
                "{} is not covered",
                carrier.fmt_set(carrier.full() & !seen)
            )));
        }
        blocks.sort_by_key(|b| b.trailing_zeros());
        Ok(EquivalenceRelation { carrier, blocks })
    }

    /// Unlisted points become singleton blocks.
    pub fn parse(text: &str, carrier: &Carrier) -> Result<Self> {
        let mut blocks = Vec::new();
        for line in text::lines(text) {
            match line.keyword {
                Some("block") => blocks.push(carrier.mask_of(line.tokens())?),
                _ => return Err(line.error("expected `block:`")),
            }
        }
        let covered = blocks.iter().fold(0, |acc, &b| acc | b);
        blocks.extend(bits::members(carrier.full() & !covered).map(bits::singleton));
        Self::new(carrier.clone(), blocks)
    }

    pub fn blocks(&self) -> &[Mask] {
        &self.blocks
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.blocks
            .iter()
            .position(|&b| bits::contains(b, x))
            .expect("partition covers the carrier")
    }

    /// Sorted concatenation of the member labels.
    pub fn block_label(&self, k: usize) -> String {
        let mut labels = self.carrier.labels_of(self.blocks[k]);
        labels.sort_unstable();
        labels.concat()
    }
}

#[derive(Debug, Clone)]
pub struct Quotient {
    pub space: FiniteSpace,
    pub factor_map: Vec<usize>,
}

pub fn quotient(space: &FiniteSpace, eq: &EquivalenceRelation) -> Result<Quotient> {
    if eq.carrier != *space.carrier() {
        return Err(Error::CarrierMismatch("partition and space differ".into()));
    }
    let labels: Vec<String> = (0..eq.blocks.len()).map(|k| eq.block_label(k)).collect();
    let carrier = Carrier::new(labels)?;
    let factor_map: Vec<usize> = (0..space.len()).map(|x| eq.class_of(x)).collect();
    let space = final_topology(&carrier, &[(space, &factor_map)])?;
    Ok(Quotient { space, factor_map })
}
