use serde::Serialize;

use super::space::PMetricSpace;
use crate::bits::{self, Mask};
use crate::construct::EquivalenceRelation;
use crate::error::{Error, Result};
use crate::fintop::Carrier;

/// A binary relation on a carrier, row `x` holding `{y | (x, y) ∈ V}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Relation {
    rows: Vec<Mask>,
}

impl Relation {
    pub fn from_rows(rows: Vec<Mask>) -> Self {
        Relation { rows }
    }

    pub fn diagonal(n: usize) -> Self {
        Relation {
            rows: (0..n).map(bits::singleton).collect(),
        }
    }

    pub fn full(n: usize) -> Self {
        Relation {
            rows: vec![bits::full(n); n],
        }
    }

    /// Diagonal plus both orientations of every pair.
    pub fn symmetric_from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut r = Self::diagonal(n);
        for &(x, y) in pairs {
            r.rows[x] |= bits::singleton(y);
            r.rows[y] |= bits::singleton(x);
        }
        r
    }

    /// `⋃ B × B` over the blocks of a partition.
    pub fn of_partition(p: &EquivalenceRelation, n: usize) -> Self {
        let mut rows = vec![0; n];
        for &b in p.blocks() {
            for x in bits::members(b) {
                rows[x] = b;
            }
        }
        Relation { rows }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Mask] {
        &self.rows
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        bits::contains(self.rows[x], y)
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.rows.iter().zip(&other.rows).all(|(&a, &b)| bits::is_subset(a, b))
    }

    pub fn intersect(&self, other: &Relation) -> Relation {
        Relation {
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a & b).collect(),
        }
    }

    /// `(x, z)` whenever `(x, y) ∈ self` and `(y, z) ∈ other`.
    pub fn compose(&self, other: &Relation) -> Relation {
        Relation {
            rows: self
                .rows
                .iter()
                .map(|&r| bits::members(r).fold(0, |acc, y| acc | other.rows[y]))
                .collect(),
        }
    }

    pub fn contains_diagonal(&self) -> bool {
        self.rows.iter().enumerate().all(|(x, &r)| bits::contains(r, x))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.len()).all(|x| bits::members(self.rows[x]).all(|y| self.contains(y, x)))
    }

    pub fn is_transitive(&self) -> bool {
        self.compose(self).is_subset(self)
    }

    fn first_outside(&self, other: &Relation) -> Option<(usize, usize)> {
        (0..self.len()).find_map(|x| bits::members(self.rows[x] & !other.rows[x]).next().map(|y| (x, y)))
    }
}

/// Longest chain accepted; distances are exact multiples of `2^-(k+1)`.
pub const MAX_CHAIN_LEN: usize = 120;

/// Symmetric relations `V₁ ⊇ V₂ ⊇ … ⊇ V_k` on a carrier, each containing
/// the diagonal and with `Vₙ ∘ Vₙ ∘ Vₙ ⊆ Vₙ₋₁`. `V₀` is the full relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationChain {
    carrier: Carrier,
    relations: Vec<Relation>,
}

impl RelationChain {
    pub fn new(carrier: Carrier, relations: Vec<Relation>) -> Result<Self> {
        let n = carrier.len();
        if relations.len() > MAX_CHAIN_LEN {
            return Err(Error::Chain(format!(
                "{} relations given, at most {MAX_CHAIN_LEN} supported",
                relations.len()
            )));
        }
        let pair = |(x, y): (usize, usize)| format!("({}, {})", carrier.label(x), carrier.label(y));
        for (i, v) in relations.iter().enumerate() {
            let k = i + 1;
            if v.len() != n || v.rows.iter().any(|&r| !bits::is_subset(r, carrier.full())) {
                return Err(Error::Chain(format!("V{k} does not live on the carrier")));
            }
            if let Some(x) = (0..n).find(|&x| !v.contains(x, x)) {
                return Err(Error::Chain(format!("V{k} misses the diagonal pair {}", pair((x, x)))));
            }
            if let Some(p) = (0..n).find_map(|x| bits::members(v.rows[x]).find(|&y| !v.contains(y, x)).map(|y| (x, y)))
            {
                return Err(Error::Chain(format!(
                    "V{k} is not symmetric: it holds {} but not its reverse",
                    pair(p)
                )));
            }
            if k >= 2 {
                let cube = v.compose(v).compose(v);
                if let Some(p) = cube.first_outside(&relations[i - 1]) {
                    return Err(Error::Chain(format!(
                        "V{k}∘V{k}∘V{k} contains {} which is not in V{}",
                        pair(p),
                        k - 1
                    )));
                }
            }
        }
        Ok(RelationChain { carrier, relations })
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    /// Number of given relations `k`.
    pub fn depth(&self) -> usize {
        self.relations.len()
    }

    /// `Vₙ` for `0 ≤ n ≤ k + 1`, continuing the chain past `k` with `V_k`
    /// itself when it is transitive and with the diagonal otherwise. Both
    /// continuations satisfy the chain condition.
    pub fn relation(&self, n: usize) -> Relation {
        let k = self.depth();
        let size = self.carrier.len();
        match n {
            0 => Relation::full(size),
            n if n <= k => self.relations[n - 1].clone(),
            _ => {
                let last = if k == 0 {
                    Relation::full(size)
                } else {
                    self.relations[k - 1].clone()
                };
                if last.is_transitive() {
                    last
                } else {
                    Relation::diagonal(size)
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainPseudometric {
    pub space: PMetricSpace,
    /// Distances as integers in units of `2^-scale`.
    pub units: Vec<Vec<u128>>,
    pub scale: u32,
    /// First `(n, x, y)` breaking `Vₙ ⊆ {d < 2⁻ⁿ} ⊆ Vₙ₋₁`.
    pub sandwich_violation: Option<(usize, usize, usize)>,
}

impl ChainPseudometric {
    pub fn sandwich_holds(&self) -> bool {
        self.sandwich_violation.is_none()
    }
}

/// Pairs first leaving the chain at `Vₘ₊₁` weigh `2^-(m+1)`; pairs in every
/// level weigh zero. The pseudometric is the shortest-path distance.
pub fn pseudometric_from_chain(chain: &RelationChain) -> Result<ChainPseudometric> {
    let n = chain.carrier.len();
    let k = chain.depth();
    let scale = k as u32 + 1;
    let last = chain.relation(k);
    let repeats = last.is_transitive();
    let mut w = vec![vec![0u128; n]; n];
    for (x, row) in w.iter_mut().enumerate() {
        for (y, cell) in row.iter_mut().enumerate() {
            if x == y || (repeats && last.contains(x, y)) {
                continue;
            }
            let m = (0..=k)
                .rev()
                .find(|&m| chain.relation(m).contains(x, y))
                .expect("V0 holds every pair");
            *cell = 1u128 << (scale - m as u32 - 1);
        }
    }
    for z in 0..n {
        for x in 0..n {
            for y in 0..n {
                let via = w[x][z] + w[z][y];
                if via < w[x][y] {
                    w[x][y] = via;
                }
            }
        }
    }
    let unit = 0.5f64.powi(scale as i32);
    let dist = w
        .iter()
        .map(|row| row.iter().map(|&u| u as f64 * unit).collect())
        .collect();
    let space = PMetricSpace::new(chain.carrier.clone(), dist)?;
    let sandwich_violation = sandwich_violation(chain, &w, scale);
    Ok(ChainPseudometric {
        space,
        units: w,
        scale,
        sandwich_violation,
    })
}

fn sandwich_violation(chain: &RelationChain, units: &[Vec<u128>], scale: u32) -> Option<(usize, usize, usize)> {
    let size = chain.carrier.len();
    (1..=chain.depth() + 1).find_map(|n| {
        let below = 1u128 << (scale - n as u32);
        let inner = chain.relation(n);
        let outer = chain.relation(n - 1);
        (0..size).find_map(|x| {
            (0..size)
                .find(|&y| {
                    let small = units[x][y] < below;
                    (inner.contains(x, y) && !small) || (small && !outer.contains(x, y))
                })
                .map(|y| (n, x, y))
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Refinement {
    pub first: usize,
    pub second: usize,
    /// Blocks of the coarsest common refinement.
    pub common: Vec<Mask>,
    /// Its relation lies inside both given ones.
    pub contained: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniformityReport {
    pub relations: Vec<Relation>,
    pub contains_diagonal: bool,
    pub symmetric: bool,
    pub transitive: bool,
    pub refinements: Vec<Refinement>,
}

impl UniformityReport {
    pub fn is_base(&self) -> bool {
        self.contains_diagonal && self.symmetric && self.transitive && self.refinements.iter().all(|r| r.contained)
    }
}

/// The relations `⋃ Pᵢ × Pᵢ` of finite partitions, checked against the
/// axioms of a uniformity base.
pub fn uniformity_from_partitions(carrier: &Carrier, partitions: &[EquivalenceRelation]) -> Result<UniformityReport> {
    let n = carrier.len();
    for p in partitions {
        // a partition of another carrier cannot be checked block by block
        let covered = p.blocks().iter().fold(0, |acc, &b| acc | b);
        if covered != carrier.full() {
            return Err(Error::InvalidPartition("partition does not cover the carrier".into()));
        }
    }
    let relations: Vec<Relation> = partitions.iter().map(|p| Relation::of_partition(p, n)).collect();
    let mut refinements = Vec::new();
    for i in 0..partitions.len() {
        for j in i + 1..partitions.len() {
            let mut common: Vec<Mask> = partitions[i]
                .blocks()
                .iter()
                .flat_map(|&a| partitions[j].blocks().iter().map(move |&b| a & b))
                .filter(|&m| m != 0)
                .collect();
            common.sort_by_key(|b| b.trailing_zeros());
            let meet = EquivalenceRelation::new(carrier.clone(), common.clone())?;
            let contained = Relation::of_partition(&meet, n).is_subset(&relations[i].intersect(&relations[j]));
            refinements.push(Refinement {
                first: i,
                second: j,
                common,
                contained,
            });
        }
    }
    Ok(UniformityReport {
        contains_diagonal: relations.iter().all(Relation::contains_diagonal),
        symmetric: relations.iter().all(Relation::is_symmetric),
        transitive: relations.iter().all(Relation::is_transitive),
        relations,
        refinements,
    })
}
