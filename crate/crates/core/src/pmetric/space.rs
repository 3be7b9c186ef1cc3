use serde::Serialize;

use crate::bits::{self, Mask};
use crate::construct::EquivalenceRelation;
use crate::error::{Error, Result};
use crate::fintop::{generate_topology, Carrier, FiniteSpace, Generator, SetFamily};

/// Slack for the triangle inequality and symmetry, relative to the sizes
/// involved, so that transformed matrices still validate.
const SLACK: f64 = 1e-12;

/// A validated pseudometric on a finite carrier.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PMetricSpace {
    carrier: Carrier,
    dist: Vec<Vec<f64>>,
    is_metric: bool,
}

impl PMetricSpace {
    pub fn new(carrier: Carrier, dist: Vec<Vec<f64>>) -> Result<Self> {
        let n = carrier.len();
        if dist.len() != n || dist.iter().any(|row| row.len() != n) {
            return Err(Error::Pseudometric(format!("matrix is not {n}×{n}")));
        }
        let l = |i: usize| carrier.label(i);
        for (x, row) in dist.iter().enumerate() {
            for (y, &d) in row.iter().enumerate() {
                if !d.is_finite() || d < 0.0 {
                    return Err(Error::Pseudometric(format!(
                        "d({}, {}) = {d} is not a nonnegative real",
                        l(x),
                        l(y)
                    )));
                }
                if x == y && d != 0.0 {
                    return Err(Error::Pseudometric(format!("d({0}, {0}) = {d} ≠ 0", l(x))));
                }
                if (d - dist[y][x]).abs() > SLACK * (1.0 + d) {
                    return Err(Error::Pseudometric(format!(
                        "d({0}, {1}) = {d} but d({1}, {0}) = {2}",
                        l(x),
                        l(y),
                        dist[y][x]
                    )));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let via = dist[x][z] + dist[z][y];
                    if dist[x][y] > via + SLACK * (1.0 + via) {
                        return Err(Error::Pseudometric(format!(
                            "triangle ({}, {}, {}): d({0}, {2}) = {} > d({0}, {1}) + d({1}, {2}) = {}",
                            l(x),
                            l(z),
                            l(y),
                            dist[x][y],
                            via
                        )));
                    }
                }
            }
        }
        let is_metric = (0..n).all(|x| (0..n).all(|y| x == y || dist[x][y] > 0.0));
        Ok(PMetricSpace {
            carrier,
            dist,
            is_metric,
        })
    }

    /// Points labeled `0..n`.
    pub fn from_matrix(dist: Vec<Vec<f64>>) -> Result<Self> {
        Self::new(Carrier::numbered(dist.len())?, dist)
    }

    /// The discrete metric.
    pub fn discrete(carrier: Carrier) -> Self {
        let n = carrier.len();
        let dist = (0..n)
            .map(|x| (0..n).map(|y| if x == y { 0.0 } else { 1.0 }).collect())
            .collect();
        PMetricSpace {
            carrier,
            dist,
            is_metric: true,
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

    pub fn d(&self, x: usize, y: usize) -> f64 {
        self.dist[x][y]
    }

    pub fn matrix(&self) -> &[Vec<f64>] {
        &self.dist
    }

    pub fn is_metric(&self) -> bool {
        self.is_metric
    }

    pub fn diameter(&self) -> f64 {
        self.dist.iter().flatten().copied().fold(0.0, f64::max)
    }

    /// Open ball `{y | d(x, y) < r}`.
    pub fn ball(&self, x: usize, r: f64) -> Mask {
        (0..self.len())
            .filter(|&y| self.dist[x][y] < r)
            .fold(0, |acc, y| acc | bits::singleton(y))
    }

    /// `{y | d(x, y) ≤ t}`: the open ball of any radius just above `t`.
    fn ball_above(&self, x: usize, t: f64) -> Mask {
        (0..self.len())
            .filter(|&y| self.dist[x][y] <= t)
            .fold(0, |acc, y| acc | bits::singleton(y))
    }

    /// Pairwise distances, sorted and deduplicated, zero included.
    pub fn thresholds(&self) -> Vec<f64> {
        let mut t: Vec<f64> = self.dist.iter().flatten().copied().collect();
        t.push(0.0);
        t.sort_by(f64::total_cmp);
        t.dedup();
        t
    }

    fn map_entries(&self, f: impl Fn(f64) -> f64) -> Result<Self> {
        let dist = self
            .dist
            .iter()
            .map(|row| row.iter().map(|&d| f(d)).collect())
            .collect();
        Self::new(self.carrier.clone(), dist)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundedTransforms {
    /// `min(d, 1)`.
    pub truncated: PMetricSpace,
    /// `d / (1 + d)`.
    pub ratio: PMetricSpace,
}

pub fn bounded_transforms(sp: &PMetricSpace) -> Result<BoundedTransforms> {
    Ok(BoundedTransforms {
        truncated: sp.map_entries(|d| d.min(1.0))?,
        ratio: sp.map_entries(|d| d / (1.0 + d))?,
    })
}

/// The topology with the open balls as base. Only the radii just above
/// each pairwise distance give distinct balls.
pub fn topology_from_pmetric(sp: &PMetricSpace) -> FiniteSpace {
    let mut balls: Vec<Mask> = (0..sp.len())
        .flat_map(|x| sp.dist[x].iter().map(move |&t| (x, t)))
        .map(|(x, t)| sp.ball_above(x, t))
        .collect();
    balls.sort_unstable();
    balls.dedup();
    let fam = SetFamily::new(sp.carrier.clone(), balls).expect("balls lie in the carrier");
    generate_topology(&fam, Generator::Subbase).expect("subbase always generates")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricQuotient {
    pub space: PMetricSpace,
    #[serde(skip)]
    pub classes: EquivalenceRelation,
}

/// Identifies points at distance zero.
pub fn metric_quotient(sp: &PMetricSpace) -> Result<MetricQuotient> {
    let n = sp.len();
    let mut blocks: Vec<Mask> = Vec::new();
    let mut seen: Mask = 0;
    for x in 0..n {
        if bits::contains(seen, x) {
            continue;
        }
        let block = sp.ball_above(x, 0.0);
        seen |= block;
        blocks.push(block);
    }
    let classes = EquivalenceRelation::new(sp.carrier.clone(), blocks)?;
    let reps: Vec<Vec<usize>> = classes.blocks().iter().map(|&b| bits::members(b).collect()).collect();
    let k = reps.len();
    let mut dist = vec![vec![0.0; k]; k];
    for i in 0..k {
        for j in 0..k {
            let d = sp.dist[reps[i][0]][reps[j][0]];
            let consistent = reps[i]
                .iter()
                .all(|&x| reps[j].iter().all(|&y| (sp.dist[x][y] - d).abs() <= SLACK * (1.0 + d)));
            if !consistent {
                return Err(Error::Pseudometric(format!(
                    "distance between classes {} and {} depends on representatives",
                    classes.block_label(i),
                    classes.block_label(j)
                )));
            }
            dist[i][j] = d;
        }
    }
    let labels: Vec<String> = (0..k).map(|i| classes.block_label(i)).collect();
    let space = PMetricSpace::new(Carrier::new(labels)?, dist)?;
    debug_assert!(space.is_metric);
    Ok(MetricQuotient { space, classes })
}

fn require_nonempty(a: Mask) -> Result<()> {
    if a == 0 {
        Err(Error::EmptySet)
    } else {
        Ok(())
    }
}

/// `min` of `d(x, a)` over `a ∈ A`.
pub fn dist_to_set(sp: &PMetricSpace, x: usize, a: Mask) -> Result<f64> {
    sp.carrier.check_subset(a)?;
    require_nonempty(a)?;
    Ok(bits::members(a).map(|y| sp.dist[x][y]).fold(f64::INFINITY, f64::min))
}

/// Larger of the two one-sided excesses.
pub fn hausdorff_distance(sp: &PMetricSpace, c: Mask, d: Mask) -> Result<f64> {
    let excess = |from: Mask, to: Mask| -> Result<f64> {
        bits::members(from).try_fold(0.0f64, |m, x| Ok(m.max(dist_to_set(sp, x, to)?)))
    };
    for s in [c, d] {
        sp.carrier.check_subset(s)?;
        require_nonempty(s)?;
    }
    Ok(excess(c, d)?.max(excess(d, c)?))
}

/// The least radius `r` such that each set lies in the `r`-neighborhood of
/// the other, searched over the distance thresholds.
pub fn hausdorff_distance_by_thresholds(sp: &PMetricSpace, c: Mask, d: Mask) -> Result<f64> {
    for s in [c, d] {
        sp.carrier.check_subset(s)?;
        require_nonempty(s)?;
    }
    // neighborhood of radius just above t
    let hull = |s: Mask, t: f64| -> Mask { bits::members(s).fold(0, |acc, y| acc | sp.ball_above(y, t)) };
    Ok(sp
        .thresholds()
        .into_iter()
        .find(|&t| bits::is_subset(c, hull(d, t)) && bits::is_subset(d, hull(c, t)))
        .expect("the largest threshold covers everything"))
}

/// Greedy cover by open `ε`-balls: the first uncovered point in carrier
/// order becomes the next center.
pub fn epsilon_net(sp: &PMetricSpace, eps: f64) -> Result<Vec<usize>> {
    if eps.is_nan() || eps <= 0.0 {
        return Err(Error::InvalidArgument(format!("ε must be positive, got {eps}")));
    }
    let mut covered: Mask = 0;
    let mut centers = Vec::new();
    while let Some(x) = (0..sp.len()).find(|&x| !bits::contains(covered, x)) {
        centers.push(x);
        covered |= sp.ball(x, eps);
    }
    Ok(centers)
}

/// Weighted sum `Σ 2⁻ⁿ · dₙ/(1 + dₙ)` over finitely many factors, on the
/// product carrier with lexicographic point order.
pub fn weighted_product(factors: &[PMetricSpace]) -> Result<PMetricSpace> {
    let size = factors
        .iter()
        .try_fold(1usize, |acc, f| acc.checked_mul(f.len()))
        .filter(|&s| s <= bits::MAX_POINTS)
        .ok_or_else(|| Error::TooLarge("product carrier exceeds the point limit".into()))?;
    let coords = |mut k: usize| -> Vec<usize> {
        let mut c = vec![0; factors.len()];
        for (i, f) in factors.iter().enumerate().rev() {
            c[i] = k % f.len();
            k /= f.len();
        }
        c
    };
    let labels: Vec<String> = (0..size)
        .map(|k| {
            let parts: Vec<&str> = coords(k)
                .iter()
                .zip(factors)
                .map(|(&i, f)| f.carrier.label(i))
                .collect();
            format!("⟨{}⟩", parts.join(","))
        })
        .collect();
    let dist = (0..size)
        .map(|p| {
            let cp = coords(p);
            (0..size)
                .map(|q| {
                    let cq = coords(q);
                    factors
                        .iter()
                        .enumerate()
                        .map(|(n, f)| {
                            let d = f.dist[cp[n]][cq[n]];
                            0.5f64.powi(n as i32 + 1) * d / (1.0 + d)
                        })
                        .sum()
                })
                .collect()
        })
        .collect();
    PMetricSpace::new(Carrier::new(labels)?, dist)
}
