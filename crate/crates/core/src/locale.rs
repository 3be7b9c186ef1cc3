//! The lattice of opens as a locale.
//!
//! Points of the locale are the frame morphisms into the two-element frame;
//! on a finite lattice each one is determined by the least open it sends to
//! ⊤. The sections below cover Heyting implication, points and sobriety,
//! Scott topologies on finite posets and the Hofmann–Mislove
//! correspondence between open filters and saturated compact sets.

use serde::Serialize;

use crate::bits::{self, Mask};
use crate::construct::is_continuous;
use crate::construct::PointMap;
use crate::error::{Error, Result};
use crate::fintop::{separation_profile, FiniteSpace, Preorder};

fn require_open(space: &FiniteSpace, a: Mask) -> Result<()> {
    if space.is_open(a) {
        Ok(())
    } else {
        Err(Error::NotOpen(space.fmt_set(a)))
    }
}

/// The largest open `C` with `C ∩ a ⊆ b`.
pub fn heyting_implication(space: &FiniteSpace, a: Mask, b: Mask) -> Result<Mask> {
    require_open(space, a)?;
    require_open(space, b)?;
    Ok(space
        .opens()
        .iter()
        .filter(|&&c| bits::is_subset(c & a, b))
        .fold(0, |acc, &c| acc | c))
}

/// Pseudo-complement `a → ∅`.
pub fn negation(space: &FiniteSpace, a: Mask) -> Result<Mask> {
    heyting_implication(space, a, 0)
}

// ---------------------------------------------------------------------------
// points

/// A frame morphism from the opens into `{⊥, ⊤}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoPointMorphism {
    /// Least open sent to ⊤.
    pub generator: Mask,
    /// Value on each open, aligned with [`FiniteSpace::opens`].
    pub truth: Vec<bool>,
}

impl TwoPointMorphism {
    fn from_generator(space: &FiniteSpace, generator: Mask) -> Self {
        let truth = space.opens().iter().map(|&u| bits::is_subset(generator, u)).collect();
        TwoPointMorphism { generator, truth }
    }

    pub fn value(&self, space: &FiniteSpace, open: Mask) -> Option<bool> {
        let k = space.opens().binary_search(&open).ok()?;
        Some(self.truth[k])
    }
}

/// Preserves the top, the bottom and pairwise meets and joins. On a finite
/// lattice this covers all finite meets and arbitrary joins.
pub fn is_frame_morphism(space: &FiniteSpace, truth: &[bool]) -> bool {
    let opens = space.opens();
    let at = |m: Mask| truth[opens.binary_search(&m).expect("open")];
    if truth.len() != opens.len() || !at(space.full()) || at(0) {
        return false;
    }
    opens.iter().all(|&a| {
        opens
            .iter()
            .all(|&b| at(a & b) == (at(a) && at(b)) && at(a | b) == (at(a) || at(b)))
    })
}

/// The ⊤-preimage is a completely prime filter: upward closed, closed under
/// meets, and whenever a join of a family lies in it some member does.
fn is_completely_prime_filter(space: &FiniteSpace, truth: &[bool]) -> bool {
    let opens = space.opens();
    let members: Vec<Mask> = opens.iter().zip(truth).filter(|(_, &t)| t).map(|(&u, _)| u).collect();
    let inside = |m: Mask| members.contains(&m);
    let upward = members
        .iter()
        .all(|&g| opens.iter().filter(|&&u| bits::is_subset(g, u)).all(|&u| inside(u)));
    let meets = members.iter().all(|&a| members.iter().all(|&b| inside(a & b)));
    // a join of a family is already the join of its maximal members; on a
    // finite lattice checking pairs and the empty family suffices
    let prime = !inside(0)
        && opens
            .iter()
            .all(|&a| opens.iter().all(|&b| !inside(a | b) || inside(a) || inside(b)));
    upward && meets && prime
}

/// Every point of the locale of opens, ordered by generator mask.
pub fn points_of_locale(space: &FiniteSpace) -> Vec<TwoPointMorphism> {
    let opens = space.opens();
    let join_prime = |g: Mask| {
        g != 0
            && opens.iter().all(|&a| {
                opens
                    .iter()
                    .all(|&b| !bits::is_subset(g, a | b) || bits::is_subset(g, a) || bits::is_subset(g, b))
            })
    };
    opens
        .iter()
        .copied()
        .filter(|&g| join_prime(g))
        .map(|g| TwoPointMorphism::from_generator(space, g))
        .filter(|m| is_frame_morphism(space, &m.truth) && is_completely_prime_filter(space, &m.truth))
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct PhiMap {
    pub points: Vec<TwoPointMorphism>,
    /// `assignment[x]` indexes `points`: the morphism `G ↦ [x ∈ G]`.
    pub assignment: Vec<usize>,
    pub injective: bool,
    pub surjective: bool,
}

/// Sends each point `x` to the morphism `G ↦ [x ∈ G]`.
pub fn phi_map(space: &FiniteSpace) -> PhiMap {
    let points = points_of_locale(space);
    let assignment: Vec<usize> = (0..space.len())
        .map(|x| {
            let truth: Vec<bool> = space.opens().iter().map(|&u| bits::contains(u, x)).collect();
            points
                .iter()
                .position(|p| p.truth == truth)
                .expect("point evaluation is a frame morphism")
        })
        .collect();
    let mut hit = vec![false; points.len()];
    for &k in &assignment {
        hit[k] = true;
    }
    let mut sorted = assignment.clone();
    sorted.sort_unstable();
    sorted.dedup();
    PhiMap {
        injective: sorted.len() == assignment.len(),
        surjective: hit.iter().all(|&h| h),
        points,
        assignment,
    }
}

// ---------------------------------------------------------------------------
// sobriety

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Irreducibles {
    pub sets: Vec<Mask>,
    pub is_sober: bool,
}

/// A nonempty closed `F` is irreducible iff it is not the union of two
/// proper closed subsets. It suffices to try pairs of maximal ones.
fn is_irreducible(closed: &[Mask], f: Mask) -> bool {
    if f == 0 {
        return false;
    }
    let proper: Vec<Mask> = closed
        .iter()
        .copied()
        .filter(|&g| g != f && bits::is_subset(g, f))
        .collect();
    let maximal: Vec<Mask> = proper
        .iter()
        .copied()
        .filter(|&g| !proper.iter().any(|&h| h != g && bits::is_subset(g, h)))
        .collect();
    !maximal.iter().any(|&a| maximal.iter().any(|&b| a | b == f))
}

/// Irreducible closed sets in report order; sober iff T0 and each of them
/// is the closure of a point.
pub fn irreducible_closed_sets(space: &FiniteSpace) -> Irreducibles {
    let closed = space.closed_sets();
    let mut sets: Vec<Mask> = closed.iter().copied().filter(|&f| is_irreducible(&closed, f)).collect();
    bits::sort_for_display(&mut sets);
    let point_closures: Vec<Mask> = (0..space.len()).map(|x| space.closure(bits::singleton(x))).collect();
    let generic = sets.iter().all(|f| point_closures.contains(f));
    Irreducibles {
        is_sober: separation_profile(space).t0 && generic,
        sets,
    }
}

// ---------------------------------------------------------------------------
// Scott topology

/// Nonempty directed subsets of `p` with their suprema.
fn directed_subsets(p: &Preorder) -> Vec<(Mask, Option<usize>)> {
    (1..=p.carrier().full())
        .filter(|&s| p.is_directed(s))
        .map(|s| (s, p.supremum(s)))
        .collect()
}

fn inaccessible(u: Mask, directed: &[(Mask, Option<usize>)]) -> bool {
    directed.iter().all(|&(s, sup)| match sup {
        Some(top) if bits::contains(u, top) => s & u != 0,
        _ => true,
    })
}

/// Up-sets that every directed set with supremum inside must already meet.
pub fn scott_topology(p: &Preorder) -> Result<FiniteSpace> {
    p.require_poset()?;
    let directed = directed_subsets(p);
    let opens: Vec<Mask> = p
        .up_sets()
        .into_iter()
        .filter(|&u| inaccessible(u, &directed))
        .collect();
    FiniteSpace::new(p.carrier().clone(), opens)
}

/// A map between the carriers of two finite posets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderMap {
    pub source: Preorder,
    pub target: Preorder,
    pub assignment: Vec<usize>,
}

impl OrderMap {
    pub fn new(source: Preorder, target: Preorder, assignment: Vec<usize>) -> Result<Self> {
        source.require_poset()?;
        target.require_poset()?;
        crate::construct::map::check_assignment(&assignment, source.len(), target.len())?;
        Ok(OrderMap {
            source,
            target,
            assignment,
        })
    }

    fn image(&self, s: Mask) -> Mask {
        bits::members(s).fold(0, |acc, x| acc | bits::singleton(self.assignment[x]))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScottContinuity {
    pub monotone: bool,
    pub preserves_directed_sups: bool,
    pub topologically_continuous: bool,
}

impl ScottContinuity {
    pub fn holds(&self) -> bool {
        self.preserves_directed_sups
    }

    pub fn routes_agree(&self) -> bool {
        self.monotone == self.preserves_directed_sups && self.preserves_directed_sups == self.topologically_continuous
    }
}

/// Computes Scott continuity three ways: monotonicity, preservation of
/// directed suprema, and continuity between the Scott topologies.
pub fn is_scott_continuous(f: &OrderMap) -> Result<ScottContinuity> {
    let (src, tgt, a) = (&f.source, &f.target, &f.assignment);
    let n = src.len();
    let monotone = (0..n).all(|x| bits::members(src.up_row(x)).all(|y| tgt.le(a[x], a[y])));
    let preserves_directed_sups = directed_subsets(src).into_iter().all(|(s, sup)| {
        let Some(top) = sup else { return true };
        let img = f.image(s);
        tgt.is_directed(img) && tgt.supremum(img) == Some(a[top])
    });
    let map = PointMap::new(scott_topology(src)?, scott_topology(tgt)?, a.clone())?;
    Ok(ScottContinuity {
        monotone,
        preserves_directed_sups,
        topologically_continuous: is_continuous(&map).continuous,
    })
}

// ---------------------------------------------------------------------------
// Hofmann–Mislove

/// The filter `↑G` in the lattice of opens.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OpenFilter {
    pub generator: Mask,
}

/// Lattices up to this many opens get their Scott-openness checked by
/// enumerating every directed family.
pub const SCOTT_CHECK_MAX_OPENS: usize = 10;

impl OpenFilter {
    pub fn contains(&self, open: Mask) -> bool {
        bits::is_subset(self.generator, open)
    }

    pub fn members(&self, space: &FiniteSpace) -> Vec<Mask> {
        space.opens().iter().copied().filter(|&u| self.contains(u)).collect()
    }

    /// Whenever the union of a directed family of opens is a member, some
    /// member of the family already is. `None` when the lattice is too big
    /// to enumerate.
    pub fn is_scott_open(&self, space: &FiniteSpace) -> Option<bool> {
        let opens = space.opens();
        if opens.len() > SCOTT_CHECK_MAX_OPENS {
            return None;
        }
        let k = opens.len();
        let ok = (1u32..1 << k).all(|fam| {
            let chosen: Vec<Mask> = bits::members(fam).map(|i| opens[i]).collect();
            let directed = chosen.iter().all(|&a| {
                chosen
                    .iter()
                    .all(|&b| chosen.iter().any(|&c| bits::is_subset(a | b, c)))
            });
            let join = chosen.iter().fold(0, |acc, &u| acc | u);
            !directed || !self.contains(join) || chosen.iter().any(|&u| self.contains(u))
        });
        Some(ok)
    }
}

/// `{U open | C ⊆ U}` as an open filter.
pub fn compactness_filter(space: &FiniteSpace, c: Mask) -> OpenFilter {
    OpenFilter {
        generator: space.saturation(c),
    }
}

/// Whether an upward-closed, meet-closed family of opens, listed
/// explicitly, is a filter of the lattice.
pub fn is_filter_of_opens(space: &FiniteSpace, family: &[Mask]) -> bool {
    let opens = space.opens();
    let inside = |m: Mask| family.contains(&m);
    !family.is_empty()
        && family.iter().all(|&a| {
            family.iter().all(|&b| inside(a & b))
                && opens.iter().filter(|&&u| bits::is_subset(a, u)).all(|&u| inside(u))
        })
}

#[derive(Debug, Clone, Serialize)]
pub struct HofmannMislove {
    pub filters: Vec<OpenFilter>,
    pub saturated_compacts: Vec<Mask>,
    pub bijection_holds: bool,
    pub is_sober: bool,
    /// Scott-openness of every listed filter, when the lattice was small
    /// enough to check.
    pub scott_open_checked: Option<bool>,
}

/// Proper open filters against nonempty saturated (hence compact) sets,
/// matched by intersection.
pub fn hofmann_mislove_report(space: &FiniteSpace) -> HofmannMislove {
    let mut generators: Vec<Mask> = space.opens().iter().copied().filter(|&g| g != 0).collect();
    bits::sort_for_display(&mut generators);
    let filters: Vec<OpenFilter> = generators
        .into_iter()
        .map(|generator| OpenFilter { generator })
        .collect();

    let mut saturated_compacts: Vec<Mask> = (1..=space.full())
        .filter(|&s| {
            let hull = space
                .opens()
                .iter()
                .filter(|&&u| bits::is_subset(s, u))
                .fold(space.full(), |acc, &u| acc & u);
            hull == s
        })
        .collect();
    bits::sort_for_display(&mut saturated_compacts);

    let images: Vec<Mask> = filters
        .iter()
        .map(|f| f.members(space).into_iter().fold(space.full(), |acc, u| acc & u))
        .collect();
    let mut sorted = images.clone();
    bits::sort_for_display(&mut sorted);
    let injective = {
        let mut d = sorted.clone();
        d.dedup();
        d.len() == images.len()
    };
    let onto = sorted == saturated_compacts;
    let order_reversing = filters.iter().zip(&images).all(|(f1, &k1)| {
        filters.iter().zip(&images).all(|(f2, &k2)| {
            let included = f1.members(space).iter().all(|&u| f2.contains(u));
            included == bits::is_subset(k2, k1)
        })
    });
    let scott_open_checked = filters
        .iter()
        .map(|f| f.is_scott_open(space))
        .collect::<Option<Vec<bool>>>()
        .map(|v| v.into_iter().all(|b| b));

    HofmannMislove {
        bijection_holds: injective && onto && order_reversing,
        is_sober: irreducible_closed_sets(space).is_sober,
        scott_open_checked,
        filters,
        saturated_compacts,
    }
}
