use serde::Serialize;

use super::space::FiniteSpace;
use crate::bits::{self, Mask};

/// Which separation axioms a space satisfies. `regular` and `normal` add T1
/// to T3 and T4 respectively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct SeparationProfile {
    pub t0: bool,
    pub t1: bool,
    pub t2: bool,
    pub t3: bool,
    pub t4: bool,
    pub regular: bool,
    pub normal: bool,
}

/// Two sets have disjoint open neighborhoods iff their saturations (the
/// smallest opens containing them) are disjoint.
fn separable(space: &FiniteSpace, a: Mask, b: Mask) -> bool {
    space.saturation(a) & space.saturation(b) == 0
}

/// Quantifies over points and closed sets. The existential over pairs of
/// opens is resolved by the saturation of each side, and the universal over
/// closed sets reduces to point closures: a closed set contains the closure
/// of each of its points, and saturations are monotone.
pub fn separation_profile(space: &FiniteSpace) -> SeparationProfile {
    let n = space.len();
    let nb = space.neighborhoods();
    let pairs = || (0..n).flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)));
    let point_closure: Vec<Mask> = (0..n).map(|x| space.closure(bits::singleton(x))).collect();

    let t0 = pairs().all(|(x, y)| nb[x] != nb[y]);
    let t1 = pairs().all(|(x, y)| !bits::contains(nb[x], y));
    let t2 = pairs().all(|(x, y)| separable(space, bits::singleton(x), bits::singleton(y)));
    // x ∉ F closed: F ⊇ cl{y} for some y ∈ F with x ∉ cl{y}
    let t3 = (0..n).all(|x| {
        (0..n)
            .filter(|&y| !bits::contains(point_closure[y], x))
            .all(|y| separable(space, bits::singleton(x), point_closure[y]))
    });
    // disjoint closed F ∋ x, G ∋ y contain the disjoint cl{x}, cl{y}
    let t4 = (0..n).all(|x| {
        (0..n)
            .filter(|&y| point_closure[x] & point_closure[y] == 0)
            .all(|y| separable(space, point_closure[x], point_closure[y]))
    });
    SeparationProfile {
        t0,
        t1,
        t2,
        t3,
        t4,
        regular: t1 && t3,
        normal: t1 && t4,
    }
}

/// `cl(D)` is the whole carrier.
pub fn is_dense(space: &FiniteSpace, d: Mask) -> bool {
    space.closure(d) == space.full()
}
