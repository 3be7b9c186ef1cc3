use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::fintop::{Carrier, FiniteSpace};

/// First pair of points without disjoint open neighborhoods.
pub(crate) fn hausdorff_witness(space: &FiniteSpace) -> Option<(usize, usize)> {
    let n = space.len();
    (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .find(|&(x, y)| space.neighborhood(x) & space.neighborhood(y) != 0)
}

/// Adjoins the point `infinity` to a Hausdorff space. A set is open when
/// its trace on the old carrier is open, or when it contains `infinity` and
/// its complement in the old carrier is compact. Every finite set is
/// compact, so the second clause admits every set containing `infinity`.
pub fn one_point_extension(space: &FiniteSpace, infinity: &str) -> Result<FiniteSpace> {
    if let Some((a, b)) = hausdorff_witness(space) {
        return Err(Error::NotHausdorff {
            a: space.carrier().label(a).to_string(),
            b: space.carrier().label(b).to_string(),
        });
    }
    if space.carrier().contains_label(infinity) {
        return Err(Error::LabelClash(infinity.to_string()));
    }
    let n = space.len();
    let carrier = Carrier::new(
        space
            .carrier()
            .labels()
            .iter()
            .cloned()
            .chain(std::iter::once(infinity.to_string())),
    )?;
    let inf: Mask = bits::singleton(n);
    let old = space.full();
    let opens: Vec<Mask> = bits::all_subsets(n + 1)
        .filter(|&u| space.is_open(u & old) || u & inf != 0)
        .collect();
    FiniteSpace::new(carrier, opens)
}
