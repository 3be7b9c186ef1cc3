//! Filters on finite carriers.
//!
//! A filter on a finite set is closed under finite intersections, so the
//! intersection of all its members is itself a member. Every filter is
//! therefore principal and is stored by that kernel: it consists of exactly
//! the supersets of the kernel.

use serde::Serialize;

use crate::bits::{self, Mask};
use crate::construct::PointMap;
use crate::error::{Error, Result};
use crate::fintop::{Carrier, FiniteSpace};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PrincipalFilter {
    carrier: Carrier,
    kernel: Mask,
}

impl PrincipalFilter {
    pub fn new(carrier: Carrier, kernel: Mask) -> Result<Self> {
        carrier.check_subset(kernel)?;
        if kernel == 0 {
            return Err(Error::ImproperFilter);
        }
        Ok(PrincipalFilter { carrier, kernel })
    }

    pub(crate) fn from_parts(carrier: Carrier, kernel: Mask) -> Self {
        debug_assert!(kernel != 0);
        PrincipalFilter { carrier, kernel }
    }

    /// The ultrafilter of all sets containing point `x`.
    pub fn ultrafilter_at(carrier: Carrier, x: usize) -> Self {
        PrincipalFilter::from_parts(carrier, bits::singleton(x))
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn kernel(&self) -> Mask {
        self.kernel
    }

    pub fn contains(&self, a: Mask) -> bool {
        bits::is_subset(self.kernel, a)
    }

    /// Every member, ascending by mask.
    pub fn members(&self) -> impl Iterator<Item = Mask> {
        bits::supersets_of(self.kernel, self.carrier.full())
    }

    fn same_carrier(&self, other: &Carrier) -> Result<()> {
        if &self.carrier == other {
            Ok(())
        } else {
            Err(Error::CarrierMismatch(
                "filter and space live on different carriers".into(),
            ))
        }
    }
}

/// Every filter on `carrier`: one per nonempty kernel.
pub fn all_filters(carrier: &Carrier) -> impl Iterator<Item = PrincipalFilter> + '_ {
    (1..=carrier.full()).map(move |k| PrincipalFilter::from_parts(carrier.clone(), k))
}

/// The filter generated by a filter base.
pub fn filter_from_base(carrier: Carrier, base: &[Mask]) -> Result<PrincipalFilter> {
    if base.is_empty() {
        return Err(Error::InvalidArgument("filter base must be nonempty".into()));
    }
    for &b in base {
        carrier.check_subset(b)?;
    }
    let kernel = base.iter().fold(carrier.full(), |acc, &b| acc & b);
    PrincipalFilter::new(carrier, kernel)
}

/// A singleton kernel.
pub fn is_ultrafilter(f: &PrincipalFilter) -> bool {
    f.kernel.count_ones() == 1
}

/// For every subset, either it or its complement is a member.
pub fn is_ultrafilter_by_definition(f: &PrincipalFilter) -> bool {
    let full = f.carrier.full();
    bits::all_subsets(f.carrier.len()).all(|a| f.contains(a) || f.contains(full & !a))
}

/// `f(F)`: its kernel is the image of the kernel of `F`.
pub fn image_filter(map: &PointMap, f: &PrincipalFilter) -> Result<PrincipalFilter> {
    f.same_carrier(map.source().carrier())?;
    Ok(PrincipalFilter::from_parts(
        map.target().carrier().clone(),
        map.image(f.kernel),
    ))
}

/// `{B | f⁻¹(B) ∈ F}` enumerated over all subsets of the target.
pub fn image_filter_by_definition(map: &PointMap, f: &PrincipalFilter) -> Vec<Mask> {
    bits::all_subsets(map.target().len())
        .filter(|&b| f.contains(map.preimage(b)))
        .collect()
}

/// Points whose neighborhood filter is contained in `F`.
pub fn limits(space: &FiniteSpace, f: &PrincipalFilter) -> Result<Mask> {
    f.same_carrier(space.carrier())?;
    Ok((0..space.len())
        .filter(|&x| bits::is_subset(f.kernel, space.neighborhood(x)))
        .fold(0, |acc, x| acc | bits::singleton(x)))
}

/// Same as [`limits`], checking every open neighborhood of every point.
pub fn limits_by_definition(space: &FiniteSpace, f: &PrincipalFilter) -> Mask {
    (0..space.len())
        .filter(|&x| {
            space
                .opens()
                .iter()
                .filter(|&&u| bits::contains(u, x))
                .all(|&u| f.contains(u))
        })
        .fold(0, |acc, x| acc | bits::singleton(x))
}

/// The closure of the kernel.
pub fn accumulation_points(space: &FiniteSpace, f: &PrincipalFilter) -> Result<Mask> {
    f.same_carrier(space.carrier())?;
    Ok(space.closure(f.kernel))
}

/// `⋂ {cl(F) | F ∈ F}` over every member.
pub fn accumulation_points_by_definition(space: &FiniteSpace, f: &PrincipalFilter) -> Mask {
    f.members().fold(space.full(), |acc, m| acc & space.closure(m))
}

/// The trace `{F ∩ A | F ∈ F}` as a filter on the subcarrier `A`.
pub fn trace_filter(f: &PrincipalFilter, a: Mask) -> Result<PrincipalFilter> {
    f.carrier.check_subset(a)?;
    let kernel = f.kernel & a;
    if kernel == 0 {
        return Err(Error::EmptyTrace(f.carrier.fmt_set(a)));
    }
    Ok(PrincipalFilter::from_parts(
        f.carrier.restrict(a),
        bits::compress(kernel, a),
    ))
}

/// A filter file holds one `kernel: <label>+` line.
pub fn parse_filter(text: &str, carrier: &Carrier) -> Result<PrincipalFilter> {
    let mut kernel = None;
    for l in crate::text::lines(text) {
        match l.keyword {
            Some("kernel") if kernel.is_none() => kernel = Some(carrier.mask_of(l.tokens())?),
            Some("kernel") => return Err(l.error("second `kernel:` line")),
            _ => return Err(l.error("expected `kernel:`")),
        }
    }
    let kernel = kernel.ok_or_else(|| Error::Format("missing `kernel:` line".into()))?;
    PrincipalFilter::new(carrier.clone(), kernel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fintop::FiniteSpace;

    fn div6() -> FiniteSpace {
        let c = Carrier::new(["1", "2", "3", "6"]).unwrap();
        FiniteSpace::new(c, [0, 0b1000, 0b1010, 0b1100, 0b1110, 0b1111]).unwrap()
    }

    fn sierpinski() -> FiniteSpace {
        FiniteSpace::new(Carrier::new(["0", "1"]).unwrap(), [0, 0b10, 0b11]).unwrap()
    }

    #[test]
    fn base_intersection() {
        let c = div6().carrier().clone();
        assert_eq!(filter_from_base(c.clone(), &[0b1010, 0b1100]).unwrap().kernel(), 0b1000);
        assert_eq!(filter_from_base(c.clone(), &[0b1111]).unwrap().kernel(), 0b1111);
        assert_eq!(
            filter_from_base(c.clone(), &[0b0001, 0b0010]),
            Err(Error::ImproperFilter)
        );
        assert!(filter_from_base(c, &[]).is_err());
    }

    #[test]
    fn ultrafilters() {
        let c = div6().carrier().clone();
        let u = PrincipalFilter::new(c.clone(), 0b1000).unwrap();
        assert!(is_ultrafilter(&u) && is_ultrafilter_by_definition(&u));
        let f = PrincipalFilter::new(c, 0b1010).unwrap();
        assert!(!is_ultrafilter(&f) && !is_ultrafilter_by_definition(&f));
        let one = PrincipalFilter::new(Carrier::new(["p"]).unwrap(), 1).unwrap();
        assert!(is_ultrafilter(&one) && is_ultrafilter_by_definition(&one));
    }

    #[test]
    fn images() {
        let s = div6();
        let map = PointMap::new(s.clone(), sierpinski(), vec![0, 0, 0, 1]).unwrap();
        let f = PrincipalFilter::new(s.carrier().clone(), 0b1000).unwrap();
        let img = image_filter(&map, &f).unwrap();
        assert_eq!(img.kernel(), 0b10);
        assert_eq!(image_filter_by_definition(&map, &f), img.members().collect::<Vec<_>>());

        let id = PointMap::identity(s.clone());
        let g = PrincipalFilter::new(s.carrier().clone(), 0b0110).unwrap();
        assert_eq!(image_filter(&id, &g).unwrap(), g);
        let constant = PointMap::new(s.clone(), sierpinski(), vec![1; 4]).unwrap();
        assert_eq!(image_filter(&constant, &g).unwrap().kernel(), 0b10);
        let other = PrincipalFilter::new(sierpinski().carrier().clone(), 1).unwrap();
        assert!(image_filter(&map, &other).is_err());
    }

    #[test]
    fn limits_and_accumulation() {
        let s = div6();
        let at6 = PrincipalFilter::new(s.carrier().clone(), 0b1000).unwrap();
        assert_eq!(limits(&s, &at6).unwrap(), 0b1111);
        assert_eq!(limits_by_definition(&s, &at6), 0b1111);
        let at2 = PrincipalFilter::new(s.carrier().clone(), 0b0010).unwrap();
        assert_eq!(accumulation_points(&s, &at2).unwrap(), 0b0011);
        assert_eq!(accumulation_points_by_definition(&s, &at2), 0b0011);

        let d = FiniteSpace::discrete(Carrier::new(["a", "b", "c"]).unwrap());
        let u = PrincipalFilter::ultrafilter_at(d.carrier().clone(), 1);
        assert_eq!(limits(&d, &u).unwrap(), 0b010);
        let i = FiniteSpace::indiscrete(d.carrier().clone());
        assert_eq!(limits(&i, &u).unwrap(), 0b111);
        assert_eq!(accumulation_points(&i, &u).unwrap(), 0b111);
    }

    #[test]
    fn traces() {
        let c = div6().carrier().clone();
        let f = PrincipalFilter::new(c.clone(), 0b1000).unwrap();
        let t = trace_filter(&f, 0b1010).unwrap();
        assert_eq!(t.carrier().labels(), &["2", "6"]);
        assert_eq!(t.kernel(), 0b10);

        let g = PrincipalFilter::new(c.clone(), 0b1010).unwrap();
        assert!(matches!(trace_filter(&g, 0b0101), Err(Error::EmptyTrace(_))));

        let u = PrincipalFilter::ultrafilter_at(c, 1);
        let t = trace_filter(&u, 0b0011).unwrap();
        assert!(is_ultrafilter(&t));
        assert_eq!(t.carrier().labels_of(t.kernel()), vec!["2"]);
    }

    #[test]
    fn filter_file() {
        let c = div6().carrier().clone();
        assert_eq!(parse_filter("kernel: 2 6\n", &c).unwrap().kernel(), 0b1010);
        assert!(parse_filter("", &c).is_err());
        assert!(matches!(parse_filter("kernel:\n", &c), Err(Error::ImproperFilter)));
        assert!(parse_filter("kernel: 9\n", &c).is_err());
    }
}
