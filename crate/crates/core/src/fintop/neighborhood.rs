use super::space::{is_up_set, Carrier, FiniteSpace};
use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::filters::PrincipalFilter;

/// Assigns each point the kernel of its neighborhood filter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodSystem {
    carrier: Carrier,
    kernels: Vec<Mask>,
}

impl NeighborhoodSystem {
    pub fn new(carrier: Carrier, kernels: Vec<Mask>) -> Result<Self> {
        if kernels.len() != carrier.len() {
            return Err(Error::Format("one kernel per point is required".into()));
        }
        for (x, &k) in kernels.iter().enumerate() {
            carrier.check_subset(k)?;
            if !bits::contains(k, x) {
                return Err(Error::InvalidNeighborhood(carrier.label(x).to_string()));
            }
        }
        Ok(NeighborhoodSystem { carrier, kernels })
    }

    pub fn of_space(space: &FiniteSpace) -> Self {
        NeighborhoodSystem {
            carrier: space.carrier().clone(),
            kernels: space.neighborhoods().to_vec(),
        }
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn kernels(&self) -> &[Mask] {
        &self.kernels
    }
}

/// The neighborhood filter of `x`, stored by its kernel.
pub fn neighborhood_filter(space: &FiniteSpace, x: &str) -> Result<PrincipalFilter> {
    let i = space.carrier().index_of(x)?;
    Ok(PrincipalFilter::from_parts(
        space.carrier().clone(),
        space.neighborhood(i),
    ))
}

/// The open members of the neighborhood filter of point `x`, in report
/// order. They form a base of the filter.
pub fn open_neighborhood_base(space: &FiniteSpace, x: usize) -> Vec<Mask> {
    let mut base: Vec<Mask> = space
        .opens()
        .iter()
        .copied()
        .filter(|&u| bits::contains(u, x))
        .collect();
    bits::sort_for_display(&mut base);
    base
}

#[derive(Debug, Clone)]
pub struct FromNeighborhoods {
    pub space: FiniteSpace,
    /// Whether the resulting space has exactly the prescribed kernels.
    pub coincides: bool,
}

/// Opens are the sets containing the kernel of each of their points.
pub fn topology_from_neighborhoods(sys: &NeighborhoodSystem) -> FromNeighborhoods {
    let opens = bits::all_subsets(sys.carrier.len())
        .filter(|&u| is_up_set(&sys.kernels, u))
        .collect();
    let space = FiniteSpace::from_valid_parts(sys.carrier.clone(), opens);
    let coincides = space.neighborhoods() == sys.kernels.as_slice();
    FromNeighborhoods { space, coincides }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn div6() -> FiniteSpace {
        let c = Carrier::new(["1", "2", "3", "6"]).unwrap();
        FiniteSpace::new(c, [0, 0b1000, 0b1010, 0b1100, 0b1110, 0b1111]).unwrap()
    }

    #[test]
    fn neighborhood_bases_of_divisors() {
        let s = div6();
        assert_eq!(open_neighborhood_base(&s, 2), vec![0b1100, 0b1110, 0b1111]);
        assert_eq!(
            open_neighborhood_base(&s, 3),
            vec![0b1000, 0b1010, 0b1100, 0b1110, 0b1111]
        );
        assert_eq!(neighborhood_filter(&s, "3").unwrap().kernel(), 0b1100);
        assert!(neighborhood_filter(&s, "4").is_err());
    }

    #[test]
    fn extremes() {
        let c = Carrier::new(["a", "b"]).unwrap();
        let d = FiniteSpace::discrete(c.clone());
        assert_eq!(neighborhood_filter(&d, "b").unwrap().kernel(), 0b10);
        let i = FiniteSpace::indiscrete(c);
        assert_eq!(neighborhood_filter(&i, "b").unwrap().kernel(), 0b11);
    }

    #[test]
    fn round_trip_and_mismatch() {
        let s = div6();
        let r = topology_from_neighborhoods(&NeighborhoodSystem::of_space(&s));
        assert!(r.coincides);
        assert_eq!(r.space, s);

        let c = Carrier::new(["a", "b", "c"]).unwrap();
        let sys = NeighborhoodSystem::new(c.clone(), vec![0b011, 0b110, 0b100]).unwrap();
        let r = topology_from_neighborhoods(&sys);
        assert_eq!(r.space.opens(), &[0, 0b100, 0b110, 0b111]);
        assert_eq!(r.space.neighborhood(0), 0b111);
        assert!(!r.coincides);

        let disc = NeighborhoodSystem::new(c.clone(), vec![1, 2, 4]).unwrap();
        let r = topology_from_neighborhoods(&disc);
        assert!(r.space.is_discrete() && r.coincides);

        assert_eq!(
            NeighborhoodSystem::new(c, vec![0b010, 0b010, 0b100]),
            Err(Error::InvalidNeighborhood("a".into()))
        );
    }
}
