use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::fintop::Carrier;

/// Points of a carrier with positive integer ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedSets {
    carrier: Carrier,
    ranks: Vec<u32>,
}

impl RankedSets {
    pub fn new(carrier: Carrier, ranks: Vec<u32>) -> Result<Self> {
        if ranks.len() != carrier.len() {
            return Err(Error::InvalidArgument(format!(
                "{} ranks for {} points",
                ranks.len(),
                carrier.len()
            )));
        }
        if let Some(i) = ranks.iter().position(|&r| r == 0) {
            return Err(Error::InvalidArgument(format!(
                "rank of `{}` must be positive",
                carrier.label(i)
            )));
        }
        Ok(RankedSets { carrier, ranks })
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn rank(&self, x: usize) -> u32 {
        self.ranks[x]
    }

    /// Least rank of a point in exactly one of the sets; `None` when equal.
    pub fn first_difference(&self, a: Mask, b: Mask) -> Option<u32> {
        bits::members(a ^ b).map(|x| self.ranks[x]).min()
    }
}

/// `2^-c` where `c` is the least rank of a witness in `A △ B`, and zero
/// for equal sets.
pub fn ultrametric_from_rank(rs: &RankedSets, a: Mask, b: Mask) -> Result<f64> {
    rs.carrier.check_subset(a)?;
    rs.carrier.check_subset(b)?;
    Ok(match rs.first_difference(a, b) {
        None => 0.0,
        Some(c) => 0.5f64.powi(c as i32),
    })
}
