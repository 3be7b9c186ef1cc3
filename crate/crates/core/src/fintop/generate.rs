use std::collections::BTreeSet;

use serde::Serialize;

use super::space::{FiniteSpace, SetFamily};
use crate::bits::{self, Mask};
use crate::error::{Error, Result};

/// Outcome of [`validate_base`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum BaseReport {
    Ok,
    /// Point `x` lies in no member.
    Uncovered {
        x: usize,
    },
    /// `x ∈ U ∩ V` but no member `W` has `x ∈ W ⊆ U ∩ V`.
    NoRefinement {
        x: usize,
        u: Mask,
        v: Mask,
    },
}

impl BaseReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, BaseReport::Ok)
    }

    pub(crate) fn into_result(self, fam: &SetFamily) -> Result<()> {
        let c = &fam.carrier;
        match self {
            BaseReport::Ok => Ok(()),
            BaseReport::Uncovered { x } => Err(Error::Uncovered(c.label(x).to_string())),
            BaseReport::NoRefinement { x, u, v } => Err(Error::InvalidBase {
                x: c.label(x).to_string(),
                u: c.fmt_set(u),
                v: c.fmt_set(v),
            }),
        }
    }
}

/// Checks whether `fam` is the base of some topology: the members cover the
/// carrier and every point of `U ∩ V` has a member between it and `U ∩ V`.
pub fn validate_base(fam: &SetFamily) -> BaseReport {
    let cover = fam.members.iter().fold(0, |acc, &m| acc | m);
    if let Some(x) = bits::members(fam.carrier.full() & !cover).next() {
        return BaseReport::Uncovered { x };
    }
    for &u in &fam.members {
        for &v in &fam.members {
            let both = u & v;
            for x in bits::members(both) {
                let refined = fam
                    .members
                    .iter()
                    .any(|&w| bits::contains(w, x) && bits::is_subset(w, both));
                if !refined {
                    return BaseReport::NoRefinement { x, u, v };
                }
            }
        }
    }
    BaseReport::Ok
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Base,
    Subbase,
}

/// All unions of members, the empty union included.
fn unions(members: impl IntoIterator<Item = Mask>) -> Vec<Mask> {
    let mut acc: BTreeSet<Mask> = BTreeSet::from([0]);
    for m in members {
        let grown: Vec<Mask> = acc.iter().map(|&u| u | m).collect();
        acc.extend(grown);
    }
    acc.into_iter().collect()
}

/// All finite intersections of members; the empty intersection is the carrier.
fn intersections(full: Mask, members: impl IntoIterator<Item = Mask>) -> Vec<Mask> {
    let mut acc: BTreeSet<Mask> = BTreeSet::from([full]);
    for m in members {
        let grown: Vec<Mask> = acc.iter().map(|&u| u & m).collect();
        acc.extend(grown);
    }
    acc.into_iter().collect()
}

/// The topology generated by `fam` read as a base or as a subbase.
pub fn generate_topology(fam: &SetFamily, mode: Generator) -> Result<FiniteSpace> {
    let opens = match mode {
        Generator::Base => {
            validate_base(fam).into_result(fam)?;
            unions(fam.members.iter().copied())
        }
        Generator::Subbase => {
            let base = intersections(fam.carrier.full(), fam.members.iter().copied());
            unions(base)
        }
    };
    Ok(FiniteSpace::from_valid_parts(fam.carrier.clone(), opens))
}
