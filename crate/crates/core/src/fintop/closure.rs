use serde::Serialize;

use super::space::{Carrier, FiniteSpace};
use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::exec::Exec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClosureInterior {
    pub closure: Mask,
    pub interior: Mask,
    pub boundary: Mask,
}

pub fn closure_interior(space: &FiniteSpace, a: Mask) -> Result<ClosureInterior> {
    space.carrier().check_subset(a)?;
    let closure = space.closure(a);
    let interior = space.interior(a);
    Ok(ClosureInterior {
        closure,
        interior,
        boundary: closure & !interior,
    })
}

/// A total map on the subsets of a carrier, stored as a `2^n` table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureTable {
    carrier: Carrier,
    table: Vec<Mask>,
}

impl ClosureTable {
    /// Wraps a raw table after checking the four Kuratowski axioms.
    pub fn new(carrier: Carrier, table: Vec<Mask>) -> Result<Self> {
        let t = Self::unchecked(carrier, table)?;
        t.validate()?;
        Ok(t)
    }

    /// Shape checks only: length `2^n`, values inside the carrier.
    pub fn unchecked(carrier: Carrier, table: Vec<Mask>) -> Result<Self> {
        if table.len() != 1 << carrier.len() {
            return Err(Error::Format(format!(
                "closure table has {} entries, expected {}",
                table.len(),
                1usize << carrier.len()
            )));
        }
        for &v in &table {
            carrier.check_subset(v)?;
        }
        Ok(ClosureTable { carrier, table })
    }

    /// Extends the given singleton closures additively (`cl ∅ = ∅`).
    pub fn from_singletons(carrier: Carrier, singles: &[Mask]) -> Result<Self> {
        if singles.len() != carrier.len() {
            return Err(Error::Format("one closure per point is required".into()));
        }
        let table = bits::all_subsets(carrier.len())
            .map(|a| bits::members(a).fold(0, |acc, x| acc | singles[x]))
            .collect();
        Self::new(carrier, table)
    }

    /// Builds a table from any subset operator.
    pub fn from_fn(carrier: Carrier, op: impl Fn(Mask) -> Mask) -> Result<Self> {
        let table = bits::all_subsets(carrier.len()).map(op).collect();
        Self::new(carrier, table)
    }

    /// The topological closure of `space`, tabulated.
    pub fn of_space(space: &FiniteSpace, exec: Exec) -> Self {
        let n = space.len();
        let table = exec.map_range(0..1 << n, |a| space.closure(a as Mask));
        ClosureTable {
            carrier: space.carrier().clone(),
            table,
        }
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn get(&self, a: Mask) -> Mask {
        self.table[a as usize]
    }

    pub fn as_slice(&self) -> &[Mask] {
        &self.table
    }

    fn violation(&self, axiom: &'static str, sets: &[Mask]) -> Error {
        let witness = sets
            .iter()
            .map(|&m| self.carrier.fmt_set(m))
            .collect::<Vec<_>>()
            .join(", ");
        Error::ClosureAxiom { axiom, witness }
    }

    /// Checks `cl ∅ = ∅`, `cl X = X`, extensivity, additivity and
    /// idempotence. Additivity is checked as `cl(A) = cl(A∖{x}) ∪ cl({x})`
    /// for the lowest `x ∈ A`, which by induction is equivalent to the
    /// pairwise law and keeps the check linear in the table size.
    pub fn validate(&self) -> Result<()> {
        let full = self.carrier.full();
        if self.get(0) != 0 {
            return Err(self.violation("cl(∅) = ∅", &[0]));
        }
        if self.get(full) != full {
            return Err(self.violation("cl(X) = X", &[full]));
        }
        for a in bits::all_subsets(self.carrier.len()) {
            if !bits::is_subset(a, self.get(a)) {
                return Err(self.violation("A ⊆ cl(A)", &[a]));
            }
        }
        for a in bits::all_subsets(self.carrier.len()) {
            if a.count_ones() < 2 {
                continue;
            }
            let low = a & a.wrapping_neg();
            let rest = a & !low;
            if self.get(a) != self.get(rest) | self.get(low) {
                return Err(self.violation("cl(A ∪ B) = cl(A) ∪ cl(B)", &[rest, low]));
            }
        }
        for a in bits::all_subsets(self.carrier.len()) {
            let c = self.get(a);
            if self.get(c) != c {
                return Err(self.violation("cl(cl(A)) = cl(A)", &[a]));
            }
        }
        Ok(())
    }
}

/// Opens are the complements of the fixed points of the operator.
pub fn topology_from_closure(table: &ClosureTable) -> Result<FiniteSpace> {
    table.validate()?;
    let full = table.carrier().full();
    let opens = bits::all_subsets(table.carrier().len())
        .filter(|&a| table.get(a) == a)
        .map(|a| full & !a)
        .collect();
    Ok(FiniteSpace::from_valid_parts(table.carrier().clone(), opens))
}
