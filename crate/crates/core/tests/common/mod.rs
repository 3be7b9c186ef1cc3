//! Shared generators and brute-force oracles for the integration tests.
#![allow(dead_code)]

use fintopo::bits::{self, Mask};
use fintopo::fintop::{generate_topology, Carrier, FiniteSpace, Generator, SetFamily};
use proptest::prelude::*;

/// Topology generated by a random subbase on `1..=max_n` points.
pub fn arb_space(max_n: usize) -> impl Strategy<Value = FiniteSpace> {
    (1..=max_n).prop_flat_map(|n| {
        let full = bits::full(n);
        prop::collection::vec(0..=full, 0..6).prop_map(move |members| {
            let fam = SetFamily::new(Carrier::numbered(n).unwrap(), members).unwrap();
            generate_topology(&fam, Generator::Subbase).unwrap()
        })
    })
}

/// Every subfamily of the opens, as a list of masks.
pub fn subfamilies(opens: &[Mask]) -> impl Iterator<Item = Vec<Mask>> + '_ {
    (0u64..1 << opens.len()).map(move |pick| {
        (0..opens.len())
            .filter(|&i| pick >> i & 1 == 1)
            .map(|i| opens[i])
            .collect()
    })
}

/// Closure as the intersection of all closed supersets.
pub fn closure_oracle(space: &FiniteSpace, a: Mask) -> Mask {
    let full = space.full();
    space
        .opens()
        .iter()
        .map(|&u| full & !u)
        .filter(|&f| bits::is_subset(a, f))
        .fold(full, |acc, f| acc & f)
}

/// Interior as the union of all open subsets.
pub fn interior_oracle(space: &FiniteSpace, a: Mask) -> Mask {
    space
        .opens()
        .iter()
        .filter(|&&u| bits::is_subset(u, a))
        .fold(0, |acc, &u| acc | u)
}

/// Whether disjoint opens `U ⊇ a`, `V ⊇ b` exist, by trying every pair.
pub fn separated(space: &FiniteSpace, a: Mask, b: Mask) -> bool {
    let opens = space.opens();
    opens
        .iter()
        .any(|&u| bits::is_subset(a, u) && opens.iter().any(|&v| bits::is_subset(b, v) && u & v == 0))
}

/// A random subbase together with the topology it generates.
pub fn arb_subbase_space(max_n: usize) -> impl Strategy<Value = (Vec<Mask>, FiniteSpace)> {
    (1..=max_n).prop_flat_map(|n| {
        let full = bits::full(n);
        prop::collection::vec(0..=full, 0..6).prop_map(move |members| {
            let fam = SetFamily::new(Carrier::numbered(n).unwrap(), members.clone()).unwrap();
            (members, generate_topology(&fam, Generator::Subbase).unwrap())
        })
    })
}

/// Two spaces and an arbitrary function between their carriers.
pub fn arb_map(max_n: usize) -> impl Strategy<Value = (FiniteSpace, FiniteSpace, Vec<usize>)> {
    (arb_space(max_n), arb_space(max_n)).prop_flat_map(|(s, t)| {
        let (n, m) = (s.len(), t.len());
        prop::collection::vec(0..m, n).prop_map(move |a| (s.clone(), t.clone(), a))
    })
}

/// A space with a nonempty kernel for a filter on it.
pub fn arb_space_and_kernel(max_n: usize) -> impl Strategy<Value = (FiniteSpace, Mask)> {
    arb_space(max_n).prop_flat_map(|s| {
        let full = s.full();
        (Just(s), 1..=full)
    })
}
