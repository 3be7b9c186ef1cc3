//! Subsets of a finite carrier encoded as bitmasks over point indices.

pub type Mask = u32;

/// Largest supported carrier. All `2^n` subsets must stay enumerable.
pub const MAX_POINTS: usize = 16;

#[inline]
pub fn full(n: usize) -> Mask {
    if n >= 32 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

#[inline]
pub fn singleton(i: usize) -> Mask {
    1 << i
}

#[inline]
pub fn contains(m: Mask, i: usize) -> bool {
    m & (1 << i) != 0
}

#[inline]
pub fn is_subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

#[inline]
pub fn len(m: Mask) -> usize {
    m.count_ones() as usize
}

/// Indices of the members of `m`, ascending.
pub fn members(m: Mask) -> impl Iterator<Item = usize> {
    let mut rest = m;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

/// All subsets of an `n`-point carrier in mask order.
pub fn all_subsets(n: usize) -> std::ops::RangeInclusive<Mask> {
    0..=full(n)
}

/// All subsets of `m`, including `∅` and `m` itself.
pub fn subsets_of(m: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(0 as Mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == m {
            None
        } else {
            Some((cur.wrapping_sub(m)) & m)
        };
        Some(cur)
    })
}

/// All supersets of `m` inside the carrier `universe`.
pub fn supersets_of(m: Mask, universe: Mask) -> impl Iterator<Item = Mask> {
    subsets_of(universe & !m).map(move |extra| extra | m)
}

/// Display order used in reports: by cardinality, then lexicographically by
/// the ascending index list.
pub fn display_cmp(a: Mask, b: Mask) -> std::cmp::Ordering {
    len(a).cmp(&len(b)).then_with(|| members(a).cmp(members(b)))
}

pub fn sort_for_display(sets: &mut [Mask]) {
    sets.sort_by(|a, b| display_cmp(*a, *b));
}

/// Re-indexes `m` into the coordinates of the subcarrier `sub`: the `k`-th
/// member of `sub` becomes bit `k`.
pub fn compress(m: Mask, sub: Mask) -> Mask {
    members(sub)
        .enumerate()
        .filter(|&(_, i)| contains(m, i))
        .fold(0, |acc, (k, _)| acc | singleton(k))
}

/// Inverse of [`compress`].
pub fn expand(m: Mask, sub: Mask) -> Mask {
    members(sub)
        .enumerate()
        .filter(|&(k, _)| contains(m, k))
        .fold(0, |acc, (_, i)| acc | singleton(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_enumeration() {
        let subs: Vec<_> = subsets_of(0b1010).collect();
        assert_eq!(subs, vec![0b0000, 0b0010, 0b1000, 0b1010]);
        assert_eq!(subsets_of(0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(supersets_of(0b01, 0b111).count(), 4);
    }

    #[test]
    fn display_order_is_lexicographic_within_size() {
        // {0,3} before {1,2} although its mask is larger
        assert_eq!(display_cmp(0b1001, 0b0110), std::cmp::Ordering::Less);
        assert_eq!(display_cmp(0b1, 0b11), std::cmp::Ordering::Less);
    }

    #[test]
    fn compress_expand_roundtrip() {
        let sub = 0b1101;
        for m in subsets_of(sub) {
            assert_eq!(expand(compress(m, sub), sub), m);
        }
        assert_eq!(compress(0b1000, sub), 0b100);
    }
}
