//! Embeddability of finite abelian groups.
//!
//! [`embeds_in`] uses the per-prime criterion: `A` is isomorphic to a
//! subgroup of `B` iff, for every prime `p`, the conjugate of `A`'s
//! `p`-exponent partition is pointwise at most that of `B`.
//! [`embeds_in_by_search`] looks for an injective homomorphism directly on
//! element tables and serves as its oracle.

use std::collections::{BTreeMap, HashSet};

use super::table::ElementTable;
use super::FinAbGroup;
use crate::{Error, Result};

pub const SEARCH_ORDER_BOUND: u64 = 64;

/// prime -> exponents of that prime across the invariant factors.
fn exponent_partitions(g: &FinAbGroup) -> BTreeMap<u64, Vec<u32>> {
    let mut out: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &d in g.factors() {
        let mut n = d;
        let mut p = 2;
        while n > 1 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            if e > 0 {
                out.entry(p).or_default().push(e);
            }
            p += 1;
        }
    }
    out
}

fn conjugate(parts: &[u32]) -> Vec<usize> {
    let largest = parts.iter().copied().max().unwrap_or(0);
    (1..=largest)
        .map(|k| parts.iter().filter(|&&e| e >= k).count())
        .collect()
}

pub fn embeds_in(a: &FinAbGroup, b: &FinAbGroup) -> bool {
    let pa = exponent_partitions(a);
    let pb = exponent_partitions(b);
    pa.iter().all(|(p, parts)| {
        let ca = conjugate(parts);
        let cb = pb.get(p).map(|e| conjugate(e)).unwrap_or_default();
        ca.iter()
            .enumerate()
            .all(|(k, &n)| cb.get(k).copied().unwrap_or(0) >= n)
    })
}

/// Depth-first search for images `y_1, …, y_r` of the generators of `A`
/// making `e_j |-> y_j` injective. The map on the first `t` generators is
/// injective iff the subgroup `H_t` they generate has order
/// `a_1 ⋯ a_t`, and whether the search can be completed depends only on
/// `(t, H_t)`, so failed states are memoized by that pair.
pub fn embeds_in_by_search(a: &FinAbGroup, b: &FinAbGroup) -> Result<bool> {
    for g in [a, b] {
        if g.order() > SEARCH_ORDER_BOUND {
            return Err(Error::BoundExceeded {
                what: "embedding search order",
                size: g.order() as usize,
                bound: SEARCH_ORDER_BOUND as usize,
            });
        }
    }
    let table = ElementTable::new(b)?;
    let mut gens: Vec<u64> = a.factors().to_vec();
    gens.reverse();
    let mut failed = HashSet::new();
    Ok(extend(&table, &gens, 0, 1u64 << table.zero(), &mut failed))
}

fn extend(
    table: &ElementTable,
    gens: &[u64],
    depth: usize,
    subgroup: u64,
    failed: &mut HashSet<(usize, u64)>,
) -> bool {
    if depth == gens.len() {
        return true;
    }
    if failed.contains(&(depth, subgroup)) {
        return false;
    }
    let order = gens[depth];
    let size = subgroup.count_ones() as u64;
    for y in 0..table.len() {
        if table.times(order, y) != table.zero() {
            continue;
        }
        // <H, y> is the union of the translates H + k·y.
        let mut grown = 0u64;
        let mut shift = table.zero();
        for _ in 0..order {
            for h in (0..table.len()).filter(|&h| subgroup >> h & 1 == 1) {
                grown |= 1 << table.add(h, shift);
            }
            shift = table.add(shift, y);
        }
        if grown.count_ones() as u64 == size * order
            && extend(table, gens, depth + 1, grown, failed)
        {
            return true;
        }
    }
    failed.insert((depth, subgroup));
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(f: &[u64]) -> FinAbGroup {
        FinAbGroup::new(f.to_vec()).unwrap()
    }

    #[test]
    fn examples_both_paths() {
        let cases = [
            (g(&[]), g(&[3]), true),
            (g(&[4]), g(&[2, 2]), false),
            (g(&[2, 2]), g(&[4]), false),
            (g(&[2]), g(&[4]), true),
            (g(&[2, 2]), g(&[2, 4]), true),
            (g(&[6]), g(&[2, 12]), true),
            (g(&[3]), g(&[2, 4]), false),
            (g(&[2, 2, 2]), g(&[4, 4]), false),
        ];
        for (a, b, expected) in cases {
            assert_eq!(embeds_in(&a, &b), expected, "{a:?} in {b:?}");
            assert_eq!(
                embeds_in_by_search(&a, &b).unwrap(),
                expected,
                "{a:?} in {b:?}"
            );
        }
    }

    #[test]
    fn search_respects_bound() {
        assert!(embeds_in_by_search(&g(&[128]), &g(&[2])).is_err());
    }
}
