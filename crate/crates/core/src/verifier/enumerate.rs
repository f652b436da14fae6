//! Enumeration of the finite universes that claims range over.
//!
//! All orders are fixed so that the first failing instance a checker meets is
//! a minimal one: carrier sizes by total size, then lexicographically, and
//! mappings lexicographically by table.

use crate::abgroup::{enumerate_homs_bounded, FinAbGroup, GroupHom};
use crate::finset::{FiniteSet, Mapping};
use crate::{Error, Result};

/// All `|Y|^|X|` mappings `X -> Y`, lexicographic by table.
pub fn enumerate_mappings(x: &FiniteSet, y: &FiniteSet) -> MappingIter {
    MappingIter {
        dom: x.clone(),
        cod: y.clone(),
        next: if y.is_empty() && !x.is_empty() {
            None
        } else {
            Some(vec![0; x.size()])
        },
    }
}

/// Like [`enumerate_mappings`], refusing carriers above `bound`.
pub fn enumerate_mappings_bounded(
    x: &FiniteSet,
    y: &FiniteSet,
    bound: usize,
) -> Result<MappingIter> {
    for s in [x, y] {
        if s.size() > bound {
            return Err(Error::BoundExceeded {
                what: "carrier",
                size: s.size(),
                bound,
            });
        }
    }
    Ok(enumerate_mappings(x, y))
}

pub struct MappingIter {
    dom: FiniteSet,
    cod: FiniteSet,
    next: Option<Vec<usize>>,
}

impl Iterator for MappingIter {
    type Item = Mapping;

    fn next(&mut self) -> Option<Mapping> {
        let table = self.next.take()?;
        let mut succ = table.clone();
        let n = self.cod.size();
        for k in (0..succ.len()).rev() {
            succ[k] += 1;
            if succ[k] < n {
                self.next = Some(succ);
                break;
            }
            succ[k] = 0;
        }
        Some(Mapping::new(self.dom.clone(), self.cod.clone(), table).expect("entries below |Y|"))
    }
}

/// `(x, y)` with `x ≤ max_x`, `y ≤ max_y`, ordered by `x + y` then `x`.
pub fn size_pairs(max_x: usize, max_y: usize) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = (0..=max_x)
        .flat_map(|x| (0..=max_y).map(move |y| (x, y)))
        .collect();
    out.sort_by_key(|&(x, y)| (x + y, x, y));
    out
}

/// `(x, y, z)` with every entry `≤ max`, ordered by total then lexicographically.
pub fn size_triples(max: usize) -> Vec<(usize, usize, usize)> {
    let mut out: Vec<(usize, usize, usize)> = (0..=max)
        .flat_map(|x| (0..=max).flat_map(move |y| (0..=max).map(move |z| (x, y, z))))
        .collect();
    out.sort_by_key(|&(x, y, z)| (x + y + z, x, y, z));
    out
}

/// Every mapping between carriers of size `≤ max`, carriers in
/// [`size_pairs`] order.
pub fn all_mappings(max: usize) -> impl Iterator<Item = Mapping> {
    size_pairs(max, max)
        .into_iter()
        .flat_map(|(x, y)| enumerate_mappings(&FiniteSet::new(x), &FiniteSet::new(y)))
}

/// Every composable pair `X -f-> Y -g-> Z` with carriers of size `≤ max`.
pub fn composable_pairs(max: usize) -> impl Iterator<Item = (Mapping, Mapping)> {
    size_triples(max).into_iter().flat_map(|(x, y, z)| {
        let (sx, sy, sz) = (FiniteSet::new(x), FiniteSet::new(y), FiniteSet::new(z));
        enumerate_mappings(&sx, &sy)
            .flat_map(move |f| enumerate_mappings(&sy, &sz).map(move |g| (f.clone(), g)))
    })
}

/// Every composable pair of endomaps `X -f-> X -g-> X` with `|X| = n`.
pub fn endo_pairs(n: usize) -> impl Iterator<Item = (Mapping, Mapping)> {
    let x = FiniteSet::new(n);
    let maps: Vec<Mapping> = enumerate_mappings(&x, &x).collect();
    let second = maps.clone();
    maps.into_iter()
        .flat_map(move |f| second.clone().into_iter().map(move |g| (f.clone(), g)))
}

/// Groups of order `≤ bound`, by order and then factor list.
pub fn groups(bound: u64) -> Vec<FinAbGroup> {
    FinAbGroup::all_up_to(bound)
}

/// Pairs of groups of order `≤ bound`, by total order then lexicographically.
pub fn group_pairs(bound: u64) -> Vec<(FinAbGroup, FinAbGroup)> {
    let gs = groups(bound);
    let mut out: Vec<(FinAbGroup, FinAbGroup)> = gs
        .iter()
        .flat_map(|a| gs.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    out.sort_by(|(a, b), (c, d)| (a.order() + b.order(), a, b).cmp(&(c.order() + d.order(), c, d)));
    out
}

pub fn group_triples(bound: u64) -> Vec<(FinAbGroup, FinAbGroup, FinAbGroup)> {
    let gs = groups(bound);
    let mut out = Vec::new();
    for a in &gs {
        for b in &gs {
            for c in &gs {
                out.push((a.clone(), b.clone(), c.clone()));
            }
        }
    }
    out.sort_by(|(a, b, c), (d, e, f)| {
        (a.order() + b.order() + c.order(), a, b, c).cmp(&(
            d.order() + e.order() + f.order(),
            d,
            e,
            f,
        ))
    });
    out
}

pub fn homs(x: &FinAbGroup, y: &FinAbGroup) -> Vec<GroupHom> {
    let bound = x.order().max(y.order());
    enumerate_homs_bounded(x, y, bound)
        .expect("bound covers both groups")
        .collect()
}
