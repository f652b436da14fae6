//! Explicit element tables: the brute-force carrier behind every oracle.
//!
//! Element `k` of `Z/d_1 ⊕ … ⊕ Z/d_r` is the mixed-radix tuple whose last
//! coordinate varies fastest.

use super::{FinAbGroup, GroupElem, GroupHom};
use crate::finset::{image, kernel_partition, FiniteSet, Mapping, Partition, Subset};
use crate::{Error, Result};

pub const ELEMENT_TABLE_BOUND: u64 = 4096;

#[derive(Clone, Debug)]
pub struct ElementTable {
    group: FinAbGroup,
    elements: Vec<GroupElem>,
}

impl ElementTable {
    pub fn new(group: &FinAbGroup) -> Result<Self> {
        if group.order() > ELEMENT_TABLE_BOUND {
            return Err(Error::BoundExceeded {
                what: "element table order",
                size: group.order() as usize,
                bound: ELEMENT_TABLE_BOUND as usize,
            });
        }
        let mut elements = vec![GroupElem { coords: vec![] }];
        for &d in group.factors() {
            elements = elements
                .into_iter()
                .flat_map(|e| {
                    (0..d).map(move |r| {
                        let mut coords = e.coords.clone();
                        coords.push(r);
                        GroupElem { coords }
                    })
                })
                .collect();
        }
        Ok(ElementTable {
            group: group.clone(),
            elements,
        })
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn element(&self, k: usize) -> &GroupElem {
        &self.elements[k]
    }

    pub fn index_of(&self, e: &GroupElem) -> usize {
        e.coords
            .iter()
            .zip(self.group.factors())
            .fold(0usize, |acc, (&r, &d)| acc * d as usize + r as usize)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let coords = self.elements[a]
            .coords
            .iter()
            .zip(&self.elements[b].coords)
            .zip(self.group.factors())
            .map(|((&x, &y), &d)| (x + y) % d)
            .collect();
        self.index_of(&GroupElem { coords })
    }

    pub fn neg(&self, a: usize) -> usize {
        let coords = self.elements[a]
            .coords
            .iter()
            .zip(self.group.factors())
            .map(|(&x, &d)| (d - x) % d)
            .collect();
        self.index_of(&GroupElem { coords })
    }

    pub fn times(&self, k: u64, a: usize) -> usize {
        let coords = self.elements[a]
            .coords
            .iter()
            .zip(self.group.factors())
            .map(|(&x, &d)| (x * (k % d)) % d)
            .collect();
        self.index_of(&GroupElem { coords })
    }

    /// Order of an element, found by repeated addition.
    pub fn element_order(&self, a: usize) -> u64 {
        let mut k = 1;
        let mut acc = a;
        while acc != self.zero() {
            acc = self.add(acc, a);
            k += 1;
        }
        k
    }

    /// `f` on element indices, as a mapping of finite sets.
    pub fn hom_map(&self, f: &GroupHom, target: &ElementTable) -> Mapping {
        assert_eq!(self.group, *f.dom());
        assert_eq!(target.group, *f.cod());
        let table = self
            .elements
            .iter()
            .map(|e| target.index_of(&f.apply(e)))
            .collect();
        Mapping::new(
            FiniteSet::new(self.len()),
            FiniteSet::new(target.len()),
            table,
        )
        .expect("homomorphisms land in the codomain")
    }

    /// Partition into cosets of the subgroup `h`.
    pub fn cosets(&self, h: &Subset) -> Partition {
        let labels: Vec<usize> = (0..self.len())
            .map(|y| {
                h.iter()
                    .map(|k| self.add(y, k))
                    .min()
                    .expect("subgroup contains 0")
            })
            .collect();
        Partition::from_labels(&labels)
    }
}

/// Invariant factors of an explicit finite abelian group of order `n`, given
/// only its addition. Counts, for every prime `p` and `k ≥ 1`, the elements
/// killed by `p^k`; the increments give the conjugate of the `p`-exponent
/// partition.
pub fn invariant_factors_by_counting(
    n: usize,
    zero: usize,
    add: impl Fn(usize, usize) -> usize,
) -> FinAbGroup {
    let order_of = |a: usize| {
        let mut k = 1u64;
        let mut acc = a;
        while acc != zero {
            acc = add(acc, a);
            k += 1;
        }
        k
    };
    let orders: Vec<u64> = (0..n).map(order_of).collect();
    let mut per_prime: Vec<(u64, Vec<u32>)> = Vec::new();
    for p in prime_factors(n as u64) {
        let mut killed = vec![1u64];
        let mut pk = 1u64;
        loop {
            pk *= p;
            let c = orders.iter().filter(|&&o| pk.is_multiple_of(o)).count() as u64;
            if c == *killed.last().expect("nonempty") {
                break;
            }
            killed.push(c);
        }
        // conjugate[k-1] = log_p(killed[k] / killed[k-1])
        let conjugate: Vec<u32> = killed
            .windows(2)
            .map(|w| {
                let mut ratio = w[1] / w[0];
                let mut e = 0;
                while ratio > 1 {
                    ratio /= p;
                    e += 1;
                }
                e
            })
            .collect();
        let parts = conjugate.first().copied().unwrap_or(0);
        let exponents: Vec<u32> = (1..=parts)
            .map(|i| conjugate.iter().filter(|&&c| c >= i).count() as u32)
            .collect();
        per_prime.push((p, exponents));
    }
    let count = per_prime.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    // exponents are descending; the largest invariant factor collects each
    // prime's largest exponent.
    let mut factors: Vec<u64> = (0..count)
        .map(|i| {
            per_prime
                .iter()
                .map(|(p, e)| e.get(i).map_or(1, |&x| p.pow(x)))
                .product()
        })
        .collect();
    factors.reverse();
    FinAbGroup::new(factors).expect("counting yields a divisibility chain")
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Invariant factors of `G / P` where `P` is a partition of `G` into cosets.
fn quotient_factors(table: &ElementTable, cosets: &Partition) -> FinAbGroup {
    let reps: Vec<usize> = cosets.blocks().iter().map(|b| b[0]).collect();
    invariant_factors_by_counting(
        cosets.num_blocks(),
        cosets.block_of(table.zero()),
        |a, b| cosets.block_of(table.add(reps[a], reps[b])),
    )
}

/// `X / ker f` from explicit cosets: the kernel partition of `f` on elements.
pub fn oracle_devg1(f: &GroupHom) -> Result<FinAbGroup> {
    let x = ElementTable::new(f.dom())?;
    let y = ElementTable::new(f.cod())?;
    let cosets = kernel_partition(&x.hom_map(f, &y));
    Ok(quotient_factors(&x, &cosets))
}

/// `Y / f(X)` from explicit cosets of the image subgroup.
pub fn oracle_devg2(f: &GroupHom) -> Result<FinAbGroup> {
    let x = ElementTable::new(f.dom())?;
    let y = ElementTable::new(f.cod())?;
    let img = image(&x.hom_map(f, &y));
    Ok(quotient_factors(&y, &y.cosets(&img)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(f: &[u64]) -> FinAbGroup {
        FinAbGroup::new(f.to_vec()).unwrap()
    }

    #[test]
    fn table_examples() {
        assert_eq!(ElementTable::new(&g(&[])).unwrap().len(), 1);
        let klein = ElementTable::new(&g(&[2, 2])).unwrap();
        assert_eq!(klein.len(), 4);
        assert!((0..4).all(|a| klein.add(a, a) == klein.zero()));
        let z6 = ElementTable::new(&g(&[6])).unwrap();
        let one = z6.index_of(&GroupElem { coords: vec![1] });
        let mut seen = [false; 6];
        let mut acc = z6.zero();
        for _ in 0..6 {
            seen[acc] = true;
            acc = z6.add(acc, one);
        }
        assert!(seen.iter().all(|&s| s));
        assert_eq!(z6.element_order(one), 6);
        assert_eq!(z6.neg(one), z6.times(5, one));
        assert!(ElementTable::new(&g(&[4096, 4096])).is_err());
    }

    #[test]
    fn counting_recovers_every_group() {
        for grp in FinAbGroup::all_up_to(64) {
            let t = ElementTable::new(&grp).unwrap();
            let got = invariant_factors_by_counting(t.len(), t.zero(), |a, b| t.add(a, b));
            assert_eq!(got, grp);
        }
    }

    #[test]
    fn oracle_quotients() {
        let double = GroupHom::new(g(&[4]), g(&[4]), vec![vec![2]]).unwrap();
        assert_eq!(oracle_devg1(&double).unwrap(), g(&[2]));
        assert_eq!(oracle_devg2(&double).unwrap(), g(&[2]));
        let zero = GroupHom::zero(&g(&[4]), &g(&[4]));
        assert_eq!(oracle_devg1(&zero).unwrap(), g(&[]));
        assert_eq!(oracle_devg2(&zero).unwrap(), g(&[4]));
    }
}
