//! Powerset carriers and the two maps a mapping `f: X -> Y` induces on them:
//! the direct image `f~: P(X) -> P(Y)` and the preimage `f^-1: P(Y) -> P(X)`.
//!
//! A subset of an `n`-element set is encoded as the integer whose binary
//! expansion is its characteristic vector, so `P(X)` is the finite set
//! `0..2^n` and both induced maps are ordinary [`Mapping`]s. Index `0` is `∅`.

use crate::finset::{image, kernel_partition, FiniteSet, Mapping, Partition, Subset};
use crate::{Error, Result};

pub const DEFAULT_POWERSET_BOUND: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowersetCarrier {
    pub base: FiniteSet,
    pub as_set: FiniteSet,
}

impl PowersetCarrier {
    pub fn encode(&self, s: &Subset) -> usize {
        debug_assert_eq!(s.base(), self.base.size());
        s.to_mask() as usize
    }

    pub fn decode(&self, k: usize) -> Subset {
        assert!(k < self.as_set.size(), "index {k} outside powerset carrier");
        Subset::from_mask(self.base.size(), k as u64)
    }

    pub fn size(&self) -> usize {
        self.as_set.size()
    }
}

pub fn power_set(x: &FiniteSet) -> Result<PowersetCarrier> {
    power_set_bounded(x, DEFAULT_POWERSET_BOUND)
}

pub fn power_set_bounded(x: &FiniteSet, bound: usize) -> Result<PowersetCarrier> {
    check_bound(x.size(), bound.min(DEFAULT_POWERSET_BOUND))?;
    Ok(PowersetCarrier {
        base: x.clone(),
        as_set: FiniteSet::new(1 << x.size()),
    })
}

fn check_bound(size: usize, bound: usize) -> Result<()> {
    if size > bound {
        return Err(Error::BoundExceeded {
            what: "powerset base",
            size,
            bound,
        });
    }
    Ok(())
}

/// Fills `table[mask]` as the union of `atom(i)` over the set bits `i` of `mask`.
fn lift_union(bits: usize, atom: impl Fn(usize) -> usize) -> Vec<usize> {
    let mut table = vec![0usize; 1 << bits];
    for mask in 1..table.len() {
        let low = mask.trailing_zeros() as usize;
        table[mask] = table[mask & (mask - 1)] | atom(low);
    }
    table
}

/// `f~: P(X) -> P(Y)`, `A |-> f(A)`.
pub fn direct_image_map(f: &Mapping) -> Result<Mapping> {
    let px = power_set(f.dom())?;
    let py = power_set(f.cod())?;
    let table = lift_union(f.dom().size(), |x| 1 << f.apply(x));
    Mapping::new(px.as_set, py.as_set, table)
}

fn fibre_masks(f: &Mapping) -> Vec<usize> {
    let mut fibres = vec![0usize; f.cod().size()];
    for (x, &y) in f.table().iter().enumerate() {
        fibres[y] |= 1 << x;
    }
    fibres
}

/// `f^-1: P(Y) -> P(X)`, `U |-> f^-1(U)`.
pub fn preimage_map(f: &Mapping) -> Result<Mapping> {
    let px = power_set(f.dom())?;
    let py = power_set(f.cod())?;
    let fibres = fibre_masks(f);
    let table = lift_union(f.cod().size(), |y| fibres[y]);
    Mapping::new(py.as_set, px.as_set, table)
}

/// `f(X)` as a set of its own, element `j` being the `j`-th smallest image point.
pub fn image_set(f: &Mapping) -> FiniteSet {
    FiniteSet::with_labels(image(f).iter().map(|y| f.cod().label(y)).collect())
        .expect("image points are distinct")
}

/// Re-encodes a subset of `f(X)` (indexed by image position) as a subset of `Y`.
pub fn image_subset_in_codomain(f: &Mapping, v: usize) -> usize {
    image(f)
        .iter()
        .enumerate()
        .filter(|(j, _)| v >> j & 1 == 1)
        .fold(0, |acc, (_, y)| acc | 1 << y)
}

/// `f^-1` restricted to `P(f(X))`. Injective for every `f`.
pub fn restrict_preimage_to_image(f: &Mapping) -> Result<Mapping> {
    let img = image_set(f);
    let pimg = power_set(&img)?;
    let px = power_set(f.dom())?;
    let fibres = fibre_masks(f);
    let points = image(f).elements();
    let table = lift_union(points.len(), |j| fibres[points[j]]);
    Mapping::new(pimg.as_set, px.as_set, table)
}

/// The identification `x |-> {x}` of `X` with the blocks of its discrete
/// partition.
pub fn iota(x: &FiniteSet) -> Mapping {
    let blocks = FiniteSet::with_labels(x.elements().map(|e| format!("{{{e}}}")).collect())
        .expect("singletons are distinct");
    Mapping::new(x.clone(), blocks, x.elements().collect()).expect("bijection onto singletons")
}

/// Whether `p` is `X` itself under the identification `iota`: every element
/// sits in the block `iota(x) = {x}`, and the blocks are exactly these.
pub fn identified_with_base(p: &Partition) -> bool {
    let i = iota(&FiniteSet::new(p.base()));
    p.num_blocks() == i.cod().size()
        && (0..p.base()).all(|x| {
            let b = p.block_of(x);
            p.blocks()[b] == [x] && i.apply(x) == b
        })
}

/// The bijection `P(f(X)) -> P(Y)_{f^-1}` sending `V` to its class under
/// the kernel equivalence of `f^-1`. The class of an arbitrary `U ⊆ Y` is
/// reached through `U ∩ f(X)`.
pub fn kappa(f: &Mapping) -> Result<Mapping> {
    let pre = preimage_map(f)?;
    let classes = kernel_partition(&pre);
    let pimg = power_set(&image_set(f))?;
    let table = (0..pimg.size())
        .map(|v| classes.block_of(image_subset_in_codomain(f, v)))
        .collect();
    Mapping::new(pimg.as_set, FiniteSet::new(classes.num_blocks()), table)
}
