use std::fmt;

use bitvec::prelude::*;
use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// A subset of the canonical carrier `0..base`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    members: BitVec,
}

impl Subset {
    pub fn empty(base: usize) -> Self {
        Subset {
            members: bitvec![0; base],
        }
    }

    pub fn full(base: usize) -> Self {
        Subset {
            members: bitvec![1; base],
        }
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(base: usize, elements: I) -> Result<Self> {
        let mut s = Subset::empty(base);
        for e in elements {
            if e >= base {
                return Err(Error::InvalidSubset(format!(
                    "element {e} outside carrier of size {base}"
                )));
            }
            s.members.set(e, true);
        }
        Ok(s)
    }

    /// Decodes the subset whose characteristic vector is the binary expansion
    /// of `mask` (bit `i` set means `i` is a member).
    pub fn from_mask(base: usize, mask: u64) -> Self {
        debug_assert!(base <= 64);
        debug_assert!(base == 64 || mask >> base == 0);
        let mut s = Subset::empty(base);
        for i in 0..base {
            if mask >> i & 1 == 1 {
                s.members.set(i, true);
            }
        }
        s
    }

    pub fn to_mask(&self) -> u64 {
        assert!(
            self.base() <= 64,
            "subset of a carrier larger than 64 has no u64 mask"
        );
        self.members.iter_ones().fold(0u64, |m, i| m | 1 << i)
    }

    pub fn base(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, e: usize) -> bool {
        e < self.base() && self.members[e]
    }

    pub fn insert(&mut self, e: usize) {
        self.members.set(e, true);
    }

    pub fn len(&self) -> usize {
        self.members.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.members.not_any()
    }

    pub fn is_full(&self) -> bool {
        self.members.all()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter_ones()
    }

    pub fn elements(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Subset {
        Subset {
            members: !self.members.clone(),
        }
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        assert_eq!(self.base(), other.base(), "subsets of different carriers");
        self.iter().all(|e| other.members[e])
    }

    pub fn union(&self, other: &Subset) -> Subset {
        assert_eq!(self.base(), other.base(), "subsets of different carriers");
        Subset {
            members: self.members.clone() | other.members.clone(),
        }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        assert_eq!(self.base(), other.base(), "subsets of different carriers");
        Subset {
            members: self.members.clone() & other.members.clone(),
        }
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        self.intersection(&other.complement())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mask_round_trip() {
        let s = Subset::from_mask(4, 5);
        assert_eq!(s.elements(), vec![0, 2]);
        assert_eq!(s.to_mask(), 5);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(Subset::from_elements(2, [0, 2]).is_err());
    }

    #[test]
    fn complement_and_difference() {
        let a = Subset::from_elements(4, [0, 1]).unwrap();
        let b = Subset::from_elements(4, [1, 3]).unwrap();
        assert_eq!(a.complement().elements(), vec![2, 3]);
        assert_eq!(a.difference(&b).elements(), vec![0]);
        assert!(!a.is_subset_of(&b));
        assert!(a.intersection(&b).is_subset_of(&b));
    }

    #[test]
    fn serializes_as_sorted_list() {
        let s = Subset::from_elements(5, [4, 1]).unwrap();
        assert_eq!(serde_json::to_string(&s).unwrap(), "[1,4]");
    }
}
