use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Subset;
use crate::{Error, Result};

/// A partition of `0..base` into nonempty, pairwise disjoint blocks.
///
/// Stored in canonical form: each block sorted ascending, blocks ordered by
/// their minimum element. Structural equality is therefore equality of
/// partitions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl Partition {
    /// Groups the elements `0..labels.len()` by equal label. This is the
    /// kernel construction: `x` and `x'` share a block iff `labels[x] == labels[x']`.
    pub fn from_labels<T: Eq + std::hash::Hash>(labels: &[T]) -> Self {
        let mut index = std::collections::HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = Vec::with_capacity(labels.len());
        for (x, label) in labels.iter().enumerate() {
            let b = *index.entry(label).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(x);
            block_of.push(b);
        }
        Partition { blocks, block_of }
    }

    pub fn from_blocks(base: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut owner: Vec<Option<usize>> = vec![None; base];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &x in block {
                if x >= base {
                    return Err(Error::InvalidPartition(format!(
                        "element {x} outside carrier of size {base}"
                    )));
                }
                if owner[x].replace(b).is_some() {
                    return Err(Error::InvalidPartition(format!(
                        "element {x} lies in more than one block"
                    )));
                }
            }
        }
        let labels = owner
            .into_iter()
            .enumerate()
            .map(|(x, o)| {
                o.ok_or_else(|| Error::InvalidPartition(format!("element {x} is not covered")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Partition::from_labels(&labels))
    }

    /// The partition into singletons, `{{x} | x in X}`.
    pub fn discrete(base: usize) -> Self {
        Partition {
            blocks: (0..base).map(|x| vec![x]).collect(),
            block_of: (0..base).collect(),
        }
    }

    /// The one-block partition `{X}`; the empty partition when `X` is empty.
    pub fn indiscrete(base: usize) -> Self {
        Partition::from_labels(&vec![(); base])
    }

    pub fn base(&self) -> usize {
        self.block_of.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn block_subset(&self, b: usize) -> Subset {
        Subset::from_elements(self.base(), self.blocks[b].iter().copied())
            .expect("blocks lie in the carrier")
    }

    pub fn is_discrete(&self) -> bool {
        self.num_blocks() == self.base()
    }

    /// One block (or none, on the empty carrier).
    pub fn is_indiscrete(&self) -> bool {
        self.num_blocks() <= 1
    }

    /// Refinement order: every block of `self` lies inside some block of `other`.
    pub fn leq(&self, other: &Partition) -> Result<bool> {
        if self.base() != other.base() {
            return Err(Error::SignatureMismatch(format!(
                "partitions of carriers of size {} and {}",
                self.base(),
                other.base()
            )));
        }
        Ok(self.blocks.iter().all(|block| {
            let target = other.block_of[block[0]];
            block.iter().all(|&x| other.block_of[x] == target)
        }))
    }

    /// All partitions of `0..base`, in lexicographic order of their
    /// restricted-growth strings.
    pub fn all(base: usize) -> Vec<Partition> {
        fn grow(prefix: &mut Vec<usize>, max: usize, base: usize, out: &mut Vec<Partition>) {
            if prefix.len() == base {
                out.push(Partition::from_labels(prefix));
                return;
            }
            let next = if prefix.is_empty() { 0 } else { max + 1 };
            for b in 0..=next {
                prefix.push(b);
                grow(prefix, max.max(b), base, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        grow(&mut Vec::with_capacity(base), 0, base, &mut out);
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.blocks)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.blocks.serialize(serializer)
    }
}

/// The carrier is recovered as `0..n` where `n` is the total number of
/// listed elements.
impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let blocks = Vec::<Vec<usize>>::deserialize(deserializer)?;
        let base = blocks.iter().map(Vec::len).sum();
        Partition::from_blocks(base, blocks).map_err(serde::de::Error::custom)
    }
}
