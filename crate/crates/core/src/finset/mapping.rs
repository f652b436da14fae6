use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use super::Subset;
use crate::{Error, Result};

/// A finite set whose elements are the integers `0..size`.
///
/// Labels are for display only: two sets of the same size are equal
/// regardless of their labels.
#[derive(Clone, Debug, Default)]
pub struct FiniteSet {
    size: usize,
    labels: Option<Vec<String>>,
}

impl FiniteSet {
    pub fn new(size: usize) -> Self {
        FiniteSet { size, labels: None }
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self> {
        let distinct: HashSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::Labels("labels must be pairwise distinct".into()));
        }
        Ok(FiniteSet {
            size: labels.len(),
            labels: Some(labels),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(labels) => labels[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }
}

impl PartialEq for FiniteSet {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size
    }
}

impl Eq for FiniteSet {}

impl Hash for FiniteSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.size.hash(state);
    }
}

/// A total function between finite sets, stored as its table of values:
/// `table[x]` is the image of `x`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MappingLiteral", into = "MappingLiteral")]
pub struct Mapping {
    dom: FiniteSet,
    cod: FiniteSet,
    table: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MappingLiteral {
    dom: usize,
    cod: usize,
    table: Vec<usize>,
}

impl TryFrom<MappingLiteral> for Mapping {
    type Error = Error;

    fn try_from(lit: MappingLiteral) -> Result<Self> {
        Mapping::new(FiniteSet::new(lit.dom), FiniteSet::new(lit.cod), lit.table)
    }
}

impl From<Mapping> for MappingLiteral {
    fn from(m: Mapping) -> Self {
        MappingLiteral {
            dom: m.dom.size,
            cod: m.cod.size,
            table: m.table,
        }
    }
}

impl Mapping {
    pub fn new(dom: FiniteSet, cod: FiniteSet, table: Vec<usize>) -> Result<Self> {
        if table.len() != dom.size() {
            return Err(Error::TableLength {
                len: table.len(),
                dom: dom.size(),
            });
        }
        if let Some((index, &value)) = table.iter().enumerate().find(|(_, &v)| v >= cod.size()) {
            return Err(Error::OutOfRange {
                index,
                value,
                cod: cod.size(),
            });
        }
        Ok(Mapping { dom, cod, table })
    }

    /// Mapping from `0..table.len()` into `0..cod`.
    pub fn from_table(cod: usize, table: Vec<usize>) -> Result<Self> {
        Mapping::new(FiniteSet::new(table.len()), FiniteSet::new(cod), table)
    }

    pub fn identity(set: &FiniteSet) -> Self {
        Mapping {
            dom: set.clone(),
            cod: set.clone(),
            table: set.elements().collect(),
        }
    }

    pub fn constant(dom: usize, cod: usize, value: usize) -> Result<Self> {
        Mapping::from_table(cod, vec![value; dom])
    }

    pub fn dom(&self) -> &FiniteSet {
        &self.dom
    }

    pub fn cod(&self) -> &FiniteSet {
        &self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// `g ∘ self`: first apply `self`, then `g`.
    pub fn then(&self, g: &Mapping) -> Result<Mapping> {
        if self.cod != g.dom {
            return Err(Error::SignatureMismatch(format!(
                "cannot compose {} -> {} with {} -> {}",
                self.dom.size(),
                self.cod.size(),
                g.dom.size(),
                g.cod.size()
            )));
        }
        Ok(Mapping {
            dom: self.dom.clone(),
            cod: g.cod.clone(),
            table: self.table.iter().map(|&y| g.table[y]).collect(),
        })
    }

    /// `f(A)` for a subset `A` of the domain.
    pub fn image_of(&self, a: &Subset) -> Subset {
        let mut out = Subset::empty(self.cod.size());
        for x in a.iter() {
            out.insert(self.table[x]);
        }
        out
    }

    /// `f^-1(U)` for a subset `U` of the codomain.
    pub fn preimage_of(&self, u: &Subset) -> Subset {
        let mut out = Subset::empty(self.dom.size());
        for (x, &y) in self.table.iter().enumerate() {
            if u.contains(y) {
                out.insert(x);
            }
        }
        out
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.size()];
        self.table
            .iter()
            .all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.cod.size()];
        for &y in &self.table {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// True when all elements share one image; vacuously true on an empty domain.
    pub fn is_constant(&self) -> bool {
        self.table.windows(2).all(|w| w[0] == w[1])
    }
}

impl fmt::Debug for Mapping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Mapping({} -> {}, {:?})",
            self.dom.size(),
            self.cod.size(),
            self.table
        )
    }
}

impl fmt::Display for Mapping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            serde_json::to_string(self).map_err(|_| fmt::Error)?
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range_entry() {
        let err = Mapping::from_table(2, vec![5, 0]).unwrap_err();
        assert_eq!(
            err,
            Error::OutOfRange {
                index: 0,
                value: 5,
                cod: 2
            }
        );
    }

    #[test]
    fn parses_literal() {
        let f: Mapping = serde_json::from_str(r#"{"dom": 3, "cod": 2, "table": [0,0,1]}"#).unwrap();
        assert_eq!(f.table(), &[0, 0, 1]);
        assert_eq!(f.to_string(), r#"{"dom":3,"cod":2,"table":[0,0,1]}"#);
        assert!(serde_json::from_str::<Mapping>(r#"{"dom": 2, "cod": 2, "table": [0]}"#).is_err());
    }

    #[test]
    fn labels_are_presentation_only() {
        let labelled = FiniteSet::with_labels(vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(labelled, FiniteSet::new(2));
        assert_eq!(labelled.label(1), "b");
        assert!(FiniteSet::with_labels(vec!["a".into(), "a".into()]).is_err());
    }

    #[test]
    fn composition_and_direct_predicates() {
        let f = Mapping::from_table(3, vec![0, 0, 2]).unwrap();
        let g = Mapping::from_table(2, vec![1, 0, 1]).unwrap();
        let h = f.then(&g).unwrap();
        assert_eq!(h.table(), &[1, 1, 1]);
        assert!(h.is_constant());
        assert!(!f.is_injective() && !f.is_surjective());
        assert!(g.is_surjective());
        assert!(g.then(&f).is_err());
        let empty = Mapping::from_table(0, vec![]).unwrap();
        assert!(empty.is_bijective() && empty.is_constant());
    }
}
