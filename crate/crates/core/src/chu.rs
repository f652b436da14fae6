//! Chu spaces over a finite alphabet and the embedding of finite mappings.
//!
//! A Chu space `(X, Y, r)` has points `X`, states `Y` and a matrix
//! `r: X × Y -> W`. A morphism `(X, Y, r) -> (U, V, s)` is a pair
//! `forward: X -> U`, `backward: V -> Y` with
//! `r(x, backward(v)) = s(forward(x), v)` for all `x`, `v`.
//!
//! Composition is diagrammatic: for `m: A -> B` and `n: B -> C` the forward
//! maps chain `A -> B -> C` and the backward maps chain the other way.

use serde::{Deserialize, Serialize};

use crate::finset::{deviation, Deviation, FiniteSet, Mapping};
use crate::powerset::{power_set, preimage_map, PowersetCarrier};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ChuLiteral", into = "ChuLiteral")]
pub struct ChuSpace {
    points: FiniteSet,
    states: FiniteSet,
    alphabet: FiniteSet,
    matrix: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ChuLiteral {
    points: usize,
    states: usize,
    alphabet: usize,
    matrix: Vec<Vec<usize>>,
}

impl TryFrom<ChuLiteral> for ChuSpace {
    type Error = Error;

    fn try_from(lit: ChuLiteral) -> Result<Self> {
        ChuSpace::new(
            FiniteSet::new(lit.points),
            FiniteSet::new(lit.states),
            FiniteSet::new(lit.alphabet),
            lit.matrix,
        )
    }
}

impl From<ChuSpace> for ChuLiteral {
    fn from(c: ChuSpace) -> Self {
        ChuLiteral {
            points: c.points.size(),
            states: c.states.size(),
            alphabet: c.alphabet.size(),
            matrix: c.matrix,
        }
    }
}

impl ChuSpace {
    /// The designated alphabet elements `0` and `1` exist iff `|W| ≥ 2`;
    /// smaller alphabets are accepted but yield only trivial spaces.
    pub fn new(
        points: FiniteSet,
        states: FiniteSet,
        alphabet: FiniteSet,
        matrix: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if matrix.len() != points.size() {
            return Err(Error::InvalidChuSpace(format!(
                "{} matrix rows for {} points",
                matrix.len(),
                points.size()
            )));
        }
        for (x, row) in matrix.iter().enumerate() {
            if row.len() != states.size() {
                return Err(Error::InvalidChuSpace(format!(
                    "row {x} has {} entries for {} states",
                    row.len(),
                    states.size()
                )));
            }
            if let Some((y, &w)) = row.iter().enumerate().find(|(_, &w)| w >= alphabet.size()) {
                return Err(Error::InvalidChuSpace(format!(
                    "entry ({x}, {y}) = {w} is outside the alphabet of size {}",
                    alphabet.size()
                )));
            }
        }
        Ok(ChuSpace {
            points,
            states,
            alphabet,
            matrix,
        })
    }

    pub fn points(&self) -> &FiniteSet {
        &self.points
    }

    pub fn states(&self) -> &FiniteSet {
        &self.states
    }

    pub fn alphabet(&self) -> &FiniteSet {
        &self.alphabet
    }

    pub fn matrix(&self) -> &[Vec<usize>] {
        &self.matrix
    }

    pub fn entry(&self, x: usize, y: usize) -> usize {
        self.matrix[x][y]
    }

    pub fn has_designated_values(&self) -> bool {
        self.alphabet.size() >= 2
    }

    /// The matrix as a mapping `X × Y -> W`, pair `(x, y)` at index
    /// `x·|Y| + y`.
    pub fn evaluation_mapping(&self) -> Mapping {
        let table = self.matrix.iter().flatten().copied().collect();
        Mapping::new(
            FiniteSet::new(self.points.size() * self.states.size()),
            self.alphabet.clone(),
            table,
        )
        .expect("entries lie in the alphabet")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChuMorphism {
    pub forward: Mapping,
    pub backward: Mapping,
}

impl ChuMorphism {
    pub fn identity(space: &ChuSpace) -> Self {
        ChuMorphism {
            forward: Mapping::identity(&space.points),
            backward: Mapping::identity(&space.states),
        }
    }
}

fn check_signature(m: &ChuMorphism, a: &ChuSpace, b: &ChuSpace) -> Result<()> {
    let ok = m.forward.dom() == &a.points
        && m.forward.cod() == &b.points
        && m.backward.dom() == &b.states
        && m.backward.cod() == &a.states;
    if !ok {
        return Err(Error::SignatureMismatch(format!(
            "morphism with forward {} -> {} and backward {} -> {} does not fit a {}x{} -> {}x{} pair of spaces",
            m.forward.dom().size(),
            m.forward.cod().size(),
            m.backward.dom().size(),
            m.backward.cod().size(),
            a.points.size(),
            a.states.size(),
            b.points.size(),
            b.states.size()
        )));
    }
    Ok(())
}

/// The adjointness condition `a(x, backward(v)) = b(forward(x), v)`.
pub fn morphism_is_valid(m: &ChuMorphism, a: &ChuSpace, b: &ChuSpace) -> Result<bool> {
    check_signature(m, a, b)?;
    if a.alphabet != b.alphabet {
        return Err(Error::SignatureMismatch(
            "Chu spaces over different alphabets".into(),
        ));
    }
    Ok(a.points.elements().all(|x| {
        b.states
            .elements()
            .all(|v| a.entry(x, m.backward.apply(v)) == b.entry(m.forward.apply(x), v))
    }))
}

/// `m: A -> B` followed by `n: B -> C`.
pub fn compose(m: &ChuMorphism, n: &ChuMorphism) -> Result<ChuMorphism> {
    Ok(ChuMorphism {
        forward: m.forward.then(&n.forward)?,
        backward: n.backward.then(&m.backward)?,
    })
}

/// `(X, P(X), e_X)` over `W = {0, 1}` with `e_X(x, A) = [x ∈ A]`.
pub fn e_space(x: &FiniteSet) -> Result<ChuSpace> {
    let px = power_set(x)?;
    let matrix = x
        .elements()
        .map(|e| (0..px.size()).map(|a| a >> e & 1).collect())
        .collect();
    ChuSpace::new(x.clone(), px.as_set, FiniteSet::new(2), matrix)
}

/// `f |-> (f, f^-1)` from `e_space(X)` to `e_space(Y)`.
pub fn embed(f: &Mapping) -> Result<ChuMorphism> {
    Ok(ChuMorphism {
        forward: f.clone(),
        backward: preimage_map(f)?,
    })
}

/// Subsets `C ⊆ X` that the adjointness condition allows as the backward
/// image of the state `b ⊆ Y` when the forward map is `u`: those with
/// `e_X(x, C) = e_Y(u(x), b)` for every `x`.
pub fn backward_candidates(u: &Mapping, ex: &ChuSpace, ey: &ChuSpace, b: usize) -> Vec<usize> {
    (0..ex.states.size())
        .filter(|&c| {
            ex.points
                .elements()
                .all(|x| ex.entry(x, c) == ey.entry(u.apply(x), b))
        })
        .collect()
}

/// The backward map that the adjointness condition forces for the forward
/// map `u: X -> Y` between e-spaces, fixed one point at a time:
/// `x ∈ v(B)` iff `e_Y(u(x), B) = 1`.
pub fn forced_backward(u: &Mapping, x: &FiniteSet, y: &FiniteSet) -> Result<Mapping> {
    if u.dom() != x || u.cod() != y {
        return Err(Error::SignatureMismatch(format!(
            "forward map {} -> {} given for carriers {} and {}",
            u.dom().size(),
            u.cod().size(),
            x.size(),
            y.size()
        )));
    }
    let ey = e_space(y)?;
    let px: PowersetCarrier = power_set(x)?;
    let table = (0..ey.states.size())
        .map(|b| {
            x.elements()
                .filter(|&e| ey.entry(u.apply(e), b) == 1)
                .fold(0usize, |acc, e| acc | 1 << e)
        })
        .collect();
    Mapping::new(ey.states.clone(), px.as_set, table)
}

/// Deviation of `e_X` seen as a mapping `X × P(X) -> {0, 1}`, pair `(x, A)`
/// at index `x·2^|X| + A`. Requires `|X| ≥ 2`.
pub fn ex_deviation(x: &FiniteSet) -> Result<Deviation> {
    if x.size() < 2 {
        return Err(Error::CarrierTooSmall(x.size()));
    }
    Ok(deviation(&e_space(x)?.evaluation_mapping()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(cod: usize, table: &[usize]) -> Mapping {
        Mapping::from_table(cod, table.to_vec()).unwrap()
    }

    #[test]
    fn e_space_shapes() {
        let e1 = e_space(&FiniteSet::new(1)).unwrap();
        assert_eq!(e1.matrix(), &[vec![0, 1]]);
        let e2 = e_space(&FiniteSet::new(2)).unwrap();
        assert_eq!(e2.matrix().len(), 2);
        assert!((0..2).all(|x| e2.entry(x, 3) == 1));
        let e3 = e_space(&FiniteSet::new(3)).unwrap();
        assert!(e3.matrix().iter().all(|row| row.iter().sum::<usize>() == 4));
    }

    #[test]
    fn embedded_mappings_are_valid() {
        let f = map(2, &[0, 0]);
        let m = embed(&f).unwrap();
        assert_eq!(m.backward.table(), &[0, 3, 0, 3]);
        let ex = e_space(f.dom()).unwrap();
        let ey = e_space(f.cod()).unwrap();
        assert!(morphism_is_valid(&m, &ex, &ey).unwrap());
        let mut bad = m.backward.table().to_vec();
        bad[1] = 1;
        let broken = ChuMorphism {
            forward: f.clone(),
            backward: Mapping::new(ey.states().clone(), ex.states().clone(), bad).unwrap(),
        };
        assert!(!morphism_is_valid(&broken, &ex, &ey).unwrap());
        let e3 = e_space(&FiniteSet::new(3)).unwrap();
        assert!(morphism_is_valid(&m, &ex, &e3).is_err());
    }

    #[test]
    fn identity_and_composition() {
        let x = FiniteSet::new(2);
        let ex = e_space(&x).unwrap();
        let id = ChuMorphism::identity(&ex);
        assert!(morphism_is_valid(&id, &ex, &ex).unwrap());
        assert_eq!(embed(&Mapping::identity(&x)).unwrap(), id);
        let f = map(3, &[2, 0]);
        let g = map(2, &[1, 1, 0]);
        let composed = compose(&embed(&f).unwrap(), &embed(&g).unwrap()).unwrap();
        assert_eq!(composed, embed(&f.then(&g).unwrap()).unwrap());
        assert!(compose(&embed(&g).unwrap(), &embed(&g).unwrap()).is_err());
    }

    #[test]
    fn forcing_examples() {
        let x = FiniteSet::new(2);
        assert_eq!(
            forced_backward(&Mapping::identity(&x), &x, &x).unwrap(),
            Mapping::identity(&FiniteSet::new(4))
        );
        let c = map(2, &[0, 0]);
        assert_eq!(forced_backward(&c, &x, &x).unwrap().table(), &[0, 3, 0, 3]);
        let ex = e_space(&x).unwrap();
        assert_eq!(backward_candidates(&c, &ex, &ex, 1), vec![3]);
    }

    #[test]
    fn evaluation_deviation() {
        for n in 2..=3 {
            let d = ex_deviation(&FiniteSet::new(n)).unwrap();
            assert!(d.missed.is_empty());
            let half = n << (n - 1);
            assert_eq!(d.part.num_blocks(), 2);
            assert!(d.part.blocks().iter().all(|b| b.len() == half));
        }
        assert_eq!(
            ex_deviation(&FiniteSet::new(1)),
            Err(Error::CarrierTooSmall(1))
        );
    }

    #[test]
    fn literal_validation() {
        let c: ChuSpace = serde_json::from_str(
            r#"{"points":2,"states":3,"alphabet":2,"matrix":[[0,1,0],[1,1,0]]}"#,
        )
        .unwrap();
        assert_eq!(c.entry(1, 1), 1);
        assert!(serde_json::from_str::<ChuSpace>(
            r#"{"points":1,"states":1,"alphabet":2,"matrix":[[2]]}"#
        )
        .is_err());
    }
}
