//! Finite abelian groups in invariant-factor form and their homomorphisms.
//!
//! A group is `Z/d_1 ⊕ … ⊕ Z/d_k` with `d_1 | d_2 | … | d_k`, each `d_i ≥ 2`.
//! A homomorphism `Z/a_1 ⊕ … ⊕ Z/a_m -> Z/b_1 ⊕ … ⊕ Z/b_k` is a `k × m`
//! integer matrix whose column `j` is the image of the `j`-th generator;
//! it is well defined iff `b_i | a_j · M[i][j]`.
//!
//! Group deviations `(X / ker f, Y / f(X))` are computed with integer lattice
//! methods in [`deviation`]; [`table`] has the brute-force element-table
//! versions used as oracles, and [`embed`] decides embeddability.

pub mod deviation;
pub mod embed;
pub mod snf;
pub mod table;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};
use snf::{smith_normal_form, IntMatrix};

pub use deviation::{
    devg, devg1, devg2, devg_leq, kernel_contained, kernel_lattice, GroupDeviation,
};
pub use embed::{embeds_in, embeds_in_by_search};
pub use table::ElementTable;

pub const DEFAULT_HOM_GROUP_BOUND: u64 = 16;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct FinAbGroup {
    factors: Vec<u64>,
}

impl TryFrom<Vec<u64>> for FinAbGroup {
    type Error = Error;

    fn try_from(factors: Vec<u64>) -> Result<Self> {
        FinAbGroup::new(factors)
    }
}

impl From<FinAbGroup> for Vec<u64> {
    fn from(g: FinAbGroup) -> Self {
        g.factors
    }
}

impl FinAbGroup {
    /// Requires a divisibility chain of factors `≥ 2`; `[]` is the trivial group.
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if let Some(&d) = factors.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidGroup(format!(
                "invariant factor {d} is smaller than 2"
            )));
        }
        if let Some(w) = factors.windows(2).find(|w| w[1] % w[0] != 0) {
            return Err(Error::InvalidGroup(format!(
                "{} does not divide {}",
                w[0], w[1]
            )));
        }
        Ok(FinAbGroup { factors })
    }

    pub fn trivial() -> Self {
        FinAbGroup::default()
    }

    pub fn cyclic(n: u64) -> Self {
        FinAbGroup::from_cyclic_orders(&[n])
    }

    /// Canonical form of `Z/n_1 ⊕ … ⊕ Z/n_r` for arbitrary positive orders.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        assert!(
            orders.iter().all(|&n| n >= 1),
            "cyclic orders must be positive"
        );
        let diag: Vec<i64> = orders.iter().map(|&n| n as i64).collect();
        FinAbGroup::from_diagonal(
            &smith_normal_form(&IntMatrix::diagonal(&diag)).diagonal_entries(),
        )
    }

    /// Drops unit entries from an SNF diagonal. Zero entries would mean an
    /// infinite cyclic summand and are rejected.
    pub(crate) fn from_diagonal(diagonal: &[snf::Int]) -> Self {
        assert!(
            diagonal.iter().all(|&d| d != 0),
            "quotient has an infinite cyclic summand"
        );
        FinAbGroup {
            factors: diagonal
                .iter()
                .map(|&d| u64::try_from(d.unsigned_abs()).expect("invariant factor fits in u64"))
                .filter(|&d| d > 1)
                .collect(),
        }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// All groups of exactly this order, sorted by factor list.
    pub fn all_of_order(order: u64) -> Vec<FinAbGroup> {
        fn extend(prefix: &mut Vec<u64>, remaining: u64, out: &mut Vec<FinAbGroup>) {
            if remaining == 1 {
                out.push(FinAbGroup {
                    factors: prefix.clone(),
                });
                return;
            }
            let last = prefix.last().copied().unwrap_or(1);
            // The next factor d must be a multiple of `last`, and every later
            // factor is a multiple of d, so d must also divide what remains
            // after it.
            for d in (2..=remaining).filter(|d| d % last == 0 && remaining.is_multiple_of(*d)) {
                let rest = remaining / d;
                if rest == 1 || rest.is_multiple_of(d) {
                    prefix.push(d);
                    extend(prefix, rest, out);
                    prefix.pop();
                }
            }
        }
        assert!(order >= 1);
        let mut out = Vec::new();
        extend(&mut Vec::new(), order, &mut out);
        out.sort();
        out
    }

    /// All groups of order `1..=bound`, by order and then factor list.
    pub fn all_up_to(bound: u64) -> Vec<FinAbGroup> {
        (1..=bound).flat_map(FinAbGroup::all_of_order).collect()
    }
}

impl fmt::Debug for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.factors)
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// An element of a [`FinAbGroup`], as residues `0 ≤ r_i < d_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElem {
    pub coords: Vec<u64>,
}

impl GroupElem {
    pub fn new(group: &FinAbGroup, coords: Vec<u64>) -> Result<Self> {
        if coords.len() != group.rank() || coords.iter().zip(group.factors()).any(|(r, d)| r >= d) {
            return Err(Error::InvalidGroup(format!(
                "coordinates {coords:?} are not residues of {group:?}"
            )));
        }
        Ok(GroupElem { coords })
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "HomLiteral", into = "HomLiteral")]
pub struct GroupHom {
    dom: FinAbGroup,
    cod: FinAbGroup,
    matrix: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HomLiteral {
    dom: FinAbGroup,
    cod: FinAbGroup,
    matrix: Vec<Vec<i64>>,
}

impl TryFrom<HomLiteral> for GroupHom {
    type Error = Error;

    fn try_from(lit: HomLiteral) -> Result<Self> {
        GroupHom::new(lit.dom, lit.cod, lit.matrix)
    }
}

impl From<GroupHom> for HomLiteral {
    fn from(h: GroupHom) -> Self {
        HomLiteral {
            dom: h.dom,
            cod: h.cod,
            matrix: h.matrix,
        }
    }
}

impl GroupHom {
    pub fn new(dom: FinAbGroup, cod: FinAbGroup, matrix: Vec<Vec<i64>>) -> Result<Self> {
        if matrix.len() != cod.rank() {
            return Err(Error::InvalidGroup(format!(
                "matrix has {} rows, codomain has {} factors",
                matrix.len(),
                cod.rank()
            )));
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != dom.rank() {
                return Err(Error::InvalidGroup(format!(
                    "matrix row {i} has {} entries, domain has {} factors",
                    row.len(),
                    dom.rank()
                )));
            }
            let b = cod.factors()[i] as i64;
            for (j, &value) in row.iter().enumerate() {
                let a = dom.factors()[j] as i64;
                if !(0..b).contains(&value) {
                    return Err(Error::IllDefinedHom {
                        row: i,
                        col: j,
                        value,
                        reason: format!("entry must be a residue modulo {b}"),
                    });
                }
                if (a * value) % b != 0 {
                    return Err(Error::IllDefinedHom {
                        row: i,
                        col: j,
                        value,
                        reason: format!("{b} does not divide {a}·{value}"),
                    });
                }
            }
        }
        Ok(GroupHom { dom, cod, matrix })
    }

    pub fn zero(dom: &FinAbGroup, cod: &FinAbGroup) -> Self {
        GroupHom {
            dom: dom.clone(),
            cod: cod.clone(),
            matrix: vec![vec![0; dom.rank()]; cod.rank()],
        }
    }

    pub fn identity(g: &FinAbGroup) -> Self {
        let n = g.rank();
        GroupHom {
            dom: g.clone(),
            cod: g.clone(),
            matrix: (0..n)
                .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
                .collect(),
        }
    }

    pub fn dom(&self) -> &FinAbGroup {
        &self.dom
    }

    pub fn cod(&self) -> &FinAbGroup {
        &self.cod
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn int_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.matrix, self.dom.rank())
    }

    pub fn apply(&self, x: &GroupElem) -> GroupElem {
        let coords = self
            .matrix
            .iter()
            .zip(self.cod.factors())
            .map(|(row, &b)| {
                let s: i64 = row.iter().zip(&x.coords).map(|(&m, &c)| m * c as i64).sum();
                s.rem_euclid(b as i64) as u64
            })
            .collect();
        GroupElem { coords }
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &GroupHom) -> Result<GroupHom> {
        if self.cod != g.dom {
            return Err(Error::SignatureMismatch(format!(
                "cannot compose {:?} -> {:?} with {:?} -> {:?}",
                self.dom, self.cod, g.dom, g.cod
            )));
        }
        let product = g.int_matrix().mul(&self.int_matrix());
        let matrix = product
            .to_rows()
            .into_iter()
            .zip(g.cod.factors())
            .map(|(row, &c)| {
                row.into_iter()
                    .map(|v| {
                        i64::try_from(v.rem_euclid(snf::Int::from(c))).expect("reduced entry fits")
                    })
                    .collect()
            })
            .collect();
        Ok(GroupHom {
            dom: self.dom.clone(),
            cod: g.cod.clone(),
            matrix,
        })
    }
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Hom({:?} -> {:?}, {:?})",
            self.dom, self.cod, self.matrix
        )
    }
}

impl fmt::Display for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            serde_json::to_string(self).map_err(|_| fmt::Error)?
        )
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Every well-defined hom `X -> Y`, once each, in lexicographic order of the
/// row-major matrix entries.
pub fn enumerate_homs(x: &FinAbGroup, y: &FinAbGroup) -> Result<HomIter> {
    enumerate_homs_bounded(x, y, DEFAULT_HOM_GROUP_BOUND)
}

pub fn enumerate_homs_bounded(x: &FinAbGroup, y: &FinAbGroup, bound: u64) -> Result<HomIter> {
    for g in [x, y] {
        if g.order() > bound {
            return Err(Error::BoundExceeded {
                what: "group order",
                size: g.order() as usize,
                bound: bound as usize,
            });
        }
    }
    // Entry (i, j) must be a multiple of b_i / gcd(a_j, b_i).
    let steps: Vec<(i64, i64)> = y
        .factors()
        .iter()
        .flat_map(|&b| {
            x.factors()
                .iter()
                .map(move |&a| ((b / gcd(a, b)) as i64, b as i64))
        })
        .collect();
    Ok(HomIter {
        dom: x.clone(),
        cod: y.clone(),
        counters: vec![0; steps.len()],
        steps,
        done: false,
    })
}

pub struct HomIter {
    dom: FinAbGroup,
    cod: FinAbGroup,
    steps: Vec<(i64, i64)>,
    counters: Vec<i64>,
    done: bool,
}

impl Iterator for HomIter {
    type Item = GroupHom;

    fn next(&mut self) -> Option<GroupHom> {
        if self.done {
            return None;
        }
        let m = self.dom.rank();
        let matrix = (0..self.cod.rank())
            .map(|i| {
                (0..m)
                    .map(|j| self.counters[i * m + j] * self.steps[i * m + j].0)
                    .collect()
            })
            .collect();
        // Odometer, last entry fastest.
        self.done = true;
        for k in (0..self.counters.len()).rev() {
            let (step, modulus) = self.steps[k];
            self.counters[k] += 1;
            if self.counters[k] * step < modulus {
                self.done = false;
                break;
            }
            self.counters[k] = 0;
        }
        Some(GroupHom {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            matrix,
        })
    }
}
