//! Group deviations `devg(f) = (X / ker f, Y / f(X))` by integer lattice
//! arithmetic.
//!
//! With `X = Z^m / diag(a)` and `Y = Z^k / diag(b)`:
//! - the cokernel `Y / f(X)` is `Z^k / (M·Z^m + diag(b)·Z^k)`, read off the
//!   Smith normal form of `[M | diag(b)]`;
//! - `ker f` pulls back to the lattice `L = {v ∈ Z^m : M·v ∈ diag(b)·Z^k}`,
//!   the projection of the integer kernel of `[M | -diag(b)]`, and
//!   `X / ker f = Z^m / L`.

use serde::{Deserialize, Serialize};

use super::embed::embeds_in;
use super::snf::{smith_normal_form, Int, IntMatrix};
use super::{FinAbGroup, GroupHom};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupDeviation {
    pub first: FinAbGroup,
    pub second: FinAbGroup,
}

/// Generators (as columns) of the lattice `L ⊆ Z^m` of domain coordinate
/// vectors that `f` sends to zero. Always contains `diag(a)·Z^m`.
pub fn kernel_lattice(f: &GroupHom) -> IntMatrix {
    let m = f.dom().rank();
    let k = f.cod().rank();
    let b: Vec<i64> = f.cod().factors().iter().map(|&d| -(d as i64)).collect();
    let a = f.int_matrix().hstack(&IntMatrix::diagonal(&b));
    let snf = smith_normal_form(&a);
    let rank = snf.rank();
    let free = m + k - rank;
    // L contains e·Z^m for the exponent e of X, so generators are kept
    // reduced mod e, with e·Z^m added back explicitly.
    let e = f.dom().factors().last().map_or(1, |&d| Int::from(d));
    let mut gens = IntMatrix::zeros(m, free + m);
    for (c, col) in (rank..m + k).enumerate() {
        for i in 0..m {
            gens[(i, c)] = snf.right[(i, col)].rem_euclid(e);
        }
    }
    for i in 0..m {
        gens[(i, free + i)] = e;
    }
    gens
}

/// `X / ker f`.
pub fn devg1(f: &GroupHom) -> FinAbGroup {
    let gens = kernel_lattice(f);
    if gens.rows() == 0 {
        return FinAbGroup::trivial();
    }
    let diag = smith_normal_form(&gens).diagonal_entries();
    assert_eq!(diag.len(), gens.rows(), "kernel lattice has full rank");
    FinAbGroup::from_diagonal(&diag)
}

/// `Y / f(X)`.
pub fn devg2(f: &GroupHom) -> FinAbGroup {
    let b: Vec<i64> = f.cod().factors().iter().map(|&d| d as i64).collect();
    if b.is_empty() {
        return FinAbGroup::trivial();
    }
    let relations = f.int_matrix().hstack(&IntMatrix::diagonal(&b));
    FinAbGroup::from_diagonal(&smith_normal_form(&relations).diagonal_entries())
}

pub fn devg(f: &GroupHom) -> GroupDeviation {
    GroupDeviation {
        first: devg1(f),
        second: devg2(f),
    }
}

/// `ker f ⊆ ker g`, i.e. the coset partition `X_f` refines `X_g`. Checked by
/// applying `g` to the generators of `f`'s kernel lattice.
pub fn kernel_contained(f: &GroupHom, g: &GroupHom) -> Result<bool> {
    check_signature(f, g)?;
    let gens = kernel_lattice(f);
    let image = g.int_matrix().mul(&gens);
    Ok((0..image.rows()).all(|i| {
        let b = Int::from(g.cod().factors()[i]);
        (0..image.cols()).all(|c| image[(i, c)].rem_euclid(b) == 0)
    }))
}

fn check_signature(f: &GroupHom, g: &GroupHom) -> Result<()> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::SignatureMismatch(format!(
            "group deviation order compares {:?} -> {:?} with {:?} -> {:?}",
            f.dom(),
            f.cod(),
            g.dom(),
            g.cod()
        )));
    }
    Ok(())
}

/// `devg(f) <= devg(g)`.
///
/// The first components are the coset partitions `X / ker f` and
/// `X / ker g` of the common domain, compared by refinement (equivalently
/// `ker f ⊆ ker g`). The second components are abstract quotients of `Y`,
/// compared by embeddability.
pub fn devg_leq(f: &GroupHom, g: &GroupHom) -> Result<bool> {
    check_signature(f, g)?;
    Ok(kernel_contained(f, g)? && embeds_in(&devg2(f), &devg2(g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroup::table::{oracle_devg1, oracle_devg2};

    fn g(f: &[u64]) -> FinAbGroup {
        FinAbGroup::new(f.to_vec()).unwrap()
    }

    fn hom(dom: &[u64], cod: &[u64], m: Vec<Vec<i64>>) -> GroupHom {
        GroupHom::new(g(dom), g(cod), m).unwrap()
    }

    #[test]
    fn devg1_examples() {
        assert_eq!(devg1(&GroupHom::zero(&g(&[4]), &g(&[4]))), g(&[]));
        assert_eq!(devg1(&GroupHom::identity(&g(&[6]))), g(&[6]));
        assert_eq!(devg1(&hom(&[4], &[4], vec![vec![2]])), g(&[2]));
    }

    #[test]
    fn devg2_examples() {
        assert_eq!(devg2(&hom(&[4], &[2], vec![vec![1]])), g(&[]));
        assert_eq!(devg2(&GroupHom::zero(&g(&[4]), &g(&[4]))), g(&[4]));
        assert_eq!(devg2(&hom(&[4], &[4], vec![vec![2]])), g(&[2]));
    }

    #[test]
    fn devg_examples() {
        let id = GroupHom::identity(&g(&[2, 4]));
        assert_eq!(
            devg(&id),
            GroupDeviation {
                first: g(&[2, 4]),
                second: g(&[])
            }
        );
        let zero = GroupHom::zero(&g(&[2]), &g(&[2]));
        assert_eq!(
            devg(&zero),
            GroupDeviation {
                first: g(&[]),
                second: g(&[2])
            }
        );
        let incl = hom(&[2], &[4], vec![vec![2]]);
        assert_eq!(
            devg(&incl),
            GroupDeviation {
                first: g(&[2]),
                second: g(&[2])
            }
        );
    }

    #[test]
    fn agrees_with_oracle_on_mixed_ranks() {
        let f = hom(
            &[2, 4],
            &[2, 2, 4],
            vec![vec![1, 1], vec![0, 1], vec![2, 2]],
        );
        assert_eq!(devg1(&f), oracle_devg1(&f).unwrap());
        assert_eq!(devg2(&f), oracle_devg2(&f).unwrap());
        let t = GroupHom::zero(&g(&[]), &g(&[3]));
        assert_eq!(
            devg(&t),
            GroupDeviation {
                first: g(&[]),
                second: g(&[3])
            }
        );
    }

    #[test]
    fn order_examples() {
        let x = g(&[2]);
        let id = GroupHom::identity(&x);
        let zero = GroupHom::zero(&x, &x);
        assert!(devg_leq(&id, &zero).unwrap());
        assert!(devg_leq(&zero, &zero).unwrap());
        assert!(!devg_leq(&zero, &id).unwrap());
        assert!(devg_leq(&id, &GroupHom::identity(&g(&[4]))).is_err());
    }

    #[test]
    fn kernel_containment() {
        let x = g(&[4]);
        let double = hom(&[4], &[4], vec![vec![2]]);
        let id = GroupHom::identity(&x);
        assert!(kernel_contained(&id, &double).unwrap());
        assert!(!kernel_contained(&double, &id).unwrap());
    }
}
