//! Claims about single mappings and composable pairs of finite sets.

use serde::Serialize;
use serde_json::{json, Value};

use super::enumerate::{
    all_mappings, composable_pairs, endo_pairs, enumerate_mappings, size_pairs,
};
use super::{all_of, exists, for_all, skip, Outcome, Universe};
use crate::finset::{
    canonical_factorization, classify, deviation, deviation_leq, image, kernel_partition,
    Classification, FiniteSet, Mapping, Partition, Subset,
};
use crate::powerset::identified_with_base;

fn missed(f: &Mapping) -> Subset {
    image(f).complement()
}

fn strictly_inside(a: &Subset, b: &Subset) -> bool {
    a.is_subset_of(b) && a != b
}

pub(super) fn factorization(u: &Universe) -> Outcome {
    for_all(all_mappings(u.max_set_size), |f| {
        let fac = canonical_factorization(f);
        let ok = fac.compose() == *f
            && fac.proj.dom() == f.dom()
            && fac.proj.is_surjective()
            && fac.proj.cod().size() == kernel_partition(f).num_blocks()
            && fac.mid.is_bijective()
            && fac.incl.is_injective()
            && fac.incl.cod() == f.cod()
            && fac.incl.dom().size() == image(f).len();
        (!ok).then(|| json!({ "f": f }))
    })
}

pub(super) fn classification(u: &Universe) -> Outcome {
    for_all(all_mappings(u.max_set_size), |f| {
        let by_deviation = classify(f);
        let direct = Classification::direct(f);
        (by_deviation != direct)
            .then(|| json!({ "f": f, "by_deviation": by_deviation, "direct": direct }))
    })
}

/// The fibres `f^-1({y})`, `y ∈ f(X)`, as a partition of `X`.
fn fibres(f: &Mapping) -> Partition {
    let blocks = image(f)
        .iter()
        .map(|y| {
            f.preimage_of(&Subset::from_elements(f.cod().size(), [y]).expect("y in Y"))
                .elements()
        })
        .collect();
    Partition::from_blocks(f.dom().size(), blocks).expect("fibres partition the domain")
}

pub(super) fn identifications(u: &Universe) -> Outcome {
    all_of([
        (
            "identity kernel is X",
            for_all(0..=u.max_set_size, |&n| {
                let id = Mapping::identity(&FiniteSet::new(n));
                (!identified_with_base(&kernel_partition(&id))).then(|| json!({ "size": n }))
            }),
        ),
        (
            "kernel blocks are fibres",
            for_all(all_mappings(u.max_set_size), |f| {
                (kernel_partition(f) != fibres(f)).then(|| json!({ "f": f }))
            }),
        ),
    ])
}

pub(super) fn kernel_extremes(u: &Universe) -> Outcome {
    for_all(all_mappings(u.max_set_size), |f| {
        let n = f.dom().size();
        let p = kernel_partition(f);
        let bounds = Partition::discrete(n).leq(&p).expect("same base")
            && p.leq(&Partition::indiscrete(n)).expect("same base");
        let injective = (p == Partition::discrete(n)) == f.is_injective();
        let constant = (p == Partition::indiscrete(n)) == f.is_constant();
        (!(bounds && injective && constant)).then(|| json!({ "f": f }))
    })
}

pub(super) fn asymmetric_criteria(u: &Universe) -> Outcome {
    for_all(all_mappings(u.max_set_size), |f| {
        let id = Mapping::identity(f.dom());
        let injective = (kernel_partition(f) == kernel_partition(&id)) == f.is_injective();
        let surjective = image(f).is_full() == f.is_surjective();
        (!(injective && surjective)).then(|| json!({ "f": f }))
    })
}

/// Reflexivity, antisymmetry and transitivity of refinement on every
/// partition of sets of size `≤ max_set_size`.
pub(super) fn partition_order(u: &Universe) -> Outcome {
    let by_size: Vec<Vec<Partition>> = (0..=u.max_set_size).map(Partition::all).collect();
    let mut cases = Vec::new();
    for all in &by_size {
        for p in all {
            for q in all {
                for r in all {
                    cases.push((p, q, r));
                }
            }
        }
    }
    for_all(cases, |&(p, q, r)| {
        let leq = |a: &Partition, b: &Partition| a.leq(b).expect("same base");
        let reflexive = leq(p, p);
        let antisymmetric = !(leq(p, q) && leq(q, p)) || p == q;
        let transitive = !(leq(p, q) && leq(q, r)) || leq(p, r);
        (!(reflexive && antisymmetric && transitive)).then(|| json!({ "p": p, "q": q, "r": r }))
    })
}

fn is_bottom(f: &Mapping) -> bool {
    let d = deviation(f);
    identified_with_base(&d.part) && d.missed.is_empty()
}

fn below_all(f: &Mapping) -> Option<Mapping> {
    enumerate_mappings(f.dom(), f.cod()).find(|g| !deviation_leq(f, g).expect("same signature"))
}

/// Bijective iff the deviation is `(X, ∅)` and lies below every deviation
/// of the same signature.
pub(super) fn bijection_minimality(u: &Universe) -> Outcome {
    for_all(all_mappings(u.max_set_size), |f| {
        let rhs = is_bottom(f) && below_all(f).is_none();
        (rhs != f.is_bijective()).then(|| json!({ "f": f, "bijective": f.is_bijective() }))
    })
}

/// Whether lying below every deviation of the same signature already forces
/// bijectivity.
pub(super) fn minimality_alone(u: &Universe) -> Outcome {
    for_all(all_mappings(u.max_set_size), |f| {
        (below_all(f).is_none() && !f.is_bijective()).then(|| json!({ "f": f }))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Incomparability {
    pub size: usize,
    /// `dev2(f) ⊊ dev2(g)`.
    pub below: (Mapping, Mapping),
    /// `dev2(f) ⊋ dev2(g)`.
    pub above: (Mapping, Mapping),
}

/// Endomap pairs on a common carrier realizing both strict orders between
/// `dev2(f)` and `dev2(g)`, at the smallest carrier that has both. `None`
/// below carrier size 2 or when the universe holds no such pairs.
pub fn find_dev2_incomparability(u: &Universe) -> Option<Incomparability> {
    incomparability_search(u).0
}

fn incomparability_search(u: &Universe) -> (Option<Incomparability>, u64) {
    let mut count = 0;
    for n in 0..=u.max_triple_size {
        let mut below = None;
        let mut above = None;
        for (f, g) in endo_pairs(n) {
            count += 1;
            let (df, dg) = (missed(&f), missed(&g));
            if below.is_none() && strictly_inside(&df, &dg) {
                below = Some((f.clone(), g.clone()));
            }
            if above.is_none() && strictly_inside(&dg, &df) {
                above = Some((f, g));
            }
            if below.is_some() && above.is_some() {
                break;
            }
        }
        if let (Some(below), Some(above)) = (below, above) {
            return (
                Some(Incomparability {
                    size: n,
                    below,
                    above,
                }),
                count,
            );
        }
    }
    (None, count)
}

pub(super) fn dev2_incomparability(u: &Universe) -> Outcome {
    if u.max_triple_size < 2 {
        return skip("needs max_triple_size >= 2");
    }
    match incomparability_search(u) {
        (Some(w), count) => Outcome::Found {
            count,
            witness: serde_json::to_value(w).expect("serializable"),
        },
        (None, count) => Outcome::Absent { count },
    }
}

/// Two mappings with the same signature whose canonical middle parts have
/// different signatures.
pub fn check_rho_not_functor(u: &Universe) -> Option<Value> {
    match rho_search(u) {
        Outcome::Found { witness, .. } => Some(witness),
        _ => None,
    }
}

fn rho_search(u: &Universe) -> Outcome {
    let pairs = size_pairs(u.max_set_size, u.max_set_size)
        .into_iter()
        .flat_map(|(x, y)| {
            let (sx, sy) = (FiniteSet::new(x), FiniteSet::new(y));
            let maps: Vec<Mapping> = enumerate_mappings(&sx, &sy).collect();
            let second = maps.clone();
            maps.into_iter()
                .flat_map(move |f| second.clone().into_iter().map(move |g| (f.clone(), g)))
        });
    exists(pairs, |(f, g)| {
        let kernels_differ = kernel_partition(f) != kernel_partition(g);
        let images_differ = image(f) != image(g);
        (kernels_differ || images_differ).then(|| {
            json!({
                "f": f,
                "g": g,
                "kernel_f": kernel_partition(f),
                "kernel_g": kernel_partition(g),
                "image_f": image(f),
                "image_g": image(g),
            })
        })
    })
}

pub(super) fn rho_not_functor(u: &Universe) -> Outcome {
    if u.max_set_size < 2 {
        return skip("needs max_set_size >= 2");
    }
    rho_search(u)
}

pub(super) fn composition_dev1(u: &Universe) -> Outcome {
    for_all(composable_pairs(u.max_triple_size), |(f, g)| {
        let h = f.then(g).expect("composable");
        let ok = kernel_partition(f)
            .leq(&kernel_partition(&h))
            .expect("same domain");
        (!ok).then(|| json!({ "f": f, "g": g }))
    })
}

pub(super) fn composition_dev2(u: &Universe) -> Outcome {
    for_all(composable_pairs(u.max_triple_size), |(f, g)| {
        let h = f.then(g).expect("composable");
        (!missed(g).is_subset_of(&missed(&h))).then(|| json!({ "f": f, "g": g }))
    })
}

/// `dev2(f)` need not lie inside `dev2(g∘f)`, although `dev1(f)` always
/// refines `dev1(g∘f)`.
pub(super) fn dev2_not_monotone(u: &Universe) -> Outcome {
    if u.max_triple_size < 2 {
        return skip("needs max_triple_size >= 2");
    }
    let pairs = (0..=u.max_triple_size).flat_map(endo_pairs);
    exists(pairs, |(f, g)| {
        let h = f.then(g).expect("composable");
        (!missed(f).is_subset_of(&missed(&h)))
            .then(|| json!({ "f": f, "g": g, "dev2_f": missed(f), "dev2_h": missed(&h) }))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn incomparability_at_size_two() {
        let w = find_dev2_incomparability(&Universe::default()).unwrap();
        assert_eq!(w.size, 2);
        assert_eq!(w.below.0.table(), &[0, 1]);
        assert_eq!(w.below.1.table(), &[0, 0]);
        assert_eq!(w.above.0.table(), &[0, 0]);
        assert_eq!(w.above.1.table(), &[0, 1]);
        let small = Universe {
            max_triple_size: 1,
            ..Universe::default()
        };
        assert!(find_dev2_incomparability(&small).is_none());
    }

    #[test]
    fn rho_witness() {
        let w = check_rho_not_functor(&Universe::default()).unwrap();
        assert_eq!(w["f"]["table"], json!([0]));
        assert_eq!(w["g"]["table"], json!([1]));
        assert!(check_rho_not_functor(&Universe {
            max_set_size: 1,
            ..Universe::default()
        })
        .is_none());
    }

    #[test]
    fn minimality_alone_fails_on_a_single_mapping() {
        match minimality_alone(&Universe::default()) {
            Outcome::Fails { witness, .. } => {
                assert_eq!(witness["f"], json!({ "dom": 0, "cod": 1, "table": [] }))
            }
            other => panic!("{other:?}"),
        }
    }
}
