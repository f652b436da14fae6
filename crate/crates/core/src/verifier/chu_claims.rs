//! Claims about Chu spaces over `W = {0, 1}` and the embedding of finite
//! sets via `f |-> (f, f^-1)`.

use std::collections::HashSet;

use serde_json::json;

use super::enumerate::{all_mappings, composable_pairs, enumerate_mappings, size_pairs};
use super::{all_of, for_all, skip, Outcome, Universe};
use crate::chu::{
    backward_candidates, compose, e_space, embed, ex_deviation, forced_backward, morphism_is_valid,
    ChuMorphism, ChuSpace,
};
use crate::finset::{kernel_partition, FiniteSet, Mapping, Partition};

/// Every space with at most `max` points and states over `{0, 1}`.
fn small_spaces(max: usize) -> Vec<ChuSpace> {
    let mut out = Vec::new();
    for (p, s) in size_pairs(max, max) {
        for bits in 0..1u64 << (p * s) {
            let matrix = (0..p)
                .map(|x| (0..s).map(|y| (bits >> (x * s + y) & 1) as usize).collect())
                .collect();
            out.push(
                ChuSpace::new(
                    FiniteSet::new(p),
                    FiniteSet::new(s),
                    FiniteSet::new(2),
                    matrix,
                )
                .expect("entries are bits"),
            );
        }
    }
    out
}

fn valid_morphisms(a: &ChuSpace, b: &ChuSpace) -> Vec<ChuMorphism> {
    let mut out = Vec::new();
    for forward in enumerate_mappings(a.points(), b.points()) {
        for backward in enumerate_mappings(b.states(), a.states()) {
            let m = ChuMorphism {
                forward: forward.clone(),
                backward,
            };
            if morphism_is_valid(&m, a, b).expect("matching signature") {
                out.push(m);
            }
        }
    }
    out
}

fn e(x: usize) -> ChuSpace {
    e_space(&FiniteSet::new(x)).expect("within powerset bound")
}

fn embedded(f: &Mapping) -> ChuMorphism {
    embed(f).expect("within powerset bound")
}

/// Identity, composition and associativity laws on all small spaces.
fn laws_on_small_spaces(max: usize) -> Outcome {
    let spaces = small_spaces(max);
    let homs: Vec<Vec<Vec<ChuMorphism>>> = spaces
        .iter()
        .map(|a| spaces.iter().map(|b| valid_morphisms(a, b)).collect())
        .collect();
    let n = spaces.len();
    let identities = for_all(0..n, |&i| {
        let a = &spaces[i];
        let id = ChuMorphism::identity(a);
        if !morphism_is_valid(&id, a, a).expect("matching signature") {
            return Some(json!({ "space": a }));
        }
        (0..n).find_map(|j| {
            homs[i][j].iter().find_map(|m| {
                let left = compose(&id, m).expect("composable");
                let right = compose(m, &ChuMorphism::identity(&spaces[j])).expect("composable");
                (left != *m || right != *m).then(|| json!({ "space": a, "morphism": m }))
            })
        })
    });
    let triples = (0..n).flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))));
    let closure = for_all(triples, |&(i, j, k)| {
        homs[i][j].iter().find_map(|m| {
            homs[j][k].iter().find_map(|p| {
                let c = compose(m, p).expect("composable");
                (!morphism_is_valid(&c, &spaces[i], &spaces[k]).expect("matching signature")).then(
                    || json!({ "A": spaces[i], "B": spaces[j], "C": spaces[k], "m": m, "n": p }),
                )
            })
        })
    });
    // associativity over 4-chains of spaces with at most one point and state
    let tiny: Vec<usize> = (0..n)
        .filter(|&i| spaces[i].points().size() <= 1 && spaces[i].states().size() <= 1)
        .collect();
    let chains = tiny.iter().flat_map(|&i| {
        let tiny = tiny.clone();
        tiny.clone().into_iter().flat_map(move |j| {
            let tiny = tiny.clone();
            tiny.clone()
                .into_iter()
                .flat_map(move |k| tiny.clone().into_iter().map(move |l| (i, j, k, l)))
        })
    });
    let associative = for_all(chains, |&(i, j, k, l)| {
        for a in &homs[i][j] {
            for b in &homs[j][k] {
                for c in &homs[k][l] {
                    if !associates(a, b, c) {
                        return Some(json!({ "m": a, "n": b, "p": c }));
                    }
                }
            }
        }
        None
    });
    all_of([
        ("identity laws", identities),
        ("composition preserves validity", closure),
        ("associativity", associative),
    ])
}

fn associates(a: &ChuMorphism, b: &ChuMorphism, c: &ChuMorphism) -> bool {
    let left = compose(&compose(a, b).expect("composable"), c).expect("composable");
    let right = compose(a, &compose(b, c).expect("composable")).expect("composable");
    left == right
}

/// The same laws on e-spaces, whose morphisms are exactly the embedded
/// mappings.
fn laws_on_e_spaces(max: usize) -> Outcome {
    let identities = for_all(0..=max, |&x| {
        let ex = e(x);
        let id = ChuMorphism::identity(&ex);
        (!morphism_is_valid(&id, &ex, &ex).expect("matching signature"))
            .then(|| json!({ "size": x }))
    });
    let closure = for_all(composable_pairs(max), |(f, g)| {
        let (m, n) = (embedded(f), embedded(g));
        let id_x = ChuMorphism::identity(&e(f.dom().size()));
        let id_y = ChuMorphism::identity(&e(f.cod().size()));
        let c = compose(&m, &n).expect("composable");
        let ok = morphism_is_valid(&c, &e(f.dom().size()), &e(g.cod().size()))
            .expect("matching signature")
            && compose(&id_x, &m).expect("composable") == m
            && compose(&m, &id_y).expect("composable") == m;
        (!ok).then(|| json!({ "f": f, "g": g }))
    });
    let chains = composable_pairs(max).flat_map(|(f, g)| {
        let z = g.cod().clone();
        (0..=max)
            .flat_map(move |w| enumerate_mappings(&z, &FiniteSet::new(w)))
            .map(move |h| (f.clone(), g.clone(), h))
    });
    let associative = for_all(chains, |(f, g, h)| {
        (!associates(&embedded(f), &embedded(g), &embedded(h)))
            .then(|| json!({ "f": f, "g": g, "h": h }))
    });
    all_of([
        ("identity laws", identities),
        ("composition preserves validity", closure),
        ("associativity", associative),
    ])
}

pub(super) fn category_laws(u: &Universe) -> Outcome {
    let bound = u.theorem_bound();
    all_of([
        ("e-spaces", laws_on_e_spaces(bound)),
        ("small spaces", laws_on_small_spaces(bound.min(2))),
    ])
}

/// For `m: A -> B` and `n: B -> C`, the forward composite taken in the
/// applicative order `m ∘ n` (first `n`, then `m`) exists.
pub(super) fn printed_composition_order(u: &Universe) -> Outcome {
    for_all(composable_pairs(u.theorem_bound()), |(f, g)| {
        let (m, n) = (embedded(f), embedded(g));
        let forward = n.forward.then(&m.forward);
        forward.is_err().then(|| {
            json!({
                "m": m,
                "n": n,
                "reason": format!(
                    "m forward starts at {} points, n forward ends at {}",
                    m.forward.dom().size(),
                    n.forward.cod().size()
                ),
            })
        })
    })
}

pub(super) fn embedding_valid(u: &Universe) -> Outcome {
    for_all(all_mappings(u.theorem_bound()), |f| {
        let ok = morphism_is_valid(&embedded(f), &e(f.dom().size()), &e(f.cod().size()))
            .expect("matching signature");
        (!ok).then(|| json!({ "f": f }))
    })
}

pub(super) fn functoriality(u: &Universe) -> Outcome {
    let bound = u.theorem_bound();
    all_of([
        (
            "identities",
            for_all(0..=bound, |&x| {
                let s = FiniteSet::new(x);
                (embedded(&Mapping::identity(&s)) != ChuMorphism::identity(&e(x)))
                    .then(|| json!({ "size": x }))
            }),
        ),
        (
            "composites",
            for_all(composable_pairs(bound), |(f, g)| {
                let h = f.then(g).expect("composable");
                let composed = compose(&embedded(f), &embedded(g)).expect("composable");
                (embedded(&h) != composed).then(|| json!({ "f": f, "g": g }))
            }),
        ),
    ])
}

pub(super) fn faithfulness(u: &Universe) -> Outcome {
    let bound = u.theorem_bound();
    for_all(size_pairs(bound, bound), |&(x, y)| {
        let maps: Vec<Mapping> =
            enumerate_mappings(&FiniteSet::new(x), &FiniteSet::new(y)).collect();
        let images: HashSet<ChuMorphism> = maps.iter().map(embedded).collect();
        (images.len() != maps.len()).then(|| json!({ "X": x, "Y": y }))
    })
}

/// Each backward value is forced: exactly one subset satisfies the
/// adjointness condition at each state, and it is `f^-1` of that state.
pub(super) fn fullness(u: &Universe) -> Outcome {
    for_all(all_mappings(u.theorem_bound()), |f| {
        let (ex, ey) = (e(f.dom().size()), e(f.cod().size()));
        let forced = forced_backward(f, f.dom(), f.cod()).expect("matching signature");
        if forced != embedded(f).backward {
            return Some(json!({ "f": f, "forced": forced }));
        }
        (0..ey.states().size()).find_map(|b| {
            let candidates = backward_candidates(f, &ex, &ey, b);
            (candidates != [forced.apply(b)])
                .then(|| json!({ "f": f, "state": b, "candidates": candidates }))
        })
    })
}

pub(super) fn e_deviation(u: &Universe) -> Outcome {
    let bound = u.max_set_size.min(u.max_powerset_base);
    if bound < 2 {
        return skip("needs a carrier of size >= 2");
    }
    for_all(2..=bound, |&n| {
        let dev = ex_deviation(&FiniteSet::new(n)).expect("size >= 2");
        let width = 1usize << n;
        let pairs = 0..n * width;
        let outside: Vec<usize> = pairs
            .clone()
            .filter(|k| (k % width) >> (k / width) & 1 == 0)
            .collect();
        let inside: Vec<usize> = pairs
            .filter(|k| (k % width) >> (k / width) & 1 == 1)
            .collect();
        let half = n << (n - 1);
        let expected = Partition::from_blocks(n * width, vec![outside.clone(), inside.clone()])
            .expect("two blocks");
        let ok = dev.missed.is_empty()
            && dev.part == expected
            && outside.len() == half
            && inside.len() == half;
        (!ok).then(|| json!({ "size": n, "deviation": dev }))
    })
}

pub(super) fn e_kernel(u: &Universe) -> Outcome {
    let bound = u.max_set_size.min(u.max_powerset_base);
    for_all(0..=bound, |&n| {
        let eval = e(n).evaluation_mapping();
        let classes = kernel_partition(&eval);
        let width = 1usize << n;
        let member = |k: usize| (k % width) >> (k / width) & 1 == 1;
        let size = n * width;
        (0..size)
            .flat_map(|p| (0..size).map(move |q| (p, q)))
            .find(|&(p, q)| {
                (classes.block_of(p) == classes.block_of(q)) != (member(p) == member(q))
            })
            .map(|(p, q)| {
                json!({
                    "size": n,
                    "first": [p / width, (p % width)],
                    "second": [q / width, (q % width)],
                })
            })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thirty_one_small_spaces() {
        assert_eq!(small_spaces(2).len(), 31);
    }

    #[test]
    fn printed_order_fails_at_smallest_size_mismatch() {
        match printed_composition_order(&Universe::default()) {
            Outcome::Fails { witness, .. } => {
                assert_eq!(
                    witness["m"]["forward"],
                    json!({ "dom": 0, "cod": 0, "table": [] })
                );
                assert_eq!(
                    witness["n"]["forward"],
                    json!({ "dom": 0, "cod": 1, "table": [] })
                );
            }
            other => panic!("{other:?}"),
        }
    }
}
