//! Claims about group deviations of finite abelian group homomorphisms.

use std::collections::HashMap;

use serde_json::json;

use super::enumerate::{group_pairs, group_triples, groups, homs};
use super::{all_of, for_all, skip, Outcome, Universe};
use crate::abgroup::table::{oracle_devg1, oracle_devg2};
use crate::abgroup::{
    devg, devg1, devg2, devg_leq, embeds_in, embeds_in_by_search, kernel_lattice, ElementTable,
    FinAbGroup, GroupDeviation, GroupHom,
};
use crate::finset::{kernel_partition, Mapping, Partition};

pub(super) fn lattice_vs_tables(u: &Universe) -> Outcome {
    let all = group_pairs(u.max_oracle_group_order)
        .into_iter()
        .flat_map(|(x, y)| homs(&x, &y));
    for_all(all, |f| {
        let lattice = devg(f);
        let tables = GroupDeviation {
            first: oracle_devg1(f).expect("within table bound"),
            second: oracle_devg2(f).expect("within table bound"),
        };
        (lattice != tables).then(|| json!({ "f": f, "lattice": lattice, "tables": tables }))
    })
}

/// Element-level facts about `f`, from explicit tables.
struct Concrete {
    map: Mapping,
}

impl Concrete {
    fn new(f: &GroupHom, tables: &mut TableCache) -> Self {
        let (x, y) = (tables.get(f.dom()), tables.get(f.cod()));
        Concrete {
            map: x.hom_map(f, &y),
        }
    }
}

#[derive(Default)]
struct TableCache(HashMap<FinAbGroup, ElementTable>);

impl TableCache {
    fn get(&mut self, g: &FinAbGroup) -> ElementTable {
        self.0
            .entry(g.clone())
            .or_insert_with(|| ElementTable::new(g).expect("within table bound"))
            .clone()
    }
}

fn is_bottom(d: &GroupDeviation, x: &FinAbGroup) -> bool {
    d.first == *x && d.second.is_trivial()
}

/// Isomorphism iff the deviation is `(X, 0)` and lies below every deviation
/// of the same signature; surjective iff `devg2` vanishes; injective iff
/// `devg1` is all of `X`.
pub(super) fn group_lemma(u: &Universe) -> Outcome {
    let mut tables = TableCache::default();
    let cases: Vec<(FinAbGroup, FinAbGroup)> = group_pairs(u.max_group_order);
    let all = cases.into_iter().flat_map(|(x, y)| {
        let hs = homs(&x, &y);
        hs.clone().into_iter().map(move |f| (f, hs.clone()))
    });
    for_all(all, |(f, all)| {
        let c = Concrete::new(f, &mut tables);
        let d = devg(f);
        let x = f.dom();
        let minimal =
            is_bottom(&d, x) && all.iter().all(|g| devg_leq(f, g).expect("same signature"));
        let ok = minimal == c.map.is_bijective()
            && d.second.is_trivial() == c.map.is_surjective()
            && (d.first == *x) == c.map.is_injective();
        (!ok).then(|| json!({ "f": f, "devg": d }))
    })
}

/// The same lemma with both components compared by embeddability.
pub(super) fn group_lemma_embedding(u: &Universe) -> Outcome {
    let mut tables = TableCache::default();
    let all = group_pairs(u.max_group_order)
        .into_iter()
        .flat_map(|(x, y)| {
            let hs = homs(&x, &y);
            hs.clone().into_iter().map(move |f| (f, hs.clone()))
        });
    for_all(all, |(f, all)| {
        let c = Concrete::new(f, &mut tables);
        let d = devg(f);
        let blocker = if is_bottom(&d, f.dom()) {
            all.iter().find(|g| {
                let e = devg(g);
                !(embeds_in(&d.first, &e.first) && embeds_in(&d.second, &e.second))
            })
        } else {
            None
        };
        let minimal = is_bottom(&d, f.dom()) && blocker.is_none();
        (minimal != c.map.is_bijective()).then(|| {
            json!({ "f": f, "isomorphism": c.map.is_bijective(), "devg": d, "not_above": blocker })
        })
    })
}

/// Composable pairs `X -f-> Y -g-> Z` with cached per-map data.
fn composable_homs(bound: u64) -> impl Iterator<Item = (GroupHom, GroupHom)> {
    group_triples(bound).into_iter().flat_map(|(x, y, z)| {
        let fs = homs(&x, &y);
        let gs = homs(&y, &z);
        fs.into_iter()
            .flat_map(move |f| gs.clone().into_iter().map(move |g| (f.clone(), g)))
    })
}

#[derive(Default)]
struct HomCache {
    lattice: HashMap<GroupHom, crate::abgroup::snf::IntMatrix>,
    cosets: HashMap<GroupHom, Partition>,
    first: HashMap<GroupHom, FinAbGroup>,
    second: HashMap<GroupHom, FinAbGroup>,
    tables: TableCache,
}

impl HomCache {
    fn lattice(&mut self, f: &GroupHom) -> &crate::abgroup::snf::IntMatrix {
        self.lattice
            .entry(f.clone())
            .or_insert_with(|| kernel_lattice(f))
    }

    fn cosets(&mut self, f: &GroupHom) -> Partition {
        if let Some(p) = self.cosets.get(f) {
            return p.clone();
        }
        let p = kernel_partition(&Concrete::new(f, &mut self.tables).map);
        self.cosets.insert(f.clone(), p.clone());
        p
    }

    fn first(&mut self, f: &GroupHom) -> FinAbGroup {
        self.first
            .entry(f.clone())
            .or_insert_with(|| devg1(f))
            .clone()
    }

    fn second(&mut self, f: &GroupHom) -> FinAbGroup {
        self.second
            .entry(f.clone())
            .or_insert_with(|| devg2(f))
            .clone()
    }
}

/// `ker f ⊆ ker h` for `h = g∘f`, by the kernel lattice of `f` and again by
/// refinement of the explicit coset partitions.
pub(super) fn composition_first(u: &Universe) -> Outcome {
    let mut cache = HomCache::default();
    for_all(composable_homs(u.max_pair_group_order), |(f, g)| {
        let h = f.then(g).expect("composable");
        let gens = cache.lattice(f).clone();
        let image = h.int_matrix().mul(&gens);
        let by_lattice = (0..image.rows()).all(|i| {
            let b = crate::abgroup::snf::Int::from(h.cod().factors()[i]);
            (0..image.cols()).all(|c| image[(i, c)].rem_euclid(b) == 0)
        });
        let by_tables = cache.cosets(f).leq(&cache.cosets(&h)).expect("same domain");
        (!(by_lattice && by_tables)).then(|| json!({ "f": f, "g": g }))
    })
}

/// `devg1(f)` embeds in `devg1(g∘f)`.
pub(super) fn composition_first_embedding(u: &Universe) -> Outcome {
    let mut cache = HomCache::default();
    for_all(composable_homs(u.max_pair_group_order), |(f, g)| {
        let h = f.then(g).expect("composable");
        let (a, b) = (cache.first(f), cache.first(&h));
        (!embeds_in(&a, &b)).then(|| json!({ "f": f, "g": g, "devg1_f": a, "devg1_h": b }))
    })
}

/// `devg2(g)` embeds in `devg2(g∘f)`.
pub(super) fn composition_second(u: &Universe) -> Outcome {
    let mut cache = HomCache::default();
    for_all(composable_homs(u.max_pair_group_order), |(f, g)| {
        let h = f.then(g).expect("composable");
        let (a, b) = (cache.second(g), cache.second(&h));
        (!embeds_in(&a, &b)).then(|| json!({ "f": f, "g": g, "devg2_g": a, "devg2_h": b }))
    })
}

/// Endomorphism pairs of one group realizing both strict embeddings between
/// `devg2(f)` and `devg2(g)`.
pub(super) fn group_incomparability(u: &Universe) -> Outcome {
    if u.max_pair_group_order < 2 {
        return skip("needs max_pair_group_order >= 2");
    }
    let mut count = 0;
    for x in groups(u.max_pair_group_order) {
        let hs = homs(&x, &x);
        let seconds: Vec<FinAbGroup> = hs.iter().map(devg2).collect();
        let strictly = |a: &FinAbGroup, b: &FinAbGroup| embeds_in(a, b) && a.order() < b.order();
        let mut below = None;
        let mut above = None;
        'search: for (i, f) in hs.iter().enumerate() {
            for (j, g) in hs.iter().enumerate() {
                count += 1;
                if below.is_none() && strictly(&seconds[i], &seconds[j]) {
                    below = Some(
                        json!({ "f": f, "g": g, "devg2_f": seconds[i], "devg2_g": seconds[j] }),
                    );
                }
                if above.is_none() && strictly(&seconds[j], &seconds[i]) {
                    above = Some(
                        json!({ "f": f, "g": g, "devg2_f": seconds[i], "devg2_g": seconds[j] }),
                    );
                }
                if below.is_some() && above.is_some() {
                    break 'search;
                }
            }
        }
        if let (Some(below), Some(above)) = (below, above) {
            return Outcome::Found {
                count,
                witness: json!({ "group": x, "below": below, "above": above }),
            };
        }
    }
    Outcome::Absent { count }
}

pub(super) fn embedding_paths(u: &Universe) -> Outcome {
    for_all(group_pairs(u.max_embed_group_order), |(a, b)| {
        let fast = embeds_in(a, b);
        let search = embeds_in_by_search(a, b).expect("within search bound");
        (fast != search).then(|| json!({ "A": a, "B": b, "fast": fast, "search": search }))
    })
}

/// The two identity-and-zero facts used throughout: `devg(id) = (X, 0)` and
/// `devg(0) = (0, Y)`.
pub(super) fn extreme_homs(u: &Universe) -> Outcome {
    all_of([
        (
            "identity",
            for_all(groups(u.max_group_order), |x| {
                let d = devg(&GroupHom::identity(x));
                (!is_bottom(&d, x)).then(|| json!({ "X": x }))
            }),
        ),
        (
            "zero",
            for_all(group_pairs(u.max_group_order), |(x, y)| {
                let d = devg(&GroupHom::zero(x, y));
                (!(d.first.is_trivial() && d.second == *y)).then(|| json!({ "X": x, "Y": y }))
            }),
        ),
    ])
}
