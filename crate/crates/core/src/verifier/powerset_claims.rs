//! Claims about the direct image `f~`, the preimage `f^-1`, and their
//! deviations.
//!
//! The induced maps come from [`crate::powerset`]; the reference values they
//! are compared with are recomputed here from `Mapping::image_of` and
//! `Mapping::preimage_of` one subset at a time.

use serde_json::{json, Value};

use super::enumerate::all_mappings;
use super::{for_all, Outcome, Universe};
use crate::finset::{image, kernel_partition, Mapping, Subset};
use crate::powerset::{
    direct_image_map, identified_with_base, image_subset_in_codomain, kappa, preimage_map,
    restrict_preimage_to_image,
};

struct Induced {
    f: Mapping,
    direct: Mapping,
    pre: Mapping,
    restricted: Mapping,
}

impl Induced {
    fn new(f: &Mapping) -> Self {
        Induced {
            f: f.clone(),
            direct: direct_image_map(f).expect("within powerset bound"),
            pre: preimage_map(f).expect("within powerset bound"),
            restricted: restrict_preimage_to_image(f).expect("within powerset bound"),
        }
    }
}

fn induced(bound: usize) -> impl Iterator<Item = Induced> {
    all_mappings(bound).map(|f| Induced::new(&f))
}

fn subsets(n: usize) -> impl Iterator<Item = Subset> {
    (0..1u64 << n).map(move |m| Subset::from_mask(n, m))
}

/// `dev2` of an induced map as a list of the subsets it misses.
fn missed_subsets(m: &Mapping, base: usize) -> Vec<Vec<usize>> {
    image(m)
        .complement()
        .iter()
        .map(|k| Subset::from_mask(base, k as u64).elements())
        .collect()
}

/// `P(Y) \ f~(P(X))`, by taking `f(A)` for every `A ⊆ X`.
fn brute_direct_missed(f: &Mapping) -> Vec<Vec<usize>> {
    let hit: Vec<Subset> = subsets(f.dom().size()).map(|a| f.image_of(&a)).collect();
    subsets(f.cod().size())
        .filter(|b| !hit.contains(b))
        .map(|b| b.elements())
        .collect()
}

/// `P(X) \ f^-1(P(Y))`, by taking `f^-1(U)` for every `U ⊆ Y`.
fn brute_preimage_missed(f: &Mapping) -> Vec<Vec<usize>> {
    let hit: Vec<Subset> = subsets(f.cod().size()).map(|u| f.preimage_of(&u)).collect();
    subsets(f.dom().size())
        .filter(|a| !hit.contains(a))
        .map(|a| a.elements())
        .collect()
}

/// `{B ⊆ Y : B ⊄ f(X)}`.
fn not_inside_image(f: &Mapping) -> Vec<Vec<usize>> {
    let img = image(f);
    subsets(f.cod().size())
        .filter(|b| !b.is_subset_of(&img))
        .map(|b| b.elements())
        .collect()
}

/// Nonempty subsets of `Y \ f(X)`, in mask order.
fn nonempty_subsets_of_missed(f: &Mapping) -> Vec<Vec<usize>> {
    let missed = image(f).complement();
    subsets(f.cod().size())
        .filter(|b| !b.is_empty() && b.is_subset_of(&missed))
        .map(|b| b.elements())
        .collect()
}

fn kappa_bijective(f: &Mapping) -> bool {
    kappa(f).expect("within powerset bound").is_bijective()
}

pub(super) fn empty_image(u: &Universe) -> Outcome {
    for_all(induced(u.powerset_bound()), |m| {
        let bad = (0..m.direct.dom().size()).find(|&a| (m.direct.apply(a) == 0) != (a == 0))?;
        Some(json!({ "f": m.f, "A": Subset::from_mask(m.f.dom().size(), bad as u64) }))
    })
}

pub(super) fn direct_image_lemma(u: &Universe) -> Outcome {
    for_all(induced(u.powerset_bound()), |m| {
        let ok = m.f.is_injective() == m.direct.is_injective()
            && m.f.is_surjective() == m.direct.is_surjective()
            && m.f.is_bijective() == m.direct.is_bijective();
        (!ok).then(|| json!({ "f": m.f }))
    })
}

pub(super) fn preimage_lemma(u: &Universe) -> Outcome {
    for_all(induced(u.powerset_bound()), |m| {
        let ok = m.pre.is_surjective() == m.f.is_injective()
            && m.restricted.is_injective()
            && m.pre.is_injective() == m.f.is_surjective()
            && m.pre.is_bijective() == m.f.is_bijective();
        (!ok).then(|| json!({ "f": m.f }))
    })
}

pub(super) fn round_trips(u: &Universe) -> Outcome {
    for_all(all_mappings(u.powerset_bound()), |f| {
        let mut all_equal = true;
        for a in subsets(f.dom().size()) {
            let back = f.preimage_of(&f.image_of(&a));
            if !a.is_subset_of(&back) {
                return Some(json!({ "f": f, "A": a }));
            }
            all_equal &= back == a;
        }
        let img = image(f);
        for v in subsets(f.cod().size()).filter(|v| v.is_subset_of(&img)) {
            if f.image_of(&f.preimage_of(&v)) != v {
                return Some(json!({ "f": f, "U": v }));
            }
        }
        (all_equal != f.is_injective()).then(|| json!({ "f": f, "injective": f.is_injective() }))
    })
}

pub(super) fn preimage_classes(u: &Universe) -> Outcome {
    for_all(induced(u.powerset_bound()), |m| {
        let classes = kernel_partition(&m.pre);
        let img = image(&m.f).to_mask() as usize;
        // each class of f^-1 is reached from exactly one subset of f(X)
        let restricted_discrete = identified_with_base(&kernel_partition(&m.restricted));
        let through_image =
            (0..m.pre.dom().size()).all(|k| classes.block_of(k) == classes.block_of(k & img));
        let surjective = m.f.is_surjective() == identified_with_base(&classes);
        (!(restricted_discrete && kappa_bijective(&m.f) && through_image && surjective))
            .then(|| json!({ "f": m.f }))
    })
}

pub(super) fn preimage_deviation(u: &Universe) -> Outcome {
    for_all(induced(u.powerset_bound()), |m| {
        let x = m.f.dom().size();
        let classes = kernel_partition(&m.pre);
        let missed = missed_subsets(&m.pre, x);
        let brute = brute_preimage_missed(&m.f);
        let injective = kappa_bijective(&m.f) && brute.is_empty();
        let surjective = identified_with_base(&classes) && missed == brute;
        let bijective = identified_with_base(&classes) && brute.is_empty();
        let ok = injective == m.f.is_injective()
            && surjective == m.f.is_surjective()
            && bijective == m.f.is_bijective();
        (!ok).then(|| json!({ "f": m.f }))
    })
}

pub(super) fn left_inverse(u: &Universe) -> Outcome {
    for_all(induced(u.powerset_bound()), |m| {
        let id = Mapping::identity(m.direct.dom());
        (m.f.is_injective() && m.direct.then(&m.pre).expect("composable") != id)
            .then(|| json!({ "f": m.f }))
    })
}

pub(super) fn image_section(u: &Universe) -> Outcome {
    for_all(induced(u.powerset_bound()), |m| {
        let round = m.restricted.then(&m.direct).expect("composable");
        let inclusion: Vec<usize> = (0..m.restricted.dom().size())
            .map(|v| image_subset_in_codomain(&m.f, v))
            .collect();
        (round.table() != inclusion.as_slice()).then(|| json!({ "f": m.f }))
    })
}

pub(super) fn right_inverse(u: &Universe) -> Outcome {
    for_all(induced(u.powerset_bound()), |m| {
        let id = Mapping::identity(m.pre.dom());
        (m.f.is_surjective() && m.pre.then(&m.direct).expect("composable") != id)
            .then(|| json!({ "f": m.f }))
    })
}

pub(super) fn restricted_injective(u: &Universe) -> Outcome {
    for_all(induced(u.powerset_bound()), |m| {
        (!m.restricted.is_injective()).then(|| json!({ "f": m.f }))
    })
}

/// Evaluates each listed condition on its own; they must all agree.
fn equivalent(u: &Universe, items: fn(&Induced) -> Vec<(&'static str, bool)>) -> Outcome {
    for_all(induced(u.theorem_bound()), |m| {
        let values = items(m);
        let first = values[0].1;
        values.iter().any(|&(_, v)| v != first).then(|| {
            let conditions: serde_json::Map<String, Value> = values
                .iter()
                .map(|&(k, v)| (k.to_string(), Value::Bool(v)))
                .collect();
            json!({ "f": m.f, "conditions": conditions })
        })
    })
}

fn direct_kernel_is_base(m: &Induced) -> bool {
    identified_with_base(&kernel_partition(&m.direct))
}

pub(super) fn injective_theorem(u: &Universe) -> Outcome {
    equivalent(u, |m| {
        let y = m.f.cod().size();
        vec![
            ("injective", m.f.is_injective()),
            ("f~ injective", m.direct.is_injective()),
            ("f^-1 surjective", m.pre.is_surjective()),
            (
                "dev(f) = (X, Y \\ f(X))",
                identified_with_base(&kernel_partition(&m.f))
                    && image(&m.f).complement() == brute_missed_points(&m.f),
            ),
            (
                "dev(f~) = (P(X), P(Y) \\ P(f(X)))",
                direct_kernel_is_base(m) && missed_subsets(&m.direct, y) == not_inside_image(&m.f),
            ),
            (
                "dev(f^-1) = (P(f(X)) via kappa, empty)",
                kappa_bijective(&m.f) && missed_subsets(&m.pre, m.f.dom().size()).is_empty(),
            ),
        ]
    })
}

fn brute_missed_points(f: &Mapping) -> Subset {
    Subset::from_elements(
        f.cod().size(),
        f.cod().elements().filter(|y| !f.table().contains(y)),
    )
    .expect("points of Y")
}

pub(super) fn surjective_theorem(u: &Universe) -> Outcome {
    equivalent(u, |m| {
        let y = m.f.cod().size();
        vec![
            ("f surjective", m.f.is_surjective()),
            ("f~ surjective", m.direct.is_surjective()),
            ("f^-1 injective", m.pre.is_injective()),
            (
                "dev(f) = (X_f, empty)",
                brute_missed_points(&m.f).is_empty(),
            ),
            (
                "dev(f~) = (P(X)_f~, empty)",
                missed_subsets(&m.direct, y).is_empty(),
            ),
            (
                "dev(f^-1) = (P(Y), P(X) \\ f^-1(P(Y)))",
                identified_with_base(&kernel_partition(&m.pre))
                    && missed_subsets(&m.pre, m.f.dom().size()) == brute_preimage_missed(&m.f),
            ),
        ]
    })
}

pub(super) fn bijective_theorem(u: &Universe) -> Outcome {
    equivalent(u, |m| {
        let (x, y) = (m.f.dom().size(), m.f.cod().size());
        vec![
            ("f bijective", m.f.is_bijective()),
            ("f~ bijective", m.direct.is_bijective()),
            ("f^-1 bijective", m.pre.is_bijective()),
            (
                "dev(f) = (X, empty)",
                identified_with_base(&kernel_partition(&m.f))
                    && brute_missed_points(&m.f).is_empty(),
            ),
            (
                "dev(f~) = (P(X), empty)",
                direct_kernel_is_base(m) && missed_subsets(&m.direct, y).is_empty(),
            ),
            (
                "dev(f^-1) = (P(Y), empty)",
                identified_with_base(&kernel_partition(&m.pre))
                    && missed_subsets(&m.pre, x).is_empty(),
            ),
        ]
    })
}

/// `dev2(f~)`, read off the table of `f~`, equals both the brute-force
/// complement of `{f(A) : A ⊆ X}` and `{B ⊆ Y : B ⊄ f(X)}`.
pub(super) fn direct_missed_computed(u: &Universe) -> Outcome {
    let bound = u.max_triple_size.min(u.max_powerset_base);
    for_all(induced(bound), |m| {
        let from_table = missed_subsets(&m.direct, m.f.cod().size());
        let brute = brute_direct_missed(&m.f);
        let formula = not_inside_image(&m.f);
        (from_table != brute || brute != formula).then(|| {
            json!({ "f": m.f, "from_table": from_table, "brute_force": brute, "formula": formula })
        })
    })
}

/// Injectivity against `dev(f~) = (P(X), P(Y \ f(X)))` read literally, with
/// the empty subset left out of `P(Y \ f(X))` since `f~` never misses `∅`.
pub(super) fn direct_missed_literal(u: &Universe) -> Outcome {
    for_all(induced(u.theorem_bound()), |m| {
        let computed = missed_subsets(&m.direct, m.f.cod().size());
        let literal = nonempty_subsets_of_missed(&m.f);
        let item = direct_kernel_is_base(m) && computed == literal;
        (item != m.f.is_injective()).then(|| {
            json!({
                "f": m.f,
                "injective": m.f.is_injective(),
                "direct_missed": computed,
                "literal_missed": literal,
            })
        })
    })
}
