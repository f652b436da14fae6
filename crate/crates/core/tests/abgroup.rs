use proptest::prelude::*;

use setdev::abgroup::deviation::kernel_lattice;
use setdev::abgroup::snf::{smith_normal_form, IntMatrix};
use setdev::abgroup::table::{oracle_devg1, oracle_devg2};
use setdev::abgroup::{
    devg, devg_leq, embeds_in, embeds_in_by_search, enumerate_homs, FinAbGroup, GroupHom,
};

/// Uniform over the isomorphism classes of order at most `max_order`.
fn group(max_order: u64) -> impl Strategy<Value = FinAbGroup> {
    let all: Vec<FinAbGroup> = (1..=max_order).flat_map(FinAbGroup::all_of_order).collect();
    prop::sample::select(all)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A well-defined homomorphism: entry `(i, j)` is a multiple of
/// `b_i / gcd(a_j, b_i)`, scaled by `raw`.
fn hom_with(x: &FinAbGroup, y: &FinAbGroup, raw: &[i64]) -> GroupHom {
    let (m, k) = (x.rank(), y.rank());
    let matrix = (0..k)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let (a, b) = (x.factors()[j], y.factors()[i]);
                    let step = (b / gcd(a, b)) as i64;
                    (raw[i * m + j] * step) % b as i64
                })
                .collect()
        })
        .collect();
    GroupHom::new(x.clone(), y.clone(), matrix).unwrap()
}

const RAW: usize = 64;

fn hom() -> impl Strategy<Value = GroupHom> {
    (group(128), group(128), prop::collection::vec(0i64..24, RAW))
        .prop_map(|(x, y, raw)| hom_with(&x, &y, &raw))
}

fn matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        prop::collection::vec(-20i64..=20, r * c).prop_map(move |v| {
            let rows: Vec<Vec<i64>> = v.chunks(c).map(|row| row.to_vec()).collect();
            IntMatrix::from_rows(&rows, c)
        })
    })
}

proptest! {
    #[test]
    fn snf_certificate(a in matrix()) {
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.left.mul(&a).mul(&s.right), s.diag.clone());
        prop_assert!(s.diag.is_diagonal());
        prop_assert_eq!(s.left.determinant().abs(), 1);
        prop_assert_eq!(s.right.determinant().abs(), 1);
        let d = s.diagonal_entries();
        for w in d.windows(2) {
            prop_assert!(w[0] >= 0);
            if w[0] != 0 {
                prop_assert_eq!(w[1] % w[0], 0);
            } else {
                prop_assert_eq!(w[1], 0);
            }
        }
    }

    #[test]
    fn lattice_matches_tables(f in hom()) {
        let d = devg(&f);
        prop_assert_eq!(&d.first, &oracle_devg1(&f).unwrap());
        prop_assert_eq!(&d.second, &oracle_devg2(&f).unwrap());
        // first isomorphism theorem: |X / ker f| · |Y / f(X)| = |Y|
        prop_assert_eq!(d.first.order() * d.second.order(), f.cod().order());
    }

    #[test]
    fn composition_laws(f in hom(), z in group(128), raw in prop::collection::vec(0i64..24, RAW)) {
        let g = hom_with(f.cod(), &z, &raw);
        let h = f.then(&g).unwrap();
        // ker f ⊆ ker h: h kills every generator of f's kernel lattice
        let image = h.int_matrix().mul(&kernel_lattice(&f));
        for i in 0..image.rows() {
            let b = i128::from(h.cod().factors()[i]);
            prop_assert!((0..image.cols()).all(|c| image[(i, c)].rem_euclid(b) == 0));
        }
        prop_assert!(embeds_in(&devg(&g).second, &devg(&h).second));
    }

    #[test]
    fn embedding_paths_agree(a in group(64), b in group(64)) {
        prop_assert_eq!(embeds_in(&a, &b), embeds_in_by_search(&a, &b).unwrap());
    }
}

fn g(f: &[u64]) -> FinAbGroup {
    FinAbGroup::new(f.to_vec()).unwrap()
}

#[test]
fn documented_examples() {
    let id6 = GroupHom::identity(&g(&[6]));
    assert_eq!(devg(&id6).first, g(&[6]));
    assert!(devg(&id6).second.is_trivial());

    let h: GroupHom = serde_json::from_str(r#"{"dom":[4],"cod":[4],"matrix":[[2]]}"#).unwrap();
    assert_eq!((devg(&h).first, devg(&h).second), (g(&[2]), g(&[2])));

    let err =
        serde_json::from_str::<GroupHom>(r#"{"dom":[2],"cod":[3],"matrix":[[1]]}"#).unwrap_err();
    assert!(err.to_string().contains("3 does not divide 2·1"), "{err}");

    assert!(FinAbGroup::new(vec![4, 2]).is_err());
    assert!(FinAbGroup::new(vec![1]).is_err());
    assert_eq!(FinAbGroup::from_cyclic_orders(&[2, 3]), g(&[6]));
}

#[test]
fn hom_counts() {
    // |Hom(Z/a, Z/b)| = gcd(a, b)
    for a in 1..=12u64 {
        for b in 1..=12u64 {
            let n = enumerate_homs(&FinAbGroup::cyclic(a), &FinAbGroup::cyclic(b))
                .unwrap()
                .count() as u64;
            assert_eq!(n, gcd(a, b), "Hom(Z/{a}, Z/{b})");
        }
    }
    let klein = g(&[2, 2]);
    assert_eq!(enumerate_homs(&klein, &klein).unwrap().count(), 16);
}

#[test]
fn group_counts_by_order() {
    let counts: Vec<usize> = [1, 4, 8, 12, 16, 32, 64]
        .iter()
        .map(|&n| FinAbGroup::all_of_order(n).len())
        .collect();
    assert_eq!(counts, vec![1, 2, 3, 2, 5, 7, 11]);
}

#[test]
fn order_uses_kernel_refinement_first() {
    let x = g(&[2]);
    let id = GroupHom::identity(&x);
    let zero = GroupHom::zero(&x, &x);
    // X/ker(id) = Z/2 does not embed in X/ker(0) = 0, yet ker(id) ⊆ ker(0)
    assert!(!embeds_in(&devg(&id).first, &devg(&zero).first));
    assert!(devg_leq(&id, &zero).unwrap());
}
