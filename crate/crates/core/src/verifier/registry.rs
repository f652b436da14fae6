//! The claim table. Order here is report order.

use super::Claim;
use super::ClaimKind::{Existential, ReportOnly, Universal};
use super::Verdict::{CounterexampleFoundAsRequired as Found, RefutedAsStated, Verified};
use super::{chu_claims as chu, group_claims as grp, powerset_claims as ps, set_claims as set};

const CLAIMS: &[Claim] = &[
    // mappings of finite sets
    Claim {
        id: "0.3",
        description: "f = incl ∘ mid ∘ proj with proj onto the blocks of X_f surjective, mid bijective, incl injective",
        kind: Universal,
        expected: Verified,
        check: set::factorization,
    },
    Claim {
        id: "0.8-0.10",
        description: "bijective, surjective, injective and constant read off dev(f) agree with the direct definitions",
        kind: Universal,
        expected: Verified,
        check: set::classification,
    },
    Claim {
        id: "0.11",
        description: "X_{id_X} is X under x ↦ {x}, and the blocks of X_f are the fibres f^-1({y}), y ∈ f(X)",
        kind: Universal,
        expected: Verified,
        check: set::identifications,
    },
    Claim {
        id: "R0.1",
        description: "rho is not a functor: some f, f': X → Y differ in X_f or in f(X)",
        kind: Existential,
        expected: Found,
        check: set::rho_not_functor,
    },
    Claim {
        id: "1.2-order",
        description: "refinement is reflexive, antisymmetric and transitive on all partitions",
        kind: Universal,
        expected: Verified,
        check: set::partition_order,
    },
    Claim {
        id: "1.3-1.5",
        description: "X_{id_X} ≤ X_f ≤ {X}; X_f = X_{id_X} iff f injective; X_f = {X} iff f constant",
        kind: Universal,
        expected: Verified,
        check: set::kernel_extremes,
    },
    Claim {
        id: "L1.1",
        description: "f bijective iff dev(f) = (X, ∅) and dev(f) ≤ dev(f') for every f': X → Y",
        kind: Universal,
        expected: Verified,
        check: set::bijection_minimality,
    },
    Claim {
        id: "L1.1-minimality",
        description: "dev(f) ≤ dev(f') for every f': X → Y alone forces f bijective",
        kind: ReportOnly,
        expected: RefutedAsStated,
        check: set::minimality_alone,
    },
    Claim {
        id: "T1.1",
        description: "dev1(f) ≤ dev1(g ∘ f) for all composable f, g",
        kind: Universal,
        expected: Verified,
        check: set::composition_dev1,
    },
    Claim {
        id: "1.12",
        description: "dev2(g) ⊆ dev2(g ∘ f) for all composable f, g",
        kind: Universal,
        expected: Verified,
        check: set::composition_dev2,
    },
    Claim {
        id: "T1.2-counterexample",
        description: "on one carrier, some f, g have dev2(f) ⊊ dev2(g) and some have dev2(f) ⊋ dev2(g)",
        kind: Existential,
        expected: Found,
        check: set::dev2_incomparability,
    },
    Claim {
        id: "S4-asymmetry",
        description: "dev2(f) need not lie inside dev2(g ∘ f), unlike dev1",
        kind: Existential,
        expected: Found,
        check: set::dev2_not_monotone,
    },
    Claim {
        id: "4.2-4.3",
        description: "f injective iff X_f = X_{id_X}; f surjective iff f(X) = Y",
        kind: Universal,
        expected: Verified,
        check: set::asymmetric_criteria,
    },
    // abelian groups
    Claim {
        id: "devg-oracle",
        description: "lattice-derived devg1, devg2 equal the invariant factors of the explicit coset quotients",
        kind: Universal,
        expected: Verified,
        check: grp::lattice_vs_tables,
    },
    Claim {
        id: "devg-extremes",
        description: "devg(id_X) = (X, 0) and devg(0: X → Y) = (0, Y)",
        kind: Universal,
        expected: Verified,
        check: grp::extreme_homs,
    },
    Claim {
        id: "L2.1",
        description: "f iso iff devg(f) = (X, 0) ≤ devg(f') for all f'; surjective iff devg2(f) = 0; injective iff devg1(f) = X",
        kind: Universal,
        expected: Verified,
        check: grp::group_lemma,
    },
    Claim {
        id: "2.4-embedding-literal",
        description: "f iso iff devg(f) = (X, 0) and both components embed in those of every devg(f')",
        kind: ReportOnly,
        expected: RefutedAsStated,
        check: grp::group_lemma_embedding,
    },
    Claim {
        id: "T2.1-2.7",
        description: "ker f ⊆ ker(g ∘ f), i.e. devg1(f) ≤ devg1(g ∘ f) as coset partitions",
        kind: Universal,
        expected: Verified,
        check: grp::composition_first,
    },
    Claim {
        id: "2.7-embedding-literal",
        description: "devg1(f) embeds in devg1(g ∘ f) as abstract groups",
        kind: ReportOnly,
        expected: RefutedAsStated,
        check: grp::composition_first_embedding,
    },
    Claim {
        id: "T2.1-2.8",
        description: "devg2(g) embeds in devg2(g ∘ f)",
        kind: Universal,
        expected: Verified,
        check: grp::composition_second,
    },
    Claim {
        id: "T2.1-counterexample",
        description: "on one group, some f, g have devg2(f) strictly inside devg2(g) and some the reverse",
        kind: Existential,
        expected: Found,
        check: grp::group_incomparability,
    },
    Claim {
        id: "embeds-fast-vs-oracle",
        description: "the conjugate-partition criterion agrees with the injective-homomorphism search",
        kind: Universal,
        expected: Verified,
        check: grp::embedding_paths,
    },
    // Chu spaces
    Claim {
        id: "3.4-category-laws",
        description: "identities are valid and neutral, composites of valid morphisms are valid, composition is associative",
        kind: Universal,
        expected: Verified,
        check: chu::category_laws,
    },
    Claim {
        id: "3.5-composition-order",
        description: "the forward composite in applicative order m ∘ n exists for m: A → B, n: B → C",
        kind: ReportOnly,
        expected: RefutedAsStated,
        check: chu::printed_composition_order,
    },
    Claim {
        id: "3.6-validity",
        description: "(f, f^-1) satisfies the adjointness condition between e-spaces",
        kind: Universal,
        expected: Verified,
        check: chu::embedding_valid,
    },
    Claim {
        id: "E-functoriality",
        description: "E(id) = id and E(g ∘ f) = E(f) followed by E(g)",
        kind: Universal,
        expected: Verified,
        check: chu::functoriality,
    },
    Claim {
        id: "E-faithfulness",
        description: "E is injective on each Hom(X, Y)",
        kind: Universal,
        expected: Verified,
        check: chu::faithfulness,
    },
    Claim {
        id: "E-fullness",
        description: "the adjointness condition forces the backward map, which is f^-1",
        kind: Universal,
        expected: Verified,
        check: chu::fullness,
    },
    Claim {
        id: "3.11-3.14",
        description: "dev2(e_X) = ∅ and dev1(e_X) = {X0, X1}, each of size |X|·2^(|X|-1), for |X| ≥ 2",
        kind: Universal,
        expected: Verified,
        check: chu::e_deviation,
    },
    Claim {
        id: "3.12",
        description: "(x, A) and (x', A') share a class of e_X iff x ∈ A and x' ∈ A', or x ∉ A and x' ∉ A'",
        kind: Universal,
        expected: Verified,
        check: chu::e_kernel,
    },
    // powersets
    Claim {
        id: "3.18",
        description: "f~(A) = ∅ iff A = ∅",
        kind: Universal,
        expected: Verified,
        check: ps::empty_image,
    },
    Claim {
        id: "L3.1",
        description: "f~ is injective, surjective, bijective iff f is",
        kind: Universal,
        expected: Verified,
        check: ps::direct_image_lemma,
    },
    Claim {
        id: "L3.2",
        description: "f^-1 surjective iff f injective; f^-1 on P(f(X)) injective; f^-1 injective iff f surjective; bijective iff bijective",
        kind: Universal,
        expected: Verified,
        check: ps::preimage_lemma,
    },
    Claim {
        id: "3.29-3.30",
        description: "A ⊆ f^-1(f(A)); f(f^-1(U)) = U for U ⊆ f(X); A = f^-1(f(A)) for all A iff f injective",
        kind: Universal,
        expected: Verified,
        check: ps::round_trips,
    },
    Claim {
        id: "L3.3a",
        description: "classes of f^-1 correspond to P(f(X)) via kappa, U lies in the class of U ∩ f(X), and P(Y)_{f^-1} = P(Y) iff f surjective",
        kind: Universal,
        expected: Verified,
        check: ps::preimage_classes,
    },
    Claim {
        id: "L3.3b",
        description: "f injective, surjective, bijective iff dev(f^-1) takes the listed forms, via kappa",
        kind: Universal,
        expected: Verified,
        check: ps::preimage_deviation,
    },
    Claim {
        id: "T3.1",
        description: "f injective, f~ injective, f^-1 surjective and the three deviation forms are equivalent, with dev2(f~) = P(Y) \\ P(f(X))",
        kind: Universal,
        expected: Verified,
        check: ps::injective_theorem,
    },
    Claim {
        id: "3.44-computed",
        description: "dev2(f~) = P(Y) \\ f~(P(X)) = {B ⊆ Y : B ⊄ f(X)}",
        kind: Universal,
        expected: Verified,
        check: ps::direct_missed_computed,
    },
    Claim {
        id: "3.44-literal",
        description: "f injective iff dev(f~) = (P(X), P(Y \\ f(X))), the empty subset left out",
        kind: ReportOnly,
        expected: RefutedAsStated,
        check: ps::direct_missed_literal,
    },
    Claim {
        id: "T3.2",
        description: "f surjective, f~ surjective, f^-1 injective and the three deviation forms are equivalent",
        kind: Universal,
        expected: Verified,
        check: ps::surjective_theorem,
    },
    Claim {
        id: "T3.3",
        description: "f bijective, f~ bijective, f^-1 bijective and the three deviation forms are equivalent",
        kind: Universal,
        expected: Verified,
        check: ps::bijective_theorem,
    },
    Claim {
        id: "3.58",
        description: "f injective implies f^-1 ∘ f~ = id on P(X)",
        kind: Universal,
        expected: Verified,
        check: ps::left_inverse,
    },
    Claim {
        id: "3.59",
        description: "f~ ∘ f^-1 is the identity on P(f(X))",
        kind: Universal,
        expected: Verified,
        check: ps::image_section,
    },
    Claim {
        id: "3.60",
        description: "f surjective implies f~ ∘ f^-1 = id on P(Y)",
        kind: Universal,
        expected: Verified,
        check: ps::right_inverse,
    },
    Claim {
        id: "3.61",
        description: "f^-1 restricted to P(f(X)) is injective",
        kind: Universal,
        expected: Verified,
        check: ps::restricted_injective,
    },
];

/// Every registered claim, in report order.
pub fn claims() -> &'static [Claim] {
    CLAIMS
}

pub fn claim(id: &str) -> Option<&'static Claim> {
    CLAIMS.iter().find(|c| c.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_are_unique() {
        let ids: HashSet<&str> = CLAIMS.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), CLAIMS.len());
    }

    #[test]
    fn expected_verdicts_fit_kinds() {
        for c in CLAIMS {
            match c.kind {
                Universal => assert_eq!(c.expected, Verified, "{}", c.id),
                Existential => assert_eq!(c.expected, Found, "{}", c.id),
                ReportOnly => assert_eq!(c.expected, RefutedAsStated, "{}", c.id),
            }
        }
    }
}
