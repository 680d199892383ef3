use cliquelab::graph::{enumerate_labeled_trees, labeled_graph_count, labeled_graph_from_index};
use cliquelab::theorems::{
    verify_chordal_multiplicity, verify_forest, verify_tree, verify_triangle_free,
};
use cliquelab::{clique_counts, isolate_real_roots, verify, ClaimId, Graph};
use num_bigint::BigInt;
use num_rational::BigRational;

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    (0..labeled_graph_count(n).unwrap()).map(move |i| labeled_graph_from_index(n, i))
}

#[test]
fn tree_vectors_and_verdicts() {
    for n in 2..=7 {
        for t in enumerate_labeled_trees(n).unwrap() {
            let n64 = n as u64;
            assert_eq!(clique_counts(&t).counts(), &[1, n64, n64 - 1]);
            assert_eq!(verify_tree(&t).conclusion_holds, Some(true));
        }
    }
}

#[test]
fn triangle_free_discriminant_agrees_with_isolation() {
    for n in 0..=6 {
        for g in all_graphs(n).filter(Graph::is_triangle_free) {
            let r = verify_triangle_free(&g);
            let disc = r.detail.discriminant.unwrap();
            assert_eq!(
                disc >= 0,
                r.detail.real_rooted,
                "{}",
                g.to_graph6().unwrap()
            );
            assert_eq!(r.conclusion_holds, Some(true));
        }
    }
}

#[test]
fn chordal_multiplicity_matches_isolation() {
    let minus_one = BigRational::from_integer(BigInt::from(-1));
    for n in 1..=6 {
        for g in all_graphs(n).filter(Graph::is_chordal) {
            let r = verify_chordal_multiplicity(&g);
            if !r.hypothesis_met {
                continue;
            }
            let report = isolate_real_roots(&r.detail.poly).unwrap();
            assert_eq!(
                r.detail.minus_one_multiplicity,
                report.multiplicity_of(&minus_one)
            );
            assert!(r.detail.minus_one_multiplicity >= r.detail.kappa.unwrap());
            assert_eq!(r.conclusion_holds, Some(true));
        }
    }
}

#[test]
fn conclusions_only_with_hypotheses() {
    for n in 0..=5 {
        for g in all_graphs(n) {
            for claim in ClaimId::ALL {
                let r = verify(claim, &g);
                assert_eq!(r.conclusion_holds.is_some(), r.hypothesis_met);
                assert_eq!(r.claim_id, claim);
            }
        }
    }
}

#[test]
fn forests_meet_the_smallest_component_bound() {
    for n in 2..=7 {
        for g in all_graphs(n).filter(Graph::is_forest) {
            let r = verify_forest(&g);
            if r.hypothesis_met {
                assert_eq!(r.conclusion_holds, Some(true), "{}", g.to_graph6().unwrap());
            }
        }
    }
}
