//! The clique-polynomial identities and the three counting routes on small graphs.

use cliquelab::cliquepoly::{
    clique_polynomial_via_vertex_recurrence, edge_recurrence_check, vertex_recurrence_check,
};
use cliquelab::graph::{labeled_graph_count, labeled_graph_from_index};
use cliquelab::{check_identities, clique_counts, naive_clique_counts, Graph, IntPolynomial};

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    (0..labeled_graph_count(n).unwrap()).map(move |i| labeled_graph_from_index(n, i))
}

#[test]
fn identities_hold_on_every_graph_up_to_five_vertices() {
    for n in 0..=5 {
        for g in all_graphs(n) {
            let r = check_identities(&g);
            assert!(r.all_hold(), "{}: {r:?}", g.to_graph6().unwrap());
        }
    }
}

#[test]
fn counting_routes_agree_up_to_six_vertices() {
    for n in 0..=6 {
        for g in all_graphs(n) {
            let bk = clique_counts(&g);
            assert_eq!(bk, naive_clique_counts(&g).unwrap());
            assert_eq!(
                bk.to_polynomial(),
                clique_polynomial_via_vertex_recurrence(&g).unwrap()
            );
        }
    }
}

#[test]
fn recurrences_on_named_graphs() {
    let wheel = Graph::from_edge_list(
        6,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 1),
            (1, 3),
        ],
    )
    .unwrap();
    for g in [Graph::complete(5), Graph::cycle(6), Graph::star(5), wheel] {
        for v in 0..g.n() {
            assert!(vertex_recurrence_check(&g, v).unwrap());
        }
        for e in g.edges().collect::<Vec<_>>() {
            assert!(edge_recurrence_check(&g, e).unwrap());
        }
    }
    assert!(edge_recurrence_check(&Graph::path(3), (0, 2)).is_err());
}

#[test]
fn complete_graphs_give_binomial_powers() {
    for n in 0..=12 {
        let expected = IntPolynomial::from_i64s(&[1, 1]).pow(n as u32);
        assert_eq!(clique_counts(&Graph::complete(n)).to_polynomial(), expected);
    }
}

#[test]
fn oracle_refuses_large_graphs() {
    assert!(naive_clique_counts(&Graph::path(21)).is_err());
    assert!(clique_polynomial_via_vertex_recurrence(&Graph::path(21)).is_err());
}
