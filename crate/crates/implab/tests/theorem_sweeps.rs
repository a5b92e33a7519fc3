//! Exhaustive desk-scale sweeps of the structural claims.

use implab::bal::BalSpec;
use implab::balance::{balance_report, is_p_critical};
use implab::canon::canonical_form;
use implab::enumeration::{connected_interval_graphs, connected_interval_graphs_upto};
use implab::graph::{Graph, VertexSet};
use implab::harness::verify_theorems;
use implab::impropriety::impropriety;
use implab::local::{local_components, vertex_type, weight_of_graph};

fn connected_interval_upto(n: usize) -> Vec<Graph> {
    connected_interval_graphs_upto(n)
        .unwrap()
        .into_iter()
        .flatten()
        .collect()
}

#[test]
fn interval_vertices_have_at_most_two_exterior_components() {
    for g in connected_interval_upto(7) {
        for z in g.vertices() {
            assert!(vertex_type(&g, z).unwrap() <= 2);
        }
    }
}

#[test]
fn positive_weight_vertices_induce_paths_up_to_eight() {
    for g in connected_interval_upto(8) {
        let positive: VertexSet = g
            .vertices()
            .filter(|&z| {
                local_components(&g, z)
                    .unwrap()
                    .weight
                    > 0
            })
            .collect();
        let (h, _) = g.induced_subgraph(positive);
        for v in h.vertices() {
            assert!(h.degree(v) <= 2);
        }
        let components = h.components();
        let edge_total = h.edge_count();
        let vertex_total = h.order();
        assert_eq!(
            edge_total + components.len(),
            vertex_total,
            "a forest has order minus component count edges"
        );
    }
}

#[test]
fn impropriety_is_at_least_weight_up_to_seven() {
    for g in connected_interval_upto(7) {
        let imp = impropriety(&g).unwrap().p;
        assert!(imp >= weight_of_graph(&g));
    }
}

#[test]
fn impropriety_is_hereditary_up_to_seven() {
    for g in connected_interval_upto(7) {
        let imp = impropriety(&g).unwrap().p;
        for v in g.vertices() {
            let smaller = impropriety(&g.delete_vertex(v).0).unwrap().p;
            assert!(smaller <= imp);
        }
    }
}

#[test]
fn basepoints_have_at_least_three_local_components() {
    for g in connected_interval_upto(7) {
        let report = balance_report(&g).unwrap();
        assert_eq!(report.balanced, report.wt == report.imp);
        assert_eq!(
            !report.basepoints.is_empty(),
            report.balanced && report.wt > 0
        );
        for z in report.basepoints.iter() {
            assert!(local_components(&g, z).unwrap().n_components() >= 3);
        }
    }
}

#[test]
fn single_deletion_criticality_equals_the_full_definition() {
    for g in connected_interval_upto(6) {
        let (critical, p) = is_p_critical(&g).unwrap();
        let full = p > 0
            && proper_subsets(g.vertex_set()).all(|s| {
                let (h, _) = g.induced_subgraph(s);
                impropriety(&h).unwrap().p < p
            });
        assert_eq!(critical, full, "on {}", serde_json::to_string(&g).unwrap());
    }
}

/// Nonempty proper subsets of `full`, as vertex sets.
fn proper_subsets(full: VertexSet) -> impl Iterator<Item = VertexSet> {
    let vertices = full.to_vec();
    let count = 1u64 << vertices.len();
    (1..count - 1).map(move |mask| {
        vertices
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, &v)| v)
            .collect()
    })
}

#[test]
fn harness_finds_no_failures_up_to_seven() {
    let report = verify_theorems(7).unwrap();
    assert!(report.all_pass(), "{}", serde_json::to_string(&report).unwrap());
    assert_eq!(report.graphs, 1 + 1 + 2 + 5 + 15 + 56 + 250);
    for row in &report.rows {
        assert_eq!(row.fail, 0, "{}", row.name);
        assert!(row.pass + row.vacuous > 0, "{}", row.name);
    }
}

#[test]
fn balanced_critical_graphs_up_to_seven_are_exactly_the_known_seven() {
    let k2 = || Graph::complete(2).unwrap();
    let expected: Vec<String> = [
        Graph::star(3).unwrap(),
        Graph::star(4).unwrap(),
        Graph::star(5).unwrap(),
        Graph::star(6).unwrap(),
        BalSpec::new(2, vec![k2()]).unwrap().build().unwrap().0,
        BalSpec::new(1, vec![k2(), k2()]).unwrap().build().unwrap().0,
        BalSpec::new(0, vec![k2(), k2(), k2()]).unwrap().build().unwrap().0,
    ]
    .iter()
    .map(canonical_form)
    .collect();
    let mut found: Vec<String> = Vec::new();
    for n in 1..=7 {
        for g in connected_interval_graphs(n).unwrap() {
            let report = balance_report(&g).unwrap();
            if report.balanced && report.critical {
                found.push(canonical_form(&g));
            }
        }
    }
    let mut expected_sorted = expected;
    expected_sorted.sort();
    found.sort();
    assert_eq!(found, expected_sorted);
}
