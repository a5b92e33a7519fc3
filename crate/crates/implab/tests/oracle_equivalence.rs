//! The clique-ordering engine against the endpoint-sequence oracle.
//!
//! The oracle enumerates raw endpoint sequences with branch-and-bound;
//! the engine minimizes forced nestings over consecutive clique
//! orderings. They were written independently and must agree everywhere
//! the oracle can reach.

use implab::enumeration::connected_interval_graphs_upto;
use implab::graph::Graph;
use implab::impropriety::{impropriety, impropriety_bruteforce};

#[test]
fn engine_matches_oracle_on_all_connected_interval_graphs_up_to_six() {
    let levels = connected_interval_graphs_upto(6).unwrap();
    let mut checked = 0;
    for g in levels.iter().flatten() {
        let certificate = impropriety(g).unwrap();
        let oracle = impropriety_bruteforce(g).unwrap();
        assert_eq!(
            certificate.p,
            oracle,
            "engine {} vs oracle {oracle} on {}",
            certificate.p,
            serde_json::to_string(g).unwrap()
        );
        certificate.verify().unwrap();
        checked += 1;
    }
    assert_eq!(checked, 1 + 1 + 2 + 5 + 15 + 56);
}

#[test]
fn engine_matches_oracle_on_disconnected_unions() {
    let small: Vec<Graph> = connected_interval_graphs_upto(3)
        .unwrap()
        .into_iter()
        .flatten()
        .collect();
    for a in &small {
        for b in &small {
            let mut g = Graph::new(a.order() + b.order()).unwrap();
            for (u, v) in a.edges() {
                g.add_edge(u, v).unwrap();
            }
            for (u, v) in b.edges() {
                g.add_edge(a.order() + u, a.order() + v).unwrap();
            }
            let certificate = impropriety(&g).unwrap();
            assert_eq!(certificate.p, impropriety_bruteforce(&g).unwrap());
            certificate.verify().unwrap();
        }
    }
}
