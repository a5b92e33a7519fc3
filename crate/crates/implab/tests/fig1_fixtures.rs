//! The bundled impropriety-1 catalogs against the enumerator.
//!
//! The corrected catalog must be exactly what enumeration finds, and the
//! one as-drawn graph excluded from it must fail minimality for the
//! documented reason: deleting a vertex leaves an induced Skew-Four.

use std::collections::{BTreeMap, BTreeSet};

use implab::canon::{canonical_form, canonicalize};
use implab::enumeration::{mfisg, MfisgClass};
use implab::fixtures::{fig1, fig1_corrected, Fixture};
use implab::impropriety::impropriety;

fn by_name(set: &[Fixture]) -> BTreeMap<&str, &Fixture> {
    set.iter().map(|f| (f.name.as_str(), f)).collect()
}

fn canonical_forms(set: &[Fixture]) -> BTreeSet<String> {
    set.iter().map(|f| canonical_form(&f.graph)).collect()
}

#[test]
fn both_sets_are_canonical_and_distinct() {
    let drawn = fig1();
    let corrected = fig1_corrected();
    for fixture in drawn.iter().chain(&corrected) {
        assert_eq!(
            canonicalize(&fixture.graph).0,
            fixture.graph,
            "{} is not stored in canonical labeling",
            fixture.name
        );
    }
    assert_eq!(canonical_forms(&drawn).len(), 10);
    assert_eq!(canonical_forms(&corrected).len(), 11);
}

#[test]
fn shared_names_denote_identical_graphs_except_connected_two() {
    let drawn = fig1();
    let corrected = fig1_corrected();
    let drawn_names = by_name(&drawn);
    let corrected_names = by_name(&corrected);
    for (name, fixture) in &drawn_names {
        let Some(other) = corrected_names.get(name) else {
            assert_eq!(*name, "Connected-Two");
            continue;
        };
        if *name == "Connected-Two" {
            assert_ne!(fixture.graph, other.graph);
        } else {
            assert_eq!(fixture.graph, other.graph, "{name} diverges between sets");
        }
    }
    assert!(corrected_names.contains_key("Skew-Five"));
    assert!(corrected_names.contains_key("Connected-Two"));
}

#[test]
fn enumeration_reproduces_the_corrected_set_at_order_seven() {
    let records = mfisg(1, 7).unwrap();
    assert_eq!(records.len(), 11);
    for record in &records {
        assert!(record.verify(), "record fails re-verification");
    }
    let found: BTreeSet<String> = records
        .iter()
        .map(|r| canonical_form(&r.graph))
        .collect();
    assert_eq!(found, canonical_forms(&fig1_corrected()));
}

#[test]
fn order_eight_adds_no_new_graphs() {
    let at_eight: BTreeSet<String> = mfisg(1, 8)
        .unwrap()
        .iter()
        .map(|r| canonical_form(&r.graph))
        .collect();
    assert_eq!(at_eight, canonical_forms(&fig1_corrected()));
}

#[test]
fn drawn_connected_two_fails_minimality_via_skew_four() {
    let drawn = fig1();
    let names = by_name(&drawn);
    let connected_two = &names["Connected-Two"].graph;
    let skew_four = canonical_form(&names["Skew-Four"].graph);

    assert_eq!(impropriety(connected_two).unwrap().p, 2);
    let witnesses: Vec<usize> = connected_two
        .vertices()
        .filter(|&v| canonical_form(&connected_two.delete_vertex(v).0) == skew_four)
        .collect();
    assert!(
        !witnesses.is_empty(),
        "expected a deletion leaving an induced Skew-Four"
    );

    let corrected = canonical_forms(&fig1_corrected());
    for fixture in &drawn {
        let in_corrected = corrected.contains(&canonical_form(&fixture.graph));
        assert_eq!(in_corrected, fixture.name != "Connected-Two");
    }
}

#[test]
fn classifications_match_the_corrected_names() {
    let corrected = fig1_corrected();
    let names: BTreeMap<String, &str> = corrected
        .iter()
        .map(|f| (canonical_form(&f.graph), f.name.as_str()))
        .collect();
    for record in mfisg(1, 7).unwrap() {
        let name = names[&canonical_form(&record.graph)];
        let expected = if name.starts_with("Skew") {
            MfisgClass::Skew
        } else if name.starts_with("Connected") {
            MfisgClass::Other
        } else {
            MfisgClass::Balanced
        };
        assert_eq!(record.classification, expected, "{name}");
    }
}
