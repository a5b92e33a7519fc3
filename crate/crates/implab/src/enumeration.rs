//! Exhaustive enumeration of small graphs up to isomorphism, and the
//! search for minimal forbidden induced subgraphs.
//!
//! Enumeration grows graphs one vertex at a time: every connected graph
//! on n+1 vertices contains a vertex whose deletion leaves it connected,
//! so attaching a new vertex to every nonempty subset of every connected
//! n-vertex graph reaches them all. Canonical labels deduplicate the
//! results. The same argument restricts to interval graphs, because
//! induced subgraphs of interval graphs are interval.
//!
//! A graph is a *minimal forbidden induced subgraph* for the p-improper
//! interval graphs when it is itself interval with impropriety above p
//! while every single-vertex deletion has impropriety at most p; heredity
//! of impropriety extends minimality to all proper induced subgraphs.
//! Such graphs are necessarily connected, since impropriety is the
//! maximum over components.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::canon::{canonical_label, canonicalize};
use crate::graph::Graph;
use crate::impropriety::impropriety;
use crate::local::weight_of_graph;
use crate::recognition::is_interval;

/// Largest order the enumerator will expand to.
pub const ENUMERATION_GUARD: usize = 8;

/// Rejections from the enumerator.
#[derive(Debug, Error)]
pub enum EnumError {
    /// The requested order exceeds the exhaustive-search budget.
    #[error("enumeration up to order {n} exceeds the guard of {guard}")]
    GuardExceeded {
        /// The requested order.
        n: usize,
        /// The fixed budget.
        guard: usize,
    },
}

/// Grow one level: attach a fresh vertex to every nonempty neighborhood
/// in every parent, keep what `keep` accepts, deduplicate canonically.
fn augment(parents: &[Graph], keep: &(impl Fn(&Graph) -> bool + Sync)) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut level = Vec::new();
    for parent in parents {
        let n = parent.order();
        for mask in 1..(1u64 << n) {
            let mut child = Graph::new(n + 1).expect("guarded well below capacity");
            for (u, v) in parent.edges() {
                child.add_edge(u, v).expect("parent edges fit");
            }
            for u in 0..n {
                if mask & (1 << u) != 0 {
                    child.add_edge(u, n).expect("new vertex fits");
                }
            }
            if !keep(&child) {
                continue;
            }
            if seen.insert(canonical_label(&child)) {
                level.push(canonicalize(&child).0);
            }
        }
    }
    level
}

/// All levels 1..=n of connected graphs accepted by `keep`, as canonical
/// representatives. `keep` must be isomorphism-invariant and hereditary
/// enough that accepted graphs have accepted one-vertex-smaller subgraphs;
/// connectivity plus an induced-subgraph-closed property qualifies.
fn levels(n: usize, keep: &(impl Fn(&Graph) -> bool + Sync)) -> Result<Vec<Vec<Graph>>, EnumError> {
    levels_guarded(n, keep, ENUMERATION_GUARD)
}

fn levels_guarded(
    n: usize,
    keep: &(impl Fn(&Graph) -> bool + Sync),
    guard: usize,
) -> Result<Vec<Vec<Graph>>, EnumError> {
    if n > guard {
        return Err(EnumError::GuardExceeded { n, guard });
    }
    let mut all = Vec::new();
    if n == 0 {
        return Ok(all);
    }
    all.push(vec![Graph::new(1).expect("one vertex fits")]);
    for _ in 1..n {
        let next = augment(all.last().expect("level 1 is seeded"), keep);
        all.push(next);
    }
    Ok(all)
}

/// Connected graphs on exactly `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>, EnumError> {
    Ok(levels(n, &|_| true)?.pop().unwrap_or_default())
}

/// Connected interval graphs on exactly `n` vertices, one per
/// isomorphism class.
pub fn connected_interval_graphs(n: usize) -> Result<Vec<Graph>, EnumError> {
    Ok(levels(n, &|g| is_interval(g).is_interval())?
        .pop()
        .unwrap_or_default())
}

/// Connected interval graphs of every order 1..=n, one level per order.
pub fn connected_interval_graphs_upto(n: usize) -> Result<Vec<Vec<Graph>>, EnumError> {
    levels(n, &|g| is_interval(g).is_interval())
}

/// Like [`connected_interval_graphs_upto`] with an explicit budget in
/// place of [`ENUMERATION_GUARD`]. Orders beyond the vertex capacity of
/// [`Graph`] fail regardless of the budget.
pub fn connected_interval_graphs_upto_guarded(
    n: usize,
    guard: usize,
) -> Result<Vec<Vec<Graph>>, EnumError> {
    levels_guarded(n, &|g| is_interval(g).is_interval(), guard)
}

/// Coarse shape of a minimal forbidden graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MfisgClass {
    /// Weight equals impropriety.
    Balanced,
    /// Unbalanced with a cut vertex.
    Skew,
    /// Unbalanced and 2-connected.
    Other,
}

/// One minimal forbidden induced subgraph, with its re-checkable facts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MfisgRecord {
    /// Canonical representative, serialized as graph6.
    pub graph: Graph,
    /// Order of the graph.
    pub n: usize,
    /// The impropriety bound the graph is minimal for.
    pub p: usize,
    /// The graph's own impropriety, at least p + 1.
    pub imp: usize,
    /// Balance and connectivity shape.
    pub classification: MfisgClass,
}

impl MfisgRecord {
    /// Recompute every claim in the record from the graph alone.
    pub fn verify(&self) -> bool {
        self.graph.order() == self.n
            && self.graph.is_connected()
            && is_interval(&self.graph).is_interval()
            && impropriety(&self.graph).is_ok_and(|c| c.p == self.imp)
            && self.imp > self.p
            && minimal_for(&self.graph, self.p)
            && classify_shape(&self.graph, self.imp) == self.classification
    }
}

/// True when every single-vertex deletion has impropriety at most p.
fn minimal_for(g: &Graph, p: usize) -> bool {
    g.vertices().all(|v| {
        impropriety(&g.delete_vertex(v).0)
            .expect("induced subgraphs of interval graphs are interval")
            .p
            <= p
    })
}

fn classify_shape(g: &Graph, imp: usize) -> MfisgClass {
    if weight_of_graph(g) == imp {
        MfisgClass::Balanced
    } else if g.vertices().any(|v| g.is_cut_vertex(v)) {
        MfisgClass::Skew
    } else {
        MfisgClass::Other
    }
}

/// All minimal forbidden induced subgraphs for the p-improper interval
/// graphs, up to isomorphism, with at most `n_max` vertices.
///
/// Records are ordered by order first, then by the enumerator's
/// deterministic within-level order. Candidates are tested in parallel.
pub fn mfisg(p: usize, n_max: usize) -> Result<Vec<MfisgRecord>, EnumError> {
    mfisg_guarded(p, n_max, ENUMERATION_GUARD)
}

/// Like [`mfisg`] with an explicit enumeration budget.
pub fn mfisg_guarded(p: usize, n_max: usize, guard: usize) -> Result<Vec<MfisgRecord>, EnumError> {
    let levels = connected_interval_graphs_upto_guarded(n_max, guard)?;
    let mut records = Vec::new();
    for level in &levels {
        let mut found: Vec<MfisgRecord> = level
            .par_iter()
            .filter_map(|g| {
                let imp = impropriety(g)
                    .expect("enumerated graphs are interval")
                    .p;
                if imp <= p || !minimal_for(g, p) {
                    return None;
                }
                Some(MfisgRecord {
                    graph: g.clone(),
                    n: g.order(),
                    p,
                    imp,
                    classification: classify_shape(g, imp),
                })
            })
            .collect();
        records.append(&mut found);
    }
    Ok(records)
}
