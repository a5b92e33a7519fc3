//! Exact impropriety: the minimum, over all interval models of a graph, of
//! the largest number of intervals contained in one interval.
//!
//! Two independent computations live here. The brute-force oracle searches
//! every linear order of the 2n endpoint events directly; it is the ground
//! truth, usable to n ≈ 7. The engine reduces the search to consecutive
//! clique orderings: within one ordering, a containment is forced exactly
//! when one vertex's clique range nests strictly inside another's, and a
//! model built with tie-aware endpoint placement achieves exactly the
//! forced containments. Ties on either range side never force containment,
//! which is the reduction's load-bearing claim; the oracle-equivalence
//! sweep in the test suite guards it.
//!
//! Every engine result is a certificate: a witness model achieving p plus
//! the lower bound that proves minimality (the weight bound when it is met,
//! exhaustion of the ordering space otherwise).

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::local::weight_of_graph;
use crate::model::{EndpointKind, Event, IntervalModel};
use crate::recognition::{consecutive_orderings, is_interval, CliqueOrdering, NonIntervalWitness};

/// Default order cap for the brute-force oracle.
pub const BRUTEFORCE_GUARD: usize = 7;

/// Failures of the impropriety computations.
#[derive(Debug, Error)]
pub enum EngineError {
    /// The input is not an interval graph; the witness proves it.
    #[error("not an interval graph ({})", witness_kind(.0))]
    NotInterval(NonIntervalWitness),
    /// The brute-force oracle refused an input above its guard.
    #[error("order {order} exceeds the brute-force guard {guard}; pass a higher limit explicitly")]
    GuardExceeded {
        /// Order of the rejected graph.
        order: usize,
        /// The guard in effect.
        guard: usize,
    },
    /// The endpoint search exhausted without realizing the graph.
    #[error("no interval model realizes this graph")]
    NoModel,
    /// A clique ordering was paired with a graph it does not describe.
    #[error("clique ordering does not fit the graph: {0}")]
    OrderingMismatch(String),
}

fn witness_kind(w: &NonIntervalWitness) -> &'static str {
    match w {
        NonIntervalWitness::ChordlessCycle { .. } => "chordless cycle",
        NonIntervalWitness::AsteroidalTriple { .. } => "asteroidal triple",
    }
}

/// Backtracking state for the endpoint-ordering oracle.
struct EndpointSearch<'a> {
    g: &'a Graph,
    opened: VertexSet,
    closed: VertexSet,
    open_time: Vec<usize>,
    counts: Vec<usize>,
    best: usize,
}

impl EndpointSearch<'_> {
    fn open_set(&self) -> VertexSet {
        self.opened.difference(self.closed)
    }

    /// A vertex may close once every neighbor has opened.
    fn may_close(&self, v: usize) -> bool {
        self.g.neighbors(v).is_subset_of(self.opened)
    }

    /// A vertex may open when every open vertex is a neighbor and no
    /// neighbor has already closed.
    fn may_open(&self, v: usize) -> bool {
        self.open_set().is_subset_of(self.g.neighbors(v))
            && self.g.neighbors(v).intersection(self.closed).is_empty()
    }

    fn dfs(&mut self, placed: usize, cur_max: usize) {
        if cur_max >= self.best {
            return;
        }
        if placed == 2 * self.g.order() {
            self.best = cur_max;
            return;
        }
        for v in self.open_set().iter() {
            if !self.may_close(v) {
                continue;
            }
            // Closing v nests it inside every still-open vertex that opened
            // earlier; those containment counts rise by one.
            let hosts: Vec<usize> = self
                .open_set()
                .without(v)
                .iter()
                .filter(|&z| self.open_time[z] < self.open_time[v])
                .collect();
            let mut new_max = cur_max;
            for &z in &hosts {
                self.counts[z] += 1;
                new_max = new_max.max(self.counts[z]);
            }
            self.closed.insert(v);
            self.dfs(placed + 1, new_max);
            self.closed.remove(v);
            for &z in &hosts {
                self.counts[z] -= 1;
            }
        }
        for v in self.g.vertices() {
            if !self.opened.contains(v) && self.may_open(v) {
                self.opened.insert(v);
                self.open_time[v] = placed;
                self.dfs(placed + 1, cur_max);
                self.opened.remove(v);
            }
        }
    }
}

/// Ground-truth impropriety by exhaustive search over all endpoint-event
/// orders, with branch-and-bound on the running maximum. Exponential; the
/// guard keeps accidental large inputs out.
pub fn impropriety_bruteforce(g: &Graph) -> Result<usize, EngineError> {
    impropriety_bruteforce_with_limit(g, BRUTEFORCE_GUARD)
}

/// The oracle with an explicit order cap, for callers that accept the cost.
pub fn impropriety_bruteforce_with_limit(g: &Graph, limit: usize) -> Result<usize, EngineError> {
    if g.order() > limit {
        return Err(EngineError::GuardExceeded {
            order: g.order(),
            guard: limit,
        });
    }
    let mut search = EndpointSearch {
        g,
        opened: VertexSet::EMPTY,
        closed: VertexSet::EMPTY,
        open_time: vec![0; g.order()],
        counts: vec![0; g.order()],
        best: usize::MAX,
    };
    search.dfs(0, 0);
    if search.best == usize::MAX {
        return Err(EngineError::NoModel);
    }
    Ok(search.best)
}

/// Whether any interval model realizes `g`, by the same endpoint search
/// with memoization on (opened, closed) states; an independent recognition
/// oracle, practical to n ≈ 12.
pub fn interval_model_exists(g: &Graph) -> bool {
    fn rec(
        g: &Graph,
        opened: VertexSet,
        closed: VertexSet,
        dead: &mut std::collections::HashSet<(VertexSet, VertexSet)>,
    ) -> bool {
        if closed == g.vertex_set() {
            return true;
        }
        if !dead.insert((opened, closed)) {
            return false;
        }
        let open = opened.difference(closed);
        for v in open.iter() {
            if g.neighbors(v).is_subset_of(opened) && rec(g, opened, closed.with(v), dead) {
                return true;
            }
        }
        for v in g.vertex_set().difference(opened).iter() {
            if open.is_subset_of(g.neighbors(v))
                && g.neighbors(v).intersection(closed).is_empty()
                && rec(g, opened.with(v), closed, dead)
            {
                return true;
            }
        }
        false
    }
    rec(g, VertexSet::EMPTY, VertexSet::EMPTY, &mut std::collections::HashSet::new())
}

/// Containments forced by a clique ordering: vertex u is forced inside z
/// exactly when z's range strictly covers u's on both sides.
fn nesting_counts(ranges: &[(usize, usize)]) -> Vec<usize> {
    let n = ranges.len();
    let mut counts = vec![0usize; n];
    for z in 0..n {
        let (fz, lz) = ranges[z];
        counts[z] = (0..n)
            .filter(|&u| {
                let (fu, lu) = ranges[u];
                fz < fu && lu < lz
            })
            .count();
    }
    counts
}

fn nesting_max(ranges: &[(usize, usize)]) -> usize {
    nesting_counts(ranges).into_iter().max().unwrap_or(0)
}

/// The minimum impropriety over all models consistent with one clique
/// ordering: the maximum strict-nesting count of the ordering's ranges.
pub fn imp_of_clique_order(g: &Graph, ordering: &CliqueOrdering) -> Result<usize, EngineError> {
    ordering.verify(g).map_err(EngineError::OrderingMismatch)?;
    Ok(nesting_max(&ordering.ranges))
}

/// Endpoint placement achieving exactly the forced containments of one
/// clique ordering; shared by `model_from_clique_order` and the engine.
///
/// Between consecutive cliques, right endpoints come first (vertices ending
/// at the earlier clique must not meet vertices starting at the later one).
/// Rights are ordered by ascending first-index so that a vertex starting
/// later never closes earlier than one starting before it; lefts by
/// ascending last-index so that a vertex ending sooner opens first. Both
/// rules break remaining ties by vertex id, and together they avoid every
/// containment the ranges do not force.
fn build_model(ordering: &CliqueOrdering) -> IntervalModel {
    let n = ordering.ranges.len();
    let q = ordering.cliques.len();
    let mut events: Vec<Event> = Vec::with_capacity(2 * n);
    for gap in 0..=q {
        let mut rights: Vec<usize> = (0..n).filter(|&v| ordering.ranges[v].1 + 1 == gap).collect();
        rights.sort_unstable_by_key(|&v| (ordering.ranges[v].0, v));
        events.extend(rights.into_iter().map(|vertex| Event {
            vertex,
            kind: EndpointKind::Right,
        }));
        if gap < q {
            let mut lefts: Vec<usize> = (0..n).filter(|&v| ordering.ranges[v].0 == gap).collect();
            lefts.sort_unstable_by_key(|&v| (ordering.ranges[v].1, v));
            events.extend(lefts.into_iter().map(|vertex| Event {
                vertex,
                kind: EndpointKind::Left,
            }));
        }
    }
    IntervalModel::new(events).expect("every vertex opens at its first clique and closes after its last")
}

/// A concrete model attaining `imp_of_clique_order` for this ordering.
pub fn model_from_clique_order(
    g: &Graph,
    ordering: &CliqueOrdering,
) -> Result<IntervalModel, EngineError> {
    ordering.verify(g).map_err(EngineError::OrderingMismatch)?;
    Ok(build_model(ordering))
}

/// How an impropriety certificate's lower bound was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LowerBoundKind {
    /// The witness meets the weight bound, which no model can beat.
    Weight,
    /// Every consecutive clique ordering was evaluated.
    ExhaustiveSearch,
}

/// The engine's answer: the exact impropriety with a witness model that
/// attains it and the reason nothing smaller exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImproprietyCertificate {
    /// The analyzed graph.
    pub graph: Graph,
    /// The impropriety.
    pub p: usize,
    /// A model of the graph attaining p.
    pub witness_model: IntervalModel,
    /// Proven lower bound; equals p on completion.
    pub lower_bound: usize,
    /// What proves the lower bound.
    pub lower_bound_kind: LowerBoundKind,
    /// Containment count of each vertex in the witness model.
    pub per_vertex: Vec<usize>,
}

impl ImproprietyCertificate {
    /// Re-check everything the certificate claims.
    pub fn verify(&self) -> Result<(), String> {
        self.witness_model.realizes(&self.graph)?;
        let counts = self.witness_model.containment_counts();
        if counts != self.per_vertex {
            return Err("per-vertex counts do not match the witness model".into());
        }
        let attained = counts.into_iter().max().unwrap_or(0);
        if attained != self.p {
            return Err(format!("witness model attains {attained}, certificate claims {}", self.p));
        }
        if self.lower_bound != self.p {
            return Err(format!(
                "lower bound {} does not close the gap to {}",
                self.lower_bound, self.p
            ));
        }
        Ok(())
    }
}

/// Exact impropriety of a connected interval graph: minimize forced
/// nestings over all consecutive clique orderings, stopping early when a
/// candidate meets the weight lower bound.
fn impropriety_connected(g: &Graph) -> Result<ImproprietyCertificate, EngineError> {
    if let Some(witness) = is_interval(g).witness() {
        return Err(EngineError::NotInterval(witness.clone()));
    }
    let wt = weight_of_graph(g);
    let mut best: Option<(usize, CliqueOrdering)> = None;
    let mut met_weight_bound = false;
    let orderings = consecutive_orderings(g).expect("interval graphs are chordal");
    for ordering in orderings {
        let value = nesting_max(&ordering.ranges);
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            let done = value == wt;
            best = Some((value, ordering));
            if done {
                met_weight_bound = true;
                break;
            }
        }
    }
    let (p, ordering) = best.expect("interval graphs admit a consecutive ordering");
    let witness_model = build_model(&ordering);
    let per_vertex = witness_model.containment_counts();
    debug_assert_eq!(per_vertex.iter().max().copied().unwrap_or(0), p);
    Ok(ImproprietyCertificate {
        graph: g.clone(),
        p,
        witness_model,
        lower_bound: p,
        lower_bound_kind: if met_weight_bound {
            LowerBoundKind::Weight
        } else {
            LowerBoundKind::ExhaustiveSearch
        },
        per_vertex,
    })
}

/// Exact impropriety with a certificate. Disconnected graphs take the
/// maximum over components, with component models laid side by side.
pub fn impropriety(g: &Graph) -> Result<ImproprietyCertificate, EngineError> {
    if g.is_connected() {
        return impropriety_connected(g);
    }
    let mut p = 0;
    let mut kind = LowerBoundKind::Weight;
    let mut events: Vec<Event> = Vec::with_capacity(2 * g.order());
    for component in g.components() {
        let (sub, map) = g.induced_subgraph(component);
        let certificate = impropriety_connected(&sub)?;
        if certificate.p > p {
            p = certificate.p;
            kind = certificate.lower_bound_kind;
        }
        events.extend(certificate.witness_model.events().iter().map(|e| Event {
            vertex: map[e.vertex],
            kind: e.kind,
        }));
    }
    let witness_model =
        IntervalModel::new(events).expect("component models concatenate disjointly");
    let per_vertex = witness_model.containment_counts();
    Ok(ImproprietyCertificate {
        graph: g.clone(),
        p,
        witness_model,
        lower_bound: p,
        lower_bound_kind: kind,
        per_vertex,
    })
}

/// Whether the graph admits a model in which no interval contains more
/// than `p` others.
pub fn is_p_improper(g: &Graph, p: usize) -> Result<bool, EngineError> {
    Ok(impropriety(g)?.p <= p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn imp(g: &Graph) -> usize {
        impropriety(g).unwrap().p
    }

    #[test]
    fn oracle_basics() {
        assert_eq!(impropriety_bruteforce(&Graph::path(3).unwrap()).unwrap(), 0);
        assert_eq!(impropriety_bruteforce(&Graph::star(3).unwrap()).unwrap(), 1);
        assert_eq!(impropriety_bruteforce(&Graph::star(4).unwrap()).unwrap(), 2);
        assert_eq!(impropriety_bruteforce(&Graph::complete(6).unwrap()).unwrap(), 0);
        assert_eq!(impropriety_bruteforce(&Graph::new(0).unwrap()).unwrap(), 0);
    }

    #[test]
    fn oracle_rejects_non_interval_and_oversize() {
        assert!(matches!(
            impropriety_bruteforce(&Graph::cycle(4).unwrap()),
            Err(EngineError::NoModel)
        ));
        assert!(matches!(
            impropriety_bruteforce(&Graph::path(8).unwrap()),
            Err(EngineError::GuardExceeded { order: 8, guard: 7 })
        ));
        assert_eq!(
            impropriety_bruteforce_with_limit(&Graph::path(8).unwrap(), 8).unwrap(),
            0
        );
    }

    #[test]
    fn model_existence_oracle() {
        assert!(interval_model_exists(&Graph::path(6).unwrap()));
        assert!(interval_model_exists(&Graph::star(5).unwrap()));
        assert!(!interval_model_exists(&Graph::cycle(4).unwrap()));
        assert!(!interval_model_exists(&Graph::cycle(6).unwrap()));
        assert!(interval_model_exists(&Graph::new(0).unwrap()));
    }

    #[test]
    fn clique_order_values_match_oracle_on_stars() {
        // Every ordering of the claw's three cliques forces exactly one
        // nesting; every ordering of K_{1,4}'s four forces two.
        for (star, expected) in [(3, 1), (4, 2)] {
            let g = Graph::star(star).unwrap();
            for ordering in consecutive_orderings(&g).unwrap() {
                assert_eq!(imp_of_clique_order(&g, &ordering).unwrap(), expected);
            }
        }
        let k4 = Graph::complete(4).unwrap();
        let single = consecutive_orderings(&k4).unwrap().next().unwrap();
        assert_eq!(imp_of_clique_order(&k4, &single).unwrap(), 0);
    }

    #[test]
    fn built_models_attain_the_forced_count() {
        for g in [
            Graph::complete(2).unwrap(),
            Graph::star(3).unwrap(),
            Graph::star(4).unwrap(),
            Graph::path(5).unwrap(),
        ] {
            for ordering in consecutive_orderings(&g).unwrap() {
                let model = model_from_clique_order(&g, &ordering).unwrap();
                model.realizes(&g).unwrap();
                assert_eq!(model.impropriety(), imp_of_clique_order(&g, &ordering).unwrap());
            }
        }
    }

    #[test]
    fn engine_matches_oracle_on_small_catalog() {
        let mut graphs = vec![
            Graph::path(2).unwrap(),
            Graph::path(5).unwrap(),
            Graph::complete(5).unwrap(),
            Graph::star(3).unwrap(),
            Graph::star(4).unwrap(),
            Graph::star(5).unwrap(),
        ];
        // Paw: triangle with a pendant.
        let mut g = Graph::new(4).unwrap();
        for (u, v) in [(0, 1), (0, 2), (1, 2), (2, 3)] {
            g.add_edge(u, v).unwrap();
        }
        graphs.push(g);
        // Two stars sharing their centers by an edge.
        let mut g = Graph::new(6).unwrap();
        for (u, v) in [(0, 1), (0, 2), (3, 4), (3, 5), (0, 3)] {
            g.add_edge(u, v).unwrap();
        }
        graphs.push(g);
        for g in graphs {
            let certificate = impropriety(&g).unwrap();
            certificate.verify().unwrap();
            assert_eq!(certificate.p, impropriety_bruteforce(&g).unwrap(), "{g:?}");
        }
    }

    #[test]
    fn star_family_values() {
        for p in 0..=3 {
            let g = Graph::star(p + 3).unwrap();
            let certificate = impropriety(&g).unwrap();
            assert_eq!(certificate.p, p + 1);
            assert_eq!(certificate.lower_bound_kind, LowerBoundKind::Weight);
            certificate.verify().unwrap();
        }
    }

    #[test]
    fn disconnected_takes_component_maximum() {
        let mut g = Graph::new(6).unwrap();
        for (u, v) in [(0, 1), (0, 2), (0, 3), (4, 5)] {
            g.add_edge(u, v).unwrap();
        }
        let certificate = impropriety(&g).unwrap();
        assert_eq!(certificate.p, 1);
        certificate.verify().unwrap();
        assert_eq!(imp(&Graph::new(5).unwrap()), 0);
    }

    #[test]
    fn non_interval_inputs_carry_witnesses() {
        let Err(EngineError::NotInterval(witness)) = impropriety(&Graph::cycle(5).unwrap()) else {
            panic!("C5 must be rejected with a witness");
        };
        witness.verify(&Graph::cycle(5).unwrap()).unwrap();
    }

    #[test]
    fn certificates_are_deterministic() {
        let g = Graph::star(4).unwrap();
        assert_eq!(impropriety(&g).unwrap(), impropriety(&g).unwrap());
    }
}
