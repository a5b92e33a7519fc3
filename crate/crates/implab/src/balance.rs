//! Balance, basepoints, criticality, and executable structure checkers.
//!
//! A connected interval graph is *balanced* when its weight equals its
//! impropriety; a *basepoint* is then a vertex whose own weight attains
//! that common value (only meaningful when it is positive, since weight-0
//! vertices exist in every graph). A graph is *p-critical* when its
//! impropriety is p > 0 and every proper induced subgraph has strictly
//! smaller impropriety; heredity makes single-vertex deletions sufficient,
//! which the test suite cross-validates against the full definition.
//!
//! The checkers turn structural facts about balanced critical graphs into
//! executable claims: exterior components at maximum-weight vertices have
//! exactly two vertices, the basepoint is unique, enough maximum-order
//! local components are cliques, and the positive-weight vertices induce a
//! disjoint union of paths. Each returns pass, fail with a counterexample,
//! or vacuous when its hypothesis is not met.

use serde::Serialize;
use thiserror::Error;

use crate::codec::encode_graph6;
use crate::graph::{Graph, VertexSet};
use crate::impropriety::{impropriety, EngineError};
use crate::local::{local_components, positive_weight_vertices, weight_of_graph, weight_of_vertex};
use crate::recognition::is_interval;

/// Failures that prevent balance analysis entirely.
#[derive(Debug, Error)]
pub enum BalanceError {
    /// Balance and criticality are component-level notions; callers split
    /// disconnected graphs themselves.
    #[error("balance analysis requires a connected graph")]
    Disconnected,
    /// The impropriety engine rejected the graph.
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Everything balance-related about one connected interval graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BalanceReport {
    /// The graph's weight: maximum vertex weight.
    pub wt: usize,
    /// The exact impropriety.
    pub imp: usize,
    /// Whether wt = imp.
    pub balanced: bool,
    /// Vertices whose weight attains imp, when balanced with wt > 0.
    pub basepoints: VertexSet,
    /// Whether the graph is p-critical for p = imp.
    pub critical: bool,
    /// The impropriety again, the p that `critical` refers to.
    pub p: usize,
}

/// Compute weight, impropriety, balance, basepoints, and criticality.
pub fn balance_report(g: &Graph) -> Result<BalanceReport, BalanceError> {
    if !g.is_connected() {
        return Err(BalanceError::Disconnected);
    }
    let imp = impropriety(g)?.p;
    let wt = weight_of_graph(g);
    let balanced = wt == imp;
    let basepoints = if balanced && wt > 0 {
        g.vertices()
            .filter(|&z| weight_of_vertex(g, z).expect("vertex ids come from the graph") == imp)
            .collect()
    } else {
        VertexSet::EMPTY
    };
    let critical = imp > 0 && deletions_stay_below(g, imp)?;
    Ok(BalanceReport {
        wt,
        imp,
        balanced,
        basepoints,
        critical,
        p: imp,
    })
}

/// True when deleting any single vertex drops the impropriety below `p`.
fn deletions_stay_below(g: &Graph, p: usize) -> Result<bool, BalanceError> {
    for v in g.vertices() {
        if impropriety(&g.delete_vertex(v).0)?.p >= p {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decide p-criticality; the returned p is the graph's impropriety.
///
/// Criticality is tested through single-vertex deletions: deleting more
/// vertices never raises the impropriety, so one-vertex minimality implies
/// full minimality.
pub fn is_p_critical(g: &Graph) -> Result<(bool, usize), BalanceError> {
    if !g.is_connected() {
        return Err(BalanceError::Disconnected);
    }
    let p = impropriety(g)?.p;
    if p == 0 {
        return Ok((false, 0));
    }
    Ok((deletions_stay_below(g, p)?, p))
}

/// A failed check, pinned to a concrete graph and vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// The graph, as graph6.
    pub graph: String,
    /// The offending vertices.
    pub vertices: VertexSet,
    /// What went wrong.
    pub detail: String,
}

/// Outcome of a structure checker.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Check {
    /// The claim holds on this input.
    Pass {
        /// What was verified, for the harness log.
        note: String,
    },
    /// The claim fails; here is the evidence.
    Fail {
        /// The refuting instance.
        counterexample: Counterexample,
    },
    /// The claim's hypothesis is not met on this input.
    Vacuous {
        /// Which part of the hypothesis failed.
        reason: String,
    },
}

impl Check {
    fn pass(note: impl Into<String>) -> Check {
        Check::Pass { note: note.into() }
    }

    fn vacuous(reason: impl Into<String>) -> Check {
        Check::Vacuous {
            reason: reason.into(),
        }
    }

    fn fail(g: &Graph, vertices: VertexSet, detail: impl Into<String>) -> Check {
        Check::Fail {
            counterexample: Counterexample {
                graph: encode_graph6(g),
                vertices,
                detail: detail.into(),
            },
        }
    }

    /// True for the failing variant.
    pub fn is_fail(&self) -> bool {
        matches!(self, Check::Fail { .. })
    }

    /// True for the vacuous variant.
    pub fn is_vacuous(&self) -> bool {
        matches!(self, Check::Vacuous { .. })
    }
}

/// Claim: in a balanced critical graph, every exterior component at every
/// maximum-weight vertex has exactly two vertices.
pub fn check_exterior_pair(g: &Graph) -> Result<Check, BalanceError> {
    let report = balance_report(g)?;
    if !(report.balanced && report.critical) {
        return Ok(Check::vacuous("graph is not balanced and critical"));
    }
    let mut inspected = 0;
    for z in g.vertices() {
        let profile = local_components(g, z).expect("vertex ids come from the graph");
        if profile.weight != report.wt {
            continue;
        }
        for component in profile.components.iter().filter(|c| c.exterior) {
            inspected += 1;
            if component.order() != 2 {
                return Ok(Check::fail(
                    g,
                    component.vertices,
                    format!(
                        "exterior component at maximum-weight vertex {z} has {} vertices",
                        component.order()
                    ),
                ));
            }
        }
    }
    Ok(Check::pass(format!(
        "{inspected} exterior components, all of order 2"
    )))
}

/// Claim: a balanced critical graph has exactly one basepoint.
pub fn check_unique_basepoint(g: &Graph) -> Result<Check, BalanceError> {
    let report = balance_report(g)?;
    if !(report.balanced && report.critical) {
        return Ok(Check::vacuous("graph is not balanced and critical"));
    }
    if report.basepoints.len() == 1 {
        Ok(Check::pass(format!(
            "unique basepoint {}",
            report.basepoints.min().expect("nonempty")
        )))
    } else {
        Ok(Check::fail(
            g,
            report.basepoints,
            format!("{} basepoints", report.basepoints.len()),
        ))
    }
}

/// Claim: at the basepoint of a balanced critical graph, enough local
/// components of maximum order are cliques — at least two when at most one
/// exterior component is present, at least three when none is. Two
/// exterior components impose no clique condition.
pub fn check_side_cliques(g: &Graph) -> Result<Check, BalanceError> {
    let report = balance_report(g)?;
    if !(report.balanced && report.critical) {
        return Ok(Check::vacuous("graph is not balanced and critical"));
    }
    let mut all_vacuous = true;
    let mut qualifying_total = 0;
    for z in report.basepoints.iter() {
        let profile = local_components(g, z).expect("basepoints are vertices");
        let required = match profile.n_exterior() {
            0 => 3,
            1 => 2,
            _ => continue,
        };
        all_vacuous = false;
        let max_order = profile
            .components
            .iter()
            .map(|c| c.order())
            .max()
            .expect("basepoints have local components");
        let qualifying = profile
            .components
            .iter()
            .filter(|c| c.order() == max_order && g.is_clique(c.vertices))
            .count();
        if qualifying < required {
            return Ok(Check::fail(
                g,
                VertexSet::singleton(z),
                format!(
                    "basepoint {z} has {qualifying} maximum-order clique components, needs {required}"
                ),
            ));
        }
        qualifying_total += qualifying;
    }
    if all_vacuous {
        return Ok(Check::vacuous(
            "two exterior components impose no clique condition",
        ));
    }
    Ok(Check::pass(format!(
        "{qualifying_total} maximum-order clique components at the basepoints"
    )))
}

/// Claim: impropriety is at least the weight. Graphs of weight 0 satisfy
/// this trivially and count as vacuous.
pub fn check_weight_lower_bound(g: &Graph) -> Result<Check, BalanceError> {
    let report = balance_report(g)?;
    if report.wt == 0 {
        return Ok(Check::vacuous("weight is 0"));
    }
    if report.imp >= report.wt {
        Ok(Check::pass(format!("imp {} >= wt {}", report.imp, report.wt)))
    } else {
        Ok(Check::fail(
            g,
            g.vertex_set(),
            format!("imp {} < wt {}", report.imp, report.wt),
        ))
    }
}

/// Claim: in a connected interval graph, the positive-weight vertices
/// induce a disjoint union of paths (degree at most 2, no cycles).
pub fn check_positive_weight_paths(g: &Graph) -> Result<Check, BalanceError> {
    if !g.is_connected() {
        return Err(BalanceError::Disconnected);
    }
    if let Some(witness) = is_interval(g).witness() {
        return Err(BalanceError::Engine(EngineError::NotInterval(witness.clone())));
    }
    let positive = positive_weight_vertices(g);
    if positive.is_empty() {
        return Ok(Check::vacuous("no vertex has positive weight"));
    }
    let (h, map) = g.induced_subgraph(positive);
    for v in h.vertices() {
        if h.degree(v) > 2 {
            return Ok(Check::fail(
                g,
                h.neighbors(v).with(v).iter().map(|u| map[u]).collect(),
                format!("positive-weight vertex {} has {} positive-weight neighbors", map[v], h.degree(v)),
            ));
        }
    }
    for component in h.components() {
        let edges_inside = component
            .iter()
            .map(|v| h.neighbors(v).intersection(component).len())
            .sum::<usize>()
            / 2;
        if edges_inside >= component.len() {
            return Ok(Check::fail(
                g,
                component.iter().map(|u| map[u]).collect(),
                "positive-weight vertices contain a cycle".to_string(),
            ));
        }
    }
    Ok(Check::pass(format!(
        "{} positive-weight vertices induce paths",
        positive.len()
    )))
}
