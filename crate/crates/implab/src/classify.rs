//! The aggregate classification record: everything the toolkit can
//! determine about one graph in a single pass.
//!
//! Classification is total. Non-interval graphs carry a rejection
//! witness and skip the impropriety analysis; disconnected graphs keep
//! their impropriety certificate (maximum over components) but have no
//! balance report, which is defined for connected graphs only.

use serde::Serialize;

use crate::bal::{is_bal_form, BalSpec};
use crate::balance::{balance_report, BalanceReport};
use crate::codec::encode_graph6;
use crate::graph::Graph;
use crate::impropriety::{impropriety, ImproprietyCertificate};
use crate::local::{vertex_type, weight_of_graph, weight_of_vertex};
use crate::recognition::{is_interval, IntervalDecision};

/// Weight and exterior-component count of one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexSummary {
    /// The vertex id.
    pub vertex: usize,
    /// Sum of the counted non-exterior local component orders.
    pub weight: usize,
    /// Number of exterior local components, the vertex's type.
    pub exterior_components: usize,
}

/// Everything the toolkit determines about one graph.
#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    /// The graph, as graph6 text.
    pub graph6: String,
    /// Number of vertices.
    pub order: usize,
    /// Number of edges.
    pub size: usize,
    /// Whether the graph is connected.
    pub connected: bool,
    /// Whether the graph is interval.
    pub interval: bool,
    /// Clique-ordering certificate or non-interval witness.
    pub decision: IntervalDecision,
    /// The graph's weight, the maximum vertex weight.
    pub wt: usize,
    /// Per-vertex weights and types.
    pub vertices: Vec<VertexSummary>,
    /// Exact impropriety certificate; absent for non-interval graphs.
    pub imp: Option<ImproprietyCertificate>,
    /// Balance, criticality, and basepoints; connected interval only.
    pub balance: Option<BalanceReport>,
    /// The recovered normal-form spec, when the graph is one.
    pub bal_form: Option<BalSpec>,
    /// Why the graph is not a normal form, when it is not.
    pub bal_form_rejection: Option<String>,
}

/// Classify a graph. Total over all graphs.
pub fn classify(g: &Graph) -> Classification {
    let decision = is_interval(g);
    let vertices = g
        .vertices()
        .map(|v| VertexSummary {
            vertex: v,
            weight: weight_of_vertex(g, v).expect("vertex ids are in range"),
            exterior_components: vertex_type(g, v).expect("vertex ids are in range"),
        })
        .collect();
    let (bal_form, bal_form_rejection) = match is_bal_form(g) {
        Ok(spec) => (Some(spec), None),
        Err(rejection) => (None, Some(rejection.reason)),
    };
    Classification {
        graph6: encode_graph6(g),
        order: g.order(),
        size: g.edge_count(),
        connected: g.is_connected(),
        interval: decision.is_interval(),
        wt: weight_of_graph(g),
        vertices,
        imp: impropriety(g).ok(),
        balance: balance_report(g).ok(),
        bal_form,
        bal_form_rejection,
        decision,
    }
}
