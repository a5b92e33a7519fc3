//! Interval models as linear orders of endpoint events.
//!
//! A model over vertices 0..n is a sequence of 2n events, one left and one
//! right endpoint per vertex, left strictly before right. All endpoints
//! occupy distinct positions, so interval intersection and containment are
//! decided purely by event order: intervals of u and v intersect when
//! max(ℓ_u, ℓ_v) precedes min(r_u, r_v), and v lies inside z when ℓ_z
//! precedes ℓ_v and r_v precedes r_z (strict on both sides).
//!
//! The impropriety of a model is the largest number of intervals contained
//! in a single interval, the quantity the engine minimizes over models.

use serde::Serialize;
use thiserror::Error;

/// Which endpoint of an interval an event marks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EndpointKind {
    /// The interval opens here.
    Left,
    /// The interval closes here.
    Right,
}

/// One endpoint event: a vertex's interval opens or closes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Event {
    /// The vertex whose interval this endpoint belongs to.
    pub vertex: usize,
    /// Opening or closing.
    pub kind: EndpointKind,
}

/// A malformed event sequence.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    /// The sequence length is odd or vertex ids are not dense.
    #[error("events must pair one left and one right endpoint per vertex 0..n")]
    MalformedEvents,
    /// Some vertex's endpoints are missing, duplicated, or reversed.
    #[error("vertex {vertex} does not open exactly once before closing exactly once")]
    BadEndpoints {
        /// The offending vertex.
        vertex: usize,
    },
}

/// A validated interval model: 2n endpoint events in a fixed linear order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalModel {
    events: Vec<Event>,
    #[serde(skip)]
    left: Vec<usize>,
    #[serde(skip)]
    right: Vec<usize>,
}

impl IntervalModel {
    /// Validate and index an event sequence.
    pub fn new(events: Vec<Event>) -> Result<IntervalModel, ModelError> {
        if !events.len().is_multiple_of(2) {
            return Err(ModelError::MalformedEvents);
        }
        let n = events.len() / 2;
        let mut left = vec![usize::MAX; n];
        let mut right = vec![usize::MAX; n];
        for (pos, e) in events.iter().enumerate() {
            if e.vertex >= n {
                return Err(ModelError::MalformedEvents);
            }
            let slot = match e.kind {
                EndpointKind::Left => &mut left[e.vertex],
                EndpointKind::Right => &mut right[e.vertex],
            };
            if *slot != usize::MAX {
                return Err(ModelError::BadEndpoints { vertex: e.vertex });
            }
            *slot = pos;
        }
        for v in 0..n {
            if left[v] == usize::MAX || right[v] == usize::MAX || left[v] > right[v] {
                return Err(ModelError::BadEndpoints { vertex: v });
            }
        }
        Ok(IntervalModel { events, left, right })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.events.len() / 2
    }

    /// The event sequence.
    pub fn events(&self) -> &[Event] {
        &self.events
    }

    /// Position of a vertex's left endpoint.
    pub fn left(&self, v: usize) -> usize {
        self.left[v]
    }

    /// Position of a vertex's right endpoint.
    pub fn right(&self, v: usize) -> usize {
        self.right[v]
    }

    /// Check that the model represents exactly the edges of `g`.
    pub fn realizes(&self, g: &crate::graph::Graph) -> Result<(), String> {
        if g.order() != self.order() {
            return Err(format!("model has {} vertices, graph has {}", self.order(), g.order()));
        }
        for u in 0..self.order() {
            for v in u + 1..self.order() {
                let meet = self.left[u].max(self.left[v]) < self.right[u].min(self.right[v]);
                if meet != g.has_edge(u, v) {
                    return Err(format!(
                        "intervals of {u} and {v} {} but the edge is {}",
                        if meet { "meet" } else { "are disjoint" },
                        if g.has_edge(u, v) { "present" } else { "absent" },
                    ));
                }
            }
        }
        Ok(())
    }

    /// Per-vertex containment counts: how many other intervals lie strictly
    /// inside each vertex's interval.
    pub fn containment_counts(&self) -> Vec<usize> {
        let n = self.order();
        (0..n)
            .map(|z| {
                (0..n)
                    .filter(|&v| {
                        v != z && self.left[z] < self.left[v] && self.right[v] < self.right[z]
                    })
                    .count()
            })
            .collect()
    }

    /// The model's impropriety: the maximum containment count.
    pub fn impropriety(&self) -> usize {
        self.containment_counts().into_iter().max().unwrap_or(0)
    }

    /// Deterministic ASCII diagram: one line per vertex, columns aligned to
    /// event positions.
    pub fn to_ascii(&self) -> String {
        let n = self.order();
        let label_width = (n.max(2) - 1).to_string().len();
        let mut out = String::new();
        for v in 0..n {
            let mut row = format!("{v:>label_width$} ");
            for pos in 0..=self.right[v] {
                row.push(if pos == self.left[v] {
                    '['
                } else if pos == self.right[v] {
                    ']'
                } else if pos > self.left[v] {
                    '-'
                } else {
                    ' '
                });
            }
            out.push_str(&row);
            out.push('\n');
        }
        out
    }

    /// SVG diagram in the same layout: one horizontal segment per vertex,
    /// rows by containment depth so nested intervals sit below their hosts.
    pub fn to_svg(&self) -> String {
        let n = self.order();
        let depth: Vec<usize> = (0..n)
            .map(|v| {
                (0..n)
                    .filter(|&z| {
                        z != v && self.left[z] < self.left[v] && self.right[v] < self.right[z]
                    })
                    .count()
            })
            .collect();
        let x = |pos: usize| 20 + 18 * pos;
        let y = |v: usize| 30 + 34 * depth[v] + 8 * (v % 3);
        let width = x(2 * n.max(1)) + 20;
        let height = 60 + 34 * depth.iter().max().copied().unwrap_or(0) + 16;
        let mut out = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {width} {height}\">\n"
        );
        for v in 0..n {
            let (x1, x2, yv) = (x(self.left[v]), x(self.right[v]), y(v));
            out.push_str(&format!(
                "  <line x1=\"{x1}\" y1=\"{yv}\" x2=\"{x2}\" y2=\"{yv}\" stroke=\"black\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n"
            ));
            out.push_str(&format!(
                "  <text x=\"{x1}\" y=\"{}\" font-size=\"11\" font-family=\"monospace\">{v}</text>\n",
                yv - 6
            ));
        }
        out.push_str("</svg>\n");
        out
    }
}

/// Convenience constructor used throughout the tests: a sequence of
/// (vertex, kind) pairs.
pub fn model_of(pairs: &[(usize, EndpointKind)]) -> Result<IntervalModel, ModelError> {
    IntervalModel::new(
        pairs
            .iter()
            .map(|&(vertex, kind)| Event { vertex, kind })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::EndpointKind::{Left, Right};
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn validation_rejects_malformed_sequences() {
        assert_eq!(
            model_of(&[(0, Left)]).unwrap_err(),
            ModelError::MalformedEvents
        );
        assert_eq!(
            model_of(&[(0, Left), (0, Left)]).unwrap_err(),
            ModelError::BadEndpoints { vertex: 0 }
        );
        assert_eq!(
            model_of(&[(0, Right), (0, Left)]).unwrap_err(),
            ModelError::BadEndpoints { vertex: 0 }
        );
        assert_eq!(
            model_of(&[(1, Left), (1, Right)]).unwrap_err(),
            ModelError::MalformedEvents
        );
    }

    #[test]
    fn containment_counting() {
        // Nested pair: a strictly contains b.
        let nested = model_of(&[(0, Left), (1, Left), (1, Right), (0, Right)]).unwrap();
        assert_eq!(nested.containment_counts(), vec![1, 0]);
        assert_eq!(nested.impropriety(), 1);
        // Disjoint pair: nothing contained.
        let disjoint = model_of(&[(0, Left), (0, Right), (1, Left), (1, Right)]).unwrap();
        assert_eq!(disjoint.containment_counts(), vec![0, 0]);
        // A wasteful star model: z spans a, b, c one after another.
        let star = model_of(&[
            (0, Left),
            (1, Left),
            (1, Right),
            (2, Left),
            (2, Right),
            (3, Left),
            (3, Right),
            (0, Right),
        ])
        .unwrap();
        assert_eq!(star.containment_counts(), vec![3, 0, 0, 0]);
        assert_eq!(star.impropriety(), 3);
        assert!(star.realizes(&Graph::star(3).unwrap()).is_ok());
    }

    #[test]
    fn realization_checks_edges_both_ways() {
        let overlap = model_of(&[(0, Left), (1, Left), (0, Right), (1, Right)]).unwrap();
        assert!(overlap.realizes(&Graph::complete(2).unwrap()).is_ok());
        assert!(overlap.realizes(&Graph::new(2).unwrap()).is_err());
        let disjoint = model_of(&[(0, Left), (0, Right), (1, Left), (1, Right)]).unwrap();
        assert!(disjoint.realizes(&Graph::new(2).unwrap()).is_ok());
        assert!(disjoint.realizes(&Graph::complete(2).unwrap()).is_err());
    }

    #[test]
    fn ascii_layout_is_column_aligned() {
        let nested = model_of(&[(0, Left), (1, Left), (1, Right), (0, Right)]).unwrap();
        assert_eq!(nested.to_ascii(), "0 [--]\n1  []\n");
    }

    #[test]
    fn svg_contains_one_segment_per_vertex() {
        let nested = model_of(&[(0, Left), (1, Left), (1, Right), (0, Right)]).unwrap();
        let svg = nested.to_svg();
        assert_eq!(svg.matches("<line").count(), 2);
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
    }
}
