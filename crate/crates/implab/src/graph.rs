//! Dense small-graph representation with bitset adjacency.
//!
//! Every graph in this crate is simple, undirected and labeled by the
//! integers `0..n`. Vertex sets are `u64` bitmasks, which caps the order at
//! [`MAX_VERTICES`]; the toolkit targets exhaustive desk-scale analysis, so
//! the cap is generous.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest supported vertex count (vertex sets are single machine words).
pub const MAX_VERTICES: usize = 64;

/// Errors produced by graph constructors and accessors.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    /// Requested order exceeds [`MAX_VERTICES`].
    #[error("graph order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge(usize),
    /// A vertex id was not in `0..n`.
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange {
        /// The offending vertex id.
        vertex: usize,
        /// The order of the graph.
        order: usize,
    },
    /// An edge `(v, v)` was requested; graphs here are irreflexive.
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
}

/// A set of vertices stored as a bitmask.
///
/// Iteration order is ascending vertex id, so derived `Ord`/`Hash` and all
/// set-valued outputs are deterministic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    /// The empty set.
    pub const EMPTY: VertexSet = VertexSet(0);

    /// Set containing exactly `v`.
    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// Set containing all of `0..n`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    /// Raw bitmask.
    pub fn bits(self) -> u64 {
        self.0
    }

    /// Build from a raw bitmask.
    pub fn from_bits(bits: u64) -> VertexSet {
        VertexSet(bits)
    }

    /// Membership test.
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    /// Add a vertex.
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1 << v;
    }

    /// Remove a vertex.
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1 << v);
    }

    /// Copy of the set with `v` added.
    #[must_use]
    pub fn with(self, v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | (1 << v))
    }

    /// Copy of the set with `v` removed.
    #[must_use]
    pub fn without(self, v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 & !(1 << v))
    }

    /// Number of vertices in the set.
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Whether the set is empty.
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest vertex, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Whether `self` is a subset of `other`.
    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Set union.
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    /// Set intersection.
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    /// Set difference `self \ other`.
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Iterate members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// Members as a sorted `Vec`.
    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_vec().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<VertexSet, D::Error> {
        let items = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = items.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(D::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(items.into_iter().collect())
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// ```
/// use implab::graph::Graph;
///
/// let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
/// assert_eq!(p3.degree(1), 2);
/// assert!(p3.is_connected());
/// ```
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn new(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// Graph of order `n` with the given edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::new(n)?;
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// Path `P_n` on vertices `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::new(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v)?;
        }
        Ok(g)
    }

    /// Cycle `C_n` (requires `n >= 3`).
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::VertexOutOfRange {
                vertex: n,
                order: n,
            });
        }
        let mut g = Graph::path(n)?;
        g.add_edge(n - 1, 0)?;
        Ok(g)
    }

    /// Complete bipartite graph `K_{a,b}`: part `0..a` joined to part `a..a+b`.
    ///
    /// `K_{1,m}` is the star with center `0`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::new(a + b)?;
        for u in 0..a {
            for v in a..(a + b) {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// Star `K_{1,m}` with center `0` and leaves `1..=m`.
    pub fn star(m: usize) -> Result<Graph, GraphError> {
        Graph::complete_bipartite(1, m)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Iterate vertices `0..n`.
    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    /// Insert the edge `{u, v}`. Idempotent for existing edges.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    /// Adjacency test. Out-of-range vertices are simply non-adjacent.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    /// Open neighborhood of `v`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | (1 << v))
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u]).iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Whether `set` induces a complete subgraph.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.difference(VertexSet::singleton(v)).is_subset_of(self.neighbors(v)))
    }

    /// Connected component containing `start`, restricted to `within`.
    ///
    /// `start` must be a member of `within`.
    pub fn component_of(&self, start: usize, within: VertexSet) -> VertexSet {
        debug_assert!(within.contains(start));
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.neighbors(v).intersection(within).difference(seen));
            }
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = within;
        while let Some(v) = rest.min() {
            let comp = self.component_of(v, rest);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Connected components of the whole graph, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertex_set())
    }

    /// Whether the graph is connected. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    /// Subgraph induced by `set`, relabeled densely.
    ///
    /// Returns the new graph together with the relabeling map: entry `i` of
    /// the map is the original id of new vertex `i`. Members of `set` are
    /// taken in ascending order.
    ///
    /// ```
    /// use implab::graph::{Graph, VertexSet};
    ///
    /// let star = Graph::star(4).unwrap();
    /// let keep: VertexSet = [0usize, 2, 3].into_iter().collect();
    /// let (sub, map) = star.induced_subgraph(keep);
    /// assert_eq!(sub.order(), 3);
    /// assert_eq!(map, vec![0, 2, 3]);
    /// assert!(sub.has_edge(0, 1) && sub.has_edge(0, 2) && !sub.has_edge(1, 2));
    /// ```
    pub fn induced_subgraph(&self, set: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = set.intersection(self.vertex_set()).to_vec();
        let mut g = Graph::new(map.len()).expect("subgraph order cannot exceed original");
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j).expect("indices are in range by construction");
                }
            }
        }
        (g, map)
    }

    /// Graph with vertex `v` removed, relabeled densely, plus relabeling map.
    pub fn delete_vertex(&self, v: usize) -> (Graph, Vec<usize>) {
        self.induced_subgraph(self.vertex_set().difference(VertexSet::singleton(v)))
    }

    /// Apply a permutation: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph::new(self.n).expect("same order");
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]).expect("permutation stays in range");
        }
        g
    }

    /// Whether `v` is a cut vertex (its removal increases the component count).
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        let before = self.components().len();
        let rest = self.vertex_set().difference(VertexSet::singleton(v));
        let after = self.components_within(rest).len();
        after > before
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        crate::codec::encode_graph6(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Graph, D::Error> {
        let text = String::deserialize(deserializer)?;
        crate::codec::decode(&text).map_err(D::Error::custom)
    }
}
