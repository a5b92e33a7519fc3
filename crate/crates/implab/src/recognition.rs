//! Interval recognition with certificates in both directions.
//!
//! Acceptance yields a [`CliqueOrdering`]: the maximal cliques arranged so
//! that every vertex's cliques are consecutive, which is exactly the
//! combinatorial skeleton of an interval representation. Rejection yields a
//! [`NonIntervalWitness`]: a chordless cycle of length at least 4, or an
//! asteroidal triple with its three avoiding paths. Both certificates carry
//! independent verifiers, so no caller has to trust the search.
//!
//! The pipeline is maximum cardinality search for chordality, maximal
//! cliques off the elimination ordering, then a pruned permutation search
//! for consecutive arrangements. A chordal graph with no consecutive
//! arrangement always contains an asteroidal triple, which the witness
//! search then locates by scanning triples.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// Maximal cliques arranged consecutively: for every vertex, the cliques
/// containing it occupy a contiguous run of positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueOrdering {
    /// The maximal cliques, each listed exactly once, in consecutive order.
    pub cliques: Vec<VertexSet>,
    /// Per vertex, the first and last clique positions containing it.
    pub ranges: Vec<(usize, usize)>,
}

impl CliqueOrdering {
    fn from_positions(n: usize, cliques: Vec<VertexSet>) -> CliqueOrdering {
        let ranges = (0..n)
            .map(|v| {
                let mut positions = cliques.iter().enumerate().filter(|(_, c)| c.contains(v));
                let first = positions.next().map(|(i, _)| i).expect("every vertex lies in a maximal clique");
                let last = positions.next_back().map_or(first, |(i, _)| i);
                (first, last)
            })
            .collect();
        CliqueOrdering { cliques, ranges }
    }

    /// The clique-position range of one vertex.
    pub fn range(&self, v: usize) -> (usize, usize) {
        self.ranges[v]
    }

    /// Independent validation: the cliques are exactly the maximal cliques
    /// of `g`, every vertex's positions are contiguous and match `ranges`,
    /// and adjacency coincides with range intersection.
    pub fn verify(&self, g: &Graph) -> Result<(), String> {
        if self.ranges.len() != g.order() {
            return Err(format!(
                "ordering covers {} vertices, graph has {}",
                self.ranges.len(),
                g.order()
            ));
        }
        let expected: std::collections::HashSet<VertexSet> =
            bron_kerbosch(g).into_iter().collect();
        let listed: std::collections::HashSet<VertexSet> =
            self.cliques.iter().copied().collect();
        if listed.len() != self.cliques.len() {
            return Err("a clique is listed twice".into());
        }
        if listed != expected {
            return Err("listed cliques are not the maximal cliques".into());
        }
        for v in g.vertices() {
            let positions: Vec<usize> = (0..self.cliques.len())
                .filter(|&i| self.cliques[i].contains(v))
                .collect();
            let (first, last) = self.ranges[v];
            if positions.is_empty()
                || positions[0] != first
                || positions[positions.len() - 1] != last
                || positions.len() != last - first + 1
            {
                return Err(format!("vertex {v} does not occupy exactly positions {first}..={last}"));
            }
        }
        for u in g.vertices() {
            for v in g.vertices().filter(|&v| v > u) {
                let (fu, lu) = self.ranges[u];
                let (fv, lv) = self.ranges[v];
                let meet = fu.max(fv) <= lu.min(lv);
                if meet != g.has_edge(u, v) {
                    return Err(format!("adjacency of {u},{v} disagrees with range intersection"));
                }
            }
        }
        Ok(())
    }
}

/// A verified obstruction to being an interval graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum NonIntervalWitness {
    /// An induced cycle with at least 4 vertices, in cyclic order.
    ChordlessCycle {
        /// The cycle's vertices; consecutive entries (and the ends) are
        /// adjacent, nothing else is.
        cycle: Vec<usize>,
    },
    /// Three pairwise nonadjacent vertices such that every two of them are
    /// joined by a path avoiding the closed neighborhood of the third.
    AsteroidalTriple {
        /// The triple, ascending.
        triple: [usize; 3],
        /// `paths[i]` joins the two triple members other than `triple[i]`
        /// and avoids the closed neighborhood of `triple[i]`.
        paths: [Vec<usize>; 3],
    },
}

impl NonIntervalWitness {
    /// The vertices participating in the witness.
    pub fn vertices(&self) -> VertexSet {
        match self {
            NonIntervalWitness::ChordlessCycle { cycle } => cycle.iter().copied().collect(),
            NonIntervalWitness::AsteroidalTriple { triple, paths } => triple
                .iter()
                .copied()
                .chain(paths.iter().flatten().copied())
                .collect(),
        }
    }

    /// Check the witness against `g` from scratch.
    pub fn verify(&self, g: &Graph) -> Result<(), String> {
        match self {
            NonIntervalWitness::ChordlessCycle { cycle } => {
                let k = cycle.len();
                if k < 4 {
                    return Err(format!("cycle has only {k} vertices"));
                }
                let members: VertexSet = cycle.iter().copied().collect();
                if members.len() != k {
                    return Err("cycle repeats a vertex".into());
                }
                for i in 0..k {
                    for j in i + 1..k {
                        let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                        if g.has_edge(cycle[i], cycle[j]) != consecutive {
                            return Err(format!(
                                "cycle pair {},{} is {}",
                                cycle[i],
                                cycle[j],
                                if consecutive { "missing its edge" } else { "a chord" }
                            ));
                        }
                    }
                }
                Ok(())
            }
            NonIntervalWitness::AsteroidalTriple { triple, paths } => {
                let [a, b, c] = *triple;
                if a >= b || b >= c {
                    return Err("triple is not ascending".into());
                }
                for (x, y) in [(a, b), (a, c), (b, c)] {
                    if g.has_edge(x, y) {
                        return Err(format!("triple members {x},{y} are adjacent"));
                    }
                }
                for (i, path) in paths.iter().enumerate() {
                    let (x, y) = match i {
                        0 => (b, c),
                        1 => (a, c),
                        _ => (a, b),
                    };
                    let avoid = g.closed_neighborhood(triple[i]);
                    if path.first() != Some(&x) || path.last() != Some(&y) {
                        return Err(format!("path {i} does not join {x} and {y}"));
                    }
                    let members: VertexSet = path.iter().copied().collect();
                    if members.len() != path.len() {
                        return Err(format!("path {i} repeats a vertex"));
                    }
                    if !members.intersection(avoid).is_empty() {
                        return Err(format!("path {i} meets the closed neighborhood of {}", triple[i]));
                    }
                    for pair in path.windows(2) {
                        if !g.has_edge(pair[0], pair[1]) {
                            return Err(format!("path {i} has a non-edge {},{}", pair[0], pair[1]));
                        }
                    }
                }
                Ok(())
            }
        }
    }
}

/// Outcome of interval recognition: a certificate either way.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum IntervalDecision {
    /// The graph is interval; here is a consecutive clique ordering.
    Interval(CliqueOrdering),
    /// The graph is not interval; here is why.
    NonInterval(NonIntervalWitness),
}

impl IntervalDecision {
    /// True for the accepting branch.
    pub fn is_interval(&self) -> bool {
        matches!(self, IntervalDecision::Interval(_))
    }

    /// The ordering, if accepted.
    pub fn ordering(&self) -> Option<&CliqueOrdering> {
        match self {
            IntervalDecision::Interval(o) => Some(o),
            IntervalDecision::NonInterval(_) => None,
        }
    }

    /// The witness, if rejected.
    pub fn witness(&self) -> Option<&NonIntervalWitness> {
        match self {
            IntervalDecision::Interval(_) => None,
            IntervalDecision::NonInterval(w) => Some(w),
        }
    }
}

/// Maximum cardinality search order: repeatedly visit the unvisited vertex
/// with the most visited neighbors, ties to the smallest id.
fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut weight = vec![0usize; n];
    let mut visited = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = g
            .vertices()
            .filter(|&v| !visited.contains(v))
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("an unvisited vertex remains");
        visited.insert(v);
        order.push(v);
        for u in g.neighbors(v).iter() {
            if !visited.contains(u) {
                weight[u] += 1;
            }
        }
    }
    order
}

/// Shortest path from `from` to `to` staying inside `within`, exploring
/// neighbors in ascending order; endpoints must lie in `within`.
fn bfs_path(g: &Graph, from: usize, to: usize, within: VertexSet) -> Option<Vec<usize>> {
    if !within.contains(from) || !within.contains(to) {
        return None;
    }
    let mut parent = vec![usize::MAX; g.order()];
    let mut seen = VertexSet::singleton(from);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![to];
            let mut at = to;
            while at != from {
                at = parent[at];
                path.push(at);
            }
            path.reverse();
            return Some(path);
        }
        for u in g.neighbors(v).intersection(within).iter() {
            if !seen.contains(u) {
                seen.insert(u);
                parent[u] = v;
                queue.push_back(u);
            }
        }
    }
    None
}

/// The lexicographically smallest chordless cycle (by sorted vertex list)
/// in a non-chordal graph; `None` when the graph is chordal.
fn find_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    for v in g.vertices() {
        let nv = g.neighbors(v);
        for u in nv.iter() {
            for w in nv.iter().filter(|&w| w > u) {
                if g.has_edge(u, w) {
                    continue;
                }
                let within = g
                    .vertex_set()
                    .difference(nv.without(u).without(w))
                    .without(v);
                if let Some(path) = bfs_path(g, u, w, within) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    let mut key = cycle.clone();
                    key.sort_unstable();
                    if best.as_ref().is_none_or(|(k, _)| key < *k) {
                        best = Some((key, cycle));
                    }
                }
            }
        }
    }
    best.map(|(_, cycle)| cycle)
}

/// The lexicographically first asteroidal triple, with its avoiding paths.
fn find_asteroidal_triple(g: &Graph) -> Option<([usize; 3], [Vec<usize>; 3])> {
    let avoiding_path = |x: usize, y: usize, third: usize| {
        bfs_path(g, x, y, g.vertex_set().difference(g.closed_neighborhood(third)))
    };
    for a in g.vertices() {
        for b in g.vertices().filter(|&b| b > a && !g.has_edge(a, b)) {
            for c in g
                .vertices()
                .filter(|&c| c > b && !g.has_edge(a, c) && !g.has_edge(b, c))
            {
                let Some(bc) = avoiding_path(b, c, a) else { continue };
                let Some(ac) = avoiding_path(a, c, b) else { continue };
                let Some(ab) = avoiding_path(a, b, c) else { continue };
                return Some(([a, b, c], [bc, ac, ab]));
            }
        }
    }
    None
}

/// Independent maximal-clique listing (pivoted Bron–Kerbosch); used by the
/// certificate validator so the elimination-ordering route is cross-checked.
fn bron_kerbosch(g: &Graph) -> Vec<VertexSet> {
    fn expand(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() && x.is_empty() {
            if !r.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| g.neighbors(u).intersection(p).len())
            .expect("p or x is nonempty");
        for v in p.difference(g.neighbors(pivot)).to_vec() {
            expand(
                g,
                r.with(v),
                p.intersection(g.neighbors(v)),
                x.intersection(g.neighbors(v)),
                out,
            );
            p.remove(v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    expand(g, VertexSet::EMPTY, g.vertex_set(), VertexSet::EMPTY, &mut out);
    out.sort_unstable();
    out
}

/// The maximal cliques of a chordal graph, deterministically ordered by
/// their bitset value. Non-chordal inputs yield a chordless-cycle witness.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<VertexSet>, NonIntervalWitness> {
    let order = mcs_order(g);
    let mut position = vec![0usize; g.order()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    // Earlier-visited neighbors of each vertex; in the reversed (perfect
    // elimination) ordering these are the later neighbors, which must form
    // a clique. The Tarjan–Yannakakis test checks each against its latest
    // earlier neighbor only.
    let earlier = |v: usize| -> VertexSet {
        g.neighbors(v)
            .iter()
            .filter(|&u| position[u] < position[v])
            .collect()
    };
    for &v in &order {
        let s = earlier(v);
        if let Some(parent) = s.iter().max_by_key(|&u| position[u]) {
            if !s.without(parent).is_subset_of(g.neighbors(parent)) {
                let cycle = find_chordless_cycle(g)
                    .expect("a failed elimination check implies a chordless cycle");
                return Err(NonIntervalWitness::ChordlessCycle { cycle });
            }
        }
    }
    let mut candidates: Vec<VertexSet> = order.iter().map(|&v| earlier(v).with(v)).collect();
    candidates.sort_unstable_by_key(|c| std::cmp::Reverse(c.len()));
    let mut cliques: Vec<VertexSet> = Vec::new();
    for c in candidates {
        if !cliques.iter().any(|k| c.is_subset_of(*k)) {
            cliques.push(c);
        }
    }
    cliques.sort_unstable();
    Ok(cliques)
}

/// Depth-first stream of every consecutive arrangement of the maximal
/// cliques, each exactly once, in deterministic order.
///
/// A prefix extends by clique C only when every vertex that has started but
/// not finished its run lies in C; this prunes interrupted vertices at the
/// earliest possible point.
pub struct ConsecutiveOrderings {
    n: usize,
    cliques: Vec<VertexSet>,
    clique_count: Vec<usize>,
    prefix: Vec<usize>,
    used: u64,
    used_count: Vec<usize>,
    open: VertexSet,
    saved_open: Vec<VertexSet>,
    cursor: Vec<usize>,
    done: bool,
}

impl ConsecutiveOrderings {
    fn new(n: usize, cliques: Vec<VertexSet>) -> ConsecutiveOrderings {
        let mut clique_count = vec![0usize; n];
        for c in &cliques {
            for v in c.iter() {
                clique_count[v] += 1;
            }
        }
        let levels = cliques.len() + 1;
        ConsecutiveOrderings {
            n,
            cliques,
            clique_count,
            prefix: Vec::new(),
            used: 0,
            used_count: vec![0; n],
            open: VertexSet::EMPTY,
            saved_open: Vec::new(),
            cursor: vec![0; levels],
            done: false,
        }
    }

    fn push(&mut self, c: usize) {
        self.saved_open.push(self.open);
        self.prefix.push(c);
        self.used |= 1 << c;
        let clique = self.cliques[c];
        self.open = self.open.union(clique);
        for v in clique.iter() {
            self.used_count[v] += 1;
            if self.used_count[v] == self.clique_count[v] {
                self.open.remove(v);
            }
        }
    }

    fn pop(&mut self) -> bool {
        let Some(c) = self.prefix.pop() else {
            return false;
        };
        self.used &= !(1 << c);
        for v in self.cliques[c].iter() {
            self.used_count[v] -= 1;
        }
        self.open = self.saved_open.pop().expect("saved state per level");
        true
    }

    fn materialize(&self) -> CliqueOrdering {
        let arranged: Vec<VertexSet> = self.prefix.iter().map(|&i| self.cliques[i]).collect();
        CliqueOrdering::from_positions(self.n, arranged)
    }
}

impl Iterator for ConsecutiveOrderings {
    type Item = CliqueOrdering;

    fn next(&mut self) -> Option<CliqueOrdering> {
        if self.done {
            return None;
        }
        loop {
            let level = self.prefix.len();
            if level == self.cliques.len() {
                let ordering = self.materialize();
                if !self.pop() {
                    self.done = true;
                }
                return Some(ordering);
            }
            let candidate = (self.cursor[level]..self.cliques.len()).find(|&c| {
                self.used & (1 << c) == 0 && self.open.is_subset_of(self.cliques[c])
            });
            match candidate {
                Some(c) => {
                    self.cursor[level] = c + 1;
                    self.cursor[level + 1] = 0;
                    self.push(c);
                }
                None => {
                    self.cursor[level] = 0;
                    if !self.pop() {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}

/// Stream all consecutive clique orderings of `g`. Non-chordal inputs are
/// rejected with a witness; chordal non-interval inputs yield an empty
/// stream.
pub fn consecutive_orderings(g: &Graph) -> Result<ConsecutiveOrderings, NonIntervalWitness> {
    let cliques = maximal_cliques(g)?;
    Ok(ConsecutiveOrderings::new(g.order(), cliques))
}

/// Decide interval-ness with a certificate either way.
pub fn is_interval(g: &Graph) -> IntervalDecision {
    match consecutive_orderings(g) {
        Err(witness) => IntervalDecision::NonInterval(witness),
        Ok(mut stream) => match stream.next() {
            Some(ordering) => IntervalDecision::Interval(ordering),
            None => {
                let (triple, paths) = find_asteroidal_triple(g)
                    .expect("a chordal graph with no consecutive arrangement contains an asteroidal triple");
                IntervalDecision::NonInterval(NonIntervalWitness::AsteroidalTriple { triple, paths })
            }
        },
    }
}
