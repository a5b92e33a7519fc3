//! Canonical labeling by color refinement and individualization.
//!
//! Two graphs receive equal labels exactly when they are isomorphic, so
//! labels serve as hash keys for isomorph-free enumeration. The search
//! refines a vertex coloring to a fixpoint (signature: own color plus the
//! sorted multiset of neighbor colors, renormalized in sorted signature
//! order), then branches on every vertex of the first non-singleton color
//! class. Each discrete leaf orders the vertices by color; the label is the
//! lexicographically smallest packed adjacency matrix over all leaves.
//!
//! No automorphism pruning is attempted: highly symmetric inputs pay a
//! factorial factor in their symmetric core, which is acceptable at the
//! orders this crate enumerates (n ≤ 10).

use crate::graph::Graph;

/// A total isomorphism invariant: the graph order and the packed upper
/// triangle of the canonically relabeled adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonLabel {
    order: usize,
    bits: Vec<u64>,
}

/// Relabeling that sends each vertex to its canonical position, alongside
/// the label it achieves.
struct Leaf {
    bits: Vec<u64>,
    relabel: Vec<usize>,
}

/// Pack the upper triangle of `g` column-major, one bit per pair, high bit
/// first within each word so that `Vec<u64>` order equals bitstring order.
fn pack_adjacency(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let mut bits = vec![0u64; (n * n.saturating_sub(1) / 2).div_ceil(64)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                bits[k / 64] |= 1u64 << (63 - (k % 64));
            }
            k += 1;
        }
    }
    bits
}

/// Refine `colors` to the signature fixpoint. Color ids stay dense and are
/// assigned in sorted signature order, so the result is label-independent.
fn refine(g: &Graph, colors: &mut [u32]) {
    let n = g.order();
    let mut class_count = colors.iter().collect::<std::collections::HashSet<_>>().len();
    loop {
        let mut signatures: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut neighbor_colors: Vec<u32> =
                    g.neighbors(v).iter().map(|u| colors[u]).collect();
                neighbor_colors.sort_unstable();
                (colors[v], neighbor_colors, v)
            })
            .collect();
        signatures.sort_unstable();
        let mut next = 0u32;
        for i in 0..n {
            if i > 0 && (signatures[i].0, &signatures[i].1) != (signatures[i - 1].0, &signatures[i - 1].1)
            {
                next += 1;
            }
            colors[signatures[i].2] = next;
        }
        let new_count = (next + 1) as usize;
        if new_count == class_count || new_count == n {
            return;
        }
        class_count = new_count;
    }
}

/// Vertices of the smallest color shared by at least two of them. Relies on
/// `refine` keeping color ids dense in `0..n`.
fn first_split_class(g: &Graph, colors: &[u32]) -> Option<Vec<usize>> {
    let n = g.order();
    let mut count = vec![0usize; n];
    for &c in colors {
        count[c as usize] += 1;
    }
    let target = (0..n).find(|&c| count[c] >= 2)? as u32;
    Some((0..n).filter(|&v| colors[v] == target).collect())
}

fn search(g: &Graph, colors: &[u32], best: &mut Option<Leaf>) {
    match first_split_class(g, colors) {
        None => {
            // Discrete coloring: the color of each vertex is its position.
            let relabel: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
            let bits = pack_adjacency(&g.permuted(&relabel));
            if best.as_ref().is_none_or(|b| bits < b.bits) {
                *best = Some(Leaf { bits, relabel });
            }
        }
        Some(class) => {
            for &v in &class {
                let mut branched: Vec<u32> = colors.iter().map(|&c| 2 * c + 1).collect();
                branched[v] = 2 * colors[v];
                refine(g, &mut branched);
                search(g, &branched, best);
            }
        }
    }
}

fn canonical_leaf(g: &Graph) -> Leaf {
    if g.order() == 0 {
        return Leaf {
            bits: Vec::new(),
            relabel: Vec::new(),
        };
    }
    let mut colors = vec![0u32; g.order()];
    refine(g, &mut colors);
    let mut best = None;
    search(g, &colors, &mut best);
    best.expect("every branch reaches a discrete coloring")
}

/// The canonical label of `g`: equal across all graphs isomorphic to `g`,
/// distinct otherwise.
pub fn canonical_label(g: &Graph) -> CanonLabel {
    CanonLabel {
        order: g.order(),
        bits: canonical_leaf(g).bits,
    }
}

/// The canonical relabeling of `g` and the permutation that produces it
/// (vertex v of `g` becomes vertex `perm[v]`).
pub fn canonicalize(g: &Graph) -> (Graph, Vec<usize>) {
    let leaf = canonical_leaf(g);
    (g.permuted(&leaf.relabel), leaf.relabel)
}

/// The canonical form as graph6 text; equal strings mean isomorphic graphs.
pub fn canonical_form(g: &Graph) -> String {
    crate::codec::encode_graph6(&canonicalize(g).0)
}
