//! Local structure at a vertex: the components left by deleting it, their
//! exterior flags, and the weight function built on them.
//!
//! For a vertex z of G, the *local components* at z are the connected
//! components of G with z deleted. A local component is *exterior* when it
//! contains a vertex not adjacent to z, so a non-exterior component lies
//! entirely inside N(z). The *type* of z is its number of exterior
//! components (at most two in any interval graph), and the *weight* of z is
//! the sum of the (n − 2) smallest orders among its non-exterior components,
//! where n counts all local components; the sum is empty when n ≤ 2.

use serde::Serialize;

use crate::graph::{Graph, GraphError, VertexSet};

/// One local component at a center vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalComponent {
    /// The component's vertices (the center is never included).
    pub vertices: VertexSet,
    /// True when some member is not adjacent to the center.
    pub exterior: bool,
}

impl LocalComponent {
    /// Number of vertices in the component.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }
}

/// The decomposition of a graph at one vertex, with the derived weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalProfile {
    /// The center vertex z.
    pub center: usize,
    /// All local components, ordered by smallest member.
    pub components: Vec<LocalComponent>,
    /// The weight of the center under this decomposition.
    pub weight: usize,
}

impl LocalProfile {
    /// Total number of local components.
    pub fn n_components(&self) -> usize {
        self.components.len()
    }

    /// Number of exterior components; this is the type of the center.
    pub fn n_exterior(&self) -> usize {
        self.components.iter().filter(|c| c.exterior).count()
    }

    /// Orders of the non-exterior components, ascending.
    pub fn non_exterior_orders(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = self
            .components
            .iter()
            .filter(|c| !c.exterior)
            .map(LocalComponent::order)
            .collect();
        orders.sort_unstable();
        orders
    }
}

/// Decompose `g` at `z` into local components and compute the weight of `z`.
pub fn local_components(g: &Graph, z: usize) -> Result<LocalProfile, GraphError> {
    if z >= g.order() {
        return Err(GraphError::VertexOutOfRange {
            vertex: z,
            order: g.order(),
        });
    }
    let rest = g.vertex_set().without(z);
    let neighborhood = g.neighbors(z);
    let components: Vec<LocalComponent> = g
        .components_within(rest)
        .into_iter()
        .map(|vertices| LocalComponent {
            vertices,
            exterior: !vertices.is_subset_of(neighborhood),
        })
        .collect();
    let weight = weight_from_components(&components);
    Ok(LocalProfile {
        center: z,
        components,
        weight,
    })
}

fn weight_from_components(components: &[LocalComponent]) -> usize {
    let n = components.len();
    if n <= 2 {
        return 0;
    }
    let mut orders: Vec<usize> = components
        .iter()
        .filter(|c| !c.exterior)
        .map(LocalComponent::order)
        .collect();
    orders.sort_unstable();
    orders.iter().take(n - 2).sum()
}

/// The weight of one vertex.
///
/// ```
/// use implab::graph::Graph;
/// use implab::local::weight_of_vertex;
///
/// let star = Graph::star(4).unwrap();
/// assert_eq!(weight_of_vertex(&star, 0).unwrap(), 2);
/// assert_eq!(weight_of_vertex(&star, 1).unwrap(), 0);
/// ```
pub fn weight_of_vertex(g: &Graph, z: usize) -> Result<usize, GraphError> {
    Ok(local_components(g, z)?.weight)
}

/// The weight of a graph: the maximum vertex weight, 0 for the empty graph.
pub fn weight_of_graph(g: &Graph) -> usize {
    g.vertices()
        .map(|z| local_components(g, z).expect("vertex ids come from the graph").weight)
        .max()
        .unwrap_or(0)
}

/// The type of a vertex: its number of exterior local components.
///
/// Interval graphs never exceed type 2; larger values certify a
/// non-interval input.
pub fn vertex_type(g: &Graph, z: usize) -> Result<usize, GraphError> {
    Ok(local_components(g, z)?.n_exterior())
}

/// All vertices of positive weight.
pub fn positive_weight_vertices(g: &Graph) -> VertexSet {
    g.vertices()
        .filter(|&z| local_components(g, z).expect("vertex ids come from the graph").weight > 0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// A center joined to cliques of the given orders (the non-exterior
    /// components) plus one pendant path of length 2 per requested exterior
    /// component; the path's far vertex is what makes it exterior.
    fn weight_gadget(clique_orders: &[usize], exteriors: usize) -> (Graph, usize) {
        let n = 1 + clique_orders.iter().sum::<usize>() + 2 * exteriors;
        let mut g = Graph::new(n).unwrap();
        let z = 0;
        let mut next = 1;
        for &order in clique_orders {
            let members: Vec<usize> = (next..next + order).collect();
            next += order;
            for &v in &members {
                g.add_edge(z, v).unwrap();
            }
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        for _ in 0..exteriors {
            let near = next;
            let far = next + 1;
            next += 2;
            g.add_edge(z, near).unwrap();
            g.add_edge(near, far).unwrap();
        }
        (g, z)
    }

    #[test]
    fn star_and_path_profiles() {
        let star = Graph::star(3).unwrap();
        let profile = local_components(&star, 0).unwrap();
        assert_eq!(profile.n_components(), 3);
        assert_eq!(profile.n_exterior(), 0);
        assert_eq!(profile.weight, 1);
        assert_eq!(profile.non_exterior_orders(), vec![1, 1, 1]);

        let path = Graph::path(5).unwrap();
        let profile = local_components(&path, 2).unwrap();
        assert_eq!(profile.n_components(), 2);
        assert_eq!(profile.n_exterior(), 2);
        assert_eq!(profile.weight, 0);
        assert_eq!(vertex_type(&path, 2).unwrap(), 2);
        assert_eq!(weight_of_graph(&path), 0);
    }

    #[test]
    fn weight_table_rows() {
        // Two exterior components and non-exterior orders 5,5,5,4,2: the
        // five smallest of seven components are all the non-exterior ones.
        let (g, z) = weight_gadget(&[5, 5, 5, 4, 2], 2);
        assert_eq!(weight_of_vertex(&g, z).unwrap(), 21);
        // One exterior component: 6−2 = 4 smallest of 2,4,5,5,5.
        let (g, z) = weight_gadget(&[5, 5, 5, 4, 2], 1);
        assert_eq!(weight_of_vertex(&g, z).unwrap(), 16);
        // Orders 5,2 with two exteriors: 4−2 = 2 smallest are both.
        let (g, z) = weight_gadget(&[5, 2], 2);
        assert_eq!(weight_of_vertex(&g, z).unwrap(), 7);
        // No exterior components, orders 5,5,5,4,2: n = 5, so the three
        // smallest count: 2+4+5 = 11.
        let (g, z) = weight_gadget(&[5, 5, 5, 4, 2], 0);
        assert_eq!(weight_of_vertex(&g, z).unwrap(), 11);
        // n = 2 components: empty sum.
        let (g, z) = weight_gadget(&[5, 2], 0);
        assert_eq!(weight_of_vertex(&g, z).unwrap(), 0);
        // Singleton non-exteriors at a star center.
        let (g, z) = weight_gadget(&[1, 1, 1, 1], 0);
        assert_eq!(weight_of_vertex(&g, z).unwrap(), 2);
    }

    #[test]
    fn exterior_flags_and_membership() {
        let (g, z) = weight_gadget(&[2], 1);
        let profile = local_components(&g, z).unwrap();
        assert_eq!(profile.n_components(), 2);
        let clique = &profile.components[0];
        let pendant = &profile.components[1];
        assert!(!clique.exterior);
        assert_eq!(clique.order(), 2);
        assert!(pendant.exterior);
        assert_eq!(pendant.order(), 2);
        // Components partition the vertex set minus the center.
        let union = profile
            .components
            .iter()
            .fold(crate::graph::VertexSet::EMPTY, |acc, c| acc.union(c.vertices));
        assert_eq!(union, g.vertex_set().without(z));
    }

    #[test]
    fn positive_weight_vertex_sets() {
        let star = Graph::star(4).unwrap();
        assert_eq!(positive_weight_vertices(&star).to_vec(), vec![0]);
        let path = Graph::path(6).unwrap();
        assert!(positive_weight_vertices(&path).is_empty());
    }

    #[test]
    fn invalid_center_is_rejected() {
        let g = Graph::path(3).unwrap();
        assert!(local_components(&g, 3).is_err());
        assert!(weight_of_vertex(&g, 9).is_err());
    }
}
