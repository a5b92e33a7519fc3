//! Construction and recognition of the balanced critical normal forms.
//!
//! A *spec* is a pendant count k (0, 1, or 2) together with a list of
//! part graphs. Building it produces a center vertex z joined completely
//! to every part, plus k pendant two-vertex paths whose inner vertex is
//! adjacent to z. Parts are kept sorted ascending by order with cliques
//! after non-cliques of equal order, so equal specs build equal graphs.
//!
//! The *clause conditions* single out the specs whose built graph is
//! balanced and critical: with no pendants at least three maximum-order
//! parts must be cliques, with one pendant at least two, and with two
//! pendants the parts only need to be interval graphs. The predicted
//! impropriety is the weight of z in the built graph: the part orders
//! summed, dropping the largest one for each missing pendant.

use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::balance::{balance_report, BalanceError, Check};
use crate::canon::canonical_form;
use crate::graph::{Graph, GraphError};
use crate::local::local_components;
use crate::recognition::is_interval;

/// Largest built graph `verify_construction` will analyze.
pub const VERIFY_BOUND: usize = 16;

/// Rejections from spec validation and verification.
#[derive(Debug, Error)]
pub enum BalError {
    /// More than two pendant paths never occur in a balanced critical
    /// graph; the spec type does not represent them.
    #[error("pendant count must be at most 2, got {0}")]
    BadK(usize),
    /// A part graph fails a structural requirement.
    #[error("part {index} {reason}")]
    BadPart {
        /// Position in the part list as given.
        index: usize,
        /// Which requirement failed.
        reason: &'static str,
    },
    /// With pendants present, some part must have at least two vertices.
    #[error("pendant paths require a part of order at least 2")]
    PendantsNeedWidePart,
    /// The built graph would exceed the vertex capacity.
    #[error(transparent)]
    Graph(#[from] GraphError),
    /// The built graph is too large for exact verification.
    #[error("construction has {order} vertices, verification is bounded at {bound}")]
    VerifyBound {
        /// Order of the built graph.
        order: usize,
        /// The bound it exceeds.
        bound: usize,
    },
    /// The balance analysis of the built graph failed.
    #[error(transparent)]
    Balance(#[from] BalanceError),
}

/// Why a graph is not in any of the normal forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Error)]
#[error("{reason}")]
pub struct NotBalForm {
    /// The deepest requirement that failed over all candidate centers.
    pub reason: String,
}

/// A normal-form description: pendant count plus part list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BalSpec {
    /// Number of pendant two-vertex paths, at most 2.
    pub k: usize,
    /// Part graphs, ascending by order, cliques last among equal orders.
    pub parts: Vec<Graph>,
}

impl BalSpec {
    /// Validate and normalize a spec.
    ///
    /// Parts must be nonempty connected interval graphs; with k at least 1
    /// some part must have two or more vertices. The part list is sorted
    /// into the canonical order.
    pub fn new(k: usize, mut parts: Vec<Graph>) -> Result<BalSpec, BalError> {
        if k > 2 {
            return Err(BalError::BadK(k));
        }
        for (index, part) in parts.iter().enumerate() {
            let reason = if part.order() == 0 {
                "is empty"
            } else if !part.is_connected() {
                "is disconnected"
            } else if !is_interval(part).is_interval() {
                "is not an interval graph"
            } else {
                continue;
            };
            return Err(BalError::BadPart { index, reason });
        }
        if k >= 1 && parts.iter().all(|part| part.order() < 2) {
            return Err(BalError::PendantsNeedWidePart);
        }
        parts.sort_by_cached_key(|part| {
            (
                part.order(),
                part.is_clique(part.vertex_set()),
                canonical_form(part),
            )
        });
        Ok(BalSpec { k, parts })
    }

    /// The impropriety the built graph has when the clause conditions
    /// hold: part orders summed, dropping the largest for each missing
    /// pendant.
    pub fn predicted_imp(&self) -> usize {
        let keep = match self.k {
            2 => self.parts.len(),
            1 => self.parts.len().saturating_sub(1),
            _ => self.parts.len().saturating_sub(2),
        };
        self.parts[..keep].iter().map(Graph::order).sum()
    }

    /// The clause condition this spec violates, if any.
    ///
    /// With two pendants any valid spec qualifies; with one pendant at
    /// least two maximum-order parts must be cliques; with none, three.
    pub fn clause_violation(&self) -> Option<String> {
        let required = match self.k {
            2 => return None,
            1 => 2,
            _ => 3,
        };
        let max_order = self.parts.last().map_or(0, Graph::order);
        let qualifying = self
            .parts
            .iter()
            .filter(|part| part.order() == max_order && part.is_clique(part.vertex_set()))
            .count();
        if qualifying < required {
            Some(format!(
                "{} pendant paths require {required} maximum-order clique parts, found {qualifying}",
                self.k
            ))
        } else {
            None
        }
    }

    /// Build the graph: center 0 joined to every part, then k pendant
    /// paths. Returns the graph and the center vertex.
    pub fn build(&self) -> Result<(Graph, usize), BalError> {
        let part_total: usize = self.parts.iter().map(Graph::order).sum();
        let mut g = Graph::new(1 + part_total + 2 * self.k)?;
        let z = 0;
        let mut next = 1;
        for part in &self.parts {
            for v in part.vertices() {
                g.add_edge(z, next + v)?;
            }
            for (u, v) in part.edges() {
                g.add_edge(next + u, next + v)?;
            }
            next += part.order();
        }
        for _ in 0..self.k {
            let (y, x) = (next, next + 1);
            g.add_edge(z, y)?;
            g.add_edge(y, x)?;
            next += 2;
        }
        Ok((g, z))
    }

    /// Canonical graph6 forms of the parts, in part order.
    pub fn part_forms(&self) -> Vec<String> {
        self.parts.iter().map(canonical_form).collect()
    }
}

/// Recognize whether a graph is a built normal form, recovering its spec.
///
/// Every vertex is tried as the center, lowest id first. A center must
/// see at most two exterior local components, each a pendant two-vertex
/// path; the remaining components become the parts and must be interval
/// graphs meeting the clause conditions. The rejection reports the
/// deepest requirement reached by any candidate center.
pub fn is_bal_form(g: &Graph) -> Result<BalSpec, NotBalForm> {
    if g.order() == 0 {
        return Err(NotBalForm {
            reason: "the empty graph has no center vertex".to_string(),
        });
    }
    if !g.is_connected() {
        return Err(NotBalForm {
            reason: "the graph is disconnected".to_string(),
        });
    }
    let mut best: Option<(usize, String)> = None;
    for z in g.vertices() {
        match try_center(g, z) {
            Ok(spec) => return Ok(spec),
            Err(failure) => {
                if best.as_ref().is_none_or(|b| failure.0 > b.0) {
                    best = Some(failure);
                }
            }
        }
    }
    let (_, reason) = best.expect("every vertex reports a failure");
    Err(NotBalForm { reason })
}

/// Try one vertex as the center; failures carry a depth so the caller
/// can report the most advanced rejection.
fn try_center(g: &Graph, z: usize) -> Result<BalSpec, (usize, String)> {
    let profile = local_components(g, z).expect("vertex ids come from the graph");
    let k = profile.n_exterior();
    if k > 2 {
        return Err((0, format!("vertex {z} has {k} exterior components, at most 2 allowed")));
    }
    let mut parts = Vec::new();
    for component in &profile.components {
        if component.exterior {
            if component.order() != 2 {
                return Err((
                    1,
                    format!(
                        "exterior component at vertex {z} has {} vertices, a pendant path has 2",
                        component.order()
                    ),
                ));
            }
        } else {
            let (part, _) = g.induced_subgraph(component.vertices);
            if !is_interval(&part).is_interval() {
                return Err((2, format!("a part at vertex {z} is not an interval graph")));
            }
            parts.push(part);
        }
    }
    if k >= 1 && parts.iter().all(|part| part.order() < 2) {
        return Err((
            3,
            format!("vertex {z} has pendant paths but every part is a single vertex"),
        ));
    }
    let spec = BalSpec::new(k, parts).expect("requirements checked above");
    if let Some(reason) = spec.clause_violation() {
        return Err((4, format!("center {z}: {reason}")));
    }
    Ok(spec)
}

/// Claim: every balanced critical graph is a built normal form whose
/// spec predicts exactly the measured impropriety.
pub fn check_form_reverse(g: &Graph) -> Result<Check, BalanceError> {
    let report = balance_report(g)?;
    if !(report.balanced && report.critical) {
        return Ok(Check::Vacuous {
            reason: "graph is not balanced and critical".to_string(),
        });
    }
    let fail = |detail: String| Check::Fail {
        counterexample: crate::balance::Counterexample {
            graph: crate::codec::encode_graph6(g),
            vertices: g.vertex_set(),
            detail,
        },
    };
    Ok(match is_bal_form(g) {
        Ok(spec) if spec.predicted_imp() == report.imp => Check::Pass {
            note: format!("{} pendant paths, {} parts", spec.k, spec.parts.len()),
        },
        Ok(spec) => fail(format!(
            "recovered spec predicts {} but imp is {}",
            spec.predicted_imp(),
            report.imp
        )),
        Err(rejection) => fail(format!("not a normal form: {rejection}")),
    })
}

/// Build the spec's graph and confirm it is balanced and critical with
/// exactly the predicted impropriety.
///
/// Specs violating the clause conditions are vacuous rather than failing:
/// the claim says nothing about them.
pub fn verify_construction(spec: &BalSpec) -> Result<Check, BalError> {
    verify_construction_guarded(spec, VERIFY_BOUND)
}

/// Like [`verify_construction`] with an explicit order bound.
pub fn verify_construction_guarded(spec: &BalSpec, bound: usize) -> Result<Check, BalError> {
    if let Some(reason) = spec.clause_violation() {
        return Ok(Check::Vacuous { reason });
    }
    let (g, _) = spec.build()?;
    if g.order() > bound {
        return Err(BalError::VerifyBound {
            order: g.order(),
            bound,
        });
    }
    let report = balance_report(&g)?;
    let predicted = spec.predicted_imp();
    let verdict = if !report.balanced {
        Some(format!("wt {} but imp {}", report.wt, report.imp))
    } else if report.imp != predicted {
        Some(format!("imp {} but predicted {predicted}", report.imp))
    } else if !report.critical {
        Some(format!("imp {} does not drop under every deletion", report.imp))
    } else {
        None
    };
    Ok(match verdict {
        Some(detail) => {
            let counterexample = crate::balance::Counterexample {
                graph: crate::codec::encode_graph6(&g),
                vertices: g.vertex_set(),
                detail,
            };
            Check::Fail { counterexample }
        }
        None => Check::Pass {
            note: format!("balanced, {predicted}-critical"),
        },
    })
}

/// Draw a random spec that satisfies the clause conditions, with part
/// orders summing to at most `max_total`.
///
/// The required number of maximum-order cliques is seeded directly and
/// the remaining budget is filled with smaller parts, so every sample is
/// valid by construction.
pub fn sample_spec(rng: &mut impl Rng, max_total: usize) -> BalSpec {
    assert!(max_total >= 3, "three singleton parts need a budget of 3");
    let k = rng.gen_range(0..=2usize);
    let mut parts = Vec::new();
    let mut budget = max_total;
    let seed_order = match k {
        0 => rng.gen_range(1..=(max_total / 3).min(4)),
        1 => rng.gen_range(2..=(max_total / 2).min(4)),
        _ => rng.gen_range(2..=max_total.min(4)),
    };
    let seeds = match k {
        0 => 3,
        1 => 2,
        _ => 1,
    };
    for _ in 0..seeds {
        let part = if k == 2 {
            sample_part(rng, 2, seed_order)
        } else {
            Graph::complete(seed_order).expect("pool orders fit")
        };
        budget -= part.order();
        parts.push(part);
    }
    while budget >= 1 && rng.gen_bool(0.6) {
        let part = sample_part(rng, 1, seed_order.min(budget));
        budget -= part.order();
        parts.push(part);
    }
    BalSpec::new(k, parts).expect("seeded specs are valid")
}

/// A uniform draw from a pool of small connected interval graphs with
/// order in `min_order..=max_order`.
fn sample_part(rng: &mut impl Rng, min_order: usize, max_order: usize) -> Graph {
    let paw = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).expect("paw fits");
    let pool = [
        Graph::complete(1).expect("fits"),
        Graph::complete(2).expect("fits"),
        Graph::path(3).expect("fits"),
        Graph::complete(3).expect("fits"),
        Graph::path(4).expect("fits"),
        Graph::complete(4).expect("fits"),
        paw,
        Graph::star(3).expect("fits"),
    ];
    let fits: Vec<&Graph> = pool
        .iter()
        .filter(|g| (min_order..=max_order).contains(&g.order()))
        .collect();
    fits[rng.gen_range(0..fits.len())].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn singletons(count: usize) -> Vec<Graph> {
        vec![Graph::complete(1).unwrap(); count]
    }

    #[test]
    fn building_three_singletons_gives_the_claw() {
        let spec = BalSpec::new(0, singletons(3)).unwrap();
        let (g, z) = spec.build().unwrap();
        assert_eq!(z, 0);
        assert_eq!(
            canonical_form(&g),
            canonical_form(&Graph::star(3).unwrap())
        );
        assert_eq!(spec.predicted_imp(), 1);
    }

    #[test]
    fn build_places_pendants_last() {
        let spec = BalSpec::new(2, vec![Graph::complete(2).unwrap()]).unwrap();
        let (g, z) = spec.build().unwrap();
        assert_eq!(g.order(), 7);
        // Center: part (2) plus two pendant inner vertices.
        assert_eq!(g.degree(z), 4);
        // Pendant tips have degree 1 and sit at the end.
        assert_eq!(g.degree(4), 1);
        assert_eq!(g.degree(6), 1);
        assert!(g.has_edge(3, 4) && g.has_edge(5, 6));
        assert_eq!(spec.predicted_imp(), 2);
    }

    #[test]
    fn predicted_imp_drops_largest_parts() {
        let k2 = || Graph::complete(2).unwrap();
        let parts = || vec![k2(), k2(), Graph::complete(3).unwrap()];
        assert_eq!(BalSpec::new(2, parts()).unwrap().predicted_imp(), 7);
        assert_eq!(BalSpec::new(1, parts()).unwrap().predicted_imp(), 4);
        assert_eq!(BalSpec::new(0, parts()).unwrap().predicted_imp(), 2);
    }

    #[test]
    fn parts_sort_with_cliques_last() {
        let spec = BalSpec::new(
            0,
            vec![
                Graph::complete(3).unwrap(),
                Graph::path(3).unwrap(),
                Graph::complete(1).unwrap(),
            ],
        )
        .unwrap();
        let orders: Vec<usize> = spec.parts.iter().map(Graph::order).collect();
        assert_eq!(orders, vec![1, 3, 3]);
        assert!(!spec.parts[1].is_clique(spec.parts[1].vertex_set()));
        assert!(spec.parts[2].is_clique(spec.parts[2].vertex_set()));
    }

    #[test]
    fn validation_rejects_bad_specs() {
        assert!(matches!(
            BalSpec::new(3, singletons(3)),
            Err(BalError::BadK(3))
        ));
        assert!(matches!(
            BalSpec::new(0, vec![Graph::new(0).unwrap()]),
            Err(BalError::BadPart { reason: "is empty", .. })
        ));
        assert!(matches!(
            BalSpec::new(0, vec![Graph::new(2).unwrap()]),
            Err(BalError::BadPart { reason: "is disconnected", .. })
        ));
        assert!(matches!(
            BalSpec::new(0, vec![Graph::cycle(4).unwrap()]),
            Err(BalError::BadPart { reason: "is not an interval graph", .. })
        ));
        assert!(matches!(
            BalSpec::new(1, singletons(4)),
            Err(BalError::PendantsNeedWidePart)
        ));
    }

    #[test]
    fn clause_conditions() {
        assert!(BalSpec::new(0, singletons(3)).unwrap().clause_violation().is_none());
        assert!(BalSpec::new(0, singletons(2)).unwrap().clause_violation().is_some());
        let k2 = || Graph::complete(2).unwrap();
        assert!(BalSpec::new(1, vec![k2(), k2()]).unwrap().clause_violation().is_none());
        assert!(BalSpec::new(1, vec![k2(), Graph::path(3).unwrap()])
            .unwrap()
            .clause_violation()
            .is_some());
        assert!(BalSpec::new(2, vec![Graph::path(3).unwrap()])
            .unwrap()
            .clause_violation()
            .is_none());
    }

    #[test]
    fn recognition_roundtrips() {
        let k2 = || Graph::complete(2).unwrap();
        let specs = [
            BalSpec::new(0, singletons(3)).unwrap(),
            BalSpec::new(0, vec![k2(), k2(), k2()]).unwrap(),
            BalSpec::new(1, vec![k2(), k2()]).unwrap(),
            BalSpec::new(2, vec![k2()]).unwrap(),
            BalSpec::new(2, vec![Graph::path(3).unwrap(), Graph::complete(3).unwrap()]).unwrap(),
        ];
        for spec in &specs {
            let (g, _) = spec.build().unwrap();
            let recovered = is_bal_form(&g).unwrap();
            assert_eq!(recovered.k, spec.k);
            assert_eq!(recovered.part_forms(), spec.part_forms());
        }
    }

    #[test]
    fn recognition_rejects_non_forms() {
        // P_4's deepest near-miss: an inner vertex sees one pendant path
        // but only a singleton part.
        let rejection = is_bal_form(&Graph::path(4).unwrap()).unwrap_err();
        assert!(rejection.reason.contains("single vertex"), "{rejection}");
        assert!(is_bal_form(&Graph::cycle(5).unwrap()).is_err());
        assert!(is_bal_form(&Graph::new(0).unwrap()).is_err());
        assert!(is_bal_form(&Graph::new(2).unwrap()).is_err());
        // K_2 decomposes as one singleton part at either end, but one
        // maximum-order clique is never three.
        let rejection = is_bal_form(&Graph::complete(2).unwrap()).unwrap_err();
        assert!(rejection.reason.contains("clique parts"), "{rejection}");
    }

    #[test]
    fn verify_confirms_small_forms() {
        let k2 = || Graph::complete(2).unwrap();
        let spec = BalSpec::new(1, vec![k2(), k2()]).unwrap();
        let check = verify_construction(&spec).unwrap();
        assert!(matches!(check, Check::Pass { .. }), "{check:?}");
        let vacuous = BalSpec::new(0, singletons(2)).unwrap();
        assert!(verify_construction(&vacuous).unwrap().is_vacuous());
    }

    #[test]
    fn sampled_specs_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xba15);
        for _ in 0..60 {
            let spec = sample_spec(&mut rng, 9);
            assert!(spec.k <= 2);
            assert!(spec.clause_violation().is_none());
            let total: usize = spec.parts.iter().map(Graph::order).sum();
            assert!(total <= 9, "total {total}");
            spec.build().unwrap();
        }
    }
}
